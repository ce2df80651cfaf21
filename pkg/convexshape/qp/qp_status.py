import enum


@enum.unique
class QpStatus(enum.Enum):
    SOLVED = "solved"
    MAX_ITER = "max_iter"
    INFEASIBLE = "infeasible"

    def stringify(self, **kwargs):
        return self.value.replace("_", " ")
