import enum


@enum.unique
class ProblemKind(enum.Enum):
    EXAMPLE1 = "example1"
    EXAMPLE2 = "example2"
    EXAMPLE3_CONVEX = "example3_convex"
    EXAMPLE3_UNCONSTRAINED = "example3_unconstrained"
    CUSTOM = "custom"

    def stringify(self, **kwargs):
        return self.value.replace("_", " ")
