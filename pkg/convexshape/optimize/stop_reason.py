import enum


@enum.unique
class StopReason(enum.Enum):
    STATIONARY = "stationary"
    MAX_OUTER = "max_outer"
    STEP_FAILURE = "step_failure"
    DESCENT_FAILURE = "descent_failure"
    QP_FAILURE = "qp_failure"

    def stringify(self, **kwargs):
        return self.value.replace("_", " ")

    @property
    def converged(self) -> bool:
        return self == StopReason.STATIONARY
