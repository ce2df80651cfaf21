from typing import Iterator, List, NamedTuple, Optional, Tuple

from ..mesh import QualityReport
from ..qp import QpStatus
from .const import TRACE_COLUMNS
from .stop_reason import StopReason


class IterationRecord(NamedTuple):
    """
    One outer iteration. step/backtracks stay None when the iteration stopped before a line search;
    objective_after and max_constraint_after describe the mesh the accepted step produced.
    """
    iteration: int
    objective: float
    phi0: float
    slope: Optional[float]
    step: Optional[float]
    backtracks: Optional[int]
    max_constraint: float
    gradnorm: float
    penalty: float
    qp_status: Optional[QpStatus]
    phi_accepted: Optional[float] = None
    quality: Optional[QualityReport] = None
    objective_after: Optional[float] = None
    max_constraint_after: Optional[float] = None

    @property
    def accepted(self) -> bool:
        return self.step is not None

    def row(self) -> Tuple:
        return (
            self.iteration,
            self.objective,
            self.phi0,
            self.slope,
            self.step,
            self.backtracks,
            self.max_constraint,
            self.gradnorm,
            self.penalty,
            self.qp_status.value if self.qp_status is not None else None,
        )


class OptTrace:
    """Per-iteration history of one optimization run"""

    def __init__(self):
        self.records: List[IterationRecord] = []
        self.stop_reason: Optional[StopReason] = None
        self.diagnostic: str = ""

    def append(self, record: IterationRecord):
        self.records.append(record)

    def stop(self, reason: StopReason, diagnostic: str = ""):
        self.stop_reason = reason
        self.diagnostic = diagnostic

    @property
    def columns(self) -> Tuple[str, ...]:
        return TRACE_COLUMNS

    @property
    def iterations(self) -> int:
        """Number of accepted steps"""
        return sum(1 for r in self.records if r.accepted)

    @property
    def final_objective(self) -> Optional[float]:
        """J of the mesh the run returns"""
        if not self.records:
            return None
        last = self.records[-1]
        return last.objective if last.objective_after is None else last.objective_after

    @property
    def final_penalty(self) -> Optional[float]:
        return self.records[-1].penalty if self.records else None

    @property
    def max_constraint(self) -> Optional[float]:
        if not self.records:
            return None
        last = self.records[-1]
        return last.max_constraint if last.max_constraint_after is None else last.max_constraint_after

    def rows(self) -> Iterator[Tuple]:
        for record in self.records:
            yield record.row()

    def __len__(self) -> int:
        return len(self.records)

    def __repr__(self) -> str:
        reason = self.stop_reason.value if self.stop_reason else 'running'
        return f'OptTrace({len(self.records)} records, {reason})'
