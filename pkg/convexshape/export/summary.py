import math
from pathlib import Path
from typing import Any, Dict, List, NamedTuple, Optional, Union

from .atomic import atomic_write
from .const import TRACE_FORMAT_VERSION
from .diagnostics import ShapeDiagnostics

try:
    import ujson as json
except ImportError:
    import json


class LevelSummary(NamedTuple):
    level: int
    num_vertices: int
    num_cells: int
    iterations: int
    stop_reason: Optional[str]
    objective: Optional[float]
    penalty: Optional[float]
    diagnostics: Optional[ShapeDiagnostics]
    elapsed: float
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = self._asdict()
        data['diagnostics'] = self.diagnostics._asdict() if self.diagnostics is not None else None
        return data


def _finite(value):
    """JSON has no inf/nan"""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _finite(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    return value


def render_summary(problem: str, levels: List[LevelSummary], failed: bool = False, **extra) -> str:
    data = {
        'trace_format_version': TRACE_FORMAT_VERSION,
        'problem': problem,
        'failed': failed,
        'levels': [level.to_dict() for level in levels],
    }
    data.update(extra)
    return json.dumps(_finite(data), indent=2) + '\n'


def write_summary(path: Union[str, Path], problem: str, levels: List[LevelSummary], failed: bool = False, **extra):
    atomic_write(path, render_summary(problem, levels, failed, **extra))
