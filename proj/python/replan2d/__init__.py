from ._core import (
    Simulation,
    path_is_free,
    run_trial,
    segment_hits_rect,
    shortcut,
)

__all__ = [
    "Simulation",
    "path_is_free",
    "run_trial",
    "segment_hits_rect",
    "shortcut",
]
