# -*- coding: utf-8 -*-

"""
Module stegrle.utils.TimingUtils
=================================================================

A module containing methods for timing the pipeline phases.

Times are wall clock seconds from :func:`time.perf_counter`, which is
monotonic. With several repeats the minimum of every phase is kept.

"""
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

import pandas as pd

from ..constants import phase_names


def timed(fn: Callable, *args, **kwargs) -> Tuple[Any, float]:
    """
    Call fn and measure its duration.

    Returns:
        Tuple[Any, float]: (return value, elapsed seconds)
    """
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


class TimingReport:
    """Per-phase elapsed times; the total is the sum of the phases."""

    def __init__(self, samples: Optional[Dict[str, List[float]]] = None):
        self._samples: Dict[str, List[float]] = {name: [] for name in phase_names}
        for name, values in (samples or {}).items():
            for value in values:
                self.add(name, value)

    def add(self, phase: str, seconds: float) -> None:
        if phase not in self._samples:
            raise KeyError(f"unknown phase {phase}")
        self._samples[phase].append(max(seconds, 0.0))

    @property
    def repeats(self) -> int:
        return min(len(v) for v in self._samples.values())

    @property
    def phases(self) -> Dict[str, float]:
        """Best (minimum) time of every phase that has been measured."""
        return {name: min(values) for name, values in self._samples.items() if values}

    @property
    def total(self) -> float:
        return sum(self.phases.values())

    def slowest_phase(self) -> str:
        phases = self.phases
        return max(phases, key=phases.get)

    def to_frame(self, image: str = "") -> pd.DataFrame:
        rows = [
            {"image": image, "process": name, "elapsed_s": seconds}
            for name, seconds in self.phases.items()
        ]
        rows.append({"image": image, "process": "total", "elapsed_s": self.total})
        return pd.DataFrame(rows, columns=["image", "process", "elapsed_s"])

    def __repr__(self):
        return "<TimingReport> : {}, <total>: {:.4f}".format(
            {k: round(v, 4) for k, v in self.phases.items()}, self.total
        )
