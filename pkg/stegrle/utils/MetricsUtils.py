# -*- coding: utf-8 -*-

"""
Module stegrle.utils.MetricsUtils
=================================================================

A module containing image fidelity metrics: mean square error and
peak signal to noise ratio with MAX_I = 255.

"""
import math
from typing import NamedTuple, Tuple

import numpy as np

from ..constants import MAX_I
from .ErrorUtils import DimensionMismatch
from .ImageUtils import GrayImage


class QualityReport(NamedTuple):
    """MSE and PSNR of an image pair; psnr is ``math.inf`` exactly when mse is 0."""

    mse: float
    psnr: float

    @property
    def lossless(self) -> bool:
        return self.mse == 0

    def formatted(self) -> Tuple[str, str]:
        """4 decimal places, with ``0`` / ``Infinity`` for identical images."""
        if self.lossless:
            return "0", "Infinity"
        return f"{self.mse:.4f}", f"{self.psnr:.4f}"

    def __str__(self):
        return "{} / {}".format(*self.formatted())


def _check_dimensions(a: GrayImage, b: GrayImage) -> None:
    if (a.width, a.height) != (b.width, b.height):
        raise DimensionMismatch(f"{a.width}x{a.height} vs {b.width}x{b.height}")


def squared_error_sum(a: GrayImage, b: GrayImage) -> int:
    """Exact integer sum of squared pixel differences."""
    _check_dimensions(a, b)
    diff = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    return int(np.sum(diff * diff))


def mse(a: GrayImage, b: GrayImage) -> float:
    """
    Mean square error, accumulated in integers and divided once.

    Args:
        - a (GrayImage): reference image
        - b (GrayImage): compared image

    Returns:
        float: mean of the squared differences
    """
    return squared_error_sum(a, b) / a.size


def psnr_from_mse(value: float) -> float:
    if value == 0:
        return math.inf
    return 10 * math.log10(MAX_I ** 2 / value)


def psnr_formulations(value: float) -> Tuple[float, float, float]:
    """
    The three equivalent forms of PSNR for a given MSE::

        10 log10(MAX^2 / MSE)
        20 log10(MAX / sqrt(MSE))
        20 log10(MAX) - 10 log10(MSE)
    """
    if value == 0:
        return math.inf, math.inf, math.inf
    return (
        10 * math.log10(MAX_I ** 2 / value),
        20 * math.log10(MAX_I / math.sqrt(value)),
        20 * math.log10(MAX_I) - 10 * math.log10(value),
    )


def psnr(a: GrayImage, b: GrayImage) -> float:
    """Peak signal to noise ratio in dB, ``math.inf`` for identical images."""
    return psnr_from_mse(mse(a, b))


def quality_report(a: GrayImage, b: GrayImage) -> QualityReport:
    value = mse(a, b)
    return QualityReport(mse=value, psnr=psnr_from_mse(value))
