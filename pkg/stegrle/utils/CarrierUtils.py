# -*- coding: utf-8 -*-

"""
Module stegrle.utils.CarrierUtils
=================================================================

A module containing a generator for synthetic carrier images: a zero
background with one solid, textured elliptical blob standing in for
the anatomy of a medical scan.

"""
import numpy as np

from .ImageUtils import GrayImage
from .LoggingUtils import logger


def generate_carrier(width: int = 256, height: int = 256, seed: int = 0) -> GrayImage:
    """
    Method to generate a carrier that always passes carrier validation.

    Args:
        - width (int): image width
        - height (int): image height
        - seed (int): seed of the texture noise

    Returns:
        GrayImage: zero background with a nonzero blob
    """
    rng = np.random.default_rng(seed)
    yy, xx = np.mgrid[0:height, 0:width]

    cx, cy = (width - 1) / 2, (height - 1) / 2
    ax, ay = max(width * 0.3, 1.0), max(height * 0.38, 1.0)
    r2 = ((xx - cx) / ax) ** 2 + ((yy - cy) / ay) ** 2
    blob = r2 <= 1.0

    # A BLOB PIXEL WITHOUT BLOB NEIGHBOURS WOULD BE READ AS A HIDDEN BYTE
    padded = np.pad(blob, 1)
    has_neighbour = padded[:-2, 1:-1] | padded[2:, 1:-1] | padded[1:-1, :-2] | padded[1:-1, 2:]
    blob &= has_neighbour

    # BRIGHT CENTRE FADING OUTWARDS, PLUS NOISE; NEVER 0 INSIDE THE BLOB
    shade = 200.0 - 120.0 * r2 + rng.normal(0.0, 12.0, size=blob.shape)
    pixels = np.where(blob, np.clip(np.rint(shade), 1, 255), 0).astype(np.uint8)

    logger.debug(f"Generated {width}x{height} carrier, {int(blob.sum())} blob pixels, seed {seed}")
    return GrayImage(pixels)
