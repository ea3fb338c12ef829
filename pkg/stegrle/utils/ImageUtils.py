# -*- coding: utf-8 -*-

"""
Module stegrle.utils.ImageUtils
=================================================================

A module containing the grayscale image type, the region of interest
rectangle and bit exact netpbm (PGM/PPM) reading and writing.

* GrayImage, RgbImage, Rect
* to_grayscale
* read_pgm, write_pgm, read_ppm
* check_rect

"""
import re
from pathlib import Path
from typing import Iterable, List, NamedTuple, Tuple, Union

import numpy as np

from ..constants import LUMA_SCALE, LUMA_WEIGHTS, MAX_I, PGM_MAGICS, PPM_MAGICS
from .ErrorUtils import (
    InvalidDimensions,
    IOFailure,
    MalformedHeader,
    MalformedPixelData,
    RectOutOfBounds,
    TruncatedData,
    UnsupportedMaxval,
)
from .LoggingUtils import logger


class GrayImage:
    """8-bit grayscale image stored row-major as a read-only (height, width) uint8 array."""

    def __init__(self, pixels: Union[np.ndarray, List[List[int]]]):
        arr = np.asarray(pixels)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidDimensions(f"expected a non-empty 2-D pixel matrix, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > MAX_I):
                raise MalformedPixelData("pixel values must lie in 0..255")
            arr = arr.astype(np.uint8)

        self._pixels = arr.copy()
        self._pixels.flags.writeable = False

    @classmethod
    def from_values(cls, width: int, height: int, values: Iterable[int]) -> "GrayImage":
        """Build an image from a flat row-major sequence of pixel values."""
        if width < 1 or height < 1:
            raise InvalidDimensions(f"{width}x{height}")
        flat = np.fromiter(values, dtype=np.int64)
        if flat.size != width * height:
            raise InvalidDimensions(f"{flat.size} values for a {width}x{height} image")
        return cls(flat.reshape(height, width))

    @classmethod
    def zeros(cls, width: int, height: int) -> "GrayImage":
        if width < 1 or height < 1:
            raise InvalidDimensions(f"{width}x{height}")
        return cls(np.zeros((height, width), dtype=np.uint8))

    @property
    def width(self) -> int:
        return self._pixels.shape[1]

    @property
    def height(self) -> int:
        return self._pixels.shape[0]

    @property
    def pixels(self) -> np.ndarray:
        return self._pixels

    @property
    def size(self) -> int:
        return self._pixels.size

    def __getitem__(self, xy: Tuple[int, int]) -> int:
        x, y = xy
        return int(self._pixels[y, x])

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self._pixels.shape == other._pixels.shape and bool(
            np.array_equal(self._pixels, other._pixels)
        )

    def __hash__(self):
        return hash((self._pixels.shape, self._pixels.tobytes()))

    def __repr__(self):
        return "<GrayImage> : {}x{}".format(self.width, self.height)


class RgbImage:
    """8-bit colour image stored as a (height, width, 3) uint8 array."""

    def __init__(self, pixels: Union[np.ndarray, list]):
        arr = np.asarray(pixels)
        if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InvalidDimensions(f"expected a (height, width, 3) matrix, got shape {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.min() < 0 or arr.max() > MAX_I:
                raise MalformedPixelData("channel values must lie in 0..255")
            arr = arr.astype(np.uint8)

        self._pixels = arr.copy()
        self._pixels.flags.writeable = False

    @property
    def width(self) -> int:
        return self._pixels.shape[1]

    @property
    def height(self) -> int:
        return self._pixels.shape[0]

    @property
    def pixels(self) -> np.ndarray:
        return self._pixels

    def __repr__(self):
        return "<RgbImage> : {}x{}".format(self.width, self.height)


class Rect(NamedTuple):
    """Inclusive, 0-indexed rectangle: (x0, y0) top-left, (x1, y1) bottom-right."""

    x0: int
    y0: int
    x1: int
    y1: int

    @property
    def width(self) -> int:
        return self.x1 - self.x0 + 1

    @property
    def height(self) -> int:
        return self.y1 - self.y0 + 1

    @classmethod
    def full(cls, img: GrayImage) -> "Rect":
        return cls(0, 0, img.width - 1, img.height - 1)

    def __str__(self):
        return f"({self.x0},{self.y0})-({self.x1},{self.y1})"


def to_grayscale(img: RgbImage) -> GrayImage:
    """
    Convert a colour image with the BT.601 luma weights,
    rounding half up.

    Args:
        - img (RgbImage): colour image

    Returns:
        GrayImage: image with the same dimensions
    """
    rgb = img.pixels.astype(np.uint32)
    wr, wg, wb = LUMA_WEIGHTS
    acc = wr * rgb[:, :, 0] + wg * rgb[:, :, 1] + wb * rgb[:, :, 2]
    gray = (acc + LUMA_SCALE // 2) // LUMA_SCALE
    return GrayImage(np.minimum(gray, MAX_I).astype(np.uint8))


def check_rect(img: GrayImage, roi: Rect) -> None:
    """
    Method to validate a region of interest against an image.

    Args:
        - img (GrayImage): image the rectangle is applied to
        - roi (Rect): rectangle to validate

    Raises:
        RectOutOfBounds: with the offending coordinate
    """
    limits = {"x0": img.width, "y0": img.height, "x1": img.width, "y1": img.height}
    for field, limit in limits.items():
        value = getattr(roi, field)
        if not 0 <= value < limit:
            raise RectOutOfBounds(
                f"{field}={value} outside 0..{limit - 1} for a {img.width}x{img.height} image",
                coordinate=(field, value, limit),
            )

    # CORNERS IN THE WRONG ORDER: REPORT THE BOTTOM-RIGHT ONE
    if roi.x0 > roi.x1:
        raise RectOutOfBounds(f"x1={roi.x1} left of x0={roi.x0}", coordinate=("x1", roi.x1, roi.x0))
    if roi.y0 > roi.y1:
        raise RectOutOfBounds(f"y1={roi.y1} above y0={roi.y0}", coordinate=("y1", roi.y1, roi.y0))


# ------------------- NETPBM -------------------------------------
_COMMENT = re.compile(rb"#[^\n\r]*")


def _parse_header(data: bytes, magics: Tuple[bytes, ...]) -> Tuple[bytes, int, int, int, int]:
    """
    Parse a netpbm header.

    Returns:
        Tuple[bytes, int, int, int, int]: magic, width, height, maxval and
        the offset of the first byte after the single whitespace that
        terminates the header
    """
    magic = data[:2]
    if magic not in magics:
        raise MalformedHeader(f"unknown magic number {magic!r}")

    fields: List[int] = []
    pos = 2
    n = len(data)
    while len(fields) < 3:
        # SKIP WHITESPACE AND COMMENTS BETWEEN FIELDS
        while pos < n and (data[pos : pos + 1].isspace() or data[pos : pos + 1] == b"#"):
            if data[pos : pos + 1] == b"#":
                while pos < n and data[pos : pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            else:
                pos += 1
        start = pos
        while pos < n and data[pos : pos + 1].isdigit():
            pos += 1
        if start == pos:
            raise MalformedHeader(f"missing header field {len(fields) + 1} of 3")
        fields.append(int(data[start:pos]))

    if pos >= n or not data[pos : pos + 1].isspace():
        raise MalformedHeader("header must end with a whitespace byte")

    width, height, maxval = fields
    if maxval > MAX_I:
        raise UnsupportedMaxval(f"maxval {maxval}")
    if maxval < 1:
        raise MalformedHeader(f"maxval {maxval}")
    if width < 1 or height < 1:
        raise InvalidDimensions(f"{width}x{height}")

    return magic, width, height, maxval, pos + 1


def _read_samples(
    data: bytes, offset: int, count: int, maxval: int, binary: bool
) -> np.ndarray:
    if binary:
        raster = np.frombuffer(data[offset : offset + count], dtype=np.uint8)
        if raster.size < count:
            raise TruncatedData(f"expected {count} samples, got {raster.size}")
        samples = raster[:count]
    else:
        tokens = _COMMENT.sub(b" ", data[offset:]).split()
        if len(tokens) < count:
            raise TruncatedData(f"expected {count} samples, got {len(tokens)}")
        try:
            samples = np.array([int(t) for t in tokens[:count]], dtype=np.int64)
        except ValueError as e:
            raise MalformedPixelData(str(e))

    if samples.size and (samples.min() < 0 or samples.max() > maxval):
        raise MalformedPixelData(f"sample outside 0..{maxval}")
    return samples.astype(np.uint8)


def read_pgm(data: bytes) -> GrayImage:
    """
    Method to parse a P5 (binary) or P2 (ASCII) PGM.

    Sample values are kept as stored; images with maxval below 255
    are not rescaled.

    Args:
        - data (bytes): file content

    Returns:
        GrayImage: the decoded image
    """
    magic, width, height, maxval, offset = _parse_header(data, PGM_MAGICS)
    samples = _read_samples(data, offset, width * height, maxval, magic == b"P5")
    return GrayImage(samples.reshape(height, width))


def read_ppm(data: bytes) -> RgbImage:
    """
    Method to parse a P6 (binary) or P3 (ASCII) PPM.

    Args:
        - data (bytes): file content

    Returns:
        RgbImage: the decoded image
    """
    magic, width, height, maxval, offset = _parse_header(data, PPM_MAGICS)
    samples = _read_samples(data, offset, width * height * 3, maxval, magic == b"P6")
    return RgbImage(samples.reshape(height, width, 3))


def write_pgm(img: GrayImage) -> bytes:
    """Canonical P5 encoding: exact header, no comments, raw row-major payload."""
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


# ------------------- FILES --------------------------------------
def read_bytes(path: Union[str, Path]) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise IOFailure(f"cannot read {path}: {e.strerror}")


def write_bytes(path: Union[str, Path], data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise IOFailure(f"cannot write {path}: {e.strerror}")


def load_gray_image(path: Union[str, Path]) -> GrayImage:
    """
    Read a PGM, or a PPM converted to grayscale.

    Args:
        - path (Union[str, Path]): image file

    Returns:
        GrayImage: grayscale image
    """
    data = read_bytes(path)
    if data[:2] in PPM_MAGICS:
        logger.debug(f"{path} is a colour image, converting to grayscale")
        return to_grayscale(read_ppm(data))
    img = read_pgm(data)
    logger.debug(f"Read {path}: {img.width}x{img.height}")
    return img


def save_gray_image(path: Union[str, Path], img: GrayImage) -> None:
    write_bytes(path, write_pgm(img))
    logger.debug(f"Wrote {path}: {img.width}x{img.height}")
