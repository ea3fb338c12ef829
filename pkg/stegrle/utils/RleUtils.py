# -*- coding: utf-8 -*-

"""
Module stegrle.utils.RleUtils
=================================================================

A module containing the run-length codec and the SRLE container.

The image is flattened row-major and split into maximal runs, stored
as two vectors: the element (pixel value) of each run and its length.

SRLE layout, all integers little-endian, no padding::

    offset  size  field
    0       4     magic b"SRLE"
    4       1     version (1)
    5       4     width   (uint32)
    9       4     height  (uint32)
    13      4     run count k (uint32)
    17      5k    k x (value uint8, length uint32)

"""
import struct
from typing import Iterable, List, NamedTuple, Tuple, Union

import numpy as np

from ..constants import (
    MAX_I,
    MAX_UINT32,
    SRLE_HEADER_FORMAT,
    SRLE_HEADER_SIZE,
    SRLE_MAGIC,
    SRLE_RUN_SIZE,
    SRLE_VERSION,
)
from .ErrorUtils import (
    BadMagic,
    InvalidDimensions,
    LengthMismatch,
    MalformedPixelData,
    TrailingGarbage,
    Truncated,
    UnsupportedVersion,
)
from .ImageUtils import GrayImage
from .LoggingUtils import logger

# ONE RUN RECORD ON THE WIRE
_RUN_DTYPE = np.dtype([("value", "u1"), ("length", "<u4")])


class RunLengthStream:
    """Element and run-length vectors together with the image dimensions."""

    def __init__(
        self,
        width: int,
        height: int,
        values: Union[np.ndarray, Iterable[int]],
        lengths: Union[np.ndarray, Iterable[int]],
    ):
        self.width = int(width)
        self.height = int(height)
        self.values = np.asarray(values if isinstance(values, np.ndarray) else list(values))
        self.lengths = np.asarray(lengths if isinstance(lengths, np.ndarray) else list(lengths))
        if self.values.shape != self.lengths.shape or self.values.ndim != 1:
            raise LengthMismatch(
                f"{self.values.size} elements but {self.lengths.size} run lengths",
                expected=self.values.size,
                actual=self.lengths.size,
            )
        if self.values.size and (self.values.min() < 0 or self.values.max() > MAX_I):
            raise MalformedPixelData(f"run values must lie in 0..{MAX_I}")
        self.values = self.values.astype(np.uint8)
        self.lengths = self.lengths.astype(np.int64)

    @classmethod
    def from_runs(cls, width: int, height: int, runs: Iterable[Tuple[int, int]]) -> "RunLengthStream":
        runs = list(runs)
        return cls(width, height, [v for v, _ in runs], [n for _, n in runs])

    @property
    def runs(self) -> List[Tuple[int, int]]:
        return [(int(v), int(n)) for v, n in zip(self.values, self.lengths)]

    @property
    def run_count(self) -> int:
        return int(self.values.size)

    @property
    def pixel_count(self) -> int:
        return int(self.lengths.sum())

    def is_canonical(self) -> bool:
        return not bool(np.any(self.values[1:] == self.values[:-1]))

    def __len__(self):
        return self.run_count

    def __eq__(self, other):
        if not isinstance(other, RunLengthStream):
            return NotImplemented
        return (
            (self.width, self.height) == (other.width, other.height)
            and np.array_equal(self.values, other.values)
            and np.array_equal(self.lengths, other.lengths)
        )

    def __repr__(self):
        return "<RunLengthStream> : {}x{}, {} runs".format(self.width, self.height, self.run_count)


class CompressionStats(NamedTuple):
    raw_bytes: int
    container_bytes: int
    runs: int

    @property
    def ratio(self) -> float:
        return self.raw_bytes / self.container_bytes


def rle_encode(img: GrayImage) -> RunLengthStream:
    """
    Method to run-length encode an image.

    Args:
        - img (GrayImage): image to encode

    Returns:
        RunLengthStream: maximal runs, no two adjacent runs with the same value
    """
    flat = img.pixels.ravel()
    starts = np.concatenate(([0], np.flatnonzero(flat[1:] != flat[:-1]) + 1))
    lengths = np.diff(np.append(starts, flat.size))
    stream = RunLengthStream(img.width, img.height, flat[starts], lengths)

    logger.debug(f"Encoded {img.width}x{img.height} into {stream.run_count} runs")
    return stream


def _check_lengths(stream: RunLengthStream) -> None:
    expected = stream.width * stream.height
    if not (1 <= stream.width <= MAX_UINT32 and 1 <= stream.height <= MAX_UINT32):
        raise InvalidDimensions(f"{stream.width}x{stream.height}")
    if stream.lengths.size and stream.lengths.min() < 1:
        raise LengthMismatch("run of length 0", expected=expected, actual=stream.pixel_count)
    if stream.lengths.size and stream.lengths.max() > MAX_UINT32:
        raise LengthMismatch(
            f"run of length {int(stream.lengths.max())} does not fit in 32 bits",
            expected=expected,
            actual=stream.pixel_count,
        )
    if stream.pixel_count != expected:
        raise LengthMismatch(
            f"runs cover {stream.pixel_count} pixels, image has {expected}",
            expected=expected,
            actual=stream.pixel_count,
        )


def rle_decode(stream: RunLengthStream) -> GrayImage:
    """
    Method to rebuild the image from its runs. Adjacent runs with the same
    value are accepted.

    Args:
        - stream (RunLengthStream): runs and dimensions

    Returns:
        GrayImage: the decoded image
    """
    _check_lengths(stream)
    flat = np.repeat(stream.values, stream.lengths)
    return GrayImage(flat.reshape(stream.height, stream.width))


def serialize(stream: RunLengthStream) -> bytes:
    """Byte-deterministic SRLE encoding of a stream."""
    _check_lengths(stream)
    header = struct.pack(
        SRLE_HEADER_FORMAT, SRLE_MAGIC, SRLE_VERSION, stream.width, stream.height, stream.run_count
    )
    records = np.empty(stream.run_count, dtype=_RUN_DTYPE)
    records["value"] = stream.values
    records["length"] = stream.lengths
    return header + records.tobytes()


def deserialize(data: bytes) -> RunLengthStream:
    """
    Method to parse an SRLE container.

    Args:
        - data (bytes): container content

    Returns:
        RunLengthStream: validated stream
    """
    if len(data) < 4 or data[:4] != SRLE_MAGIC:
        if len(data) < 4 and SRLE_MAGIC.startswith(data):
            raise Truncated(f"{len(data)} bytes, header needs {SRLE_HEADER_SIZE}")
        raise BadMagic(f"magic {data[:4]!r}")
    if len(data) < SRLE_HEADER_SIZE:
        raise Truncated(f"{len(data)} bytes, header needs {SRLE_HEADER_SIZE}")

    _, version, width, height, count = struct.unpack_from(SRLE_HEADER_FORMAT, data)
    if version != SRLE_VERSION:
        raise UnsupportedVersion(f"version {version}")

    expected_size = SRLE_HEADER_SIZE + count * SRLE_RUN_SIZE
    if len(data) < expected_size:
        raise Truncated(f"{len(data)} bytes, {count} runs need {expected_size}")
    if len(data) > expected_size:
        raise TrailingGarbage(f"{len(data) - expected_size} bytes after the last run")

    records = np.frombuffer(data[SRLE_HEADER_SIZE:], dtype=_RUN_DTYPE)
    stream = RunLengthStream(width, height, records["value"], records["length"])
    _check_lengths(stream)

    logger.debug(f"Read container: {width}x{height}, {count} runs")
    return stream


def compression_stats(raw_bytes: int, stream: RunLengthStream) -> CompressionStats:
    """Raw size against container size for a stream."""
    container_bytes = SRLE_HEADER_SIZE + stream.run_count * SRLE_RUN_SIZE
    return CompressionStats(raw_bytes=raw_bytes, container_bytes=container_bytes, runs=stream.run_count)
