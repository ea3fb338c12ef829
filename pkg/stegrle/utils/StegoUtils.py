# -*- coding: utf-8 -*-

"""
Module stegrle.utils.StegoUtils
=================================================================

A module containing methods for hiding a text message at isolated
zero-valued pixels of a grayscale image and for recovering it.

A pixel is an embedding site when it is not on the image border,
its value is 0 and its four neighbours (top, bottom, left, right)
are 0 as well. Every message byte replaces one such zero; the
receiver finds the bytes again as nonzero pixels whose four
neighbours are all zero and resets them to 0.

No length header or terminator is stored: the message is exactly
the set of isolated nonzero pixels, which is why carriers that
already contain such pixels are rejected.

"""
from typing import List, NamedTuple, Tuple, Union

import numpy as np

from .ErrorUtils import AmbiguousCarrier, CapacityExceeded, NonLatinCharacter, NulCharacter
from .ImageUtils import GrayImage, Rect, check_rect
from .LoggingUtils import logger


class Message:
    """Message payload: bytes in 1..255, one byte per character."""

    def __init__(self, data: Union[bytes, bytearray, List[int]] = b""):
        data = bytes(data)
        if 0 in data:
            raise NulCharacter(f"byte 0 at position {data.index(0)}")
        self._data = data

    @property
    def data(self) -> bytes:
        return self._data

    @property
    def text(self) -> str:
        return bytes_to_text(self)

    def __len__(self):
        return len(self._data)

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if not isinstance(other, Message):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return "<Message> : {}".format(list(self._data))


class CandidateSite(NamedTuple):
    x: int
    y: int


class EmbedReport(NamedTuple):
    """Sites used, bytes hidden, candidates in the ROI and how many of them can be filled."""

    sites: List[CandidateSite]
    bytes_hidden: int
    capacity: int
    usable: int


def text_to_bytes(text: str) -> Message:
    """
    Convert each character of the text into its code point.

    Args:
        - text (str): message text, Latin-1 characters only

    Returns:
        Message: one byte per character, order preserved
    """
    try:
        data = text.encode("latin-1")
    except UnicodeEncodeError as e:
        raise NonLatinCharacter(f"{text[e.start]!r} at position {e.start}")
    if b"\x00" in data:
        raise NulCharacter(f"NUL at position {data.index(0)}")
    return Message(data)


def bytes_to_text(msg: Message) -> str:
    return msg.data.decode("latin-1")


def _isolated(a: np.ndarray, zero_centre: bool) -> np.ndarray:
    """
    Boolean mask of non-border pixels whose four neighbours are zero and
    whose own value is zero (``zero_centre``) or nonzero.
    """
    mask = np.zeros(a.shape, dtype=bool)
    if a.shape[0] < 3 or a.shape[1] < 3:
        return mask

    centre = a[1:-1, 1:-1]
    neighbours_zero = (
        (a[:-2, 1:-1] == 0) & (a[2:, 1:-1] == 0) & (a[1:-1, :-2] == 0) & (a[1:-1, 2:] == 0)
    )
    mask[1:-1, 1:-1] = neighbours_zero & ((centre == 0) if zero_centre else (centre != 0))
    return mask


def _sites(mask: np.ndarray, dx: int = 0, dy: int = 0) -> List[CandidateSite]:
    # np.nonzero walks the array in row-major order
    ys, xs = np.nonzero(mask)
    return [CandidateSite(int(x) + dx, int(y) + dy) for y, x in zip(ys, xs)]


def scan_candidates(img: GrayImage, roi: Rect) -> List[CandidateSite]:
    """
    Method to find all embedding sites inside the region of interest.

    Neighbours may lie outside the rectangle but must lie inside the image.

    Args:
        - img (GrayImage): carrier image
        - roi (Rect): region of interest

    Returns:
        List[CandidateSite]: sites in row-major order
    """
    check_rect(img, roi)
    mask = _isolated(img.pixels, zero_centre=True)
    return _sites(mask[roi.y0 : roi.y1 + 1, roi.x0 : roi.x1 + 1], roi.x0, roi.y0)


def validate_carrier(img: GrayImage) -> List[CandidateSite]:
    """
    Method to list the pixels an extractor would misread as hidden bytes:
    nonzero pixels, anywhere in the image, whose in-bounds neighbours are
    all zero.

    Args:
        - img (GrayImage): carrier image

    Returns:
        List[CandidateSite]: ambiguous sites; empty for a valid carrier
    """
    padded = np.pad(img.pixels, 1, mode="constant", constant_values=0)
    mask = _isolated(padded, zero_centre=False)[1:-1, 1:-1]
    return _sites(mask)


def _sequential_sites(img: GrayImage, roi: Rect) -> List[CandidateSite]:
    """
    Sites filled in order when every candidate is re-evaluated against the
    image as written so far.
    """
    taken = set()
    selected = []
    for site in scan_candidates(img, roi):
        # CANDIDATES COME IN ROW-MAJOR ORDER: ONLY THE LEFT AND UPPER
        # NEIGHBOURS CAN ALREADY HOLD A BYTE
        if (site.x - 1, site.y) in taken or (site.x, site.y - 1) in taken:
            continue
        taken.add(site)
        selected.append(site)
    return selected


def carrier_capacity(img: GrayImage, roi: Rect) -> int:
    """
    Number of bytes the region can hold. Never larger than the number of
    candidates, since a written byte disqualifies its neighbours.
    """
    return len(_sequential_sites(img, roi))


def embed(img: GrayImage, roi: Rect, msg: Message) -> Tuple[GrayImage, EmbedReport]:
    """
    Method to hide a message in a carrier image.

    Args:
        - img (GrayImage): carrier, must pass :func:`validate_carrier`
        - roi (Rect): region in which embedding sites are sought
        - msg (Message): payload

    Returns:
        Tuple[GrayImage, EmbedReport]: stego image and the sites used
    """
    check_rect(img, roi)

    ambiguous = validate_carrier(img)
    if ambiguous:
        raise AmbiguousCarrier(
            f"{len(ambiguous)} isolated nonzero pixel(s), first at {tuple(ambiguous[0])}",
            sites=[tuple(s) for s in ambiguous],
        )

    capacity = len(scan_candidates(img, roi))
    sites = _sequential_sites(img, roi)
    usable = len(sites)
    if len(msg) > usable:
        raise CapacityExceeded(
            f"message has {len(msg)} bytes, region {roi} has {capacity} candidates, {usable} usable",
            capacity=capacity,
            usable=usable,
            requested=len(msg),
        )

    used = sites[: len(msg)]
    work = img.pixels.copy()
    if used:
        xs, ys = zip(*used)
        work[list(ys), list(xs)] = np.frombuffer(msg.data, dtype=np.uint8)

    logger.debug(f"Hid {len(msg)} bytes in {roi}, capacity {capacity}, usable {usable}")
    return GrayImage(work), EmbedReport(sites=used, bytes_hidden=len(msg), capacity=capacity, usable=usable)


def hidden_sites(stego: GrayImage) -> List[CandidateSite]:
    """Non-border nonzero pixels whose four neighbours are zero, in row-major order."""
    return _sites(_isolated(stego.pixels, zero_centre=False))


def extract(stego: GrayImage) -> Tuple[Message, GrayImage]:
    """
    Method to recover the message and the original image.

    The whole image is scanned; every matching pixel contributes its value
    as the next message byte and is reset to zero.

    Args:
        - stego (GrayImage): stego image (any image is accepted)

    Returns:
        Tuple[Message, GrayImage]: message and restored image
    """
    mask = _isolated(stego.pixels, zero_centre=False)
    restored = stego.pixels.copy()
    values = restored[mask]
    restored[mask] = 0

    logger.debug(f"Retrieved {values.size} bytes")
    return Message(values.tobytes()), GrayImage(restored)
