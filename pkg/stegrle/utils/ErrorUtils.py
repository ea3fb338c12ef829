# -*- coding: utf-8 -*-

"""
Module stegrle.utils.ErrorUtils
=================================================================

A module containing the exceptions raised in this package.

Every exception carries a machine readable ``name`` (the class name)
and a distinct ``exit_code`` taken from :data:`stegrle.constants.exit_codes`.
The command line tool prints the name on stderr and exits with the code.

"""
from typing import List, Optional, Tuple

from ..constants import EXIT_UNKNOWN, exit_codes


class StegRleError(Exception):
    """Base class of all stegrle errors."""

    default_message = "Unspecified stegrle error."

    def __init__(self, *args):
        if args:
            self.message = args[0]
        else:
            self.message = None

    @property
    def name(self) -> str:
        return type(self).__name__

    @property
    def exit_code(self) -> int:
        return exit_codes.get(self.name, EXIT_UNKNOWN)

    def __str__(self):
        if self.message:
            return "{0}, {1} ".format(self.name, self.message)
        else:
            return "{0}: {1}".format(self.name, self.default_message)


# ------------------- INPUT / USAGE ------------------------------
class InvalidRoiSpec(StegRleError):
    default_message = "ROI must be given as x0,y0,x1,y1."


class IOFailure(StegRleError):
    default_message = "Reading or writing a file failed."


class EmptyMessage(StegRleError):
    default_message = "Refusing to embed an empty message without --allow-empty."


class InvalidRepeat(StegRleError):
    default_message = "Repeat count must be at least 1."


# ------------------- IMAGES -------------------------------------
class MalformedHeader(StegRleError):
    default_message = "Bad magic number or missing header fields."


class TruncatedData(StegRleError):
    default_message = "Fewer pixel samples than width x height."


class UnsupportedMaxval(StegRleError):
    default_message = "Only 8-bit images (maxval <= 255) are supported."


class MalformedPixelData(StegRleError):
    default_message = "Pixel sample is not an integer in 0..maxval."


class InvalidDimensions(StegRleError):
    default_message = "Image width and height must be at least 1."


class RectOutOfBounds(StegRleError):
    default_message = "ROI does not fit inside the image."

    def __init__(self, *args, coordinate: Optional[Tuple[str, int, int]] = None):
        super().__init__(*args)
        # (field name, offending value, exclusive limit)
        self.coordinate = coordinate


# ------------------- STEGO --------------------------------------
class NonLatinCharacter(StegRleError):
    default_message = "Message characters must have code points below 256."


class NulCharacter(StegRleError):
    default_message = "Message must not contain NUL characters."


class CapacityExceeded(StegRleError):
    default_message = "Not enough embedding sites for the message."

    def __init__(self, *args, capacity: int = 0, usable: int = 0, requested: int = 0):
        super().__init__(*args)
        # CANDIDATES IN THE ROI, AND HOW MANY OF THEM THE SEQUENTIAL WALK CAN FILL
        self.capacity = capacity
        self.usable = usable
        self.requested = requested


class AmbiguousCarrier(StegRleError):
    default_message = "Carrier holds isolated nonzero pixels that would be read as message bytes."

    def __init__(self, *args, sites: Optional[List[Tuple[int, int]]] = None):
        super().__init__(*args)
        self.sites = sites or []


# ------------------- SRLE CONTAINER -----------------------------
class BadMagic(StegRleError):
    default_message = "Container does not start with SRLE."


class UnsupportedVersion(StegRleError):
    default_message = "Unknown container version."


class Truncated(StegRleError):
    default_message = "Container is shorter than its header declares."


class LengthMismatch(StegRleError):
    default_message = "Sum of run lengths does not equal width x height."

    def __init__(self, *args, expected: int = 0, actual: int = 0):
        super().__init__(*args)
        self.expected = expected
        self.actual = actual


class TrailingGarbage(StegRleError):
    default_message = "Container has bytes after the last run."


# ------------------- METRICS ------------------------------------
class DimensionMismatch(StegRleError):
    default_message = "Images must have identical dimensions."


# ------------------- PIPELINE -----------------------------------
class VerificationFailed(StegRleError):
    default_message = "Round trip did not reproduce the carrier and the message."


class PhaseFailed(StegRleError):
    """Wraps an error raised inside one pipeline phase."""

    def __init__(self, phase: str, cause: StegRleError):
        super().__init__(f"phase {phase} failed: {cause}")
        self.phase = phase
        self.cause = cause

    @property
    def name(self) -> str:
        return self.cause.name

    @property
    def exit_code(self) -> int:
        return self.cause.exit_code
