# -*- coding: utf-8 -*-

"""
Module stegrle.constants
=================================================================

A module containing the constants used in this package: the SRLE
container layout, the luma weights used for grayscale conversion,
the pipeline phase names and the table of CLI exit codes.

"""
import struct

# ------------------- IMAGE CONSTANTS ----------------------------
MAX_I = 255

# ITU-R BT.601 LUMA WEIGHTS, SCALED TO INTEGERS SO THAT
# ROUND-HALF-UP IS EXACT: (299 R + 587 G + 114 B + 500) // 1000
LUMA_WEIGHTS = (299, 587, 114)
LUMA_SCALE = 1000

PGM_MAGICS = (b"P5", b"P2")
PPM_MAGICS = (b"P6", b"P3")

# ------------------- SRLE CONTAINER -----------------------------
SRLE_MAGIC = b"SRLE"
SRLE_VERSION = 1

# MAGIC, VERSION, WIDTH, HEIGHT, RUN COUNT - LITTLE ENDIAN, NO PADDING
SRLE_HEADER_FORMAT = "<4sBIII"
SRLE_HEADER_SIZE = struct.calcsize(SRLE_HEADER_FORMAT)

# VALUE (1 BYTE), LENGTH (UINT32 LE)
SRLE_RUN_FORMAT = "<BI"
SRLE_RUN_SIZE = struct.calcsize(SRLE_RUN_FORMAT)

# WIDTH, HEIGHT AND RUN LENGTHS ARE STORED AS UINT32
MAX_UINT32 = 0xFFFFFFFF

# ------------------- PIPELINE -----------------------------------
# ORDER IS IMPORTANT AS IT IS THE ORDER OF EXECUTION
phase_names = ["data-hiding", "rle-encode", "rle-decode", "data-retrieval"]

# PUBLISHED TOTALS OF THE COMPETING METHOD, QUOTED IN REPORTS ONLY (SECONDS)
reference_totals = {"stego": 6.79, "compression": 0.42, "total": 7.21}

# ------------------- EXIT CODES ---------------------------------
EXIT_OK = 0
EXIT_UNKNOWN = 1
# CLICK USAGE ERRORS (MISSING OPTION, BAD OPTION VALUE)
EXIT_USAGE = 2

exit_codes = {
    "InvalidRoiSpec": 6,
    "IOFailure": 3,
    "EmptyMessage": 4,
    "InvalidRepeat": 5,
    "MalformedHeader": 10,
    "TruncatedData": 11,
    "UnsupportedMaxval": 12,
    "MalformedPixelData": 13,
    "InvalidDimensions": 14,
    "RectOutOfBounds": 15,
    "NonLatinCharacter": 20,
    "NulCharacter": 21,
    "CapacityExceeded": 22,
    "AmbiguousCarrier": 23,
    "BadMagic": 30,
    "UnsupportedVersion": 31,
    "Truncated": 32,
    "LengthMismatch": 33,
    "TrailingGarbage": 34,
    "DimensionMismatch": 40,
    "VerificationFailed": 50,
}
