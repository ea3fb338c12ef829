# -*- coding: utf-8 -*-

"""
Module stegrle.utils
=================================================================

A module containing the building blocks of the package.

* ImageUtils - grayscale images, ROI rectangles, PGM/PPM I/O
* StegoUtils - hiding and retrieving the message
* RleUtils - run-length codec and the SRLE container
* MetricsUtils - MSE and PSNR
* TimingUtils - phase timing
* CarrierUtils - synthetic carriers
* ParseUtils - ROI and message input

"""

from .CarrierUtils import generate_carrier
from .ImageUtils import GrayImage, Rect, RgbImage, check_rect, read_pgm, read_ppm, to_grayscale, write_pgm
from .MetricsUtils import QualityReport, mse, psnr, psnr_formulations
from .ParseUtils import parse_roi, read_message_file
from .RleUtils import RunLengthStream, deserialize, rle_decode, rle_encode, serialize
from .StegoUtils import (
    CandidateSite,
    EmbedReport,
    Message,
    bytes_to_text,
    carrier_capacity,
    embed,
    extract,
    scan_candidates,
    text_to_bytes,
    validate_carrier,
)
from .TimingUtils import TimingReport
