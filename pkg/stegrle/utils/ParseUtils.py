# -*- coding: utf-8 -*-

"""
Module stegrle.utils.ParseUtils
=================================================================

A module containing methods for parsing user input: regions of
interest and message text.

"""
from pathlib import Path
from typing import Optional, Union

from .ErrorUtils import InvalidRoiSpec, IOFailure
from .ImageUtils import Rect


def parse_roi(text: Optional[str]) -> Optional[Rect]:
    """
    Method to parse ``x0,y0,x1,y1`` into a rectangle.

    Args:
        - text (Optional[str]): ROI text, None means the whole image

    Returns:
        Optional[Rect]: parsed rectangle or None
    """
    if text is None:
        return None

    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise InvalidRoiSpec(f"{text!r} has {len(parts)} fields, expected 4")
    try:
        x0, y0, x1, y1 = (int(p) for p in parts)
    except ValueError:
        raise InvalidRoiSpec(f"{text!r} is not four integers")
    return Rect(x0, y0, x1, y1)


def read_message_file(path: Union[str, Path]) -> str:
    """
    Read a UTF-8 message file. One trailing newline is dropped so that
    files written by editors hide exactly their visible text.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise IOFailure(f"cannot read message file {path}: {e}")

    if text.endswith("\r\n"):
        return text[:-2]
    if text.endswith("\n"):
        return text[:-1]
    return text
