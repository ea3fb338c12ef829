#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `stegrle.utils.ImageUtils`."""
import numpy as np
import pytest
from hypothesis import given, settings
from pytest import raises
from stegrle.utils.ErrorUtils import (
    InvalidDimensions,
    IOFailure,
    MalformedHeader,
    MalformedPixelData,
    RectOutOfBounds,
    TruncatedData,
    UnsupportedMaxval,
)
from stegrle.utils.ImageUtils import (
    GrayImage,
    Rect,
    RgbImage,
    check_rect,
    load_gray_image,
    read_pgm,
    read_ppm,
    save_gray_image,
    to_grayscale,
    write_pgm,
)

from .oracles import gray_images


@pytest.fixture
def image256():
    return GrayImage.zeros(256, 256)


################################################################################
# GRAYSCALE CONVERSION
################################################################################

test_grayscale = [
    ((0, 0, 0), 0),
    ((255, 255, 255), 255),
    ((100, 50, 200), 82),
    ((255, 0, 0), 76),
    ((0, 255, 0), 150),
    ((0, 0, 255), 29),
]


def scalar_luma(r, g, b):
    value = 0.299 * r + 0.587 * g + 0.114 * b
    return min(int(value + 0.5), 255)


@pytest.mark.parametrize("rgb, expected", test_grayscale)
def test_to_grayscale(rgb, expected):
    gray = to_grayscale(RgbImage(np.array([[rgb]], dtype=np.uint8)))
    assert gray[0, 0] == expected
    assert gray[0, 0] == scalar_luma(*rgb)


def test_to_grayscale_gray_triples_are_fixed_points():
    values = np.arange(256, dtype=np.uint8)
    rgb = np.stack([values, values, values], axis=-1).reshape(1, 256, 3)
    gray = to_grayscale(RgbImage(rgb))
    assert gray.pixels.tolist() == [list(range(256))]


def test_to_grayscale_keeps_dimensions():
    rng = np.random.default_rng(1)
    rgb = RgbImage(rng.integers(0, 256, size=(7, 5, 3)))
    gray = to_grayscale(rgb)
    assert (gray.width, gray.height) == (5, 7)


def test_to_grayscale_is_channel_monotone():
    rng = np.random.default_rng(2)
    base = rng.integers(0, 255, size=(16, 16, 3))
    before = to_grayscale(RgbImage(base)).pixels.astype(int)
    for channel in range(3):
        bumped = base.copy()
        bumped[:, :, channel] += 1
        after = to_grayscale(RgbImage(bumped)).pixels.astype(int)
        assert np.all(after >= before)


################################################################################
# PGM
################################################################################

test_read_pgm_pass = [
    (b"P5\n2 1\n255\n\x00\xff", 2, 1, [[0, 255]]),
    (b"P2\n1 1\n255\n109\n", 1, 1, [[109]]),
    (b"P5\n# made by hand\n2 2\n# comment\n255\n\x01\x02\x03\x04", 2, 2, [[1, 2], [3, 4]]),
    (b"P2 3 1 255 1 # first\n 2\n3", 3, 1, [[1, 2, 3]]),
    (b"P5\n1 1\n15\n\x0f", 1, 1, [[15]]),
]


@pytest.mark.parametrize("data, width, height, pixels", test_read_pgm_pass)
def test_read_pgm(data, width, height, pixels):
    img = read_pgm(data)
    assert (img.width, img.height) == (width, height)
    assert img.pixels.tolist() == pixels


test_read_pgm_fail = [
    (b"P5\n2 1\n255\n\x00", TruncatedData),
    (b"P2\n2 2\n255\n1 2 3", TruncatedData),
    (b"P6\n1 1\n255\n\x00\x00\x00", MalformedHeader),
    (b"XX\n1 1\n255\n\x00", MalformedHeader),
    (b"P5\n2\n", MalformedHeader),
    (b"P5\n1 1\n65535\n\x00\x00", UnsupportedMaxval),
    (b"P5\n1 1\n0\n\x00", MalformedHeader),
    (b"P5\n0 1\n255\n", InvalidDimensions),
    (b"P2\n1 1\n255\nabc", MalformedPixelData),
    (b"P2\n1 1\n100\n101", MalformedPixelData),
    (b"", MalformedHeader),
]


@pytest.mark.parametrize("data, err", test_read_pgm_fail)
def test_read_pgm_fail(data, err):
    with raises(err):
        read_pgm(data)


test_write_pgm = [
    (GrayImage([[0]]), b"P5\n1 1\n255\n\x00"),
    (GrayImage([[1, 2], [3, 4]]), b"P5\n2 2\n255\n\x01\x02\x03\x04"),
    (GrayImage([[7, 8, 9]]), b"P5\n3 1\n255\n\x07\x08\x09"),
]


@pytest.mark.parametrize("img, expected", test_write_pgm)
def test_write_pgm(img, expected):
    assert write_pgm(img) == expected


@settings(max_examples=200, deadline=None)
@given(gray_images())
def test_pgm_round_trip(img):
    assert read_pgm(write_pgm(img)) == img


def test_write_pgm_size_256(image256):
    assert len(write_pgm(image256)) == 15 + 65536


def test_read_ppm():
    img = read_ppm(b"P6\n2 1\n255\n\x01\x02\x03\x04\x05\x06")
    assert img.pixels.tolist() == [[[1, 2, 3], [4, 5, 6]]]

    img = read_ppm(b"P3\n1 1\n255\n100 50 200\n")
    assert to_grayscale(img)[0, 0] == 82


def test_load_gray_image_converts_colour(tmp_path):
    path = tmp_path / "colour.ppm"
    path.write_bytes(b"P6\n1 1\n255\n\x64\x32\xc8")
    assert load_gray_image(path).pixels.tolist() == [[82]]


def test_save_and_load(tmp_path):
    img = GrayImage([[0, 1], [2, 3]])
    save_gray_image(tmp_path / "a.pgm", img)
    assert load_gray_image(tmp_path / "a.pgm") == img


def test_load_missing_file(tmp_path):
    with raises(IOFailure):
        load_gray_image(tmp_path / "missing.pgm")


################################################################################
# TYPES
################################################################################

test_gray_image_fail = [
    ([], InvalidDimensions),
    ([[]], InvalidDimensions),
    ([1, 2, 3], InvalidDimensions),
    ([[0, 256]], MalformedPixelData),
    ([[-1]], MalformedPixelData),
]


@pytest.mark.parametrize("pixels, err", test_gray_image_fail)
def test_gray_image_fail(pixels, err):
    with raises(err):
        GrayImage(pixels)


def test_gray_image_is_read_only():
    img = GrayImage([[1, 2]])
    with raises(ValueError):
        img.pixels[0, 0] = 5


def test_from_values_row_major():
    img = GrayImage.from_values(3, 2, range(6))
    assert img[2, 0] == 2
    assert img[0, 1] == 3
    with raises(InvalidDimensions):
        GrayImage.from_values(3, 2, range(5))


################################################################################
# ROI
################################################################################

test_check_rect_pass = [
    Rect(10, 10, 200, 220),
    Rect(0, 0, 255, 255),
    Rect(5, 5, 5, 5),
]


@pytest.mark.parametrize("roi", test_check_rect_pass)
def test_check_rect_pass(image256, roi):
    check_rect(image256, roi)


test_check_rect_fail = [
    (Rect(0, 0, 256, 10), ("x1", 256, 256)),
    (Rect(0, 0, 10, 256), ("y1", 256, 256)),
    (Rect(-1, 0, 10, 10), ("x0", -1, 256)),
    (Rect(0, -3, 10, 10), ("y0", -3, 256)),
    (Rect(20, 0, 10, 10), ("x1", 10, 20)),
    (Rect(0, 20, 10, 10), ("y1", 10, 20)),
]


@pytest.mark.parametrize("roi, coordinate", test_check_rect_fail)
def test_check_rect_fail(image256, roi, coordinate):
    with raises(RectOutOfBounds) as error:
        check_rect(image256, roi)
    assert error.value.coordinate == coordinate


def test_rect_full(image256):
    assert Rect.full(image256) == Rect(0, 0, 255, 255)
    assert Rect(10, 10, 200, 220).width == 191
    assert Rect(10, 10, 200, 220).height == 211


# ==============================================================================
# The code below is for debugging a particular test in eclipse/pydev.
# (normally all tests are run with pytest)
# ==============================================================================
if __name__ == "__main__":
    the_test_you_want_to_debug = test_to_grayscale_gray_triples_are_fixed_points

    the_test_you_want_to_debug()
    print("-*# finished #*-")
# ==============================================================================
