#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for the `stegrle` command line tool."""
import pandas as pd
import pytest
from click.testing import CliRunner
from stegrle import __version__
from stegrle.cli_stegrle import main
from stegrle.constants import EXIT_USAGE, exit_codes
from stegrle.utils.CarrierUtils import generate_carrier
from stegrle.utils.ImageUtils import GrayImage, read_bytes, read_pgm, save_gray_image, write_pgm

from .oracles import SAMPLE_TEXT

ZERO_256_CONTAINER = bytes.fromhex("53524C45 01 00010000 00010000 01000000 00 00000100".replace(" ", ""))


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def carrier_path(tmp_path):
    path = tmp_path / "carrier.pgm"
    save_gray_image(path, generate_carrier(64, 64, seed=1))
    return path


@pytest.fixture
def zeros_path(tmp_path):
    path = tmp_path / "zeros.pgm"
    save_gray_image(path, GrayImage.zeros(256, 256))
    return path


def _write(path, img):
    save_gray_image(path, img)
    return str(path)


def test_container_fixture():
    assert len(ZERO_256_CONTAINER) == 22
    assert ZERO_256_CONTAINER[-4:] == (65536).to_bytes(4, "little")


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_help_lists_commands(runner):
    result = runner.invoke(main, ["--help"])
    assert result.exit_code == 0
    for command in ["embed", "compress", "decompress", "extract", "pipeline", "metrics", "gen-carrier", "capacity"]:
        assert command in result.output


################################################################################
# COMMANDS
################################################################################


def test_gen_carrier(runner, tmp_path):
    out = tmp_path / "gen.pgm"
    result = runner.invoke(main, ["gen-carrier", "--out", str(out), "--width", "40", "--height", "30", "--seed", "3"])
    assert result.exit_code == 0, result.output
    assert "carrier: 40x30" in result.output
    assert read_pgm(read_bytes(out)) == generate_carrier(40, 30, seed=3)


def test_capacity(runner, tmp_path):
    path = _write(tmp_path / "z5.pgm", GrayImage.zeros(5, 5))
    result = runner.invoke(main, ["capacity", "--in", path])
    assert result.exit_code == 0, result.output
    assert "capacity: 9" in result.output
    assert "usable: 5" in result.output

    result = runner.invoke(main, ["embed", "--in", path, "--out", str(tmp_path / "s.pgm"), "-m", "AB"])
    assert result.exit_code == 0, result.output
    assert "capacity: 9" in result.output
    assert "usable: 5" in result.output


def test_embed_compress_decompress_extract(runner, tmp_path, carrier_path):
    stego = tmp_path / "stego.pgm"
    container = tmp_path / "stego.srle"
    decoded = tmp_path / "decoded.pgm"
    restored = tmp_path / "restored.pgm"

    result = runner.invoke(main, ["embed", "--in", str(carrier_path), "--out", str(stego), "-m", SAMPLE_TEXT])
    assert result.exit_code == 0, result.output
    assert "bytes hidden: 11" in result.output

    result = runner.invoke(main, ["compress", "--in", str(stego), "--out", str(container)])
    assert result.exit_code == 0, result.output
    assert f"raw size: {len(read_bytes(stego))}" in result.output

    result = runner.invoke(main, ["decompress", "--in", str(container), "--out", str(decoded)])
    assert result.exit_code == 0, result.output
    assert "decoded: 64x64" in result.output
    assert read_bytes(decoded) == read_bytes(stego)

    result = runner.invoke(
        main, ["extract", "--in", str(decoded), "--out", str(restored), "--verify", str(carrier_path)]
    )
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert SAMPLE_TEXT in lines
    assert "mse: 0" in lines
    assert "psnr: Infinity" in lines
    assert read_bytes(restored) == read_bytes(carrier_path)


def test_embed_message_file(runner, tmp_path, carrier_path):
    message_file = tmp_path / "message.txt"
    message_file.write_text(SAMPLE_TEXT + "\n", encoding="utf-8")
    stego = tmp_path / "stego.pgm"

    result = runner.invoke(
        main, ["embed", "--in", str(carrier_path), "--out", str(stego), "--message-file", str(message_file)]
    )
    assert result.exit_code == 0, result.output
    assert "bytes hidden: 11" in result.output


def test_compress_zero_image(runner, tmp_path, zeros_path):
    container = tmp_path / "zeros.srle"
    result = runner.invoke(main, ["compress", "--in", str(zeros_path), "--out", str(container)])
    assert result.exit_code == 0, result.output
    assert read_bytes(container) == ZERO_256_CONTAINER
    assert "raw size: 65551" in result.output
    assert "compressed size: 22" in result.output
    assert "runs: 1" in result.output
    assert "ratio: 2979.59:1" in result.output


test_compress = [
    (GrayImage([[109, 109, 99, 99, 99, 99, 99, 97, 97, 97]]), "runs: 3", "compressed size: 32"),
    # ALTERNATING PIXELS: 16 RUNS COST MORE THAN THE RAW FILE
    (GrayImage([[1, 0] * 4] * 2), "runs: 16", "ratio: 0.28:1"),
]


@pytest.mark.parametrize("img, runs, size", test_compress)
def test_compress(runner, tmp_path, img, runs, size):
    path = _write(tmp_path / "in.pgm", img)
    container = tmp_path / "in.srle"
    result = runner.invoke(main, ["compress", "--in", path, "--out", str(container)])
    assert result.exit_code == 0, result.output
    assert runs in result.output
    assert size in result.output

    decoded = tmp_path / "decoded.pgm"
    result = runner.invoke(main, ["decompress", "--in", str(container), "--out", str(decoded)])
    assert result.exit_code == 0, result.output
    assert read_bytes(decoded) == read_bytes(path)


def test_embed_allow_empty(runner, tmp_path, carrier_path):
    stego = tmp_path / "stego.pgm"
    result = runner.invoke(main, ["embed", "--in", str(carrier_path), "--out", str(stego), "-m", "", "--allow-empty"])
    assert result.exit_code == 0, result.output
    assert "bytes hidden: 0" in result.output
    assert read_bytes(stego) == read_bytes(carrier_path)


def test_extract_without_message(runner, tmp_path):
    path = _write(tmp_path / "z.pgm", GrayImage.zeros(8, 8))
    result = runner.invoke(main, ["extract", "--in", path])
    assert result.exit_code == 0, result.output
    assert result.output.strip() == ""


def test_metrics(runner, tmp_path):
    a = _write(tmp_path / "a.pgm", GrayImage([[0, 0], [0, 0]]))
    b = _write(tmp_path / "b.pgm", GrayImage([[0, 255], [0, 0]]))

    result = runner.invoke(main, ["metrics", a, a])
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "0 / Infinity"

    result = runner.invoke(main, ["metrics", a, b])
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "16256.2500 / 6.0206"


def test_pipeline(runner, tmp_path, carrier_path):
    csv_path = tmp_path / "report.csv"
    out_dir = tmp_path / "out"
    result = runner.invoke(
        main,
        [
            "pipeline",
            "--in",
            str(carrier_path),
            "--in",
            str(carrier_path),
            "-m",
            SAMPLE_TEXT,
            "--repeat",
            "2",
            "--csv",
            str(csv_path),
            "--out",
            str(out_dir),
        ],
    )
    assert result.exit_code == 0, result.output
    assert "data-hiding" in result.output
    assert "Infinity" in result.output
    assert "total 7.2100 s" in result.output

    frame = pd.read_csv(csv_path, dtype=str)
    assert list(frame.columns) == ["image", "section", "name", "value"]
    assert len(frame) == 20
    assert set(frame["section"]) == {"timing", "quality", "compression"}

    assert (out_dir / "carrier.srle").exists()
    assert read_bytes(out_dir / "carrier.restored.pgm") == read_bytes(carrier_path)


################################################################################
# FAILURES
################################################################################


def _assert_fails(result, name, code):
    assert result.exit_code == code, result.output
    assert f"error: {name}" in result.output


test_embed_fail = [
    (GrayImage.zeros(3, 3), ["-m", "ab"], "CapacityExceeded", 22),
    (GrayImage([[0] * 5, [0] * 5, [0, 0, 9, 0, 0], [0] * 5, [0] * 5]), ["-m", "a"], "AmbiguousCarrier", 23),
    (GrayImage.zeros(5, 5), ["-m", ""], "EmptyMessage", 4),
    (GrayImage.zeros(5, 5), ["-m", "a", "--roi", "1,2"], "InvalidRoiSpec", 6),
    (GrayImage.zeros(5, 5), ["-m", "a", "--roi", "0,0,5,4"], "RectOutOfBounds", 15),
    (GrayImage.zeros(5, 5), ["-m", "café€"], "NonLatinCharacter", 20),
]


@pytest.mark.parametrize("img, args, name, code", test_embed_fail)
def test_embed_fail(runner, tmp_path, img, args, name, code):
    path = _write(tmp_path / "in.pgm", img)
    result = runner.invoke(main, ["embed", "--in", path, "--out", str(tmp_path / "out.pgm")] + args)
    _assert_fails(result, name, code)
    assert not (tmp_path / "out.pgm").exists()


test_usage_fail = [
    ["embed", "--out", "o.pgm", "-m", "a"],
    ["pipeline", "--in", "c.pgm", "-m", "a", "--repeat", "abc"],
    ["gen-carrier", "--out", "o.pgm", "--width", "0"],
]


@pytest.mark.parametrize("args", test_usage_fail)
def test_usage_fail(runner, args):
    result = runner.invoke(main, args)
    assert result.exit_code == EXIT_USAGE
    assert "error: " not in result.output


def test_roi_error_is_not_a_usage_error(runner, tmp_path):
    path = _write(tmp_path / "in.pgm", GrayImage.zeros(5, 5))
    result = runner.invoke(main, ["capacity", "--in", path, "--roi", "1,2"])
    _assert_fails(result, "InvalidRoiSpec", exit_codes["InvalidRoiSpec"])
    assert result.exit_code != EXIT_USAGE


def test_embed_missing_input(runner, tmp_path):
    result = runner.invoke(main, ["embed", "--in", str(tmp_path / "nope.pgm"), "--out", str(tmp_path / "o.pgm"), "-m", "a"])
    _assert_fails(result, "IOFailure", 3)


test_decompress_fail = [
    (b"XRLE" + ZERO_256_CONTAINER[4:], "BadMagic", 30),
    (ZERO_256_CONTAINER[:4] + b"\x07" + ZERO_256_CONTAINER[5:], "UnsupportedVersion", 31),
    (ZERO_256_CONTAINER[:12], "Truncated", 32),
    (ZERO_256_CONTAINER[:18] + b"\x00\x00\x01\x01", "LengthMismatch", 33),
    (ZERO_256_CONTAINER + b"\xff", "TrailingGarbage", 34),
]


@pytest.mark.parametrize("data, name, code", test_decompress_fail)
def test_decompress_fail(runner, tmp_path, data, name, code):
    container = tmp_path / "bad.srle"
    container.write_bytes(data)
    result = runner.invoke(main, ["decompress", "--in", str(container), "--out", str(tmp_path / "out.pgm")])
    _assert_fails(result, name, code)


def test_decompress_restores_pgm_bytes(runner, tmp_path, zeros_path):
    container = tmp_path / "zeros.srle"
    container.write_bytes(ZERO_256_CONTAINER)
    out = tmp_path / "out.pgm"
    result = runner.invoke(main, ["decompress", "--in", str(container), "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert read_bytes(out) == write_pgm(GrayImage.zeros(256, 256)) == read_bytes(zeros_path)


def test_metrics_dimension_mismatch(runner, tmp_path):
    a = _write(tmp_path / "a.pgm", GrayImage.zeros(4, 4))
    b = _write(tmp_path / "b.pgm", GrayImage.zeros(4, 5))
    _assert_fails(runner.invoke(main, ["metrics", a, b]), "DimensionMismatch", 40)


def test_extract_verify_fails_on_other_image(runner, tmp_path):
    stego = _write(tmp_path / "s.pgm", GrayImage.zeros(4, 4))
    other = _write(tmp_path / "o.pgm", GrayImage([[1] * 4] * 4))
    result = runner.invoke(main, ["extract", "--in", stego, "--verify", other])
    _assert_fails(result, "VerificationFailed", 50)


def test_compress_malformed_pgm(runner, tmp_path):
    path = tmp_path / "bad.pgm"
    path.write_bytes(b"P5\n4 4\n255\n" + bytes(3))
    result = runner.invoke(main, ["compress", "--in", str(path), "--out", str(tmp_path / "o.srle")])
    _assert_fails(result, "TruncatedData", 11)


# ==============================================================================
# The code below is for debugging a particular test in eclipse/pydev.
# (normally all tests are run with pytest)
# ==============================================================================
if __name__ == "__main__":
    the_test_you_want_to_debug = test_version

    the_test_you_want_to_debug()
    print("-*# finished #*-")
# ==============================================================================
