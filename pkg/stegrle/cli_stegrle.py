# -*- coding: utf-8 -*-

"""
Application stegrle
=======================================

Command line front end: hide a message, compress, decompress,
retrieve, measure and time the whole round trip.

Every failure prints one line ``error: <Name>`` on stderr and exits
with the code listed in :data:`stegrle.constants.exit_codes`.
"""
import sys
from pathlib import Path
from typing import Optional

import click
import pandas as pd
from termcolor import colored

from . import PipelineConfig, StegoPipeline, __version__
from .constants import reference_totals
from .utils.CarrierUtils import generate_carrier
from .utils.ErrorUtils import StegRleError, VerificationFailed
from .utils.ImageUtils import load_gray_image, read_bytes, read_pgm, save_gray_image, write_bytes
from .utils.LoggingUtils import logger, set_log_level
from .utils.MetricsUtils import quality_report
from .utils.ParseUtils import read_message_file
from .utils.RleUtils import compression_stats, deserialize, rle_decode, rle_encode, serialize
from .utils.StegoUtils import carrier_capacity, embed, extract, scan_candidates, text_to_bytes


class StegRleGroup(click.Group):
    """Command group mapping package errors to exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except StegRleError as e:
            logger.error(colored(str(e), "red"))
            click.echo(f"error: {e.name}", err=True)
            ctx.exit(e.exit_code)


def _message_text(message: Optional[str], message_file: Optional[str]) -> str:
    if message_file is not None:
        return read_message_file(message_file)
    return message or ""


message_options = [
    click.option("--message", "-m", default=None, help="Text to hide (Latin-1 characters)."),
    click.option(
        "--message-file", default=None, type=click.Path(dir_okay=False), help="UTF-8 file with the text to hide."
    ),
    click.option("--allow-empty", is_flag=True, default=False, help="Accept an empty message."),
]
roi_option = click.option("--roi", default=None, help="Region of interest x0,y0,x1,y1 (inclusive). Default: whole image.")


def _add_options(options):
    def decorator(fn):
        for option in reversed(options):
            fn = option(fn)
        return fn

    return decorator


@click.group(cls=StegRleGroup)
@click.option("--verbose", "-v", is_flag=True, default=False, help="Log every step.")
@click.version_option(__version__)
def main(verbose):
    """Hide patient text in a grayscale image and compress it losslessly."""
    set_log_level(verbose)


@main.command("embed")
@click.option("--in", "input_path", required=True, type=click.Path(dir_okay=False), help="Carrier PGM (or PPM).")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False), help="Stego PGM to write.")
@roi_option
@_add_options(message_options)
def embed_command(input_path, out_path, roi, message, message_file, allow_empty):
    """Hide a message at isolated zero pixels of the carrier."""
    config = PipelineConfig(
        input_path,
        roi=roi,
        message=_message_text(message, message_file),
        allow_empty=allow_empty,
        stego_path=out_path,
    )
    carrier = load_gray_image(config.input_path)
    stego, report = embed(carrier, config.roi_for(carrier), text_to_bytes(config.message))
    save_gray_image(config.stego_path, stego)

    click.echo(f"bytes hidden: {report.bytes_hidden}")
    click.echo(f"capacity: {report.capacity}")
    click.echo(f"usable: {report.usable}")
    click.echo("sites: " + " ".join(f"({s.x},{s.y})" for s in report.sites))


@main.command("compress")
@click.option("--in", "input_path", required=True, type=click.Path(dir_okay=False), help="Stego PGM.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False), help="SRLE container to write.")
def compress_command(input_path, out_path):
    """Run-length encode a PGM into an SRLE container."""
    raw = read_bytes(input_path)
    stream = rle_encode(read_pgm(raw))
    write_bytes(out_path, serialize(stream))

    stats = compression_stats(len(raw), stream)
    click.echo(f"raw size: {stats.raw_bytes}")
    click.echo(f"compressed size: {stats.container_bytes}")
    click.echo(f"runs: {stats.runs}")
    click.echo(f"ratio: {stats.ratio:.2f}:1")


@main.command("decompress")
@click.option("--in", "input_path", required=True, type=click.Path(dir_okay=False), help="SRLE container.")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False), help="PGM to write.")
def decompress_command(input_path, out_path):
    """Decode an SRLE container back into a PGM."""
    img = rle_decode(deserialize(read_bytes(input_path)))
    save_gray_image(out_path, img)
    click.echo(f"decoded: {img.width}x{img.height}")


@main.command("extract")
@click.option("--in", "input_path", required=True, type=click.Path(dir_okay=False), help="Stego PGM.")
@click.option("--out", "out_path", default=None, type=click.Path(dir_okay=False), help="Restored PGM to write.")
@click.option("--verify", "verify_path", default=None, type=click.Path(dir_okay=False), help="Original to compare with.")
def extract_command(input_path, out_path, verify_path):
    """Retrieve the hidden message and restore the original image."""
    message, restored = extract(load_gray_image(input_path))
    if out_path:
        save_gray_image(out_path, restored)
    click.echo(message.text)

    if verify_path:
        report = quality_report(load_gray_image(verify_path), restored)
        mse_text, psnr_text = report.formatted()
        click.echo(f"mse: {mse_text}")
        click.echo(f"psnr: {psnr_text}")
        if not report.lossless:
            raise VerificationFailed(f"restored image differs from {verify_path}")


@main.command("pipeline")
@click.option(
    "--in", "input_paths", required=True, multiple=True, type=click.Path(dir_okay=False), help="Carrier(s), repeatable."
)
@roi_option
@_add_options(message_options)
@click.option("--repeat", default=1, type=int, show_default=True, help="Timed runs per carrier, best is reported.")
@click.option("--csv", "csv_path", default=None, type=click.Path(dir_okay=False), help="Also write the report as CSV.")
@click.option("--out", "out_dir", default=None, type=click.Path(file_okay=False), help="Directory for stego, container, restored files.")
def pipeline_command(input_paths, roi, message, message_file, allow_empty, repeat, csv_path, out_dir):
    """Time and verify embed, encode, decode and extract for each carrier."""
    text = _message_text(message, message_file)
    results = []
    if out_dir:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
    for input_path in input_paths:
        outputs = {}
        if out_dir:
            stem = Path(out_dir) / Path(input_path).stem
            outputs = {
                "stego_path": f"{stem}.stego.pgm",
                "container_path": f"{stem}.srle",
                "restored_path": f"{stem}.restored.pgm",
            }
        config = PipelineConfig(
            input_path, roi=roi, message=text, allow_empty=allow_empty, repeat=repeat, csv_path=csv_path, **outputs
        )
        results.append(StegoPipeline.from_config(config).run())

    click.echo("\n\n".join(result.format_text() for result in results))
    click.echo(
        f"\nReference (published competing method): stego {reference_totals['stego']:.4f} s, "
        f"compression {reference_totals['compression']:.4f} s, total {reference_totals['total']:.4f} s"
    )

    if csv_path:
        pd.concat([result.to_frame() for result in results]).to_csv(csv_path, index=False)
        logger.info(f"Report written to {csv_path}")


@main.command("metrics")
@click.argument("first", type=click.Path(dir_okay=False))
@click.argument("second", type=click.Path(dir_okay=False))
def metrics_command(first, second):
    """Print MSE / PSNR between two images."""
    report = quality_report(load_gray_image(first), load_gray_image(second))
    click.echo(str(report))


@main.command("gen-carrier")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False), help="PGM to write.")
@click.option("--width", default=256, type=click.IntRange(min=1), show_default=True)
@click.option("--height", default=256, type=click.IntRange(min=1), show_default=True)
@click.option("--seed", default=0, type=int, show_default=True, help="Texture noise seed.")
def gen_carrier_command(out_path, width, height, seed):
    """Write a synthetic carrier: zero background and one nonzero blob."""
    carrier = generate_carrier(width, height, seed)
    save_gray_image(out_path, carrier)
    click.echo(f"carrier: {carrier.width}x{carrier.height}")


@main.command("capacity")
@click.option("--in", "input_path", required=True, type=click.Path(dir_okay=False), help="Carrier PGM (or PPM).")
@roi_option
def capacity_command(input_path, roi):
    """Count embedding sites and the number of bytes the region can hold."""
    config = PipelineConfig(input_path, roi=roi, allow_empty=True)
    carrier = load_gray_image(config.input_path)
    region = config.roi_for(carrier)
    click.echo(f"capacity: {len(scan_candidates(carrier, region))}")
    click.echo(f"usable: {carrier_capacity(carrier, region)}")


if __name__ == "__main__":
    sys.exit(main())
