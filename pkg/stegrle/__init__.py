# -*- coding: utf-8 -*-

"""
Package stegrle
=======================================

Top-level package for stegrle: hide a text message at isolated zero
pixels of a grayscale image, compress the stego image with run-length
encoding and invert both steps without loss.
"""

__version__ = "0.1.0"

from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd
from termcolor import colored
from tqdm import tqdm

from .constants import phase_names
from .utils.ErrorUtils import (
    EmptyMessage,
    InvalidRepeat,
    PhaseFailed,
    StegRleError,
    VerificationFailed,
)
from .utils.ImageUtils import (
    GrayImage,
    Rect,
    check_rect,
    load_gray_image,
    save_gray_image,
    write_bytes,
    write_pgm,
)
from .utils.LoggingUtils import logger
from .utils.MetricsUtils import QualityReport, quality_report
from .utils.ParseUtils import parse_roi
from .utils.RleUtils import (
    CompressionStats,
    RunLengthStream,
    compression_stats,
    deserialize,
    rle_decode,
    rle_encode,
    serialize,
)
from .utils.StegoUtils import EmbedReport, embed, extract, text_to_bytes
from .utils.TimingUtils import TimingReport, timed


class PipelineConfig:
    """Settings of one command line run, validated on construction."""

    def __init__(self, input_path: Optional[Union[str, Path]] = None, **kwargs):
        self.input_path = input_path

        # ROI AS Rect, AS "x0,y0,x1,y1" TEXT OR None FOR THE WHOLE IMAGE
        self.roi = kwargs.get("roi", None)

        self.message = kwargs.get("message", "")
        self.allow_empty = kwargs.get("allow_empty", False)

        # OUTPUT FILES
        self.stego_path = kwargs.get("stego_path", None)
        self.container_path = kwargs.get("container_path", None)
        self.restored_path = kwargs.get("restored_path", None)
        self.csv_path = kwargs.get("csv_path", None)

        # ORIGINAL IMAGE TO COMPARE THE RESTORED IMAGE WITH
        self.verify_path = kwargs.get("verify_path", None)

        # NUMBER OF TIMED RUNS, THE BEST ONE IS REPORTED
        self.repeat = kwargs.get("repeat", 1)

        self._input_validation()

    def _input_validation(self) -> None:
        """
        Private method to assert that
        the input is valid.
        """
        if isinstance(self.roi, str):
            self.roi = parse_roi(self.roi)
        elif self.roi is not None and not isinstance(self.roi, Rect):
            self.roi = Rect(*self.roi)

        if not isinstance(self.message, str):
            raise TypeError("message must be text")

        if self.message == "" and not self.allow_empty:
            raise EmptyMessage

        if isinstance(self.repeat, bool) or not isinstance(self.repeat, int) or self.repeat < 1:
            raise InvalidRepeat(f"repeat={self.repeat!r}")

    def roi_for(self, img: GrayImage) -> Rect:
        """The configured ROI, or the whole image, checked against img."""
        roi = self.roi if self.roi is not None else Rect.full(img)
        check_rect(img, roi)
        return roi

    def __repr__(self):
        return "<input> : {}, <roi>: {}, <message>: {} chars, <repeat>: {}".format(
            self.input_path, self.roi, len(self.message), self.repeat
        )


class PipelineResult:
    """Outcome of one verified pipeline run on one carrier."""

    def __init__(
        self,
        image: str,
        timing: TimingReport,
        stego_quality: QualityReport,
        restored_quality: QualityReport,
        stats: CompressionStats,
        embed_report: EmbedReport,
        message: str,
    ):
        self.image = image
        self.timing = timing
        self.stego_quality = stego_quality
        self.restored_quality = restored_quality
        self.stats = stats
        self.embed_report = embed_report
        self.message = message

    def quality_frame(self) -> pd.DataFrame:
        rows = []
        for compared, report in [
            ("original vs stego", self.stego_quality),
            ("original vs restored", self.restored_quality),
        ]:
            mse_text, psnr_text = report.formatted()
            rows.append({"image": self.image, "compared": compared, "mse": mse_text, "psnr": psnr_text})
        return pd.DataFrame(rows, columns=["image", "compared", "mse", "psnr"])

    def to_frame(self) -> pd.DataFrame:
        """Long format rows (image, section, name, value), used for CSV output."""
        rows = [
            {"image": self.image, "section": "timing", "name": r.process, "value": f"{r.elapsed_s:.6f}"}
            for r in self.timing.to_frame(self.image).itertuples()
        ]
        for r in self.quality_frame().itertuples():
            prefix = r.compared.split(" vs ")[1]
            rows.append({"image": self.image, "section": "quality", "name": f"{prefix}_mse", "value": r.mse})
            rows.append({"image": self.image, "section": "quality", "name": f"{prefix}_psnr", "value": r.psnr})
        rows.append(
            {"image": self.image, "section": "compression", "name": "ratio", "value": f"{self.stats.ratio:.4f}"}
        )
        return pd.DataFrame(rows, columns=["image", "section", "name", "value"])

    def format_text(self) -> str:
        timing = self.timing.to_frame(self.image).drop(columns="image")
        timing["elapsed_s"] = timing["elapsed_s"].map("{:.4f}".format)
        quality = self.quality_frame().drop(columns="image")

        lines = [
            f"Image: {self.image}",
            f"Message: {self.message!r} ({self.embed_report.bytes_hidden} bytes, "
            f"capacity {self.embed_report.capacity}, usable {self.embed_report.usable})",
            "",
            timing.to_string(index=False),
            "",
            quality.to_string(index=False),
            "",
            f"Compression: {self.stats.raw_bytes} -> {self.stats.container_bytes} bytes, "
            f"{self.stats.runs} runs, ratio {self.stats.ratio:.2f}:1",
        ]
        return "\n".join(lines)


class StegoPipeline:
    """Class running data hiding, RLE encoding, RLE decoding and data retrieval in-process."""

    def __init__(self, carrier: GrayImage, config: PipelineConfig, name: str = ""):
        self._carrier = carrier
        self._config = config
        self._name = name or str(config.input_path or "")
        self._roi = config.roi_for(carrier)
        self._message = text_to_bytes(config.message)

    @classmethod
    def from_config(cls, config: PipelineConfig) -> "StegoPipeline":
        return cls(load_gray_image(config.input_path), config)

    @staticmethod
    def _phase(name: str, fn, *args):
        try:
            return timed(fn, *args)
        except StegRleError as e:
            logger.error(colored(f"{name} failed: {e}", "red"))
            raise PhaseFailed(name, e)

    @staticmethod
    def _encode(img: GrayImage) -> Tuple[RunLengthStream, bytes]:
        stream = rle_encode(img)
        return stream, serialize(stream)

    def _run_once(self, timing: TimingReport) -> Dict:
        (stego, report), t_hide = self._phase(phase_names[0], embed, self._carrier, self._roi, self._message)
        (stream, container), t_enc = self._phase(phase_names[1], self._encode, stego)
        decoded, t_dec = self._phase(phase_names[2], lambda data: rle_decode(deserialize(data)), container)
        (message, restored), t_ret = self._phase(phase_names[3], extract, decoded)

        for name, seconds in zip(phase_names, [t_hide, t_enc, t_dec, t_ret]):
            timing.add(name, seconds)

        return {
            "stego": stego,
            "report": report,
            "stream": stream,
            "container": container,
            "decoded": decoded,
            "message": message,
            "restored": restored,
        }

    def _verify(self, out: Dict) -> None:
        if out["decoded"] != out["stego"]:
            raise VerificationFailed("decoded image differs from the stego image")
        if out["restored"] != self._carrier:
            raise VerificationFailed("restored image differs from the carrier")
        if out["message"] != self._message:
            raise VerificationFailed(
                f"recovered {out['message'].text!r}, hidden {self._message.text!r}"
            )

    def run(self) -> PipelineResult:
        timing = TimingReport()
        runs = range(self._config.repeat)
        if self._config.repeat > 1:
            runs = tqdm(runs, desc=self._name or "pipeline", leave=False)

        for _ in runs:
            out = self._run_once(timing)
            self._verify(out)

        logger.info(colored(f"{self._name}: lossless round trip verified", "green"))

        slowest = timing.slowest_phase()
        if slowest != "rle-decode":
            logger.warning(f"{self._name}: slowest phase is {slowest}, not rle-decode")

        self._write_outputs(out)

        raw_size = len(write_pgm(out["stego"]))
        return PipelineResult(
            image=self._name,
            timing=timing,
            stego_quality=quality_report(self._carrier, out["stego"]),
            restored_quality=quality_report(self._carrier, out["restored"]),
            stats=compression_stats(raw_size, out["stream"]),
            embed_report=out["report"],
            message=out["message"].text,
        )

    def _write_outputs(self, out: Dict) -> None:
        if self._config.stego_path:
            save_gray_image(self._config.stego_path, out["stego"])
        if self._config.container_path:
            write_bytes(self._config.container_path, out["container"])
        if self._config.restored_path:
            save_gray_image(self._config.restored_path, out["restored"])

    def __repr__(self):
        return "<carrier> : {}, <roi>: {}, <message>: {} bytes, <repeat>: {}".format(
            self._carrier, self._roi, len(self._message), self._config.repeat
        )


def run_pipelines(configs: List[PipelineConfig]) -> List[PipelineResult]:
    """Run the pipeline for several carriers, one config each."""
    return [StegoPipeline.from_config(config).run() for config in configs]
