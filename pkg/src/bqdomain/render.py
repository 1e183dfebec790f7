"""Deterministic slice rendering to binary PPM.

A slice fixes six of the seven trace coordinates, sweeps the seventh
over a rectangular window, runs the membership test per pixel, and
paints by verdict.  Pixels are pure functions of the config, and the
output buffer is assembled by pixel index, so the bytes are identical
for any worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .algebra import (BoundaryData, MarkoffQuad, RootChoice, quad_residual,
                      solve_fourth)
from .bq import BqParams, BqVerdict, Status, WitnessKind, decide_bq
from .markoff import MarkoffMap

COORDS = ("a", "b", "c", "d", "x", "y", "z")

TAG_NOTBQ_BQ1 = 0
TAG_NOTBQ_SIGMA = 1
TAG_NOTBQ_ARC = 2
TAG_UNDECIDED = 3
TAG_IN_BQ = 4


@dataclass(frozen=True)
class SliceConfig:
    fixed: Dict[str, complex]
    varying: str
    center: complex
    width: float
    height: float
    px: Tuple[int, int]              # (W, H)
    params: BqParams = BqParams()
    mode: str = "raw"                # raw | solve_plus | solve_minus

    def __post_init__(self):
        if self.varying not in COORDS:
            raise ValueError("unknown varying coordinate %r" % self.varying)
        if sorted(self.fixed) != sorted(c for c in COORDS
                                        if c != self.varying):
            raise ValueError("fixed must contain the six other coordinates")
        if self.px[0] < 1 or self.px[1] < 1:
            raise ValueError("resolution must be at least 1x1")
        if self.width <= 0 or self.height <= 0:
            raise ValueError("window must have positive size")
        if self.mode not in ("raw", "solve_plus", "solve_minus"):
            raise ValueError("unknown mode %r" % self.mode)

    @classmethod
    def from_json(cls, doc: dict) -> "SliceConfig":
        def cx(v) -> complex:
            return complex(v[0], v[1]) if isinstance(v, (list, tuple)) \
                else complex(v)
        budgets = doc.get("budgets", {})
        params = BqParams(K=doc.get("k_override"), **budgets)
        px = doc["px"]
        if isinstance(px, int):
            px = (px, px)
        return cls(fixed={k: cx(v) for k, v in doc["fixed"].items()},
                   varying=doc["varying"],
                   center=cx(doc["center"]),
                   width=float(doc["width"]),
                   height=float(doc["height"]),
                   px=(int(px[0]), int(px[1])),
                   params=params,
                   mode=doc.get("mode", "raw"))


@dataclass(frozen=True)
class PixelResult:
    tag: int
    steps_used: int
    residual: float = 0.0


def pixel_value(config: SliceConfig, col: int, row: int) -> complex:
    w, h = config.px
    re = config.center.real + ((col + 0.5) / w - 0.5) * config.width
    im = config.center.imag + (0.5 - (row + 0.5) / h) * config.height
    return complex(re, im)


def point_coords(config: SliceConfig, value: complex) -> Dict[str, complex]:
    coords = dict(config.fixed)
    coords[config.varying] = value
    if config.mode in ("solve_plus", "solve_minus"):
        which = RootChoice.PLUS if config.mode == "solve_plus" \
            else RootChoice.MINUS
        boundary = BoundaryData((coords["x"], coords["y"], coords["z"]))
        coords["d"] = solve_fourth(coords["a"], coords["b"], coords["c"],
                                   boundary, which)
    return coords


def verdict_tag(v: BqVerdict) -> int:
    if v.status is Status.IN_BQ:
        return TAG_IN_BQ
    if v.status is Status.UNDECIDED:
        return TAG_UNDECIDED
    kind = v.witness.kind
    if kind is WitnessKind.BQ1_VIOLATION:
        return TAG_NOTBQ_BQ1
    if kind is WitnessKind.SIGMA_ZERO:
        return TAG_NOTBQ_SIGMA
    return TAG_NOTBQ_ARC


def classify_pixel(config: SliceConfig, col: int, row: int) -> PixelResult:
    coords = point_coords(config, pixel_value(config, col, row))
    boundary = BoundaryData((coords["x"], coords["y"], coords["z"]))
    values = (coords["a"], coords["b"], coords["c"], coords["d"])
    quad = MarkoffQuad(values, boundary, on_variety=False)
    verdict = decide_bq(MarkoffMap(quad), config.params)
    return PixelResult(verdict_tag(verdict), verdict.steps_used,
                       abs(quad_residual(values, boundary)))


def pixel_rgb(r: PixelResult) -> Tuple[int, int, int]:
    scale = min(191, r.steps_used)
    if r.tag == TAG_IN_BQ:
        return (0, 0, 0)
    if r.tag == TAG_UNDECIDED:
        return (255, 255, 255)
    if r.tag == TAG_NOTBQ_BQ1:
        return (0, 0, 255 - scale)
    if r.tag == TAG_NOTBQ_SIGMA:
        return (0, 255, 0)
    return (255 - scale, 0, 0)


def _render_rows(args) -> List[Tuple[int, bytes, float]]:
    config, rows = args
    out = []
    for row in rows:
        buf = bytearray()
        worst = 0.0
        for col in range(config.px[0]):
            r = classify_pixel(config, col, row)
            buf.extend(pixel_rgb(r))
            worst = max(worst, r.residual)
        out.append((row, bytes(buf), worst))
    return out


def render_slice(config: SliceConfig, workers: int = 1
                 ) -> Tuple[bytes, float]:
    """Pixel bytes (without header) and the worst vertex-relation
    residual seen over the window."""
    w, h = config.px
    all_rows = list(range(h))
    if workers <= 1:
        chunks = [_render_rows((config, all_rows))]
    else:
        batches = [(config, all_rows[i::workers]) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_render_rows, batches))
    rows: Dict[int, bytes] = {}
    worst = 0.0
    for chunk in chunks:
        for row, buf, res in chunk:
            rows[row] = buf
            worst = max(worst, res)
    body = b"".join(rows[i] for i in range(h))
    return body, worst


def write_ppm(path: str, config: SliceConfig, body: bytes) -> None:
    w, h = config.px
    assert len(body) == 3 * w * h
    with open(path, "wb") as fh:
        fh.write(b"P6\n%d %d\n255\n" % (w, h))
        fh.write(body)


def render_to_file(config: SliceConfig, out_path: str,
                   workers: int = 1) -> float:
    body, worst = render_slice(config, workers)
    write_ppm(out_path, config, body)
    if config.mode == "raw":
        with open(out_path + ".report.txt", "w") as fh:
            fh.write("max |vertex relation residual| over window: %g\n"
                     % worst)
    return worst


def load_config(path: str) -> SliceConfig:
    with open(path) as fh:
        return SliceConfig.from_json(json.load(fh))
