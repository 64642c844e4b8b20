"""Deterministic CSV, JSON and SVG writers for experiment output."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


def to_jsonable(obj):
    """Convert numpy scalars/arrays and complex numbers to plain JSON types."""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else repr(x)
    if isinstance(obj, (complex, np.complexfloating)):
        z = complex(obj)
        return {"re": to_jsonable(z.real), "im": to_jsonable(z.imag)}
    return obj


def write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(to_jsonable(payload), indent=2, sort_keys=True) + "\n")


def _split_complex(rows: Sequence[dict]) -> tuple[list[str], list[list]]:
    """Flatten complex cells into ``<col>_re``/``<col>_im`` pairs."""
    header: list[str] = []
    for key, val in rows[0].items():
        if isinstance(val, (complex, np.complexfloating)):
            header += [f"{key}_re", f"{key}_im"]
        else:
            header.append(key)
    body = []
    for row in rows:
        line = []
        for val in row.values():
            if isinstance(val, (complex, np.complexfloating)):
                line += [repr(float(val.real)), repr(float(val.imag))]
            elif isinstance(val, (float, np.floating)):
                line.append(repr(float(val)))
            else:
                line.append(val)
        body.append(line)
    return header, body


def write_csv(path: Path, rows: Sequence[dict]) -> None:
    if not rows:
        path.write_text("")
        return
    header, body = _split_complex(rows)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(body)


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def svg_plot(
    series: dict[str, tuple[Iterable[float], Iterable[float]]],
    title: str = "",
    xlog: bool = True,
    ylog: bool = True,
    xlabel: str = "",
    ylabel: str = "",
    width: int = 560,
    height: int = 380,
) -> str:
    """A polyline chart with optional log axes; no timestamps, so output is reproducible."""
    pad_l, pad_r, pad_t, pad_b = 70, 150, 30, 45

    def tx(v, log):
        return math.log10(v) if log else v

    pts = {}
    for name, (xs, ys) in series.items():
        pairs = [
            (tx(float(x), xlog), tx(float(y), ylog))
            for x, y in zip(xs, ys)
            if (not xlog or x > 0) and (not ylog or y > 0) and math.isfinite(float(y))
        ]
        pts[name] = pairs
    allp = [p for ps in pts.values() for p in ps] or [(0.0, 0.0), (1.0, 1.0)]
    x0, x1 = min(p[0] for p in allp), max(p[0] for p in allp)
    y0, y1 = min(p[1] for p in allp), max(p[1] for p in allp)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1
    pw, ph = width - pad_l - pad_r, height - pad_t - pad_b

    def sx(v):
        return pad_l + (v - x0) / (x1 - x0) * pw

    def sy(v):
        return pad_t + ph - (v - y0) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{pad_l}" y="18" font-size="13">{_esc(title)}</text>',
        f'<rect x="{pad_l}" y="{pad_t}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for frac in (0.0, 0.5, 1.0):
        xv, yv = x0 + frac * (x1 - x0), y0 + frac * (y1 - y0)
        xl = f"1e{xv:.1f}" if xlog else f"{xv:.3g}"
        yl = f"1e{yv:.1f}" if ylog else f"{yv:.3g}"
        out.append(f'<text x="{sx(xv):.1f}" y="{pad_t + ph + 15}" text-anchor="middle">{xl}</text>')
        out.append(f'<text x="{pad_l - 5}" y="{sy(yv) + 4:.1f}" text-anchor="end">{yl}</text>')
    out.append(f'<text x="{pad_l + pw / 2:.1f}" y="{height - 8}" text-anchor="middle">{_esc(xlabel)}</text>')
    out.append(f'<text x="14" y="{pad_t + ph / 2:.1f}" transform="rotate(-90 14 {pad_t + ph / 2:.1f})" text-anchor="middle">{_esc(ylabel)}</text>')
    for i, (name, ps) in enumerate(pts.items()):
        color = _PALETTE[i % len(_PALETTE)]
        if ps:
            path = " ".join(f"{sx(a):.2f},{sy(b):.2f}" for a, b in ps)
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{path}"/>')
            for a, b in ps:
                out.append(f'<circle cx="{sx(a):.2f}" cy="{sy(b):.2f}" r="2.5" fill="{color}"/>')
        ly = pad_t + 12 + 16 * i
        out.append(f'<line x1="{width - pad_r + 10}" y1="{ly - 4}" x2="{width - pad_r + 30}" y2="{ly - 4}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{width - pad_r + 35}" y="{ly}">{_esc(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
