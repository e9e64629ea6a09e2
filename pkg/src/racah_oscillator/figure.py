"""Hand-written SVG stem plots for discrete wavefunctions."""
from __future__ import annotations

from typing import Sequence

import numpy as np

PANEL_W = 220
PANEL_H = 130
MARGIN_LEFT = 90
MARGIN_TOP = 40
PAD = 12


def _f(v: float) -> str:
    return f"{v:.2f}"


def stem_panel(x0: float, y0: float, q: Sequence[float], phi: Sequence[float]) -> list:
    """SVG elements for one panel whose top-left corner is (x0, y0)."""
    q = np.asarray(q, dtype=float)
    phi = np.asarray(phi, dtype=float)
    qmax = max(float(np.max(np.abs(q))), 0.5)
    ymax = float(np.max(np.abs(phi))) or 1.0
    inner_w = PANEL_W - 2 * PAD
    inner_h = PANEL_H - 2 * PAD
    cx = x0 + PAD + inner_w / 2
    cy = y0 + PAD + inner_h / 2

    def sx(v):
        return cx + v / qmax * inner_w / 2

    def sy(v):
        return cy - v / ymax * inner_h / 2

    out = [
        f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{PANEL_W}" height="{PANEL_H}" '
        f'fill="none" stroke="#bbbbbb" stroke-width="0.5"/>',
        f'<line x1="{_f(x0 + PAD)}" y1="{_f(cy)}" x2="{_f(x0 + PANEL_W - PAD)}" y2="{_f(cy)}" '
        f'stroke="#000000" stroke-width="0.6"/>',
        f'<line x1="{_f(cx)}" y1="{_f(y0 + PAD)}" x2="{_f(cx)}" y2="{_f(y0 + PANEL_H - PAD)}" '
        f'stroke="#000000" stroke-width="0.6"/>',
    ]
    for qi, vi in zip(q, phi):
        out.append(f'<line x1="{_f(sx(qi))}" y1="{_f(cy)}" x2="{_f(sx(qi))}" y2="{_f(sy(vi))}" '
                   f'stroke="#1f4e9c" stroke-width="0.8"/>')
        out.append(f'<circle cx="{_f(sx(qi))}" cy="{_f(sy(vi))}" r="1.8" fill="#1f4e9c"/>')
    return out


def stem_grid_svg(rows: Sequence[tuple], levels: Sequence[int], title: str = "") -> str:
    """Grid of stem plots.

    ``rows`` holds ``(row_label, q, [phi_n for n in levels])`` per row.
    """
    width = MARGIN_LEFT + PANEL_W * len(levels) + PAD
    height = MARGIN_TOP + PANEL_H * len(rows) + PAD
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
        '<g font-family="sans-serif" font-size="12">',
    ]
    if title:
        parts.append(f'<text x="{PAD}" y="16">{title}</text>')
    for col, n in enumerate(levels):
        x = MARGIN_LEFT + col * PANEL_W + PANEL_W / 2
        parts.append(f'<text x="{_f(x)}" y="{MARGIN_TOP - 6}" text-anchor="middle">n = {n}</text>')
    for r, (label, q, series) in enumerate(rows):
        y0 = MARGIN_TOP + r * PANEL_H
        parts.append(f'<text x="{PAD}" y="{_f(y0 + PANEL_H / 2 + 4)}">c = {label}</text>')
        for col, phi in enumerate(series):
            parts.extend(stem_panel(MARGIN_LEFT + col * PANEL_W, y0, q, phi))
    parts.append('</g>')
    parts.append('</svg>')
    return "\n".join(parts) + "\n"
