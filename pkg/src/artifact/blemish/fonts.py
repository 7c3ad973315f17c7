"""Embedded bitmap fonts for watermark rasterization.

Shipping fixed pixel tables (instead of depending on system fonts) keeps
watermark rendering byte-reproducible across machines.  Three faces:

* ``block5x7`` -- hand-drawn 5x7 monospace,
* ``slim3x5``  -- hand-drawn 3x5 monospace,
* ``heavy7x9`` -- ``block5x7`` dilated by one pixel right and down on a
  padded canvas (a bold variant derived at import time).

Glyph cells are boolean arrays; text rendering joins cells with one blank
column.  Coverage: A-Z, 0-9, space, ``-``, ``.``, ``*``, ``!`` (block/heavy)
and A-Z, 0-9, space, ``-``, ``.`` (slim).  Lowercase input is uppercased.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from ..errors import ValidationError

_BLOCK = {
    "A": ".###.|#...#|#...#|#####|#...#|#...#|#...#",
    "B": "####.|#...#|#...#|####.|#...#|#...#|####.",
    "C": ".###.|#...#|#....|#....|#....|#...#|.###.",
    "D": "####.|#...#|#...#|#...#|#...#|#...#|####.",
    "E": "#####|#....|#....|####.|#....|#....|#####",
    "F": "#####|#....|#....|####.|#....|#....|#....",
    "G": ".###.|#...#|#....|#.###|#...#|#...#|.###.",
    "H": "#...#|#...#|#...#|#####|#...#|#...#|#...#",
    "I": "#####|..#..|..#..|..#..|..#..|..#..|#####",
    "J": "..###|...#.|...#.|...#.|...#.|#..#.|.##..",
    "K": "#...#|#..#.|#.#..|##...|#.#..|#..#.|#...#",
    "L": "#....|#....|#....|#....|#....|#....|#####",
    "M": "#...#|##.##|#.#.#|#.#.#|#...#|#...#|#...#",
    "N": "#...#|##..#|#.#.#|#..##|#...#|#...#|#...#",
    "O": ".###.|#...#|#...#|#...#|#...#|#...#|.###.",
    "P": "####.|#...#|#...#|####.|#....|#....|#....",
    "Q": ".###.|#...#|#...#|#...#|#.#.#|#..#.|.##.#",
    "R": "####.|#...#|#...#|####.|#.#..|#..#.|#...#",
    "S": ".####|#....|#....|.###.|....#|....#|####.",
    "T": "#####|..#..|..#..|..#..|..#..|..#..|..#..",
    "U": "#...#|#...#|#...#|#...#|#...#|#...#|.###.",
    "V": "#...#|#...#|#...#|#...#|#...#|.#.#.|..#..",
    "W": "#...#|#...#|#...#|#.#.#|#.#.#|##.##|#...#",
    "X": "#...#|#...#|.#.#.|..#..|.#.#.|#...#|#...#",
    "Y": "#...#|#...#|.#.#.|..#..|..#..|..#..|..#..",
    "Z": "#####|....#|...#.|..#..|.#...|#....|#####",
    "0": ".###.|#...#|#..##|#.#.#|##..#|#...#|.###.",
    "1": "..#..|.##..|..#..|..#..|..#..|..#..|#####",
    "2": ".###.|#...#|....#|...#.|..#..|.#...|#####",
    "3": ".###.|#...#|....#|..##.|....#|#...#|.###.",
    "4": "...#.|..##.|.#.#.|#..#.|#####|...#.|...#.",
    "5": "#####|#....|####.|....#|....#|#...#|.###.",
    "6": ".###.|#....|#....|####.|#...#|#...#|.###.",
    "7": "#####|....#|...#.|..#..|.#...|.#...|.#...",
    "8": ".###.|#...#|#...#|.###.|#...#|#...#|.###.",
    "9": ".###.|#...#|#...#|.####|....#|....#|.###.",
    " ": ".....|.....|.....|.....|.....|.....|.....",
    "-": ".....|.....|.....|#####|.....|.....|.....",
    ".": ".....|.....|.....|.....|.....|.##..|.##..",
    "*": ".....|#.#.#|.###.|#####|.###.|#.#.#|.....",
    "!": "..#..|..#..|..#..|..#..|..#..|.....|..#..",
}

_SLIM = {
    "A": ".#.|#.#|###|#.#|#.#",
    "B": "##.|#.#|##.|#.#|##.",
    "C": ".##|#..|#..|#..|.##",
    "D": "##.|#.#|#.#|#.#|##.",
    "E": "###|#..|##.|#..|###",
    "F": "###|#..|##.|#..|#..",
    "G": ".##|#..|#.#|#.#|.##",
    "H": "#.#|#.#|###|#.#|#.#",
    "I": "###|.#.|.#.|.#.|###",
    "J": "..#|..#|..#|#.#|.#.",
    "K": "#.#|#.#|##.|#.#|#.#",
    "L": "#..|#..|#..|#..|###",
    "M": "#.#|###|###|#.#|#.#",
    "N": "##.|#.#|#.#|#.#|#.#",
    "O": ".#.|#.#|#.#|#.#|.#.",
    "P": "##.|#.#|##.|#..|#..",
    "Q": ".#.|#.#|#.#|.#.|..#",
    "R": "##.|#.#|##.|#.#|#.#",
    "S": ".##|#..|.#.|..#|##.",
    "T": "###|.#.|.#.|.#.|.#.",
    "U": "#.#|#.#|#.#|#.#|###",
    "V": "#.#|#.#|#.#|#.#|.#.",
    "W": "#.#|#.#|#.#|###|#.#",
    "X": "#.#|#.#|.#.|#.#|#.#",
    "Y": "#.#|#.#|.#.|.#.|.#.",
    "Z": "###|..#|.#.|#..|###",
    "0": ".#.|#.#|###|#.#|.#.",
    "1": ".#.|##.|.#.|.#.|###",
    "2": "##.|..#|.#.|#..|###",
    "3": "##.|..#|.#.|..#|##.",
    "4": "#.#|#.#|###|..#|..#",
    "5": "###|#..|##.|..#|##.",
    "6": ".##|#..|##.|#.#|.#.",
    "7": "###|..#|.#.|.#.|.#.",
    "8": ".#.|#.#|.#.|#.#|.#.",
    "9": ".#.|#.#|.##|..#|##.",
    " ": "...|...|...|...|...",
    "-": "...|...|###|...|...",
    ".": "...|...|...|...|.#.",
}


@dataclass(frozen=True)
class BitmapFont:
    font_id: str
    height: int
    width: int
    glyphs: Mapping[str, np.ndarray]


def _parse(rows: str) -> np.ndarray:
    grid = [[c == "#" for c in row] for row in rows.split("|")]
    return np.array(grid, dtype=bool)


def _build(font_id: str, table: dict[str, str]) -> BitmapFont:
    glyphs = {ch: _parse(rows) for ch, rows in table.items()}
    heights = {g.shape[0] for g in glyphs.values()}
    widths = {g.shape[1] for g in glyphs.values()}
    if len(heights) != 1 or len(widths) != 1:
        raise AssertionError(f"inconsistent glyph cells in {font_id}")
    return BitmapFont(font_id, heights.pop(), widths.pop(), glyphs)


def _dilate_pad(font: BitmapFont, font_id: str) -> BitmapFont:
    glyphs = {}
    for ch, g in font.glyphs.items():
        canvas = np.zeros((font.height + 2, font.width + 2), dtype=bool)
        canvas[:-2, :-2] |= g
        canvas[:-2, 1:-1] |= g
        canvas[1:-1, :-2] |= g
        canvas[1:-1, 1:-1] |= g
        glyphs[ch] = canvas
    return BitmapFont(font_id, font.height + 2, font.width + 2, glyphs)


_BLOCK_FONT = _build("block5x7", _BLOCK)

FONTS: dict[str, BitmapFont] = {
    "block5x7": _BLOCK_FONT,
    "slim3x5": _build("slim3x5", _SLIM),
    "heavy7x9": _dilate_pad(_BLOCK_FONT, "heavy7x9"),
}


def render_text(font_id: str, text: str) -> np.ndarray:
    """Rasterize ``text`` into a boolean bitmap, one blank column between glyphs."""
    if font_id not in FONTS:
        raise ValidationError(f"unknown font {font_id!r}; have {sorted(FONTS)}")
    font = FONTS[font_id]
    if not text:
        raise ValidationError("watermark text must be non-empty")
    cells = []
    for ch in text.upper():
        if ch not in font.glyphs:
            raise ValidationError(f"font {font_id!r} has no glyph for {ch!r}")
        cells.append(font.glyphs[ch])
    sep = np.zeros((font.height, 1), dtype=bool)
    parts: list[np.ndarray] = []
    for i, cell in enumerate(cells):
        if i:
            parts.append(sep)
        parts.append(cell)
    return np.concatenate(parts, axis=1)
