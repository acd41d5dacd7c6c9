"""Ink containers and grid quantization.

An ink is an ordered sequence of strokes; a stroke is an ordered sequence of
points. RawInk holds real-valued points as captured by the device, IntegerInk
holds grid cells after quantization. Both are immutable: strokes are exposed
as a tuple of read-only numpy arrays of shape (n, 2).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInk, InvalidParams, Overflow

INT32_MIN = -(2**31)
INT32_MAX = 2**31 - 1


def _freeze_strokes(strokes, dtype) -> tuple[np.ndarray, ...]:
    out = []
    for i, stroke in enumerate(strokes):
        arr = np.array(stroke, dtype=dtype, copy=True)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InvalidInk(f"stroke {i}: expected a sequence of (x, y) points")
        if arr.shape[0] == 0:
            raise InvalidInk(f"stroke {i}: strokes must contain at least one point")
        arr.setflags(write=False)
        out.append(arr)
    return tuple(out)


class RawInk:
    """Real-valued ink. Coordinates must be finite; strokes non-empty."""

    __slots__ = ("_strokes",)

    def __init__(self, strokes=()):
        frozen = _freeze_strokes(strokes, np.float64)
        for i, arr in enumerate(frozen):
            if not np.isfinite(arr).all():
                raise InvalidInk(f"stroke {i}: coordinates must be finite")
        self._strokes = frozen

    @property
    def strokes(self) -> tuple[np.ndarray, ...]:
        return self._strokes

    @property
    def point_count(self) -> int:
        return sum(len(s) for s in self._strokes)

    def to_lists(self) -> list[list[list[float]]]:
        return [s.tolist() for s in self._strokes]

    def __len__(self) -> int:
        return len(self._strokes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RawInk):
            return NotImplemented
        return len(self._strokes) == len(other._strokes) and all(
            np.array_equal(a, b) for a, b in zip(self._strokes, other._strokes)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"RawInk({len(self._strokes)} strokes, {self.point_count} points)"


class IntegerInk:
    """Grid-cell ink. Coordinates are integers within the signed 32-bit range."""

    __slots__ = ("_strokes",)

    def __init__(self, strokes=()):
        checked = []
        for i, stroke in enumerate(strokes):
            arr = np.asarray(stroke)
            if arr.dtype.kind == "f":
                if arr.size and not np.isfinite(arr).all():
                    raise InvalidInk(f"stroke {i}: coordinates must be finite")
                if arr.size and not (arr == np.trunc(arr)).all():
                    raise InvalidInk(f"stroke {i}: coordinates must be integral")
            checked.append(arr)
        frozen = _freeze_strokes(checked, np.int64)
        for i, arr in enumerate(frozen):
            if arr.size and (arr.max() > INT32_MAX or arr.min() < INT32_MIN):
                raise Overflow(f"stroke {i}: coordinate outside signed 32-bit range")
        self._strokes = frozen

    @property
    def strokes(self) -> tuple[np.ndarray, ...]:
        return self._strokes

    @property
    def point_count(self) -> int:
        return sum(len(s) for s in self._strokes)

    def to_lists(self) -> list[list[list[int]]]:
        return [s.tolist() for s in self._strokes]

    def __len__(self) -> int:
        return len(self._strokes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerInk):
            return NotImplemented
        return len(self._strokes) == len(other._strokes) and all(
            np.array_equal(a, b) for a, b in zip(self._strokes, other._strokes)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"IntegerInk({len(self._strokes)} strokes, {self.point_count} points)"


@dataclass(frozen=True)
class QuantizationParams:
    """Grid settings. `delta` is the cell size in input units, > 0."""

    delta: float = 1.0

    def __post_init__(self):
        d = float(self.delta)
        if not np.isfinite(d) or d <= 0.0:
            raise InvalidParams(f"delta must be a positive finite number, got {self.delta!r}")
        object.__setattr__(self, "delta", d)


def quantize(ink: RawInk, params: QuantizationParams) -> IntegerInk:
    """Snap every coordinate to its grid cell: round(c / delta).

    Rounding is half-away-from-zero, i.e. sign(c) * floor(|c| / delta + 0.5),
    so -4.1 at delta 8 lands in cell -1, not 0. Cells outside the signed
    32-bit range raise Overflow.
    """
    delta = params.delta
    out = []
    for i, stroke in enumerate(ink.strokes):
        scaled = stroke / delta
        cells = np.floor(np.abs(scaled) + 0.5)
        np.copysign(cells, scaled, out=cells)
        if cells.size and (cells.max() > INT32_MAX or cells.min() < INT32_MIN):
            raise Overflow(f"stroke {i}: quantized coordinate outside signed 32-bit range")
        out.append(cells.astype(np.int64))
    return IntegerInk(out)


def dequantize(ink: IntegerInk, params: QuantizationParams) -> RawInk:
    """Map grid cells back to input units (cell centers): c * delta."""
    delta = params.delta
    return RawInk([stroke * delta for stroke in ink.strokes])
