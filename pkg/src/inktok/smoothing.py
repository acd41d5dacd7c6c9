"""Reconstruction post-processing: downsample, then Savitzky-Golay smooth.

Quantized-and-decoded ink carries unit-step jitter from the rasterized walk.
The repair is cheap and fixed: keep every d-th point of each stroke (plus
the endpoint), then run a Savitzky-Golay filter over x and y independently.
Strokes shorter than the filter window pass through unchanged, as do strokes
of one or two points at the downsampling stage.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import savgol_filter as _scipy_savgol

from .errors import InvalidParams
from .ink import RawInk


@dataclass(frozen=True)
class PostprocessParams:
    """window/polyorder drive the filter, downsample the point thinning."""

    window: int = 7
    polyorder: int = 3
    downsample: int = 2

    def __post_init__(self):
        _check_filter_params(self.window, self.polyorder)
        if not isinstance(self.downsample, int) or self.downsample < 1:
            raise InvalidParams(f"downsample must be a positive integer, got {self.downsample!r}")


def _check_filter_params(window, polyorder):
    if not isinstance(window, int) or window < 1 or window % 2 == 0:
        raise InvalidParams(f"window must be a positive odd integer, got {window!r}")
    if not isinstance(polyorder, int) or polyorder < 0 or polyorder >= window:
        raise InvalidParams(f"polyorder must satisfy 0 <= polyorder < window, got {polyorder!r}")


def savgol_filter(values, window: int = 7, polyorder: int = 3) -> np.ndarray:
    """Savitzky-Golay filter one channel.

    Interior samples get the symmetric least-squares convolution; near the
    edges the value is read off a polynomial fit to the first (or last) full
    window, so endpoints are fitted rather than padded. Sequences shorter
    than the window are returned unchanged.
    """
    _check_filter_params(window, polyorder)
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidParams("savgol_filter expects a one-dimensional sequence")
    if len(arr) < window:
        return arr.copy()
    return _scipy_savgol(arr, window, polyorder, mode="interp")


def downsample_stroke(stroke, keep_every: int = 2) -> np.ndarray:
    """Keep indices 0, d, 2d, ... and always the last point.

    Strokes of one or two points are returned as-is so endpoints survive.
    """
    if not isinstance(keep_every, int) or keep_every < 1:
        raise InvalidParams(f"keep_every must be a positive integer, got {keep_every!r}")
    arr = np.asarray(stroke, dtype=np.float64)
    n = len(arr)
    if n <= 2 or keep_every == 1:
        return arr.copy()
    idx = list(range(0, n, keep_every))
    if idx[-1] != n - 1:
        idx.append(n - 1)
    return arr[idx]


def postprocess_ink(ink: RawInk, params: PostprocessParams = PostprocessParams()) -> RawInk:
    """Downsample then smooth every stroke; x and y are filtered independently."""
    out = []
    for stroke in ink.strokes:
        thinned = downsample_stroke(stroke, params.downsample)
        if len(thinned) >= params.window:
            xs = savgol_filter(thinned[:, 0], params.window, params.polyorder)
            ys = savgol_filter(thinned[:, 1], params.window, params.polyorder)
            thinned = np.column_stack([xs, ys])
        out.append(thinned)
    return RawInk(out)
