"""Backend selection for the hot kernels.

The compiled module is used when it imports and every coordinate is an
integer of magnitude at most ``2**29``; otherwise the exact pure-Python
implementation runs.  Set ``POLYSUBSUME_PURE=1`` to force the fallback.
"""

import os

import numpy as np

from . import _pykernels

try:  # pragma: no cover - depends on the build
    if os.environ.get("POLYSUBSUME_PURE"):
        raise ImportError
    from . import _ckernels
except ImportError:  # pragma: no cover
    _ckernels = None

COMPILED = _ckernels is not None
LIMIT = 1 << 29

INTERIOR, BOUNDARY, EXTERIOR = _pykernels.INTERIOR, _pykernels.BOUNDARY, _pykernels.EXTERIOR


def backend() -> str:
    return "cython" if COMPILED else "python"


def as_int_array(values):
    """int64 array of ``values`` if they are all small ints, else None."""
    if _ckernels is None:
        return None
    for v in values:
        if type(v) is not int or not -LIMIT <= v <= LIMIT:
            return None
    return np.fromiter(values, dtype=np.int64, count=len(values))


class Coords:
    """Parallel coordinate arrays of a cycle with the backend chosen once."""

    __slots__ = ("xs", "ys", "cx", "cy")

    def __init__(self, points):
        self.xs = [p[0] for p in points]
        self.ys = [p[1] for p in points]
        self.cx = as_int_array(self.xs)
        self.cy = None if self.cx is None else as_int_array(self.ys)
        if self.cy is None:
            self.cx = None

    @property
    def compiled(self) -> bool:
        return self.cx is not None

    def _small(self, *vals) -> bool:
        return all(type(v) is int and -LIMIT <= v <= LIMIT for v in vals)

    def reflex_flags(self):
        if self.compiled:
            return _ckernels.reflex_flags(self.cx, self.cy).tolist()
        return _pykernels.reflex_flags(self.xs, self.ys)

    def melkman(self):
        if self.compiled:
            return _ckernels.melkman(self.cx, self.cy)
        return _pykernels.melkman(self.xs, self.ys)

    def locate_point(self, p):
        if self.compiled and self._small(p[0], p[1]):
            return _ckernels.locate_point(self.cx, self.cy, p[0], p[1])
        return _pykernels.locate_point(self.xs, self.ys, p[0], p[1])

    def visible_from(self, u, targets):
        tx = [t[0] for t in targets]
        ty = [t[1] for t in targets]
        if self.compiled and self._small(u[0], u[1]):
            ax, ay = as_int_array(tx), as_int_array(ty)
            if ax is not None and ay is not None:
                return _ckernels.visible_from(self.cx, self.cy, u[0], u[1], ax, ay).tolist()
        return _pykernels.visible_from(self.xs, self.ys, u[0], u[1], tx, ty)

    def locate_triangle(self, tris_flat, p):
        if self.compiled and self._small(p[0], p[1]):
            if not isinstance(tris_flat, np.ndarray):
                tris_flat = np.asarray(tris_flat, dtype=np.int64)
            return _ckernels.locate_triangle(self.cx, self.cy, tris_flat, p[0], p[1])
        return _pykernels.locate_triangle(self.xs, self.ys, list(tris_flat), p[0], p[1])


def first_crossing(points, ea, eb):
    """Illegal edge pair over a shared vertex list, or None."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    cx, cy = as_int_array(xs), as_int_array(ys)
    if cx is not None and cy is not None:
        return _ckernels.first_crossing(cx, cy, np.asarray(ea, dtype=np.int64),
                                        np.asarray(eb, dtype=np.int64))
    return _pykernels.first_crossing(xs, ys, ea, eb)
