class GeometryError(ValueError):
    """Invalid geometric input (maps to CLI exit code 1)."""


class DegeneratePolygon(GeometryError):
    pass


class NotSimple(GeometryError):
    def __init__(self, i, j, where="outer"):
        super().__init__(f"{where}: edges {i} and {j} intersect")
        self.edges = (i, j)
        self.where = where


class PointOutside(GeometryError):
    pass


class InvariantError(AssertionError):
    """An internal invariant was breached (maps to CLI exit code 2)."""


class NotPointed(InvariantError):
    pass


class ChainNotHullHonest(GeometryError):
    pass


class NotSimplifiable(GeometryError):
    pass


class CannotSplit(InvariantError):
    pass


class GenerationFailed(RuntimeError):
    pass
