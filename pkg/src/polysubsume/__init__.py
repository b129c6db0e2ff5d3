"""Subsuming polygons that keep every reflex vertex and all geodesics."""

from .errors import (CannotSplit, ChainNotHullHonest, DegeneratePolygon, GenerationFailed,
                     GeometryError, InvariantError, NotPointed, NotSimple, NotSimplifiable,
                     PointOutside)
from .exact import Point, Ray, orient, ray_intersection, segments_properly_intersect
from .generate import Dent, GenSpec, generate, sample_points
from .geodesic import (GeodesicEngine, GeodesicPath, geodesic_path, triple_orient,
                       triple_orient_oracle, visibility_oracle_path)
from .hull import Hull, HullChain, Pocket, convex_hull, extract_pockets
from .kernels import backend
from .polygon import (Location, Polygon, PolygonWithHoles, canonicalize, classify_vertices,
                      contains_point, make_region, validate_simple)
from .pseudotri import PointedPT, PseudoTriangle, ShortestPathTree, pointed_pt, shortest_path_tree, side_chains
from .subsumption import (Chain, ChainReplacement, SubsumptionResult, is_simplifiable,
                          simplify_chain, split_at_vstar, subsume)
from .triangulation import Triangulation, dual_path, triangulate

__version__ = "0.1.0"
