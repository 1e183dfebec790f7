"""Reference growth functions on the tree and growth diagnostics.

F assigns 1 to the three regions flanking a base edge and 2 to the three
faces containing it, then grows outward: a new region is the sum of the
three previously assigned regions at its anchor vertex, a new face the
sum of two previously assigned faces.  F equals the cyclically reduced
word length of the curve a key represents (see words.py), and the ratio
log+ |psi| / F measures exponential growth of a map against it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .markoff import OVERFLOW_CAP, MarkoffMap, modulus
from .tree import (COLORS, EdgeKey, FaceKey, RegionKey, ball_vertices,
                   canonical_face, canonical_region, faces_at, regions_at)

BASE_EDGE = EdgeKey("4")

Key = Union[RegionKey, FaceKey]


@dataclass
class FibTable:
    """Memoized region/face growth values relative to the base edge."""

    base_edge: EdgeKey = BASE_EDGE
    _regions: Dict[RegionKey, int] = field(default_factory=dict)
    _faces: Dict[FaceKey, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.base_edge != BASE_EDGE:
            raise ValueError("only the root color-4 base edge is supported")

    def region(self, r: RegionKey) -> int:
        got = self._regions.get(r)
        if got is not None:
            return got
        if r.anchor == "" and r.color != 4:
            val = 1
        else:
            val = sum(self.region(canonical_region(r.anchor, c))
                      for c in COLORS if c != r.color)
        self._regions[r] = val
        return val

    def face(self, f: FaceKey) -> int:
        got = self._faces.get(f)
        if got is not None:
            return got
        i, j = f.colors
        if f.anchor == "" and 4 not in f.colors:
            val = 2
        else:
            # Step back along the last letter of the anchor (or the base
            # edge color at the root): the face splits as the sum of the
            # two faces pairing the remaining pair color with each
            # complementary color.
            c = int(f.anchor[-1]) if f.anchor else 4
            o = i if j == c else j
            k, l = [m for m in COLORS if m not in (i, j)]
            val = (self.face(canonical_face(f.anchor, o, k))
                   + self.face(canonical_face(f.anchor, o, l)))
        self._faces[f] = val
        return val

    def value(self, key: Key) -> int:
        if isinstance(key, RegionKey):
            return self.region(key)
        return self.face(key)


def base_keys(table: FibTable) -> Tuple[List[RegionKey], List[FaceKey]]:
    """The simplices carrying the seed values 1 (regions) and 2 (faces)."""
    regions = [RegionKey("", c) for c in (1, 2, 3)]
    faces = [FaceKey("", (i, j)) for i in (1, 2, 3) for j in (1, 2, 3)
             if i < j]
    return regions, faces


def keys_to_depth(depth: int) -> Tuple[List[RegionKey], List[FaceKey]]:
    """All distinct region and face keys whose anchor lies in the ball."""
    regions, faces = set(), set()
    for v in ball_vertices(depth):
        regions.update(regions_at(v))
        faces.update(faces_at(v))
    return sorted(regions), sorted(faces)


def log_plus(x: float) -> float:
    return math.log(x) if x > 1.0 else 0.0


@dataclass
class GrowthReport:
    kappa_lower: float
    kappa_upper: float
    argmin: Optional[Key]


def growth_report(m: MarkoffMap, table: FibTable, depth: int) -> GrowthReport:
    """Extremes of log+ |psi(X)| / F(X) over the depth ball.

    The base simplices (where F is the seed value) are excluded; a
    positive lower ratio is the signature of uniform exponential growth,
    a near-zero one of a bounded orbit somewhere in the ball.
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    regions, faces = keys_to_depth(depth)
    base_r, base_f = base_keys(table)
    skip = set(base_r) | set(base_f) | {RegionKey("", 4), RegionKey("4", 4)}
    lo, hi, argmin = math.inf, -math.inf, None
    for key in list(regions) + list(faces):
        if key in skip:
            continue
        val = m.eval_region(key) if isinstance(key, RegionKey) \
            else m.eval_face(key)
        mod = modulus(val)
        # A saturated value contributes its saturation scale: the true
        # ratio is at least as large.
        top = math.log(OVERFLOW_CAP) if math.isinf(mod) else log_plus(mod)
        ratio = top / table.value(key)
        if ratio < lo:
            lo, argmin = ratio, key
        hi = max(hi, ratio)
    return GrowthReport(lo, hi, argmin)


def trace_length(t: complex) -> complex:
    """Translation length from a trace: 2*acosh(t/2), principal branch."""
    return 2 * cmath.acosh(t / 2)


def upper_bound_holds(m: MarkoffMap, depth: int) -> bool:
    """log+ of each quad value is controlled by the other three plus a
    universal additive constant, at every vertex of the ball."""
    slack = math.log(32.0)
    for v in ball_vertices(depth):
        quad = [modulus(q) for q in m.quad_at(v)]
        logs = [log_plus(q) for q in quad]
        for i in range(4):
            rest = sum(logs) - logs[i]
            if logs[i] > rest + slack + 1e-9:
                return False
    return True
