"""Lazy evaluation of region and face values over the colored tree.

A map is determined by boundary data and a root quadruple; the value of a
region is obtained by replaying one elementary move per letter of its
anchor word, with the per-vertex quads memoized so shared prefixes are
computed once.  Values whose modulus exceeds an overflow cap are replaced
by a symbolic Huge marker that compares larger than every finite modulus,
so deep descent never degrades into NaN arithmetic.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Dict, Tuple, Union

from .algebra import BoundaryData, MarkoffQuad
from .tree import (COLORS, EdgeKey, FaceKey, RegionKey, VertexWord,
                   canonical_region, edge_surrounding, neighbors)

OVERFLOW_CAP = 1e150


class Huge:
    """Marker for a value that overflowed the cap; modulus is +inf."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __abs__(self) -> float:
        return math.inf

    def __repr__(self) -> str:
        return "HUGE"


HUGE = Huge()

Value = Union[complex, Huge]


def modulus(v: Value) -> float:
    return abs(v)


def _cap(v: complex) -> Value:
    if abs(v) > OVERFLOW_CAP or not (math.isfinite(v.real)
                                     and math.isfinite(v.imag)):
        return HUGE
    return v


class Orientation(Enum):
    TOWARD_CHILD = "toward_child"
    TOWARD_PARENT = "toward_parent"


class VertexClass(Enum):
    SINK = "sink"      # 4 inward arrows
    MERGE = "merge"    # 3 inward, 1 outward
    FORK = "fork"      # >= 2 outward
    SOURCE = "source"  # 4 outward (a fork as well; reported as SOURCE)


class MarkoffMap:
    """Region/face values of a quadruple propagated over the tree."""

    def __init__(self, root_quad: MarkoffQuad):
        self.boundary: BoundaryData = root_quad.boundary
        self.root_quad = root_quad
        self._quads: Dict[VertexWord, Tuple[Value, Value, Value, Value]] = {
            "": root_quad.values,
        }

    def quad_at(self, v: VertexWord) -> Tuple[Value, Value, Value, Value]:
        """Values of the four regions around vertex v, indexed by color-1."""
        got = self._quads.get(v)
        if got is not None:
            return got
        parent_quad = self.quad_at(v[:-1])
        quad = self._move(parent_quad, int(v[-1]))
        self._quads[v] = quad
        return quad

    def _move(self, vals, i: int):
        others = [j for j in COLORS if j != i]
        a, b, c = (vals[j - 1] for j in others)
        if isinstance(a, Huge) or isinstance(b, Huge) or isinstance(c, Huge):
            new = HUGE
        else:
            lam = self.boundary.lam
            old = vals[i - 1]
            s = lam(i, others[0]) * a + lam(i, others[1]) * b \
                + lam(i, others[2]) * c
            prod = a * b * c
            new = HUGE if isinstance(old, Huge) else _cap(s - prod - old)
        out = list(vals)
        out[i - 1] = new
        return tuple(out)

    def eval_region(self, r: RegionKey) -> Value:
        return self.quad_at(r.anchor)[r.color - 1]

    def region_values_at(self, f: FaceKey) -> Tuple[Value, Value]:
        i, j = f.colors
        quad = self.quad_at(f.anchor)
        return quad[i - 1], quad[j - 1]

    def eval_face(self, f: FaceKey) -> Value:
        ai, aj = self.region_values_at(f)
        if isinstance(ai, Huge) or isinstance(aj, Huge):
            return HUGE
        return _cap(ai * aj - self.boundary.lam(*f.colors))

    def eval_sigma(self, f: FaceKey) -> Value:
        ai, aj = self.region_values_at(f)
        face = self.eval_face(f)
        if isinstance(ai, Huge) or isinstance(aj, Huge) \
                or isinstance(face, Huge):
            return HUGE
        i, j = f.colors
        k = next(c for c in COLORS if c not in (i, j))
        lam = self.boundary.lam
        lam_ij, lam_ik, lam_jk = lam(i, j), lam(i, k), lam(j, k)
        f1 = ai * ai + aj * aj + lam_ij * lam_ij - ai * aj * lam_ij - 4
        f2 = (lam_ik * lam_ik + lam_jk * lam_jk + face * face
              - lam_ik * lam_jk * face - 4)
        return _cap(f1 * f2)

    def orient_edge(self, e: EdgeKey) -> Orientation:
        """Arrow points into the smaller-modulus end region (tie: child)."""
        _, (delta, delta_prime) = edge_surrounding(e)
        m_parent = modulus(self.eval_region(delta))
        m_child = modulus(self.eval_region(delta_prime))
        if m_parent < m_child:
            return Orientation.TOWARD_PARENT
        return Orientation.TOWARD_CHILD

    def points_toward(self, e: EdgeKey, v: VertexWord) -> bool:
        """Whether the arrow on e points toward endpoint v."""
        o = self.orient_edge(e)
        if v == e.child:
            return o is Orientation.TOWARD_CHILD
        if v == e.parent:
            return o is Orientation.TOWARD_PARENT
        raise ValueError("%r is not an endpoint of %r" % (v, e))

    def incident_edges(self, v: VertexWord):
        return [EdgeKey(w if len(w) > len(v) else v) for w in neighbors(v)]

    def inward_count(self, v: VertexWord) -> int:
        return sum(self.points_toward(e, v) for e in self.incident_edges(v))

    def classify_vertex(self, v: VertexWord) -> VertexClass:
        inward = self.inward_count(v)
        if inward == 4:
            return VertexClass.SINK
        if inward == 3:
            return VertexClass.MERGE
        if inward == 0:
            return VertexClass.SOURCE
        return VertexClass.FORK

    def region_value_at_vertex(self, v: VertexWord, c: int) -> Value:
        return self.eval_region(canonical_region(v, c))
