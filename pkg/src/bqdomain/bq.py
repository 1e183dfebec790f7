"""Tri-state membership test for the Bowditch domain.

The procedure descends to a small-modulus vertex, seeds the set of faces
whose values sit below the level threshold, and closes it up by walking
the attracting arc of each face.  A finite closed-up tree certifies
membership; a face value on the real band [-2,2], a vanishing sigma, or
an arc that cannot terminate certifies non-membership; exhausted budgets
yield an honest Undecided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Set, Tuple

from .markoff import MarkoffMap, modulus
from .neighbors import dist_to_interval, h_star
from .tree import (COLORS, EdgeKey, FaceKey, VertexWord, face_edge_at,
                   face_side_region, face_vertex_at, faces_at)


@dataclass(frozen=True)
class BqParams:
    K: Optional[float] = None          # None -> 2 + M
    tol_real: float = 1e-9
    tol_sigma: float = 1e-12
    max_descent_steps: int = 200
    max_faces: int = 20000
    max_arc_steps: int = 2000
    max_total_edges: int = 100000

    def level(self, m: MarkoffMap) -> float:
        k = 2.0 + m.boundary.M if self.K is None else self.K
        if k < 2.0 + m.boundary.M:
            raise ValueError("K must be at least 2 + M")
        return k


class WitnessKind(Enum):
    BQ1_VIOLATION = "bq1_violation"
    SIGMA_ZERO = "sigma_zero"
    INFINITE_ARC = "infinite_arc"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    face: FaceKey
    value: Optional[complex] = None


@dataclass
class AttractingTree:
    edges: Set[EdgeKey] = field(default_factory=set)
    arc_bounds: Dict[FaceKey, Tuple[int, int]] = field(default_factory=dict)


class Status(Enum):
    IN_BQ = "in_bq"
    NOT_BQ = "not_bq"
    UNDECIDED = "undecided"


@dataclass
class BqVerdict:
    status: Status
    tree: Optional[AttractingTree] = None
    witness: Optional[Witness] = None
    budget_hit: Optional[str] = None
    steps_used: int = 0


def region_in_level(m: MarkoffMap, value, K: float) -> bool:
    return modulus(value) < K


def face_in_level(m: MarkoffMap, f: FaceKey, K: float) -> bool:
    """|psi(face)| < K^2 + M and at least one bounding region below K."""
    ai, aj = m.region_values_at(f)
    if min(modulus(ai), modulus(aj)) >= K:
        return False
    return modulus(m.eval_face(f)) < K * K + m.boundary.M


def face_witness(m: MarkoffMap, f: FaceKey,
                 params: BqParams) -> Optional[Witness]:
    """Band or sigma witness at f, if any."""
    psi = m.eval_face(f)
    if modulus(psi) <= 2.0 + params.tol_real \
            and dist_to_interval(psi) <= params.tol_real:
        return Witness(WitnessKind.BQ1_VIOLATION, f, psi)
    sig = m.eval_sigma(f)
    if modulus(sig) <= params.tol_sigma:
        return Witness(WitnessKind.SIGMA_ZERO, f)
    return None


@dataclass
class DescentResult:
    vertex: Optional[VertexWord] = None
    witness: Optional[Witness] = None
    budget_hit: Optional[str] = None
    steps: int = 0
    trace: List[VertexWord] = field(default_factory=list)


def find_sink(m: MarkoffMap, params: BqParams) -> DescentResult:
    """Steepest descent from the root toward small-modulus regions.

    Stops at a vertex with no strictly outgoing edge, or at one already
    touching a face below the level threshold; every face seen on the
    way is screened for band and sigma witnesses.
    """
    K = params.level(m)
    v: VertexWord = ""
    trace = [v]
    for step in range(params.max_descent_steps + 1):
        for f in faces_at(v):
            w = face_witness(m, f, params)
            if w is not None:
                return DescentResult(witness=w, steps=step, trace=trace)
        if any(face_in_level(m, f, K) for f in faces_at(v)):
            return DescentResult(vertex=v, steps=step, trace=trace)
        quad = m.quad_at(v)
        best: Optional[Tuple[float, int]] = None
        for c in COLORS:
            far = v[:-1] if v and v[-1] == str(c) else v + str(c)
            far_mod = modulus(m.quad_at(far)[c - 1])
            if far_mod < modulus(quad[c - 1]):
                if best is None or far_mod < best[0]:
                    best = (far_mod, c)
        if best is None:
            return DescentResult(vertex=v, steps=step, trace=trace)
        c = best[1]
        v = v[:-1] if v and v[-1] == str(c) else v + str(c)
        trace.append(v)
    return DescentResult(budget_hit="max_descent_steps",
                         steps=params.max_descent_steps, trace=trace)


class ArcOutcome(Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    BUDGET = "budget"


@dataclass
class ArcResult:
    outcome: ArcOutcome
    n1: int = 0
    n2: int = -1          # empty arc when n2 < n1
    steps: int = 0


def attracting_arc(m: MarkoffMap, f: FaceKey, params: BqParams) -> ArcResult:
    """Bound the window of boundary edges whose side regions dip below
    the face's threshold.

    Walks both rays from the anchor; a ray may stop once, for both side
    colors, the latest value exceeds the threshold and exceeds its
    predecessor of the same color (beyond that point the sequences are
    strictly monotone).
    """
    K = params.level(m)
    h = h_star(m, f, K, params.tol_real, params.tol_sigma)
    if math.isinf(h):
        return ArcResult(ArcOutcome.INFINITE)

    lo, hi = 0, -1
    steps = 0

    def scan(direction: int) -> Optional[str]:
        nonlocal lo, hi, steps
        prev: Dict[int, float] = {}       # parity -> last modulus
        escaped: Dict[int, bool] = {0: False, 1: False}
        n = 0 if direction > 0 else -1
        while True:
            if steps >= params.max_arc_steps:
                return "budget"
            steps += 1
            u = modulus(m.eval_region(face_side_region(f, n)))
            if u < h:
                lo, hi = min(lo, n), max(hi, n)
                escaped = {0: False, 1: False}
            else:
                p = n & 1
                escaped[p] = p in prev and u > prev[p]
                if escaped[0] and escaped[1]:
                    return None
            prev[n & 1] = u
            n += direction

    for direction in (1, -1):
        failure = scan(direction)
        if failure is not None:
            return ArcResult(ArcOutcome.BUDGET, steps=steps)
    return ArcResult(ArcOutcome.FINITE, n1=lo, n2=hi, steps=steps)


def decide_bq(m: MarkoffMap, params: BqParams = BqParams()) -> BqVerdict:
    """Decide membership with a certificate or witness.

    InBQ carries the closed-up attracting tree; NotBQ carries a face
    witness; Undecided reports which budget ran out.
    """
    K = params.level(m)
    descent = find_sink(m, params)
    steps = descent.steps
    if descent.witness is not None:
        return BqVerdict(Status.NOT_BQ, witness=descent.witness,
                         steps_used=steps)
    if descent.budget_hit is not None:
        return BqVerdict(Status.UNDECIDED, budget_hit=descent.budget_hit,
                         steps_used=steps)

    v0 = descent.vertex
    seeds = [f for f in faces_at(v0) if face_in_level(m, f, K)]
    if not seeds:
        return BqVerdict(Status.UNDECIDED, budget_hit="no_seed_face",
                         steps_used=steps)

    tree = AttractingTree()
    seen: Set[FaceKey] = set(seeds)
    queue: List[FaceKey] = sorted(seeds)
    total_edges = 0
    while queue:
        f = queue.pop()
        steps += 1
        w = face_witness(m, f, params)
        if w is not None:
            return BqVerdict(Status.NOT_BQ, witness=w, steps_used=steps)
        if len(seen) > params.max_faces:
            return BqVerdict(Status.UNDECIDED, budget_hit="max_faces",
                             steps_used=steps)
        arc = attracting_arc(m, f, params)
        if arc.outcome is ArcOutcome.INFINITE:
            return BqVerdict(
                Status.NOT_BQ,
                witness=Witness(WitnessKind.INFINITE_ARC, f),
                steps_used=steps)
        if arc.outcome is ArcOutcome.BUDGET:
            return BqVerdict(Status.UNDECIDED, budget_hit="max_arc_steps",
                             steps_used=steps)
        tree.arc_bounds[f] = (arc.n1, arc.n2)
        for n in range(arc.n1, arc.n2 + 1):
            tree.edges.add(face_edge_at(f, n))
        total_edges += max(0, arc.n2 - arc.n1 + 1)
        if total_edges > params.max_total_edges:
            return BqVerdict(Status.UNDECIDED, budget_hit="max_total_edges",
                             steps_used=steps)
        for n in range(arc.n1, arc.n2 + 2):
            vert = face_vertex_at(f, n)
            for g in faces_at(vert):
                if g not in seen and face_in_level(m, g, K):
                    seen.add(g)
                    queue.append(g)
    return BqVerdict(Status.IN_BQ, tree=tree, steps_used=steps)
