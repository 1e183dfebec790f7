"""Shared fixtures: frozen membership fixtures and random point helpers."""

from __future__ import annotations

from typing import List, Tuple

import numpy as np
import pytest

from bqdomain.algebra import (BoundaryData, MarkoffQuad, RootChoice,
                              solve_fourth)
from bqdomain.markoff import MarkoffMap

Omega = Tuple[complex, complex, complex]

# Ten quads with uniformly large traces: (t,t,t,d) with d the
# smaller root of the vertex relation, zero boundary traces.
IN_BQ_T_VALUES = [4.0 + 0.5 * k for k in range(10)]

# Ten quads whose root vertex already carries a face value inside the
# real band [-2,2].  The fourth coordinates are frozen roots of the
# vertex relation (principal branch), validated against the brute-force
# enumeration before being recorded here.
NOT_BQ_FIXTURES: List[Tuple[Tuple[float, float, float, float], Omega]] = [
    ((0.0, 0.0, 0.0, 2.0), (0.0, 0.0, 0.0)),
    ((1.0, 1.0, 1.0, 0.6180339887498949), (0.0, 0.0, 0.0)),
    ((1.0, 1.0, 1.0, -1.618033988749895), (0.0, 0.0, 0.0)),
    ((0.5, 0.5, 0.5, 1.7413587112077265), (0.0, 0.0, 0.0)),
    ((1.2, 0.3, 0.7, 1.2867547557874297), (0.0, 0.0, 0.0)),
    ((0.9, 1.1, 0.2, 1.2973527491289583), (0.0, 0.0, 0.0)),
    ((0.4, 0.8, 1.0, 1.3318444959177214), (0.0, 0.0, 0.0)),
    ((1.0, 1.0, 0.5, 1.5208993740921255), (0.5, 0.3, 0.1)),
    ((0.6, 0.6, 0.6, 1.807852528298415), (0.2, 0.2, 0.2)),
    ((0.0, 0.0, 1.0, 1.6583123951777), (0.0, 0.5, 0.0)),
]


def in_bq_quad(t: float) -> MarkoffQuad:
    bd = BoundaryData((0.0, 0.0, 0.0))
    d = solve_fourth(t, t, t, bd, RootChoice.MINUS)
    assert abs(d.imag) < 1e-12
    return MarkoffQuad((t, t, t, d.real), bd)


def in_bq_fixtures() -> List[MarkoffQuad]:
    return [in_bq_quad(t) for t in IN_BQ_T_VALUES]


def not_bq_fixtures() -> List[MarkoffQuad]:
    return [MarkoffQuad(vals, BoundaryData(om), on_variety=False)
            for vals, om in NOT_BQ_FIXTURES]


def make_map(quad: MarkoffQuad) -> MarkoffMap:
    return MarkoffMap(quad)


def random_complex(rng: np.random.Generator, scale: float = 3.0) -> complex:
    return complex(*rng.uniform(-scale, scale, 2))


def random_on_variety_point(rng: np.random.Generator):
    """Random (a,b,c,omega) in the complex box, d solved from the
    vertex relation; returns a CharacterPoint-compatible septuple."""
    from bqdomain.algebra import CharacterPoint
    om = tuple(random_complex(rng) for _ in range(3))
    a, b, c = (random_complex(rng) for _ in range(3))
    which = RootChoice.PLUS if rng.integers(2) else RootChoice.MINUS
    d = solve_fourth(a, b, c, BoundaryData(om), which)
    return CharacterPoint(a, b, c, d, *om)


def random_markoff_map(rng: np.random.Generator) -> MarkoffMap:
    pt = random_on_variety_point(rng)
    return MarkoffMap(MarkoffQuad(pt.quad, pt.omega))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)
