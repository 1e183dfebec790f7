"""Trace-coordinate arithmetic on the SL(2,C) character variety of the
three-holed projective plane.

Points are septuples (a,b,c,d,x,y,z) subject to the quadratic vertex
relation; (x,y,z) are the boundary traces and (a,b,c,d) the traces of the
four one-sided curves.  Everything here is pure complex arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

Complex = complex

DEFAULT_ON_VARIETY_TOL = 1e-9


def _require_finite(*values: complex) -> None:
    for v in values:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("non-finite coordinate: %r" % (v,))


@dataclass(frozen=True)
class CharacterPoint:
    """A septuple (a,b,c,d,x,y,z) of trace coordinates."""

    a: complex
    b: complex
    c: complex
    d: complex
    x: complex
    y: complex
    z: complex

    def __post_init__(self):
        _require_finite(self.a, self.b, self.c, self.d, self.x, self.y, self.z)

    @property
    def omega(self) -> "BoundaryData":
        return BoundaryData((self.x, self.y, self.z))

    @property
    def quad(self) -> Tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def sup_norm(self) -> float:
        return max(abs(v) for v in (self.a, self.b, self.c, self.d,
                                    self.x, self.y, self.z))


@dataclass(frozen=True)
class BoundaryData:
    """Boundary traces omega = (x,y,z) and their max modulus M."""

    omega: Tuple[complex, complex, complex]

    def __post_init__(self):
        _require_finite(*self.omega)

    @property
    def x(self) -> complex:
        return self.omega[0]

    @property
    def y(self) -> complex:
        return self.omega[1]

    @property
    def z(self) -> complex:
        return self.omega[2]

    @property
    def M(self) -> float:
        return max(abs(v) for v in self.omega)

    def lam(self, i: int, j: int) -> complex:
        """lambda_{ij} for an unordered pair of colors i,j in 1..4.

        The pairing identifies complementary pairs: {1,2}~{3,4} -> x,
        {2,3}~{1,4} -> y, {1,3}~{2,4} -> z.
        """
        pair = frozenset((i, j))
        x, y, z = self.omega
        if pair in (frozenset((1, 2)), frozenset((3, 4))):
            return x
        if pair in (frozenset((2, 3)), frozenset((1, 4))):
            return y
        if pair in (frozenset((1, 3)), frozenset((2, 4))):
            return z
        raise ValueError("bad color pair %r" % (pair,))


@dataclass(frozen=True)
class MarkoffQuad:
    """Ordered quadruple (a1..a4) with boundary data.

    ``on_variety`` records whether the quad is required to satisfy the
    vertex relation (to ``tol``); raw quads are legal and flagged free.
    """

    values: Tuple[complex, complex, complex, complex]
    boundary: BoundaryData
    on_variety: bool = True
    tol: float = DEFAULT_ON_VARIETY_TOL

    def __post_init__(self):
        _require_finite(*self.values)
        if self.on_variety:
            r = abs(quad_residual(self.values, self.boundary))
            scale = 1.0 + max(abs(v) for v in self.values) ** 4
            if r > self.tol * scale:
                raise ValueError(
                    "quad residual %g exceeds tolerance; "
                    "flag on_variety=False for raw quads" % r)

    def __getitem__(self, color: int) -> complex:
        return self.values[color - 1]

    def replace(self, color: int, value: complex) -> "MarkoffQuad":
        vals = list(self.values)
        vals[color - 1] = value
        return MarkoffQuad(tuple(vals), self.boundary,
                           on_variety=self.on_variety, tol=self.tol)


@dataclass(frozen=True)
class DerivedBoundary:
    """The constants p,q,r,s derived from a character point."""

    p: complex
    q: complex
    r: complex
    s: complex

    @classmethod
    def from_point(cls, pt: CharacterPoint) -> "DerivedBoundary":
        a, b, c, d = pt.a, pt.b, pt.c, pt.d
        return cls(
            p=a * b + c * d,
            q=b * c + a * d,
            r=a * c + b * d,
            s=4 - a * a - b * b - c * c - d * d - a * b * c * d,
        )


class RootChoice(Enum):
    PLUS = "plus"
    MINUS = "minus"


class Theta(Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    X = "x"
    Y = "y"
    Z = "z"


def vertex_residual(pt: CharacterPoint) -> complex:
    """LHS - RHS of the vertex relation; zero iff pt lies on the variety."""
    a, b, c, d, x, y, z = pt.a, pt.b, pt.c, pt.d, pt.x, pt.y, pt.z
    lhs = a * a + b * b + c * c + d * d + a * b * c * d
    rhs = (x * (a * b + c * d) + y * (b * c + a * d) + z * (a * c + b * d)
           + 4 - x * x - y * y - z * z - x * y * z)
    return lhs - rhs


def quad_residual(values, boundary: BoundaryData) -> complex:
    a1, a2, a3, a4 = values
    x, y, z = boundary.omega
    lhs = a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 + a1 * a2 * a3 * a4
    rhs = (x * (a1 * a2 + a3 * a4) + y * (a2 * a3 + a1 * a4)
           + z * (a1 * a3 + a2 * a4)
           + 4 - x * x - y * y - z * z - x * y * z)
    return lhs - rhs


def solve_fourth(a: complex, b: complex, c: complex,
                 boundary: BoundaryData,
                 which_root: RootChoice = RootChoice.PLUS) -> complex:
    """Solve the vertex relation for the fourth coordinate d.

    The relation is quadratic in d; PLUS/MINUS select the branch via the
    principal square root of the discriminant (branch cut on the negative
    reals), so results are reproducible.  The two roots sum to
    y*a + z*b + x*c - a*b*c.
    """
    x, y, z = boundary.omega
    B = a * b * c - y * a - z * b - x * c
    C = (a * a + b * b + c * c - x * a * b - y * b * c - z * a * c
         - 4 + x * x + y * y + z * z + x * y * z)
    disc = B * B - 4 * C
    root = cmath.sqrt(disc)
    if which_root is RootChoice.PLUS:
        return (-B + root) / 2
    return (-B - root) / 2


def elementary_move(q: MarkoffQuad, i: int) -> MarkoffQuad:
    """Replace a_i by sum_{j!=i} lambda_ij a_j - prod_{j!=i} a_j - a_i."""
    others = [j for j in (1, 2, 3, 4) if j != i]
    lam = q.boundary.lam
    s = sum(lam(i, j) * q[j] for j in others)
    p = q[others[0]] * q[others[1]] * q[others[2]]
    return q.replace(i, s - p - q[i])


def face_value(a_i: complex, a_j: complex, lam_ij: complex) -> complex:
    """Trace of the two-sided curve bounding the pair: a_i*a_j - lambda_ij."""
    return a_i * a_j - lam_ij


def sigma(a_i: complex, a_j: complex, face: complex,
          lam_ij: complex, lam_ik: complex, lam_jk: complex) -> complex:
    """Secondary function: product of the two commutator-trace factors.

    Vanishes iff the representation restricted to one of the two
    subsurfaces cut along the face curve is reducible.  Independent of the
    choice of the third color k by the lambda-table symmetry.
    """
    f1 = a_i * a_i + a_j * a_j + lam_ij * lam_ij - a_i * a_j * lam_ij - 4
    f2 = (lam_ik * lam_ik + lam_jk * lam_jk + face * face
          - lam_ik * lam_jk * face - 4)
    return f1 * f2


def involution_theta(pt: CharacterPoint, which: Theta) -> CharacterPoint:
    """One of the seven involution generators acting on the variety."""
    a, b, c, d, x, y, z = pt.a, pt.b, pt.c, pt.d, pt.x, pt.y, pt.z
    if which is Theta.A:
        return CharacterPoint(x * b + z * c + y * d - b * c * d - a,
                              b, c, d, x, y, z)
    if which is Theta.B:
        return CharacterPoint(a, x * a + y * c + z * d - a * c * d - b,
                              c, d, x, y, z)
    if which is Theta.C:
        return CharacterPoint(a, b, z * a + y * b + x * d - a * b * d - c,
                              d, x, y, z)
    if which is Theta.D:
        return CharacterPoint(a, b, c, y * a + z * b + x * c - a * b * c - d,
                              x, y, z)
    der = DerivedBoundary.from_point(pt)
    if which is Theta.X:
        return CharacterPoint(a, b, c, d, der.p - y * z - x, y, z)
    if which is Theta.Y:
        return CharacterPoint(a, b, c, d, x, der.q - x * z - y, z)
    if which is Theta.Z:
        return CharacterPoint(a, b, c, d, x, y, der.r - x * y - z)
    raise ValueError("unknown involution %r" % (which,))
