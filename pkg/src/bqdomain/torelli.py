"""Rank-3 free-group automorphisms and their action on trace coordinates.

Words are strings over A,B,C with lowercase letters for inverses.  The
seven involutive generators and the six partial-conjugation/commutator
generators are transcribed as explicit images of (A,B,C); equality up to
inner automorphism is checked both combinatorially (bounded conjugator
search) and numerically (trace coordinates of random matrix triples).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Tuple

import numpy as np

from .algebra import CharacterPoint

GENS = "ABC"
LETTERS = "ABCabc"


_INVERSE = {"A": "a", "a": "A", "B": "b", "b": "B", "C": "c", "c": "C"}


def invert(w: str) -> str:
    return w[::-1].swapcase()


def reduce_word(w: str) -> str:
    out: list = []
    last = ""
    for ch in w:
        if last and last == _INVERSE[ch]:
            out.pop()
            last = out[-1] if out else ""
        else:
            out.append(ch)
            last = ch
    return "".join(out)


def cyclic_reduce(w: str) -> str:
    w = reduce_word(w)
    while len(w) >= 2 and w[0] == w[-1].swapcase():
        w = w[1:-1]
    return w


@dataclass(frozen=True)
class Automorphism:
    """Images of (A,B,C); inverses of generators map to inverse words."""

    images: Tuple[str, str, str]

    def __post_init__(self):
        object.__setattr__(self, "images",
                           tuple(reduce_word(w) for w in self.images))

    def _table(self) -> Dict[str, str]:
        got = self.__dict__.get("_table_cache")
        if got is None:
            got = {
                "A": self.images[0], "B": self.images[1],
                "C": self.images[2], "a": invert(self.images[0]),
                "b": invert(self.images[1]), "c": invert(self.images[2]),
            }
            object.__setattr__(self, "_table_cache", got)
        return got

    def apply(self, w: str) -> str:
        # each image is reduced, so only the segment junctions cancel
        table = self._table()
        out: list = []
        for ch in w:
            seg = table[ch]
            k, n = 0, len(seg)
            while out and k < n and out[-1] == _INVERSE[seg[k]]:
                out.pop()
                k += 1
            out.extend(seg[k:])
        return "".join(out)


IDENTITY = Automorphism(("A", "B", "C"))


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """(f o g)(w) = f(g(w))."""
    return Automorphism(tuple(f.apply(w) for w in g.images))


def compose_all(*maps: Automorphism) -> Automorphism:
    out = IDENTITY
    for m in maps:
        out = compose(out, m)
    return out


# The seven involutive generators, lifted to Aut(F3).
TAU: Dict[str, Automorphism] = {
    "a": Automorphism(("CbacB", "b", "c")),
    "b": Automorphism(("a", "AcbaC", "c")),
    "c": Automorphism(("a", "b", "BacbA")),
    "d": Automorphism(("a", "b", "c")),
    "x": Automorphism(("a", "cbC", "c")),
    "y": Automorphism(("a", "b", "acA")),
    "z": Automorphism(("baB", "b", "c")),
}

# Partial conjugations and commutator insertions.
MAGNUS: Dict[str, Automorphism] = {
    "K12": Automorphism(("BAb", "B", "C")),
    "K23": Automorphism(("A", "CBc", "C")),
    "K31": Automorphism(("A", "B", "ACa")),
    "K123": Automorphism(("ABCbc", "B", "C")),
    "K231": Automorphism(("A", "BCAca", "C")),
    "K312": Automorphism(("A", "B", "CABab")),
}

# Each named generator as a product of the involutions, with the
# factors applied left to right.
IDENTITY_FACTORS: Dict[str, Tuple[str, ...]] = {
    "K12": ("z", "d"),
    "K23": ("x", "d"),
    "K31": ("y", "d"),
    "K123": ("d", "x", "a", "z"),
    "K231": ("d", "y", "b", "x"),
    "K312": ("d", "z", "c", "y"),
}


def factored(name: str) -> Automorphism:
    """The involution product for a named generator; the leftmost factor
    acts first, so the composition nests right over left."""
    return compose_all(*(TAU[t] for t in reversed(IDENTITY_FACTORS[name])))


def _words_up_to(radius: int) -> Iterator[str]:
    yield ""
    frontier = [""]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for ch in LETTERS:
                if w and w[-1] == ch.swapcase():
                    continue
                u = w + ch
                nxt.append(u)
                yield u
        frontier = nxt


def equal_in_out(f: Automorphism, g: Automorphism,
                 search_radius: int = 6) -> bool:
    """Whether f = w g w^-1 for some conjugator w of bounded length.

    Inconclusive when False at small radius; numeric trace agreement
    should be consulted as well.
    """
    targets = tuple(f.apply(x) for x in GENS)
    candidates = itertools.chain(
        (reduce_word(targets[0][:k] ) for k in range(len(targets[0]) + 1)),
        _words_up_to(search_radius),
    )
    seen = set()
    for w in candidates:
        if w in seen:
            continue
        seen.add(w)
        wi = invert(w)
        if all(reduce_word(w + g.apply(x) + wi) == t
               for x, t in zip(GENS, targets)):
            return True
    return False


# ---------------------------------------------------------------------------
# Numeric evaluation through SL(2,C) triples.

CHAR_WORDS = ("A", "B", "C", "ABC", "AB", "BC", "AC")


def eval_word(w: str, mats: Dict[str, np.ndarray]) -> np.ndarray:
    out = np.eye(2, dtype=complex)
    for ch in w:
        out = out @ mats[ch]
    return out


def _mat_table(triple) -> Dict[str, np.ndarray]:
    ma, mb, mc = triple
    return {
        "A": ma, "B": mb, "C": mc,
        "a": np.linalg.inv(ma), "b": np.linalg.inv(mb),
        "c": np.linalg.inv(mc),
    }


def random_triple(rng: np.random.Generator):
    """A random irreducible det-1 triple; resamples near-reducible draws."""
    while True:
        mats = []
        for _ in range(3):
            m = (rng.uniform(-1, 1, (2, 2))
                 + 1j * rng.uniform(-1, 1, (2, 2)))
            det = np.linalg.det(m)
            if abs(det) < 1e-6:
                break
            mats.append(m / np.sqrt(det))
        else:
            comm = (mats[0] @ mats[1] @ np.linalg.inv(mats[0])
                    @ np.linalg.inv(mats[1]))
            if abs(np.trace(comm) - 2) >= 1e-3:
                return tuple(mats)


def character_coords(f: Automorphism, triple) -> Tuple[complex, ...]:
    mats = _mat_table(triple)
    return tuple(complex(np.trace(eval_word(f.apply(w), mats)))
                 for w in CHAR_WORDS)


def character_agree(f: Automorphism, g: Automorphism,
                    trials: int = 200, seed: int = 7) -> float:
    """Max trace-coordinate deviation between f and g over random triples.

    Zero (to rounding) when f and g agree in Out(F3), since traces are
    conjugation-invariant.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        triple = random_triple(rng)
        cf = character_coords(f, triple)
        cg = character_coords(g, triple)
        worst = max(worst, max(abs(u - v) for u, v in zip(cf, cg)))
    return worst


def lift_point(pt: CharacterPoint):
    """SL(2,C) matrices (M_A, M_B, M_C) whose seven trace coordinates are
    (a,b,c,d,x,y,z).

    M_A and M_B are put in a standard position from (a, x, b); M_C is
    solved in the basis (I, M_A, M_B, M_A M_B) from the remaining four
    traces.  Fails on the reducible locus a^2+b^2+x^2-abx-4 = 0, where
    that basis degenerates.
    """
    a, b, c, d = pt.a, pt.b, pt.c, pt.d
    x, y, z = pt.x, pt.y, pt.z
    crit = a * a + b * b + x * x - a * b * x - 4
    if abs(crit) < 1e-8:
        raise ValueError("point lies on the reducible locus; no "
                         "irreducible matrix lift exists")
    eta = (x + np.sqrt(complex(x * x - 4))) / 2
    if eta == 0:
        eta = (x - np.sqrt(complex(x * x - 4))) / 2
    ma = np.array([[a, -1], [1, 0]], dtype=complex)
    mb = np.array([[0, eta], [-1 / eta, b]], dtype=complex)
    mab = ma @ mb
    # tr of the basis elements against I, A, B, AB.
    gram = np.array([
        [2, a, b, x],
        [a, a * a - 2, x, a * x - b],
        [b, x, b * b - 2, b * x - a],
        [x, a * x - b, b * x - a, x * x - 2],
    ], dtype=complex)
    rhs = np.array([c, z, y, d], dtype=complex)
    alpha, beta, gamma, delta = np.linalg.solve(gram, rhs)
    mc = (alpha * np.eye(2) + beta * ma + gamma * mb + delta * mab)
    if abs(np.linalg.det(mc) - 1) > 1e-6 * (1 + np.abs(mc).max() ** 2):
        raise ValueError("no determinant-1 solution: traces do not "
                         "satisfy the defining relation")
    return ma, mb, mc


def induced_character_map(f: Automorphism,
                          pt: CharacterPoint) -> CharacterPoint:
    """Action of f on trace coordinates through an explicit matrix lift."""
    triple = lift_point(pt)
    coords = character_coords(f, triple)
    return CharacterPoint(*coords)
