"""Combinatorics of the 4-valent colored tree.

Vertices are addressed by reduced words over the colors {1,2,3,4} (no two
equal consecutive letters, root = empty word).  An edge inherits the last
letter of its child endpoint as its color.  A region of color c is the
maximal subtree reachable without crossing color-c edges; it is keyed by
its anchor, the vertex of minimal length it touches.  A face is an
unordered pair of adjacent regions of colors {i,j}; its boundary is the
bi-infinite geodesic whose edges use the two complementary colors.

Keys are plain value types (strings and named tuples) with lexicographic
ordering, so iteration order is deterministic everywhere.
"""

from __future__ import annotations

from typing import Iterator, List, NamedTuple, Tuple

COLORS = (1, 2, 3, 4)

# A vertex key is a reduced word encoded as a string of digits '1'..'4'.
VertexWord = str

ROOT: VertexWord = ""


def is_reduced(word: str) -> bool:
    return all(ch in "1234" for ch in word) and \
        all(word[i] != word[i + 1] for i in range(len(word) - 1))


def check_vertex(word: str) -> str:
    if not is_reduced(word):
        raise ValueError("not a reduced color word: %r" % word)
    return word


def neighbors(v: VertexWord) -> List[VertexWord]:
    """The four adjacent vertices (parent first when it exists)."""
    if not v:
        return [str(c) for c in COLORS]
    out = [v[:-1]]
    out.extend(v + str(c) for c in COLORS if str(c) != v[-1])
    return out


def distance(u: VertexWord, v: VertexWord) -> int:
    k = 0
    for cu, cv in zip(u, v):
        if cu != cv:
            break
        k += 1
    return (len(u) - k) + (len(v) - k)


class EdgeKey(NamedTuple):
    """An edge, named by its child endpoint (nonempty word)."""

    child: VertexWord

    @property
    def color(self) -> int:
        return int(self.child[-1])

    @property
    def parent(self) -> VertexWord:
        return self.child[:-1]

    def endpoints(self) -> Tuple[VertexWord, VertexWord]:
        return (self.parent, self.child)


class RegionKey(NamedTuple):
    anchor: VertexWord
    color: int


class FaceKey(NamedTuple):
    anchor: VertexWord
    colors: Tuple[int, int]  # sorted pair of region colors

    @property
    def edge_colors(self) -> Tuple[int, int]:
        """Colors of the edges along this face's boundary geodesic."""
        i, j = self.colors
        k, l = [c for c in COLORS if c not in (i, j)]
        return (k, l)


def canonical_region(v: VertexWord, c: int) -> RegionKey:
    """Strip the maximal trailing run of letters != c."""
    s = str(c)
    n = len(v)
    while n > 0 and v[n - 1] != s:
        n -= 1
    return RegionKey(v[:n], c)


def canonical_face(v: VertexWord, i: int, j: int) -> FaceKey:
    """Face of the color-i and color-j regions at v.

    Crossing an edge whose color is neither i nor j preserves both
    regions, so the canonical anchor strips the maximal trailing run of
    letters outside {i,j}.
    """
    if i == j:
        raise ValueError("face colors must differ")
    i, j = sorted((i, j))
    keep = (str(i), str(j))
    n = len(v)
    while n > 0 and v[n - 1] not in keep:
        n -= 1
    return FaceKey(v[:n], (i, j))


def regions_at(v: VertexWord) -> List[RegionKey]:
    return [canonical_region(v, c) for c in COLORS]


def faces_at(v: VertexWord) -> List[FaceKey]:
    return [canonical_face(v, i, j)
            for i in COLORS for j in COLORS if i < j]


def edge_endpoints(e: EdgeKey) -> Tuple[VertexWord, VertexWord]:
    return e.endpoints()


def edge_surrounding(e: EdgeKey):
    """The three side regions of e and the two color-(e) end regions.

    Returns (sides, (delta, delta_prime)) where delta is the color-(e)
    region at the parent endpoint and delta_prime the one at the child.
    """
    u, v = e.endpoints()
    c = e.color
    sides = [canonical_region(u, i) for i in COLORS if i != c]
    delta = canonical_region(u, c)
    delta_prime = canonical_region(v, c)
    return sides, (delta, delta_prime)


def edge_faces(e: EdgeKey) -> List[FaceKey]:
    """The three faces whose boundary geodesic contains e."""
    c = e.color
    u = e.parent
    others = [i for i in COLORS if i != c]
    return [canonical_face(u, i, j)
            for i in others for j in others if i < j]


def on_face(v: VertexWord, f: FaceKey) -> bool:
    return canonical_face(v, *f.colors) == f


def face_position(f: FaceKey, v: VertexWord) -> int:
    """Signed position of v on f's boundary geodesic (anchor at 0).

    The positive ray leaves the anchor through the smaller edge color.
    """
    if not on_face(v, f):
        raise ValueError("%r is not on face %r" % (v, f))
    suffix = v[len(f.anchor):]
    if not suffix:
        return 0
    lo = str(min(f.edge_colors))
    return len(suffix) if suffix[0] == lo else -len(suffix)


def face_vertex_at(f: FaceKey, pos: int) -> VertexWord:
    """Vertex at signed position pos on f's boundary geodesic."""
    k, l = f.edge_colors
    first = str(k) if pos > 0 else str(l)
    second = str(l) if pos > 0 else str(k)
    word = f.anchor
    for n in range(abs(pos)):
        word += first if n % 2 == 0 else second
    return word


def face_boundary_walk(f: FaceKey, start: VertexWord, steps: int) -> VertexWord:
    """Walk the alternating boundary geodesic of f from start."""
    return face_vertex_at(f, face_position(f, start) + steps)


def face_edge_at(f: FaceKey, n: int) -> EdgeKey:
    """The n-th boundary edge of f: joins positions n and n+1."""
    u = face_vertex_at(f, n)
    v = face_vertex_at(f, n + 1)
    return EdgeKey(v if len(v) > len(u) else u)


def face_side_region(f: FaceKey, n: int) -> RegionKey:
    """Third region of the n-th boundary edge (the alternating neighbor)."""
    e = face_edge_at(f, n)
    i, j = f.colors
    m = next(c for c in COLORS if c not in (i, j) and c != e.color)
    return canonical_region(e.parent, m)


def ball_vertices(depth: int) -> Iterator[VertexWord]:
    """All vertices with |word| <= depth, in breadth-first order."""
    level = [ROOT]
    yield ROOT
    for _ in range(depth):
        nxt = []
        for v in level:
            for c in COLORS:
                if not v or str(c) != v[-1]:
                    w = v + str(c)
                    nxt.append(w)
                    yield w
        level = nxt
