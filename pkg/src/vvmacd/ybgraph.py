"""The sorting graph of a shape and its connected components.

Vertices are 4-tuples ``(tableau, zeta, v, sigma)``: a reverse standard
tableau, the spectral vector ``zeta[i] = q^v[i] * s^CT[sigma[i]]``, an
exponent vector ``v``, and the rank permutation ``sigma = r_v``.  Two
moves generate everything: the exchange ``s_i`` (swap adjacent data, or
swap two tableau entries when the exponents tie) and the affine move
``Psi`` (rotate, incrementing the recycled exponent).  An exchange on a
tie with adjacent contents goes nowhere -- a *fall* -- and paths that
avoid falls are the raw material for eigenfunction construction.

The spectral vector is a faithful key: exponents of ``q`` recover ``v``,
ranks recover ``sigma``, and the ``s``-exponents pin the tableau, which
is the basis for :func:`vertex_from_spectral` and for deduplication.

Removing affine edges and falls splits the graph into finite connected
components indexed by fillings; :func:`component` materializes one, and
:func:`component_dimension` evaluates its size by the shifted-Schur
product formula instead of enumeration.
"""

from collections import deque
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import (
    IndexOutOfRange,
    InvalidFilling,
    NotASpectralVector,
    Unreachable,
)
from .tableaux import (
    RST,
    Filling,
    check_partition,
    enumerate_rst,
    filling_of,
    rank,
    rst_from_contents,
    sort_parts,
    standardize,
)

__all__ = [
    "Edge",
    "Graph",
    "SpectralVector",
    "Vertex",
    "apply_psi",
    "apply_si",
    "compare",
    "component",
    "component_dimension",
    "follow_path",
    "graph_up_to",
    "path_from_root",
    "root_tableau",
    "root_vertex",
    "spectral_vector",
    "vertex_from_spectral",
    "vertex_of",
]


def _entry_str(pair: Tuple[int, int]) -> str:
    """Render ``q^n s^m`` compactly: ``1``, ``q``, ``s^-1``, ``q^2s``, ..."""
    n, m = pair
    parts = []
    if n == 1:
        parts.append("q")
    elif n != 0:
        parts.append(f"q^{n}")
    if m == 1:
        parts.append("s")
    elif m != 0:
        parts.append(f"s^{m}")
    return "".join(parts) or "1"


class SpectralVector:
    """An ordered list of eigenvalue monomials ``q^n s^m``.

    Entries are stored as integer pairs ``(n, m)``.  Adjacent entries of
    a genuine spectral vector are never equal; the constructor enforces
    this so the class can serve as a safe dictionary key.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Tuple[int, int]]):
        if isinstance(entries, SpectralVector):
            entries = entries.entries
        norm = []
        for e in entries:
            n, m = e
            if not (isinstance(n, int) and isinstance(m, int)):
                raise NotASpectralVector(f"entry {e!r} is not an integer pair")
            norm.append((n, m))
        for i in range(len(norm) - 1):
            if norm[i] == norm[i + 1]:
                raise NotASpectralVector(
                    f"adjacent entries {i + 1} and {i + 2} are equal "
                    f"({_entry_str(norm[i])})"
                )
        object.__setattr__(self, "entries", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("SpectralVector instances are immutable")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        return isinstance(other, SpectralVector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SpectralVector({list(self.entries)!r})"

    def __str__(self):
        return "[" + ", ".join(_entry_str(e) for e in self.entries) + "]"


class Vertex:
    """A graph vertex ``(tableau, zeta, v, sigma)``.

    The constructor checks internal consistency: ``sigma`` must be the
    rank permutation of ``v`` and ``zeta`` must match the spectral
    formula, so vertices cannot drift out of sync under the moves.
    """

    __slots__ = ("tableau", "zeta", "v", "sigma")

    def __init__(
        self,
        tableau: RST,
        zeta: SpectralVector,
        v: Sequence[int],
        sigma: Sequence[int],
    ):
        v = tuple(v)
        sigma = tuple(sigma)
        zeta = SpectralVector(zeta)
        if any(not isinstance(e, int) or e < 0 for e in v):
            raise ValueError(f"exponents must be non-negative integers, got {v}")
        if sigma != rank(v):
            raise ValueError(f"sigma {sigma} is not the rank permutation of {v}")
        ct = tableau.contents
        expected = tuple((v[i], ct[sigma[i] - 1]) for i in range(len(v)))
        if zeta.entries != expected:
            raise ValueError(
                f"spectral vector {zeta} does not match (v, tableau) data"
            )
        object.__setattr__(self, "tableau", tableau)
        object.__setattr__(self, "zeta", zeta)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "sigma", sigma)

    def __setattr__(self, name, value):
        raise AttributeError("Vertex instances are immutable")

    @property
    def degree(self) -> int:
        return sum(self.v)

    def __eq__(self, other):
        return isinstance(other, Vertex) and self.zeta == other.zeta

    def __hash__(self):
        return hash(self.zeta)

    def __repr__(self):
        return (
            f"Vertex({self.tableau.to_rows()!r}, {self.zeta}, "
            f"v={list(self.v)!r}, sigma={list(self.sigma)!r})"
        )


class Edge(NamedTuple):
    """A labeled arrow; falls keep ``target=None`` (the empty vertex)."""

    source: Vertex
    target: Optional[Vertex]
    label: str
    kind: str


def root_tableau(shape: Iterable[int]) -> RST:
    """The tableau filling the shape column by column, bottom to top and
    left to right, with ``N, N-1, ..., 1``."""
    shape = check_partition(shape)
    n = sum(shape)
    rows = [[0] * l for l in shape]
    entry = n
    for x in range(1, shape[0] + 1):
        for y in range(1, len(shape) + 1):
            if x <= shape[y - 1]:
                rows[y - 1][x - 1] = entry
                entry -= 1
    return RST(rows)


def spectral_vector(v: Sequence[int], tableau: RST) -> SpectralVector:
    """``zeta[i] = q^v[i] * s^CT[sigma[i]]`` with ``sigma`` the rank of v."""
    if len(v) != tableau.N:
        raise ValueError(f"length of {v} != tableau size {tableau.N}")
    sigma = rank(v)
    ct = tableau.contents
    return SpectralVector(
        (v[i], ct[sigma[i] - 1]) for i in range(len(v))
    )


def vertex_of(v: Sequence[int], tableau: RST) -> Vertex:
    """The consistent vertex carrying exponent vector ``v`` on ``tableau``."""
    return Vertex(tableau, spectral_vector(v, tableau), v, rank(v))


def root_vertex(shape: Iterable[int]) -> Vertex:
    """The degree-0 vertex of the root tableau: ``(T, CT^s, 0^N, id)``."""
    return vertex_of((0,) * sum(check_partition(shape)), root_tableau(shape))


def vertex_from_spectral(zeta) -> Vertex:
    """Rebuild the unique vertex with the given spectral vector.

    The ``q``-exponents give ``v``, ranks give ``sigma``, and the
    ``s``-exponents prescribe the content of every tableau entry.
    Raises :class:`NotASpectralVector` when no vertex matches.
    """
    zeta = SpectralVector(zeta)
    v = tuple(n for n, _ in zeta)
    if any(n < 0 for n in v):
        raise NotASpectralVector(f"negative q-exponent in {zeta}")
    sigma = rank(v)
    ct = [0] * len(v)
    for i in range(len(v)):
        ct[sigma[i] - 1] = zeta[i][1]
    try:
        tableau = rst_from_contents(ct)
    except InvalidFilling as exc:
        raise NotASpectralVector(
            f"{zeta} does not match any tableau: {exc}"
        ) from None
    result = vertex_of(v, tableau)
    if result.zeta != zeta:
        raise NotASpectralVector(f"{zeta} is not a consistent spectral vector")
    return result


def compare(a: Tuple[int, int], b: Tuple[int, int]) -> str:
    """Order two eigenvalue monomials ``q^n1 s^m1`` and ``q^n2 s^m2``.

    Returns ``"succ"`` when ``n1 > n2``, or ``n1 = n2`` with
    ``m1 <= m2 - 2``; ``"prec"`` symmetrically; ``"nsim"`` when the
    q-exponents tie and the s-exponents differ by exactly one (the
    incomparable case, where an exchange would not move along the
    graph); ``"eq"`` on identical entries.
    """
    (n1, m1), (n2, m2) = a, b
    if (n1, m1) == (n2, m2):
        return "eq"
    if n1 > n2 or (n1 == n2 and m1 <= m2 - 2):
        return "succ"
    if n2 > n1 or (n1 == n2 and m2 <= m1 - 2):
        return "prec"
    return "nsim"


def apply_si(x: Vertex, i: int) -> Tuple[Vertex, str]:
    """Act the exchange ``s_i`` on a vertex and classify the move.

    Distinct adjacent exponents swap the data in place: ``"step"`` when
    ``v[i] < v[i+1]`` (a forward arrow) and ``"reverse_step"``
    otherwise.  Tied exponents try to exchange the tableau entries
    ``sigma[i]`` and ``sigma[i]+1``: impossible (adjacent contents)
    gives a ``"fall"`` fixing the vertex; a content gap ``>= 2`` gives a
    ``"correct_jump"``; a gap ``<= -2`` gives a ``"reverse_jump"``.
    """
    n = len(x.v)
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"exchange index {i} not in 1..{n - 1}")
    z = list(x.zeta.entries)
    z[i - 1], z[i] = z[i], z[i - 1]
    if x.v[i - 1] != x.v[i]:
        v = list(x.v)
        v[i - 1], v[i] = v[i], v[i - 1]
        sigma = list(x.sigma)
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        kind = "step" if x.v[i - 1] < x.v[i] else "reverse_step"
        return Vertex(x.tableau, SpectralVector(z), v, sigma), kind
    k = x.sigma[i - 1]
    swapped = x.tableau.swapped(k)
    if swapped is None:
        return x, "fall"
    gap = x.tableau.contents[k - 1] - x.tableau.contents[k]
    kind = "correct_jump" if gap >= 2 else "reverse_jump"
    return Vertex(swapped, SpectralVector(z), x.v, x.sigma), kind


def apply_psi(x: Vertex) -> Vertex:
    """The affine move: rotate everything left, re-inserting the first
    exponent incremented (its eigenvalue gains a factor ``q``)."""
    v = x.v[1:] + (x.v[0] + 1,)
    sigma = x.sigma[1:] + (x.sigma[0],)
    (n0, m0) = x.zeta[0]
    z = x.zeta.entries[1:] + ((n0 + 1, m0),)
    return Vertex(x.tableau, SpectralVector(z), v, sigma)


def follow_path(shape: Iterable[int], labels: Iterable[str]) -> Vertex:
    """Walk a label list (``"s3"``, ``"Psi"``, ...) from the root vertex.

    Raises :class:`Unreachable` when a label is a fall (the walk would
    leave the graph).
    """
    x = root_vertex(shape)
    for label in labels:
        if label == "Psi":
            x = apply_psi(x)
            continue
        x, kind = apply_si(x, int(label[1:]))
        if kind == "fall":
            raise Unreachable(f"label {label} is a fall at {x.zeta}")
    return x


def path_from_root(v: Sequence[int], tableau: RST) -> List[str]:
    """A fall-free label list from the root vertex to ``(v, tableau)``.

    The prefix reaches the target tableau at degree 0 through correct
    jumps (breadth-first over entry exchanges); the suffix synthesizes
    ``v`` by unwinding it -- strip the affine move while the last
    exponent is positive, otherwise undo the rightmost descent -- and
    replaying the record forward.  Neither phase can fall, and moves in
    the suffix never touch the tableau.
    """
    n = tableau.N
    if len(v) != n:
        raise ValueError(f"length of {v} != tableau size {n}")
    suffix: List[str] = []
    cur = list(v)
    while any(cur):
        if cur[-1] > 0:
            suffix.append("Psi")
            cur = [cur[-1] - 1] + cur[:-1]
        else:
            j = max(i for i in range(n - 1) if cur[i] > cur[i + 1])
            suffix.append(f"s{j + 1}")
            cur[j], cur[j + 1] = cur[j + 1], cur[j]
    suffix.reverse()

    start = root_tableau(tableau.shape)
    paths: Dict[RST, List[str]] = {start: []}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        if t == tableau:
            return paths[t] + suffix
        ct = t.contents
        for k in range(1, n):
            if ct[k - 1] - ct[k] >= 2:
                nt = t.swapped(k)
                if nt is not None and nt not in paths:
                    # at degree 0 entry k sits at position k
                    paths[nt] = paths[t] + [f"s{k}"]
                    queue.append(nt)
    raise Unreachable(f"no jump path from the root tableau to {tableau!r}")


class Graph:
    """An immutable piece of the sorting graph: either one connected
    component (affine edges and falls removed) or everything up to a
    degree bound.

    Vertices are ordered by ``(degree, v, tableau contents)`` and edges
    by source, label, and kind, so exports are deterministic.
    """

    __slots__ = ("shape", "vertices", "edges", "root", "sink", "_index")

    def __init__(
        self,
        shape: Tuple[int, ...],
        vertices: Iterable[Vertex],
        edges: Iterable[Edge],
        root: Vertex,
        sink: Optional[Vertex],
    ):
        vertices = tuple(
            sorted(vertices, key=lambda x: (x.degree, x.v, x.tableau.contents))
        )
        index = {x.zeta: i for i, x in enumerate(vertices)}
        edges = tuple(
            sorted(
                edges,
                key=lambda e: (
                    index[e.source.zeta],
                    e.label,
                    -1 if e.target is None else index[e.target.zeta],
                ),
            )
        )
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "sink", sink)
        object.__setattr__(self, "_index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Graph instances are immutable")

    def __contains__(self, x: Vertex) -> bool:
        return x.zeta in self._index

    def vertex_index(self, x: Vertex) -> int:
        return self._index[x.zeta]

    def to_json(self) -> dict:
        """A plain-dict rendering mirroring the vertex fields."""
        return {
            "shape": list(self.shape),
            "vertices": [
                {
                    "tableau": x.tableau.to_rows(),
                    "zeta": [list(e) for e in x.zeta],
                    "v": list(x.v),
                    "sigma": list(x.sigma),
                }
                for x in self.vertices
            ],
            "edges": [
                {
                    "from": self._index[e.source.zeta],
                    "to": None if e.target is None else self._index[e.target.zeta],
                    "label": e.label,
                    "kind": e.kind,
                }
                for e in self.edges
            ],
            "root": self._index[self.root.zeta],
            "sink": None if self.sink is None else self._index[self.sink.zeta],
        }

    def to_dot(self, include_pairs: bool = False) -> str:
        """GraphViz source: steps solid, jumps dashed, falls omitted."""
        lines = ["digraph {", "  rankdir=LR;"]
        for i, x in enumerate(self.vertices):
            label = str(x.zeta)
            if include_pairs:
                label += f"\\nv={list(x.v)}, T={x.tableau.to_rows()}"
            lines.append(f'  n{i} [label="{label}"];')
        for e in self.edges:
            if e.target is None:
                continue
            style = "dashed" if e.kind == "correct_jump" else "solid"
            lines.append(
                f"  n{self._index[e.source.zeta]} -> "
                f'n{self._index[e.target.zeta]} [label="{e.label}", style={style}];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def _forward_edges(x: Vertex, with_falls: bool) -> List[Edge]:
    edges = []
    for i in range(1, len(x.v)):
        y, kind = apply_si(x, i)
        if kind in ("step", "correct_jump"):
            edges.append(Edge(x, y, f"s{i}", kind))
        elif kind == "fall" and with_falls:
            edges.append(Edge(x, None, f"s{i}", kind))
    return edges


def graph_up_to(shape: Iterable[int], max_degree: int) -> Graph:
    """All vertices with ``|v| <= max_degree``, with every arrow: steps
    (exchanges and affine moves), correct jumps, and falls to ``None``."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    shape = check_partition(shape)
    root = root_vertex(shape)
    seen = {root.zeta: root}
    edges: List[Edge] = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for e in _forward_edges(x, with_falls=True):
            edges.append(e)
            if e.target is not None and e.target.zeta not in seen:
                seen[e.target.zeta] = e.target
                queue.append(e.target)
        if x.degree < max_degree:
            y = apply_psi(x)
            edges.append(Edge(x, y, "Psi", "step"))
            if y.zeta not in seen:
                seen[y.zeta] = y
                queue.append(y)
    return Graph(shape, seen.values(), edges, root, None)


def component(filling: Union[Filling, Sequence[Sequence[int]]]) -> Graph:
    """The connected component of all pairs ``(v, tableau)`` whose level
    filling equals ``filling``, with step and jump edges (affine moves
    and falls removed).

    The root carries the increasing arrangement of the values and has no
    incoming arrow; the sink carries the decreasing arrangement and has
    no outgoing one.
    """
    if not isinstance(filling, Filling):
        filling = Filling(filling)
    shape = filling.shape
    vplus = filling.values_sorted()
    tableaux = [
        t for t in enumerate_rst(shape) if filling_of(t, vplus) == filling
    ]
    arrangements = sorted(set(permutations(vplus)))
    vertices = [vertex_of(v, t) for v in arrangements for t in tableaux]
    edges = [e for x in vertices for e in _forward_edges(x, with_falls=False)]
    root = vertex_of(tuple(reversed(vplus)), standardize(filling, "std0"))
    sink = vertex_of(vplus, standardize(filling, "std1"))
    return Graph(shape, vertices, edges, root, sink)


def _hook_number(mu: Tuple[int, ...]) -> int:
    """``prod (mu[i]+l-i)! / prod_{i<j} (mu[i]-mu[j]-i+j)`` -- the
    factorial-over-differences form of the hook product."""
    l = len(mu)
    num = 1
    for i in range(1, l + 1):
        num *= factorial(mu[i - 1] + l - i)
    den = 1
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            den *= mu[i - 1] - mu[j - 1] - i + j
    result = Fraction(num, den)
    assert result.denominator == 1
    return int(result)


def _falling(n: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= n - j
    return out


def _det(mat: List[List[int]]) -> Fraction:
    m = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(m):
        pivot = next((r for r in range(col, m) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, m):
            factor = a[r][col] / a[col][col]
            for c in range(col, m):
                a[r][c] -= factor * a[col][c]
    return det


def _shifted_schur(mu: Tuple[int, ...], lam: Tuple[int, ...]) -> Fraction:
    """``s*_mu(lam)``: the ratio of determinants of falling factorials
    ``(m + lam[i] - i)_(mu[j] + m - j)`` over the same with ``mu = 0``."""
    m = max(len(lam), len(mu), 1)
    lam = tuple(lam) + (0,) * (m - len(lam))
    mu = tuple(mu) + (0,) * (m - len(mu))
    num = [
        [_falling(m + lam[i - 1] - i, mu[j - 1] + m - j) for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    den = [
        [_falling(m + lam[i - 1] - i, m - j) for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    d = _det(den)
    if d == 0:
        raise ValueError(f"degenerate denominator for mu={mu}, lam={lam}")
    return _det(num) / d


def component_dimension(
    filling: Union[Filling, Sequence[Sequence[int]]]
) -> Tuple[int, int]:
    """``(number of tableaux, dimension)`` of a connected component.

    Level shapes ``mu_0 <= mu_1 <= ... <= mu_M`` (cells with value at
    most ``m``) feed the shifted-Schur product formula; the dimension
    multiplies in the permutations of the value multiset.
    """
    if not isinstance(filling, Filling):
        filling = Filling(filling)
    levels = filling.level_shapes()
    tabs = Fraction(factorial(sum(levels[0])), _hook_number(levels[0]))
    dim = Fraction(factorial(filling.N), _hook_number(levels[0]))
    for prev, cur in zip(levels, levels[1:]):
        ratio = _shifted_schur(prev, cur) / _hook_number(cur)
        tabs *= ratio * factorial(sum(cur) - sum(prev))
        dim *= ratio
    assert tabs.denominator == 1 and dim.denominator == 1
    return int(tabs), int(dim)
