"""Eigenfunction construction along the sorting graph.

Walking a fall-free path from the root of the graph while multiplying, at
each non-affine arrow, the current polynomial by ``T_i`` plus a scalar read
off the source spectral vector — and by the raising operator on affine
arrows — produces a simultaneous eigenfunction of the commuting family.
The eigenvalues are exactly the entries of the endpoint's spectral vector,
so the result depends only on the endpoint; :func:`macdonald` packages the
walk, the leading-coefficient normalization, and the eigenfunction
certificate.  One-arrow movement between neighbouring labels is
:func:`transform`, coefficient tables for symmetrizing over a component are
:func:`sym_coeffs`, and :func:`symmetric_macdonald` /
:func:`antisymmetric_macdonald` assemble the unique (anti)symmetric
polynomial of a component or report the zero space.
"""

from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    CertificationFailure,
    InconsistentRecursion,
    Unreachable,
)
from .heckemod import module_for
from .qsfield import QSRat, monomial, one, poincare, zero
from .tableaux import RST, Filling, check_partition, standardize
from .vvpoly import (
    BT,
    Phi,
    VVPoly,
    Xi,
    adapted_coefficient,
    apply,
)
from .vvpoly import from_json as vvpoly_from_json
from .vvpoly import to_json as vvpoly_to_json
from .ybgraph import (
    Graph,
    SpectralVector,
    Vertex,
    apply_psi,
    apply_si,
    component,
    path_from_root,
    root_tableau,
    root_vertex,
    spectral_vector,
    vertex_of,
)

__all__ = [
    "MacdonaldPoly",
    "SymCoeffTable",
    "TransformResult",
    "antisymmetric_macdonald",
    "from_json",
    "macdonald",
    "minimal_tableau",
    "path_product",
    "phi_prime_check",
    "stabilizer",
    "sym_coeffs",
    "symmetric_macdonald",
    "to_json",
    "transform",
]

_S = monomial(0, 1)


def _as_filling(filling) -> Filling:
    return filling if isinstance(filling, Filling) else Filling(filling)


def _rat(entry: Tuple[int, int]) -> QSRat:
    """A spectral entry ``(n, m)`` as the rational function ``q^n s^m``."""
    return monomial(*entry)


def _step_scalar(zeta: SpectralVector, i: int) -> QSRat:
    """The additive scalar ``(1-s) zeta[i] / (zeta[i] - zeta[i+1])``."""
    a, b = _rat(zeta[i - 1]), _rat(zeta[i])
    return (one() - _S) * a / (a - b)


class MacdonaldPoly:
    """A labeled simultaneous eigenfunction.

    ``label`` is the spectral vector of eigenvalues, ``poly`` the
    polynomial itself (leading coefficient one), and ``certified`` records
    whether the eigenfunction identities were verified on this instance.
    """

    __slots__ = ("label", "vertex", "poly", "certified")

    def __init__(
        self,
        vertex: Vertex,
        poly: VVPoly,
        certified: bool = False,
    ):
        object.__setattr__(self, "label", vertex.zeta)
        object.__setattr__(self, "vertex", vertex)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "certified", bool(certified))

    def __setattr__(self, name, value):
        raise AttributeError("MacdonaldPoly instances are immutable")

    @property
    def v(self) -> tuple:
        return self.vertex.v

    @property
    def tableau(self) -> RST:
        return self.vertex.tableau

    @property
    def N(self) -> int:
        return self.poly.N

    @property
    def shape(self) -> tuple:
        return self.poly.shape

    def __eq__(self, other):
        if not isinstance(other, MacdonaldPoly):
            return NotImplemented
        return self.label == other.label and self.poly == other.poly

    def __repr__(self):
        return (
            f"MacdonaldPoly({self.label}, {len(self.poly.terms)} terms, "
            f"certified={self.certified})"
        )


def _certified(P: MacdonaldPoly) -> MacdonaldPoly:
    """Verify the eigenfunction identities and the normalization; raise
    on any mismatch."""
    for i in range(1, P.N + 1):
        expected = P.poly * _rat(P.label[i - 1])
        if apply(P.poly, Xi(i)) != expected:
            raise CertificationFailure(
                f"commuting operator {i} does not act by {P.label[i - 1]} "
                f"on the polynomial labeled {P.label}"
            )
    lead = adapted_coefficient(P.poly, P.v, P.tableau)
    if lead != one():
        raise CertificationFailure(
            f"adapted leading coefficient is {lead}, not one, "
            f"on the polynomial labeled {P.label}"
        )
    return MacdonaldPoly(P.vertex, P.poly, certified=True)


def path_product(shape: Sequence[int], labels: Iterable[str]) -> VVPoly:
    """The raw product of arrow factors along ``labels`` from the root.

    Fall arrows are permitted — the factor is still read off the source
    vertex and the product collapses to the zero polynomial — so this is
    the unnormalized walk underlying :func:`macdonald` as well as the
    annihilation statement for falls.
    """
    shape = check_partition(shape)
    module = module_for(shape)
    x = root_vertex(shape)
    p = VVPoly.monomial(module, (0,) * module.N, root_tableau(shape))
    for label in labels:
        if label == "Psi":
            p = apply(p, Phi)
            x = apply_psi(x)
        else:
            i = int(label[1:])
            p = apply(p, BT(i)) + p * _step_scalar(x.zeta, i)
            x, _ = apply_si(x, i)
    return p


def macdonald(
    v: Sequence[int],
    tableau: RST,
    *,
    certify: bool = True,
    cache: Optional[Dict[SpectralVector, MacdonaldPoly]] = None,
) -> MacdonaldPoly:
    """The eigenfunction labeled by the pair ``(v, tableau)``.

    The polynomial is built along a synthesized fall-free path and
    normalized so the coefficient of its adapted leading monomial is one.
    With ``certify`` (the default) the eigenfunction identities are
    verified before returning.  A shared ``cache`` keyed by spectral
    vector is consulted and populated, including every intermediate
    vertex of the walk.
    """
    target = vertex_of(v, tableau)
    if cache is not None and target.zeta in cache:
        hit = cache[target.zeta]
        if certify and not hit.certified:
            hit = _certified(hit)
            cache[target.zeta] = hit
        return hit

    labels = path_from_root(target.v, target.tableau)
    vertices: List[Vertex] = [root_vertex(target.tableau.shape)]
    for label in labels:
        if label == "Psi":
            vertices.append(apply_psi(vertices[-1]))
        else:
            nxt, kind = apply_si(vertices[-1], int(label[1:]))
            if kind not in ("step", "correct_jump"):
                raise Unreachable(
                    f"path synthesis produced a {kind} arrow at {label}"
                )
            vertices.append(nxt)
    if vertices[-1] != target:
        raise Unreachable(f"path does not end at {target!r}")

    start = 0
    if cache is not None:
        for j in range(len(vertices) - 1, -1, -1):
            if vertices[j].zeta in cache:
                start = j
                break
    if cache is not None and start > 0:
        p = cache[vertices[start].zeta].poly
    else:
        module = module_for(target.tableau.shape)
        p = VVPoly.monomial(
            module, (0,) * module.N, root_tableau(target.tableau.shape)
        )

    for j in range(start, len(labels)):
        label = labels[j]
        if label == "Psi":
            p = apply(p, Phi)
        else:
            i = int(label[1:])
            p = apply(p, BT(i)) + p * _step_scalar(vertices[j].zeta, i)
        lead = adapted_coefficient(p, vertices[j + 1].v, vertices[j + 1].tableau)
        if lead.is_zero():
            raise CertificationFailure(
                f"walk to {vertices[j + 1]!r} lost its leading monomial"
            )
        if lead != one():
            p = p * lead.inverse()
        if cache is not None and vertices[j + 1].zeta not in cache:
            cache[vertices[j + 1].zeta] = MacdonaldPoly(vertices[j + 1], p)

    result = MacdonaldPoly(target, p)
    if certify:
        result = _certified(result)
    if cache is not None:
        cache[target.zeta] = result
    return result


class TransformResult(NamedTuple):
    """Outcome of one neighbouring-label move.

    ``poly`` is the exact product ``P (T_i + scalar)``; ``kind`` tells how
    to read it: a ``"forward"`` move lands on the eigenfunction labeled
    ``label``; a ``"reverse"`` move yields ``factor`` times that
    eigenfunction; an incomparable pair yields the zero polynomial and
    ``label`` is ``None``.
    """

    kind: str
    poly: VVPoly
    label: Optional[SpectralVector]
    factor: QSRat


def transform(P: MacdonaldPoly, i: int) -> TransformResult:
    """Move the eigenfunction ``P`` across the ``i``-th adjacent pair.

    The product ``P (T_i + (1-s) zeta[i]/(zeta[i]-zeta[i+1]))`` is a
    multiple of the eigenfunction with the swapped label — the multiple
    being one when the swap raises the label, a fixed cross-ratio when it
    lowers it, and zero when the pair is incomparable (the swapped word
    is not a spectral vector).  The zero case is verified on the spot.
    """
    zeta = P.label
    q = apply(P.poly, BT(i)) + P.poly * _step_scalar(zeta, i)
    a, b = _rat(zeta[i - 1]), _rat(zeta[i])
    n1, m1 = zeta[i - 1]
    n2, m2 = zeta[i]
    if n1 == n2 and abs(m1 - m2) == 1:
        if not q.is_zero():
            raise CertificationFailure(
                f"incomparable pair {i} of {zeta} did not annihilate"
            )
        return TransformResult("zero", q, None, zero())
    swapped = SpectralVector(
        zeta.entries[: i - 1]
        + (zeta.entries[i], zeta.entries[i - 1])
        + zeta.entries[i + 1 :]
    )
    forward = n2 > n1 or (n1 == n2 and m2 <= m1 - 2)
    if forward:
        return TransformResult("forward", q, swapped, one())
    factor = (a - _S * b) * (_S * a - b) / ((a - b) * (a - b))
    return TransformResult("reverse", q, swapped, factor)


def phi_prime_check(P: MacdonaldPoly) -> bool:
    """Whether the rotation-style raising of ``P`` equals the predicted
    scalar times its generator-style raising.

    The two raising operators agree up to ``s^(N-1)`` times the first
    eigenvalue, so certified eigenfunctions must always return ``True``.
    """
    from .vvpoly import PhiPrime

    n = P.N
    scalar = monomial(0, n - 1) * _rat(P.label[0])
    return apply(P.poly, PhiPrime) == apply(P.poly, Phi) * scalar


# ---------------------------------------------------------------------------
# symmetrization over a component


class SymCoeffTable:
    """Coefficients attached to every label of a component.

    Maps each spectral vector of the component to the scalar multiplying
    its eigenfunction in the (anti)symmetric combination, normalized to
    one at the root.
    """

    __slots__ = ("filling", "kind", "graph", "_table")

    def __init__(self, filling: Filling, kind: str, graph: Graph, table: dict):
        object.__setattr__(self, "filling", filling)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "_table", dict(table))

    def __setattr__(self, name, value):
        raise AttributeError("SymCoeffTable instances are immutable")

    def __getitem__(self, zeta: SpectralVector) -> QSRat:
        return self._table[zeta]

    def __contains__(self, zeta) -> bool:
        return zeta in self._table

    def __len__(self) -> int:
        return len(self._table)

    def items(self):
        """Pairs ``(vertex, coefficient)`` in the component's vertex order."""
        for x in self.graph.vertices:
            yield x, self._table[x.zeta]


def _edge_factor(zeta: SpectralVector, i: int, kind: str) -> QSRat:
    """The coefficient ratio across a forward arrow at position ``i``."""
    a, b = _rat(zeta[i - 1]), _rat(zeta[i])
    if kind == "sym":
        return (a - b) / (_S * a - b)
    return -(a - b) / (a - _S * b)


def sym_coeffs(filling, kind: str = "sym") -> SymCoeffTable:
    """Propagate coefficient ratios from the root across a component.

    Every forward arrow fixes the ratio between the coefficients of its
    endpoints; the component is a directed acyclic graph, so values spread
    from the root (set to one) along a worklist.  Two arrows meeting at a
    vertex must agree — disagreement raises ``InconsistentRecursion``.
    """
    if kind not in ("sym", "antisym"):
        raise ValueError(f"kind must be 'sym' or 'antisym', not {kind!r}")
    g = component(filling)
    by_source: Dict[SpectralVector, list] = {}
    for e in g.edges:
        by_source.setdefault(e.source.zeta, []).append(e)
    table: Dict[SpectralVector, QSRat] = {g.root.zeta: one()}
    queue = [g.root.zeta]
    while queue:
        src = queue.pop()
        for e in by_source.get(src, ()):
            i = int(e.label[1:])
            val = table[src] * _edge_factor(e.source.zeta, i, kind)
            seen = table.get(e.target.zeta)
            if seen is None:
                table[e.target.zeta] = val
                queue.append(e.target.zeta)
            elif seen != val:
                raise InconsistentRecursion(
                    f"two routes to {e.target.zeta} disagree: {seen} vs {val}"
                )
    if len(table) != len(g.vertices):
        raise InconsistentRecursion(
            f"component has {len(g.vertices)} vertices but only "
            f"{len(table)} were reached from the root"
        )
    return SymCoeffTable(_as_filling(filling), kind, g, table)


def _combination(filling, kind: str, cache=None) -> VVPoly:
    table = sym_coeffs(filling, kind)
    if cache is None:
        cache = {}
    total: Optional[VVPoly] = None
    for x, coeff in table.items():
        p = macdonald(x.v, x.tableau, certify=False, cache=cache)
        term = p.poly * coeff
        total = term if total is None else total + term
    assert total is not None
    return total


def symmetric_macdonald(filling, *, cache=None) -> VVPoly:
    """The symmetric polynomial supported on one component.

    Each generator acts on the result by the scalar ``s``.  The space of
    such polynomials is one-dimensional when the filling has strictly
    increasing columns and zero-dimensional otherwise; the zero polynomial
    is returned in the latter case.
    """
    filling = _as_filling(filling)
    if not filling.is_column_strict():
        return VVPoly.zero(module_for(filling.shape))
    return _combination(filling, "sym", cache)


def antisymmetric_macdonald(filling, *, cache=None) -> VVPoly:
    """The antisymmetric polynomial supported on one component.

    Each generator acts by ``-1``; the space is one-dimensional when the
    filling has strictly increasing rows and zero-dimensional otherwise,
    and the zero polynomial is returned in the zero-dimensional case.
    """
    filling = _as_filling(filling)
    if not filling.is_row_strict():
        return VVPoly.zero(module_for(filling.shape))
    return _combination(filling, "antisym", cache)


def _sym_pair(P: MacdonaldPoly, Q: MacdonaldPoly, i: int) -> VVPoly:
    """The two-term combination killed by ``T_i - s`` across pair ``i``.

    ``P`` carries the lower label, ``Q`` the label with positions ``i``
    and ``i+1`` swapped.
    """
    z = _rat(P.label[i]) / _rat(P.label[i - 1])
    return Q.poly + P.poly * ((_S - z) / (one() - z))


def _antisym_pair(P: MacdonaldPoly, Q: MacdonaldPoly, i: int) -> VVPoly:
    """The two-term combination killed by ``T_i + 1`` across pair ``i``."""
    z = _rat(P.label[i]) / _rat(P.label[i - 1])
    return Q.poly - P.poly * ((one() - _S * z) / (one() - z))


# ---------------------------------------------------------------------------
# stabilizer data and minimal fillings


def stabilizer(filling) -> Tuple[tuple, tuple, QSRat]:
    """The permutation and subgroup data linking root to sink.

    Returns ``(sigma, generators, phi)``: the minimal permutation
    rearranging the root label into the sink label, the adjacent
    transposition indices generating the subgroup that fixes the sink
    pair, and that subgroup's length generating function (a product of
    factorial polynomials, one per run of equal entries within a row).
    """
    filling = _as_filling(filling)
    vplus = filling.values_sorted()
    n = len(vplus)
    std1 = standardize(filling, "std1")
    sink = spectral_vector(vplus, std1)
    root = spectral_vector(tuple(reversed(vplus)), standardize(filling, "std0"))

    sigma: List[int] = []
    used = [False] * n
    for i in range(n):
        for j in range(n):
            if not used[j] and root[j] == sink[i]:
                sigma.append(j + 1)
                used[j] = True
                break
        else:
            raise Unreachable(
                f"root and sink labels are not rearrangements: {root} vs {sink}"
            )

    row_of = {}
    for y, row in enumerate(std1.to_rows()):
        for entry in row:
            row_of[entry] = y
    keys = [(row_of[i + 1], vplus[i]) for i in range(n)]
    generators = tuple(
        i for i in range(1, n) if keys[i - 1] == keys[i]
    )
    phi = one()
    run = 1
    for i in range(1, n + 1):
        if i in generators:
            run += 1
        else:
            phi = phi * poincare(run)
            run = 1
    return tuple(sigma), generators, phi


def minimal_tableau(shape: Sequence[int], kind: str = "sym") -> Filling:
    """The lowest-weight filling admitting an (anti)symmetric polynomial.

    The symmetric one fills each row with its zero-based row number; the
    antisymmetric one fills each row with ``0, 1, 2, ...`` and equals the
    conjugate of the symmetric filling of the conjugate shape.
    """
    shape = check_partition(shape)
    if kind == "sym":
        return Filling([[y] * shape[y] for y in range(len(shape))])
    if kind == "antisym":
        return Filling([list(range(width)) for width in shape])
    raise ValueError(f"kind must be 'sym' or 'antisym', not {kind!r}")


# ---------------------------------------------------------------------------
# serialization


def to_json(P: MacdonaldPoly) -> dict:
    """Plain-data form: the label, its pair, and the polynomial."""
    return {
        "zeta": [list(entry) for entry in P.label],
        "v": list(P.v),
        "tableau": P.tableau.to_rows(),
        "poly": vvpoly_to_json(P.poly),
    }


def from_json(obj) -> MacdonaldPoly:
    """Inverse of :func:`to_json`; the certificate is not assumed."""
    vertex = vertex_of(tuple(obj["v"]), RST(obj["tableau"]))
    announced = SpectralVector([tuple(e) for e in obj["zeta"]])
    if announced != vertex.zeta:
        raise CertificationFailure(
            f"announced label {announced} does not match the pair "
            f"({obj['v']}, {obj['tableau']})"
        )
    return MacdonaldPoly(vertex, vvpoly_from_json(obj["poly"]))
