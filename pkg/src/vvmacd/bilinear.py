"""The bilinear form, eigenfunction norms, and hook-length formulas.

The form pairs a *starred* copy of the polynomial space with the space
itself: basis tableaux are orthogonal with squared norm ``nu``,
multiplication by ``x_i`` on the starred side is adjoint to the lowering
operator ``D(i)`` on the plain side, and starred coefficients are
conjugated by ``iota`` (``q -> 1/q``, ``s -> 1/s``) at pairing time.
:func:`pair` evaluates the form by peeling variables off the left
argument onto lowering operators on the right until only the degree-zero
tableau pairing remains.

Eigenfunctions with distinct spectral vectors are orthogonal, and the
squared norm of an eigenfunction is a product read off its spectral
vector alone.  :func:`norm_recursive` accumulates one cross-ratio factor
per sorting arrow and one affine factor per rotation along a path from
the root; :func:`norm_closed` evaluates the same quantity in closed form
as a ``box * triangle`` factorization; :func:`inversion_factors` gives
the companion products that relate the norm at any label to the norms at
the component's root, sink, and exponent-sorted representative.

Squared norms of the (anti)symmetric polynomials reduce to the norm at
the component's root times explicit scalars (:func:`norm_symmetric`),
and for the minimal symmetric/antisymmetric polynomials of a partition
they collapse to hook-length products (:func:`hook_formulas`).
"""

from collections import Counter
from functools import lru_cache
from typing import Dict, Iterable, NamedTuple, Optional, Tuple, Union

from .errors import IncompatibleTableau, InconsistentRecursion, ShapeMismatch
from .heckemod import module_for, nu
from .qsfield import QSRat, iota, monomial, one, poincare, zero
from .tableaux import (
    RST,
    Filling,
    check_partition,
    conjugate,
    filling_of,
    perm_length,
    standardize,
)
from .vvpoly import D, VVPoly, apply
from .ybgraph import (
    apply_psi,
    apply_si,
    component,
    path_from_root,
    root_tableau,
    vertex_from_spectral,
    vertex_of,
)
from .macdonald import stabilizer, sym_coeffs, minimal_tableau

__all__ = [
    "NormFactorization",
    "PairingContext",
    "hook_formulas",
    "inversion_factors",
    "norm_closed",
    "norm_recursive",
    "norm_symmetric",
    "pair",
]

_Q = monomial(1, 0)
_S = monomial(0, 1)


class PairingContext:
    """Per-shape state for the bilinear form: the module and a cache of
    the squared norms ``nu`` of its basis tableaux.

    Contexts are shared per shape (:meth:`for_shape`), so the ``nu``
    cache warms once for all pairings against the same module.
    """

    __slots__ = ("module", "shape", "N", "_nu")

    def __init__(self, shape: Iterable[int]):
        module = module_for(shape)
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "shape", module.shape)
        object.__setattr__(self, "N", sum(module.shape))
        object.__setattr__(self, "_nu", {})

    def __setattr__(self, name, value):
        raise AttributeError("PairingContext instances are immutable")

    def __repr__(self):
        return f"PairingContext(shape={self.shape})"

    @classmethod
    def for_shape(cls, shape: Iterable[int]) -> "PairingContext":
        """The shared context for a shape (one instance per shape)."""
        return _context_cached(check_partition(shape))

    def nu(self, t: Union[RST, int]) -> QSRat:
        """Cached squared norm of a basis tableau (or basis index)."""
        idx = t if isinstance(t, int) else self.module.index[t]
        got = self._nu.get(idx)
        if got is None:
            got = self._nu[idx] = nu(self.module.basis[idx])
        return got


@lru_cache(maxsize=None)
def _context_cached(shape: tuple) -> PairingContext:
    return PairingContext(shape)


class NormFactorization(NamedTuple):
    """A squared norm split into named factors.

    ``box`` collects the factors ``1 - q^k s^m`` indexed by the
    exponents of the spectral vector, ``triangle`` the cross-ratio
    factors indexed by its ordered pairs.  For the norms of symmetric or
    antisymmetric polynomials the reduction scalars are carried in
    ``poincare_ratio`` and ``b_sink``; both stay ``None`` for a plain
    eigenfunction norm.  ``product`` multiplies whatever is present.
    """

    box: QSRat
    triangle: QSRat
    poincare_ratio: Optional[QSRat] = None
    b_sink: Optional[QSRat] = None

    @property
    def product(self) -> QSRat:
        out = self.box * self.triangle
        if self.poincare_ratio is not None:
            out = out * self.poincare_ratio
        if self.b_sink is not None:
            out = out * self.b_sink
        return out


# ---------------------------------------------------------------------------
# the pairing


def _lowered(base: VVPoly, v: tuple, memo: Dict[tuple, VVPoly]) -> VVPoly:
    """``base`` hit by one lowering operator per unit of each exponent."""
    got = memo.get(v)
    if got is not None:
        return got
    out = base
    for i in range(len(v) - 1, -1, -1):
        if v[i]:
            prev = v[:i] + (v[i] - 1,) + v[i + 1 :]
            out = apply(_lowered(base, prev, memo), D(i + 1))
            break
    memo[v] = out
    return out


def pair(pstar: VVPoly, poly: VVPoly) -> QSRat:
    """The bilinear form ``<pstar*, poly>``.

    ``pstar`` is an ordinary polynomial; the star is applied here, by
    conjugating its coefficients with ``iota``.  Each monomial
    ``x^v (tableau)`` on the starred side trades its variables for
    lowering operators on ``poly`` (the order is immaterial, the
    lowering operators commute) and then pairs tableau against tableau:
    orthogonal, with squared norm ``nu``.  Terms of unequal total degree
    pair to zero.
    """
    if pstar.module is not poly.module:
        raise ShapeMismatch(
            f"cannot pair polynomials over shapes {pstar.module.shape} "
            f"and {poly.module.shape}"
        )
    ctx = PairingContext.for_shape(pstar.module.shape)
    zero_v = (0,) * ctx.N
    by_exponent: Dict[tuple, Dict[int, QSRat]] = {}
    for (v, idx), c in pstar.terms.items():
        by_exponent.setdefault(v, {})[idx] = c
    memo: Dict[tuple, VVPoly] = {}
    out = zero()
    for v, coeffs in by_exponent.items():
        lowered = _lowered(poly, v, memo)
        for idx, c in coeffs.items():
            d = lowered.terms.get((zero_v, idx))
            if d is not None:
                out = out + iota(c) * d * ctx.nu(idx)
    return out


# ---------------------------------------------------------------------------
# eigenfunction norms


def _entries(zeta) -> tuple:
    """Validated spectral-vector entries ``(n, m)``; raises
    ``NotASpectralVector`` when no (exponent, tableau) pair fits."""
    vertex = vertex_from_spectral(zeta)
    return vertex.zeta.entries


def _step_factor(src: Tuple[int, int], tgt: Tuple[int, int]) -> QSRat:
    """Norm ratio across a forward arrow whose source has ``src`` and
    ``tgt`` in the exchanged slots: ``(1-s z)(s-z) / (s (1-z)^2)`` with
    ``z = tgt/src``."""
    z = monomial(tgt[0] - src[0], tgt[1] - src[1])
    return ((one() - _S * z) * (_S - z)) / (_S * (one() - z) * (one() - z))


def norm_recursive(zeta) -> QSRat:
    """Squared norm of the eigenfunction labeled ``zeta``, accumulated
    along a fall-free path from the root of its shape.

    Starts from the squared norm ``nu`` of the root tableau at degree
    zero and multiplies one cross-ratio factor per exchange arrow and
    ``1 - q zeta[1]`` per affine arrow, each read off the arrow's
    source.
    """
    target = vertex_from_spectral(zeta)
    shape = target.tableau.shape
    cur = vertex_of((0,) * target.tableau.N, root_tableau(shape))
    out = nu(cur.tableau)
    for label in path_from_root(target.v, target.tableau):
        entries = cur.zeta.entries
        if label == "Psi":
            n, m = entries[0]
            out = out * (one() - monomial(n + 1, m))
            cur = apply_psi(cur)
            continue
        i = int(label[1:])
        out = out * _step_factor(entries[i - 1], entries[i])
        cur, kind = apply_si(cur, i)
        if kind not in ("step", "correct_jump"):
            raise InconsistentRecursion(
                f"path synthesis produced a non-forward arrow {label} ({kind})"
            )
    if cur.zeta != target.zeta:
        raise InconsistentRecursion("path did not arrive at the requested label")
    return out


def _box(entries: tuple) -> QSRat:
    """Product over entries ``q^n s^m`` of ``(1-q s^m)...(1-q^n s^m)``."""
    out = one()
    for n, m in entries:
        for k in range(1, n + 1):
            out = out * (one() - monomial(k, m))
    return out


def _rho(a: QSRat, b: QSRat) -> QSRat:
    """The cross-ratio ``(a - b/s)(a - b s) / (a - b)^2``."""
    return ((a - b / _S) * (a - b * _S)) / ((a - b) * (a - b))


def _triangle(entries: tuple) -> QSRat:
    """Product of ``_rho(zeta[j] q^k, zeta[i])`` over the pairs where
    ``zeta[i]`` dominates ``zeta[j] q^k``, with ``k >= 1`` when ``j``
    precedes ``i`` and ``k >= 0`` otherwise."""
    out = one()
    for j, (nj, mj) in enumerate(entries):
        for i, (ni, mi) in enumerate(entries):
            if i == j:
                continue
            kmin = 1 if j < i else 0
            ks = list(range(kmin, ni - nj))
            if ni - nj >= kmin and mi <= mj - 2:
                ks.append(ni - nj)
            for k in ks:
                out = out * _rho(monomial(nj + k, mj), monomial(ni, mi))
    return out


def norm_closed(zeta) -> NormFactorization:
    """Squared norm of the eigenfunction labeled ``zeta`` in closed form.

    The ``box`` factor multiplies ``1 - q^k s^m`` over each entry
    ``q^n s^m`` and ``1 <= k <= n``; the ``triangle`` factor multiplies
    the cross-ratio ``_rho`` over dominated entry pairs.  The product
    equals :func:`norm_recursive` exactly.
    """
    entries = _entries(zeta)
    return NormFactorization(box=_box(entries), triangle=_triangle(entries))


def _ratio_factor(src: Tuple[int, int], tgt: Tuple[int, int], a: int) -> QSRat:
    """``(1 - s^a z) / (1 - z)`` with ``z = tgt/src``."""
    z = monomial(tgt[0] - src[0], tgt[1] - src[1])
    return (one() - monomial(0, a) * z) / (one() - z)


def _crossed_pairs(entries: tuple, reference: tuple) -> list:
    """Entry pairs of ``entries`` in the opposite order in ``reference``.

    Both tuples arrange the same multiset.  Repeated values are matched
    by occurrence (they never exchange along a fall-free path, so the
    k-th occurrence stays the k-th), which also keeps the singular
    ``z = 1`` ratio out of every product built on these pairs.
    """
    where: Dict[Tuple[int, int], list] = {}
    for pos, entry in enumerate(reference):
        where.setdefault(entry, []).append(pos)
    seen: Counter = Counter()
    ranks = []
    for entry in entries:
        ranks.append(where[entry][seen[entry]])
        seen[entry] += 1
    return [
        (entries[i], entries[j])
        for i in range(len(entries))
        for j in range(i + 1, len(entries))
        if ranks[i] > ranks[j]
    ]


def inversion_factors(zeta, which: str) -> QSRat:
    """Inversion-indexed norm ratios for the label ``zeta``.

    ``which`` selects the product:

    - ``"E_1"`` / ``"E_-1"``: ``(1 - s^{+-1} z)/(1 - z)`` over pairs
      ``i < j`` whose ``q``-exponents increase, ``z = zeta[j]/zeta[i]``;
    - ``"E"``: the product of the previous two — the norm ratio between
      ``zeta`` and its exponent-sorted rearrangement;
    - ``"S"``: cross-ratio factors over the pairs ordered oppositely in
      the component's sink — the norm ratio to the sink;
    - ``"R"``: the same over the pairs ordered oppositely in the
      component's root — the norm ratio to the root.

    The ``"S"``/``"R"`` pairs are the ones a fall-free path actually
    exchanges.  Entry pairs that compare under the spectral order but
    sit in blocking positions (an intermediate entry adjacent to both)
    keep their arrangement all the way to the sink and contribute no
    factor.
    """
    entries = _entries(zeta)
    out = one()
    if which in ("E_1", "E_-1"):
        a = 1 if which == "E_1" else -1
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                if entries[i][0] < entries[j][0]:
                    out = out * _ratio_factor(entries[i], entries[j], a)
        return out
    if which == "E":
        keep = [
            (entries[i], entries[j])
            for i in range(len(entries))
            for j in range(i + 1, len(entries))
            if entries[i][0] < entries[j][0]
        ]
    elif which in ("S", "R"):
        vertex = vertex_from_spectral(zeta)
        graph = component(filling_of(vertex.tableau, vertex.v))
        anchor = graph.sink if which == "S" else graph.root
        keep = _crossed_pairs(entries, anchor.zeta.entries)
    else:
        raise ValueError(
            f"unknown inversion product {which!r}; "
            "expected one of 'E_1', 'E_-1', 'E', 'S', 'R'"
        )
    for ei, ej in keep:
        out = out * _ratio_factor(ei, ej, 1) * _ratio_factor(ei, ej, -1)
    return out


# ---------------------------------------------------------------------------
# norms of symmetric and antisymmetric polynomials


def _as_filling(filling) -> Filling:
    return filling if isinstance(filling, Filling) else Filling(filling)


def norm_symmetric(filling, kind: str = "sym") -> QSRat:
    """Squared norm of the (anti)symmetric polynomial of a component.

    Reduces to the squared norm of the component's root eigenfunction
    times the sink coefficient of the symmetrization recursion and a
    ratio of Poincare polynomials — the full symmetric group's over the
    row stabilizer's (column stabilizer's, via the conjugate filling,
    for ``kind="antisym"``).  The antisymmetric case carries an extra
    sign: the parity of the permutation sorting the conjugate filling's
    values, the same parity that relates the antisymmetric polynomial to
    the antisymmetrized root eigenfunction.  Raises
    :class:`IncompatibleTableau` when the filling does not support the
    requested symmetry.
    """
    filling = _as_filling(filling)
    sign = one()
    if kind == "sym":
        if not filling.is_column_strict():
            raise IncompatibleTableau(
                f"symmetric polynomial of {filling.to_rows()} is zero; "
                "its rows repeat inside a column"
            )
        phi = stabilizer(filling)[2]
    elif kind == "antisym":
        if not filling.is_row_strict():
            raise IncompatibleTableau(
                f"antisymmetric polynomial of {filling.to_rows()} is zero; "
                "its columns repeat inside a row"
            )
        sorting, _, phi = stabilizer(filling.conjugate())
        if perm_length(sorting) % 2:
            sign = -one()
    else:
        raise ValueError(f"unknown kind {kind!r}; expected 'sym' or 'antisym'")
    graph = component(filling)
    b_sink = sym_coeffs(filling, kind)[graph.sink.zeta]
    root_norm = norm_closed(graph.root.zeta)
    factored = NormFactorization(
        box=root_norm.box,
        triangle=root_norm.triangle,
        poincare_ratio=sign * poincare(filling.N) / phi,
        b_sink=b_sink,
    )
    return factored.product


# ---------------------------------------------------------------------------
# hook-length formulas for minimal polynomials


def _poch_q(first_q: int, m: int, count: int) -> QSRat:
    """``(q^first_q s^m; q)_count``: the product of ``1 - q^(first_q+k) s^m``
    over ``0 <= k < count``."""
    out = one()
    for k in range(count):
        out = out * (one() - monomial(first_q + k, m))
    return out


def _cells(shape: tuple):
    """The cells ``(x, y)`` of a shape, 1-based, columns inner."""
    for y, row in enumerate(shape, start=1):
        for x in range(1, row + 1):
            yield x, y


def _nabla_closed(shape: tuple) -> QSRat:
    """The normalized squared norm of the minimal symmetric polynomial,
    as one cancelled product of binomials ``1 - q^a s^b``.

    Multiplies ``(q s^(x-y); q)_(y-1)`` per cell with the cross-row
    correction ratios per row pair; signed multiplicities are collected
    first so the result costs a single exact division.
    """
    m = len(shape)
    factors: Counter = Counter()
    for x, y in _cells(shape):
        for k in range(y - 1):
            factors[(1 + k, x - y)] += 1
    for i in range(1, m + 1):
        rows_i = shape[m - i]
        for j in range(i + 1, m + 1):
            rows_j = shape[m - j]
            for k in range(j - i - 1):
                factors[(1 + k, i - j + rows_i)] += 1
                factors[(1 + k, i - j - rows_j)] += 1
                factors[(1 + k, i - j + rows_i - rows_j)] -= 1
                factors[(1 + k, i - j)] -= 1
            for a in range(1, rows_i + 1):
                factors[(j - i, i - j + a - rows_j - 1)] += 1
                factors[(j - i, i - j + a - 1)] -= 1
    num, den = one(), one()
    for (a, b), count in factors.items():
        for _ in range(abs(count)):
            if count > 0:
                num = num * (one() - monomial(a, b))
            else:
                den = den * (one() - monomial(a, b))
    return num / den


def hook_formulas(shape: Iterable[int]) -> Dict[str, object]:
    """Hook-length evaluations attached to a partition.

    Returns a dict with keys:

    - ``"H"``: the product of ``(q s^-hook; q)_leg`` over the cells
      below the top row;
    - ``"nabla"``: the normalized squared norm of the minimal symmetric
      polynomial, evaluated as a closed product over cells and row pairs
      — provably equal to the conjugated-sink-coefficient chain, and
      equal to ``"H"``;
    - ``"E_factors"``: cell-indexed factors whose product is the squared
      norm of the row-filled sink tableau;
    - ``"antisym_norm"``: the normalized squared norm of the minimal
      antisymmetric polynomial, as a hook product.
    """
    shape = check_partition(shape)
    cols = conjugate(shape)
    n = sum(shape)

    def arm(x: int, y: int) -> int:
        return shape[y - 1] - x

    def leg(x: int, y: int) -> int:
        return cols[x - 1] - y

    def hook(x: int, y: int) -> int:
        return arm(x, y) + leg(x, y) + 1

    h = one()
    for x, y in _cells(shape):
        if y < len(shape):
            h = h * _poch_q(1, -hook(x, y), leg(x, y))

    nabla = _nabla_closed(shape)

    one_minus_s = one() - _S
    ratio = one_minus_s / (one() - _S * _S)
    e_factors = {}
    for x, y in _cells(shape):
        lg, hk = leg(x, y), hook(x, y)
        power = one()
        for _ in range(min(x, lg)):
            power = power * ratio
        e_factors[(x, y)] = (
            power
            * one_minus_s
            * (one() - monomial(0, hk))
            / (one() - monomial(0, max(1, lg - x + 1)))
            / (one() - monomial(0, arm(x, y) + 1))
        )

    anti_sink = standardize(minimal_tableau(shape, "antisym"), "std1")
    anti = nu(anti_sink) * iota(poincare(n))
    for width in cols:
        anti = anti / iota(poincare(width))
    for x, y in _cells(shape):
        anti = anti * _poch_q(1, hook(x, y), arm(x, y))

    return {"H": h, "nabla": nabla, "E_factors": e_factors, "antisym_norm": anti}
