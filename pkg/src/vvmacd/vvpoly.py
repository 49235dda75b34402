"""Vector-valued polynomials and their operator algebra.

A vector-valued polynomial is a finite sum ``sum c_{v,T} x^v T`` where
``v`` runs over exponent vectors of length ``N``, ``T`` over the standard
tableaux of a fixed shape, and the coefficients live in the exact field
of rational functions in ``q`` and ``s``.  All operators act on the
*right*; a product ``A B`` means "apply ``A`` first, then ``B``".

The operator algebra built here:

* ``BT(i)`` / ``BTinv(i)`` -- the polynomial-level generator and its
  inverse.  ``BT(i)`` is the divided difference ``(p - p^{s_i}) /
  (x_i - x_{i+1})`` followed by multiplication by ``x_{i+1}`` and the
  scalar ``1 - s``, plus the exponent swap ``s_i`` coupled with the
  module action of the generator on the tableau factor.
* ``W`` / ``Winv`` -- the affine rotation: ``x^v T . W = q^{v[1]}
  x^{(v[2],...,v[N],v[1])} (T S)`` with ``S`` the full shift product of
  module generators.
* ``Phi`` -- the degree-raising map ``BTinv(1) ... BTinv(N-1)`` followed
  by multiplication by ``x_N``; ``PhiPrime`` -- ``W`` followed by the
  same multiplication.
* ``Xi(i)`` -- the commuting family ``s^{i-N} BTinv(i-1) ... BTinv(1)
  W BT(N-1) ... BT(i)``, diagonalized by the polynomials this package
  constructs; a degree-0 tableau is an eigenvector with eigenvalue
  ``s^{CT[i]}``.
* ``FN`` -- ``1 - Xi(N)``, which always produces a polynomial divisible
  by ``x_N``; ``DN`` divides that image by ``x_N``, and ``D(i)`` extends
  it downward through ``D(i) = (1/s) BT(i) D(i+1) BT(i)``.  These lower
  degree by one and pairwise commute.
* ``SN`` / ``SprimeN`` / ``AN`` / ``AprimeN`` -- the symmetrizers: sums
  over all ``N!`` permutation words of generator (or inverse-generator)
  words, with coefficient ``(-s)^length`` for the antisymmetrizers.

Exponent supports interact with the dominance order: applying ``Xi(i)``
to ``x^v T`` only produces exponents ``v'`` with ``v'`` dominated by
``v``, which is what makes leading-term extraction well defined.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Sequence, Tuple

from .errors import (
    AmbiguousLeader,
    DivisibilityViolation,
    IndexOutOfRange,
    ShapeMismatch,
)
from .heckemod import TableauModule, VElement, element_Rv, module_for
from .qsfield import QSRat, from_int, monomial, one, parse_qsrat, zero
from .tableaux import RST, dominance, reduced_word

__all__ = [
    "AN",
    "AprimeN",
    "BT",
    "BTinv",
    "D",
    "DN",
    "FN",
    "MulX",
    "Operator",
    "Phi",
    "PhiPrime",
    "SN",
    "SprimeN",
    "VVPoly",
    "W",
    "Winv",
    "Xi",
    "adapted_coefficient",
    "adapted_monomial",
    "apply",
    "apply_Dunkl",
    "apply_FN",
    "apply_word",
    "from_json",
    "leading_monomial",
    "symmetrize",
    "to_json",
]


class Operator(NamedTuple):
    """A tagged operator; indexed tags carry their index in ``i``."""

    tag: str
    i: Optional[int] = None


def BT(i: int) -> Operator:
    """The polynomial-level generator acting on letters and tableau."""
    return Operator("BT", i)


def BTinv(i: int) -> Operator:
    """Inverse generator: ``(1/s)(BT(i) + (1 - s))``."""
    return Operator("BTinv", i)


def Xi(i: int) -> Operator:
    """The ``i``-th commuting (Cherednik-type) operator."""
    return Operator("Xi", i)


def D(i: int) -> Operator:
    """The ``i``-th Dunkl-type lowering operator."""
    return Operator("D", i)


def MulX(i: int) -> Operator:
    """Multiplication by the variable ``x_i``."""
    return Operator("MulX", i)


W = Operator("W")
Winv = Operator("Winv")
Phi = Operator("Phi")
PhiPrime = Operator("PhiPrime")
DN = Operator("DN")
FN = Operator("FN")
SN = Operator("SN")
AN = Operator("AN")
SprimeN = Operator("SprimeN")
AprimeN = Operator("AprimeN")


class VVPoly:
    """A polynomial with tableau-module coefficients.

    Terms are stored as a map ``(v, basis index) -> QSRat`` with zero
    coefficients pruned; all exponent vectors share the module's ``N``.
    Instances are immutable; arithmetic and operator application return
    new polynomials.
    """

    __slots__ = ("module", "terms")

    def __init__(self, module: TableauModule, terms: Mapping):
        n = module.N
        clean: Dict[Tuple[tuple, int], QSRat] = {}
        for (v, t), c in terms.items():
            v = tuple(int(e) for e in v)
            if len(v) != n:
                raise ShapeMismatch(
                    f"exponent vector {v} has length {len(v)}, expected {n}"
                )
            if any(e < 0 for e in v):
                raise ValueError(f"negative exponent in {v}")
            if isinstance(t, RST):
                t = module.index[t]
            if not isinstance(c, QSRat):
                c = from_int(c)
            key = (v, t)
            prev = clean.get(key)
            c = c if prev is None else prev + c
            if c.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = c
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("VVPoly instances are immutable")

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, module: TableauModule) -> "VVPoly":
        return cls(module, {})

    @classmethod
    def monomial(cls, module: TableauModule, v: Sequence[int], t, coeff=1) -> "VVPoly":
        """The single term ``coeff * x^v * t``."""
        return cls(module, {(tuple(v), t): coeff})

    @classmethod
    def from_velement(
        cls, x: VElement, v: Optional[Sequence[int]] = None
    ) -> "VVPoly":
        """Wrap a module element as a polynomial, at exponent ``v`` (default 0)."""
        v = (0,) * x.module.N if v is None else tuple(v)
        return cls(x.module, {(v, k): c for k, c in x.coeffs.items()})

    # -- inspection ----------------------------------------------------------

    @property
    def N(self) -> int:
        return self.module.N

    @property
    def shape(self) -> tuple:
        return self.module.shape

    def items(self):
        """Triples ``(v, tableau, coefficient)`` in (v, basis) order."""
        for v, k in sorted(self.terms):
            yield v, self.module.basis[k], self.terms[(v, k)]

    def coefficient(self, v: Sequence[int], t) -> QSRat:
        if isinstance(t, RST):
            t = self.module.index[t]
        return self.terms.get((tuple(v), t), zero())

    def component(self, v: Sequence[int]) -> VElement:
        """The module element multiplying ``x^v``."""
        v = tuple(v)
        return VElement(
            self.module,
            {k: c for (w, k), c in self.terms.items() if w == v},
        )

    def support(self) -> tuple:
        """Distinct exponent vectors, sorted."""
        return tuple(sorted({v for v, _ in self.terms}))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(v) for v, _ in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    # -- ring structure ------------------------------------------------------

    def _check(self, other: "VVPoly"):
        if self.module is not other.module:
            raise ShapeMismatch(
                f"polynomials over different modules: {self.module} vs {other.module}"
            )

    def __add__(self, other: "VVPoly") -> "VVPoly":
        self._check(other)
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc.get(key, zero()) + c
        return VVPoly(self.module, acc)

    def __neg__(self) -> "VVPoly":
        return VVPoly(self.module, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "VVPoly") -> "VVPoly":
        return self + (-other)

    def __mul__(self, scalar) -> "VVPoly":
        if isinstance(scalar, int):
            scalar = from_int(scalar)
        return VVPoly(
            self.module, {key: c * scalar for key, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, VVPoly)
            and self.module is other.module
            and self.terms == other.terms
        )

    def __repr__(self):
        if self.is_zero():
            return f"VVPoly(0; shape={self.shape})"
        parts = [
            f"({c}) * x^{list(v)} * {t.to_rows()}" for v, t, c in self.items()
        ]
        return "VVPoly(" + " + ".join(parts) + ")"

    # -- operator application (methods defer to module functions) -----------

    def apply(self, op: Operator) -> "VVPoly":
        return apply(self, op)

    def apply_word(self, ops: Iterable[Operator]) -> "VVPoly":
        return apply_word(self, ops)


# ---------------------------------------------------------------------------
# individual operator actions


def _add_term(acc: dict, key, c: QSRat):
    prev = acc.get(key)
    val = c if prev is None else prev + c
    if val.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = val


def _apply_BT(P: VVPoly, i: int, inverse: bool = False) -> VVPoly:
    module = P.module
    rows = module.generator_rows(i)  # validates 1 <= i <= N-1
    one_minus_s = one() - monomial(0, 1)
    acc: dict = {}
    for (v, k), c in P.terms.items():
        a, b = v[i - 1], v[i]
        if a != b:
            # divided difference, then multiply by x_{i+1}: monomials
            # x^{hi-1-j} x_{i+1}^{lo+j+1} for j = 0 .. hi-lo-1.
            lo, hi = (b, a) if a > b else (a, b)
            step = c * one_minus_s if a > b else -(c * one_minus_s)
            for j in range(hi - lo):
                w = v[: i - 1] + (hi - 1 - j, lo + j + 1) + v[i + 1 :]
                _add_term(acc, (w, k), step)
        vs = v[: i - 1] + (b, a) + v[i + 1 :]
        for k2, a2 in rows[k]:
            _add_term(acc, (vs, k2), c * a2)
    Q = VVPoly(module, acc)
    if inverse:
        Q = (Q + one_minus_s * P) * monomial(0, -1)
    return Q


def _apply_W(P: VVPoly, inverse: bool = False) -> VVPoly:
    module = P.module
    n = module.N
    acc: dict = {}
    for (v, k), c in P.terms.items():
        if inverse:
            nv = (v[-1],) + v[:-1]
            vec = {k: c * monomial(-v[-1], 0)}
            for j in range(n - 1, 0, -1):
                vec = module.apply_letter_indexed(vec, -j)
        else:
            nv = v[1:] + (v[0],)
            vec = module.apply_letter_indexed({k: c * monomial(v[0], 0)}, "S")
        for k2, c2 in vec.items():
            _add_term(acc, (nv, k2), c2)
    return VVPoly(module, acc)


def _apply_MulX(P: VVPoly, i: int) -> VVPoly:
    if not 1 <= i <= P.N:
        raise IndexOutOfRange(f"variable index {i} outside 1..{P.N}")
    return VVPoly(
        P.module,
        {
            (v[: i - 1] + (v[i - 1] + 1,) + v[i:], k): c
            for (v, k), c in P.terms.items()
        },
    )


def _apply_Phi(P: VVPoly) -> VVPoly:
    for j in range(1, P.N):
        P = _apply_BT(P, j, inverse=True)
    return _apply_MulX(P, P.N)


def _apply_Xi(P: VVPoly, i: int) -> VVPoly:
    n = P.N
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"operator index {i} outside 1..{n}")
    for j in range(i - 1, 0, -1):
        P = _apply_BT(P, j, inverse=True)
    P = _apply_W(P)
    for j in range(n - 1, i - 1, -1):
        P = _apply_BT(P, j)
    return P * monomial(0, i - n)


def _apply_FN(P: VVPoly) -> VVPoly:
    return P - _apply_Xi(P, P.N)


def apply_FN(P: VVPoly) -> VVPoly:
    """Apply ``1 - Xi(N)`` and divide the image by ``x_N``.

    The image is always divisible; a surviving term with last exponent
    zero would mean the operator algebra itself is broken, and raises
    ``DivisibilityViolation``.
    """
    image = _apply_FN(P)
    acc: dict = {}
    for (v, k), c in image.terms.items():
        if v[-1] == 0:
            raise DivisibilityViolation(
                f"term x^{list(v)} in the image of 1 - Xi(N) is not "
                f"divisible by x_{P.N}"
            )
        acc[(v[:-1] + (v[-1] - 1,), k)] = c
    return VVPoly(P.module, acc)


def apply_Dunkl(P: VVPoly, i: int) -> VVPoly:
    """The ``i``-th lowering operator, by downward recursion from ``N``."""
    n = P.N
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"operator index {i} outside 1..{n}")
    if i == n:
        return apply_FN(P)
    Q = _apply_BT(P, i)
    Q = apply_Dunkl(Q, i + 1)
    Q = _apply_BT(Q, i)
    return Q * monomial(0, -1)


_PERM_WORDS_CACHE: Dict[int, tuple] = {}


def _perm_words(n: int) -> tuple:
    """All ``n!`` bubble-sort reduced words, with their lengths."""
    if n not in _PERM_WORDS_CACHE:
        words = [
            reduced_word(sigma) for sigma in permutations(range(1, n + 1))
        ]
        _PERM_WORDS_CACHE[n] = tuple((w, len(w)) for w in words)
    return _PERM_WORDS_CACHE[n]


def symmetrize(P: VVPoly, kind: str) -> VVPoly:
    """Sum ``P`` over all permutation words.

    ``S`` sums generator words; ``Sprime`` inverse-generator words;
    ``A`` and ``Aprime`` weight by ``(-s)^length`` and use inverse
    (resp. plain) generator words.
    """
    if kind not in ("S", "A", "Sprime", "Aprime"):
        raise ValueError(f"unknown symmetrizer kind {kind!r}")
    inverse = kind in ("Sprime", "A")
    signed = kind in ("A", "Aprime")
    module = P.module
    acc: dict = {}
    for word, length in _perm_words(module.N):
        Q = P
        for letter in word:
            Q = _apply_BT(Q, letter, inverse=inverse)
        if signed:
            Q = Q * (from_int((-1) ** length) * monomial(0, length))
        for key, c in Q.terms.items():
            _add_term(acc, key, c)
    return VVPoly(module, acc)


_DISPATCH = {
    "BT": lambda P, i: _apply_BT(P, i),
    "BTinv": lambda P, i: _apply_BT(P, i, inverse=True),
    "W": lambda P, i: _apply_W(P),
    "Winv": lambda P, i: _apply_W(P, inverse=True),
    "Phi": lambda P, i: _apply_Phi(P),
    "PhiPrime": lambda P, i: _apply_MulX(_apply_W(P), P.N),
    "Xi": _apply_Xi,
    "DN": lambda P, i: apply_FN(P),
    "D": apply_Dunkl,
    "FN": lambda P, i: _apply_FN(P),
    "MulX": _apply_MulX,
    "SN": lambda P, i: symmetrize(P, "S"),
    "AN": lambda P, i: symmetrize(P, "A"),
    "SprimeN": lambda P, i: symmetrize(P, "Sprime"),
    "AprimeN": lambda P, i: symmetrize(P, "Aprime"),
}


def apply(P: VVPoly, op: Operator) -> VVPoly:
    """Apply one tagged operator on the right."""
    try:
        action = _DISPATCH[op.tag]
    except (KeyError, AttributeError):
        raise ValueError(f"unknown operator {op!r}") from None
    if op.tag in ("BT", "BTinv", "Xi", "D", "MulX"):
        if not isinstance(op.i, int):
            raise IndexOutOfRange(f"operator {op.tag} needs an integer index")
    return action(P, op.i)


def apply_word(P: VVPoly, ops: Iterable[Operator]) -> VVPoly:
    """Apply a sequence of operators left to right."""
    for op in ops:
        P = apply(P, op)
    return P


# ---------------------------------------------------------------------------
# leading terms


def leading_monomial(P: VVPoly) -> Tuple[tuple, VElement]:
    """The dominance-maximal exponent and its module coefficient.

    Raises ``AmbiguousLeader`` when the support has more than one
    maximal exponent, and ``ValueError`` on the zero polynomial.
    """
    if P.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    supp = P.support()
    maximal = [
        v
        for v in supp
        if not any(dominance(v, u) == "lt" for u in supp if u != v)
    ]
    if len(maximal) != 1:
        raise AmbiguousLeader(
            f"support has {len(maximal)} maximal exponents: {maximal}"
        )
    v = maximal[0]
    return v, P.component(v)


def adapted_monomial(module: TableauModule, v: Sequence[int], t, coeff=1) -> VVPoly:
    """The monomial ``x^{v,T}``: ``x^v`` times ``T`` steered by the
    sorting word of ``v`` (the inverse-generator word of its rank
    permutation)."""
    e = VElement.basis_vector(module, t).act_word(element_Rv(v)) * coeff
    return VVPoly.from_velement(e, v)


def adapted_coefficient(P: VVPoly, v: Sequence[int], t) -> QSRat:
    """The coefficient of ``x^{v,T}`` in ``P``.

    For a fixed exponent ``v`` the vectors ``x^{v,T}`` over all tableaux
    form a basis of the exponent-``v`` slice; the coefficient is read
    off by undoing the sorting word on that slice.
    """
    word = tuple(-letter for letter in reversed(element_Rv(v)))
    return P.component(v).act_word(word).coefficient(t)


# ---------------------------------------------------------------------------
# serialization


def to_json(P: VVPoly) -> dict:
    """Plain-data form: shape, ``N``, and the sorted term list."""
    return {
        "N": P.N,
        "shape": list(P.shape),
        "terms": [
            {"v": list(v), "tableau": t.to_rows(), "coeff": str(c)}
            for v, t, c in P.items()
        ],
    }


def from_json(obj: Mapping) -> VVPoly:
    """Inverse of :func:`to_json`; validates the announced ``N``."""
    module = module_for(obj["shape"])
    if "N" in obj and obj["N"] != module.N:
        raise ShapeMismatch(
            f"announced N={obj['N']} but shape {obj['shape']} has {module.N} cells"
        )
    return VVPoly(
        module,
        {
            (tuple(term["v"]), RST(term["tableau"])): parse_qsrat(term["coeff"])
            for term in obj["terms"]
        },
    )
