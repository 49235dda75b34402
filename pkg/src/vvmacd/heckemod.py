"""Hecke-algebra modules carried by reverse standard tableaux.

For a fixed partition shape the span of its RSTs carries an irreducible
module of the Hecke algebra with quadratic relation
``(T_i + 1)(T_i - s) = 0``.  The generator action on a basis tableau is
determined by how the entries ``i`` and ``i+1`` sit in the tableau: in the
same row ``T_i`` multiplies by ``s``, in the same column by ``-1``, and
otherwise it mixes the tableau with the one obtained by exchanging the two
entries, with coefficients rational in ``s^m`` where ``m`` is the content
difference of the two cells.

Everything acts on the right and words compose left to right:
``x.act_word((1, "S", -2))`` applies ``T_1``, then ``S = T_1 ... T_{N-1}``,
then ``T_2^{-1}``.  Words are kept unreduced; equality of algebra elements
is always tested through their action on the full basis.

The module also builds the distinguished words attached to compositions —
``element_Tu`` (the raising word), ``element_Rv`` (inverse word of the rank
permutation) and the creation words — plus the diagonal eigenvalues
``phi_eigenvalue`` and the tableau weight :func:`nu` used by the bilinear
form, where the starred side conjugates coefficients by ``iota``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .errors import IndexOutOfRange, ShapeMismatch
from .qsfield import QSRat, from_int, iota, monomial, one, zero
from .tableaux import RST, check_partition, enumerate_rst, rank, reduced_word

__all__ = [
    "Letter",
    "TableauModule",
    "VElement",
    "act_generator",
    "act_word",
    "creation",
    "element_Rv",
    "element_Ttilde",
    "element_Ttilde_inv",
    "element_Tu",
    "module_for",
    "nu",
    "phi_eigenvalue",
    "phi_tilde_word",
    "s_inverse_word",
    "tableau_form",
]

#: A word letter: ``+i`` is T_i, ``-i`` is T_i^{-1}, ``"S"`` is T_1...T_{N-1}.
Letter = Union[int, str]

_MINUS_ONE = from_int(-1)


def _gen_coeffs(m: int) -> Tuple[QSRat, QSRat]:
    """Coefficients (on the tableau itself, on the entry-swapped tableau)
    of the T_i action when the content difference ``m`` of the cells of
    ``i+1`` and ``i`` satisfies ``|m| >= 2``."""
    sm = monomial(0, m)
    s = monomial(0, 1)
    if m <= -2:
        # the swapped tableau appears with coefficient 1
        return -(one() - s) / (one() - sm), one()
    diag = (s - one()) / (one() - sm)
    off = (
        s
        * (one() - monomial(0, m + 1))
        * (one() - monomial(0, m - 1))
        / ((one() - sm) * (one() - sm))
    )
    return diag, off


class TableauModule:
    """Basis registry and precompiled generator action for one shape.

    Rows are tuples ``((index, coeff), ...)`` giving the action of a
    generator on a basis tableau; they are computed once per shape and
    reused by every polynomial-level operator.
    """

    __slots__ = ("shape", "N", "basis", "index", "_rows")

    def __init__(self, shape: Iterable[int]):
        shape = check_partition(shape)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "N", sum(shape))
        object.__setattr__(self, "basis", enumerate_rst(shape))
        object.__setattr__(
            self, "index", {t: k for k, t in enumerate(self.basis)}
        )
        object.__setattr__(self, "_rows", {})

    def __setattr__(self, name, value):
        raise AttributeError("TableauModule instances are immutable")

    def __repr__(self):
        return f"TableauModule(shape={self.shape}, dim={len(self.basis)})"

    def generator_rows(self, i: int, inverse: bool = False) -> tuple:
        """Action rows of ``T_i`` (or its inverse) on the whole basis."""
        if not 1 <= i <= self.N - 1:
            raise IndexOutOfRange(
                f"generator index {i} outside 1..{self.N - 1}"
            )
        key = (i, inverse)
        if key not in self._rows:
            if inverse:
                fwd = self.generator_rows(i)
                sinv = monomial(0, -1)
                shift = one() - monomial(0, 1)
                rows = []
                for k, row in enumerate(fwd):
                    acc = {j: c for j, c in row}
                    acc[k] = acc.get(k, zero()) + shift
                    rows.append(
                        tuple(
                            (j, c * sinv)
                            for j, c in sorted(acc.items())
                            if not c.is_zero()
                        )
                    )
            else:
                rows = [self._forward_row(k, i) for k in range(len(self.basis))]
            self._rows[key] = tuple(rows)
        return self._rows[key]

    def _forward_row(self, k: int, i: int) -> tuple:
        t = self.basis[k]
        x1, y1 = t.cell_of(i)
        x2, y2 = t.cell_of(i + 1)
        if y1 == y2:
            return ((k, monomial(0, 1)),)
        if x1 == x2:
            return ((k, _MINUS_ONE),)
        m = (x2 - y2) - (x1 - y1)
        other = self.index[t.swapped(i)]
        diag, off = _gen_coeffs(m)
        return tuple(sorted(((k, diag), (other, off))))

    def apply_letter_indexed(
        self, vec: Mapping[int, QSRat], letter: Letter
    ) -> Dict[int, QSRat]:
        """Apply one word letter to an index-keyed coefficient vector."""
        if letter == "S":
            out = dict(vec)
            for i in range(1, self.N):
                out = self._apply_rows(out, self.generator_rows(i))
            return out
        if isinstance(letter, int) and letter != 0:
            return self._apply_rows(
                vec, self.generator_rows(abs(letter), inverse=letter < 0)
            )
        raise IndexOutOfRange(f"unknown word letter {letter!r}")

    @staticmethod
    def _apply_rows(vec: Mapping[int, QSRat], rows: tuple) -> Dict[int, QSRat]:
        out: Dict[int, QSRat] = {}
        for k, c in vec.items():
            for j, a in rows[k]:
                prev = out.get(j)
                val = c * a if prev is None else prev + c * a
                if val.is_zero():
                    out.pop(j, None)
                else:
                    out[j] = val
        return out


@lru_cache(maxsize=None)
def _module_cached(shape: tuple) -> TableauModule:
    return TableauModule(shape)


def module_for(shape: Iterable[int]) -> TableauModule:
    """The shared module registry for a shape (one instance per shape;
    the shape is normalized first, so ``(2, 1, 0)`` and ``(2, 1)`` share)."""
    return _module_cached(check_partition(shape))


class VElement:
    """An element of the tableau module: a finite sum ``sum c_t * t``.

    Coefficients are stored keyed by basis index; zero coefficients are
    pruned.  Instances are immutable; arithmetic returns new elements.
    """

    __slots__ = ("module", "coeffs")

    def __init__(self, module: TableauModule, coeffs: Mapping):
        clean: Dict[int, QSRat] = {}
        for key, c in coeffs.items():
            if isinstance(key, RST):
                key = module.index[key]
            if not isinstance(c, QSRat):
                c = from_int(c)
            if not c.is_zero():
                clean[key] = c
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("VElement instances are immutable")

    @classmethod
    def basis_vector(cls, module: TableauModule, t) -> "VElement":
        """The basis element for a tableau (or basis index)."""
        if isinstance(t, RST):
            t = module.index[t]
        return cls(module, {t: one()})

    def items(self):
        """Pairs ``(tableau, coefficient)`` in basis order."""
        for k in sorted(self.coeffs):
            yield self.module.basis[k], self.coeffs[k]

    def coefficient(self, t) -> QSRat:
        if isinstance(t, RST):
            t = self.module.index[t]
        return self.coeffs.get(t, zero())

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "VElement"):
        if self.module is not other.module:
            raise ShapeMismatch(
                f"elements of different modules: {self.module} vs {other.module}"
            )

    def __add__(self, other: "VElement") -> "VElement":
        self._check(other)
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, zero()) + c
        return VElement(self.module, acc)

    def __neg__(self) -> "VElement":
        return VElement(
            self.module, {k: -c for k, c in self.coeffs.items()}
        )

    def __sub__(self, other: "VElement") -> "VElement":
        return self + (-other)

    def __mul__(self, scalar) -> "VElement":
        if isinstance(scalar, int):
            scalar = from_int(scalar)
        return VElement(
            self.module, {k: c * scalar for k, c in self.coeffs.items()}
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, VElement)
            and self.module is other.module
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if self.is_zero():
            return "VElement(0)"
        parts = [
            f"({c}) * {t.to_rows()}" for t, c in self.items()
        ]
        return "VElement(" + " + ".join(parts) + ")"

    def act_letter(self, letter: Letter) -> "VElement":
        return VElement(
            self.module, self.module.apply_letter_indexed(self.coeffs, letter)
        )

    def act_word(self, word: Sequence[Letter]) -> "VElement":
        vec = dict(self.coeffs)
        for letter in word:
            vec = self.module.apply_letter_indexed(vec, letter)
        return VElement(self.module, vec)

    def as_scalar_multiple_of(self, t) -> QSRat:
        """The scalar ``c`` with ``self == c * t`` for a basis tableau,
        or ``None`` when the element is not a multiple of ``t``."""
        if isinstance(t, RST):
            t = self.module.index[t]
        if not self.coeffs:
            return zero()
        if set(self.coeffs) != {t}:
            return None
        return self.coeffs[t]


# ---------------------------------------------------------------------------
# spec'd operations on elements


def act_generator(x: VElement, i: int, inverse: bool = False) -> VElement:
    """Right action of ``T_i`` (or ``T_i^{-1}``) on an element."""
    if not isinstance(i, int) or i < 1:
        raise IndexOutOfRange(f"generator index {i!r} outside 1..{x.module.N - 1}")
    return x.act_letter(-i if inverse else i)


def act_word(x: VElement, word: Sequence[Letter]) -> VElement:
    """Left-to-right action of a word on an element."""
    return x.act_word(word)


def phi_eigenvalue(t: RST, i: int) -> QSRat:
    """Eigenvalue ``s^{CT[i]}`` of the diagonal element ``phi_i`` on ``t``."""
    if not 1 <= i <= t.N:
        raise IndexOutOfRange(f"phi index {i} outside 1..{t.N}")
    return monomial(0, t.contents[i - 1])


# ---------------------------------------------------------------------------
# distinguished words


def element_Ttilde(sigma: Sequence[int]) -> tuple:
    """Word of plain generators for a permutation given as the listing of
    its point images ``sigma[j] = j.sigma`` (any reduced word gives the
    same algebra element; letters apply left to right, so the first
    letter acts on the point first)."""
    return tuple(reversed(reduced_word(sigma)))


def element_Ttilde_inv(sigma: Sequence[int]) -> tuple:
    """Word for the inverse algebra element of :func:`element_Ttilde`."""
    return tuple(-i for i in reduced_word(sigma))


def element_Rv(v: Sequence[int]) -> tuple:
    """Inverse word of the rank permutation of ``v``."""
    return element_Ttilde_inv(rank(v))


def element_Tu(u: Sequence[int]) -> tuple:
    """The raising word attached to a composition.

    Built by peeling: a positive last entry is produced by ``S`` from the
    right-rotated, decremented composition; otherwise the last nonzero
    entry is pushed one slot right by the corresponding generator.
    """
    u = [int(e) for e in u]
    if any(e < 0 for e in u):
        raise ValueError(f"composition entries must be non-negative: {u}")
    word = []
    while any(u):
        if u[-1] > 0:
            word.append("S")
            u = [u[-1] - 1] + u[:-1]
        else:
            i = max(k + 1 for k, e in enumerate(u) if e)
            word.append(i)
            u[i - 1], u[i] = u[i], u[i - 1]
    word.reverse()
    return tuple(word)


def creation(i: int, n: int) -> tuple:
    """The creation word ``(S T_{N-1} ... T_i)^i``: acting on the word of a
    partition it adds 1 to each of the first ``i`` entries."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"creation index {i} outside 1..{n}")
    block = ("S",) + tuple(range(n - 1, i - 1, -1))
    return block * i


def phi_tilde_word(i: int, n: int) -> tuple:
    """Word for ``s^{N-i} phi_i = T_i ... T_{N-1} T_{N-1} ... T_i``."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"phi index {i} outside 1..{n}")
    return tuple(range(i, n)) + tuple(range(n - 1, i - 1, -1))


def s_inverse_word(n: int) -> tuple:
    """Word for ``S^{-1} = T_{N-1}^{-1} ... T_1^{-1}``."""
    return tuple(-j for j in range(n - 1, 0, -1))


# ---------------------------------------------------------------------------
# the tableau weight and bilinear form seed


def nu(t: RST) -> QSRat:
    """Product over pairs ``i < j`` whose contents differ by at least 2
    (``CT[j] - CT[i] = d >= 2``) of ``(1-s^{d-1})(1-s^{d+1})/(1-s^d)^2``;
    the squared norm of the basis tableau in the module's bilinear form."""
    ct = t.contents
    out = one()
    for a in range(t.N):
        for b in range(a + 1, t.N):
            d = ct[b] - ct[a]
            if d >= 2:
                out = out * (
                    (one() - monomial(0, d - 1))
                    * (one() - monomial(0, d + 1))
                    / ((one() - monomial(0, d)) * (one() - monomial(0, d)))
                )
    return out


def tableau_form(x: VElement, y: VElement) -> QSRat:
    """Bilinear form on the module: tableaux are orthogonal with squared
    norm ``nu``; the left argument's coefficients are conjugated by
    ``iota`` (the starred side)."""
    if x.module is not y.module:
        raise ShapeMismatch("form arguments from different modules")
    out = zero()
    for k, c in x.coeffs.items():
        d = y.coeffs.get(k)
        if d is not None:
            out = out + iota(c) * d * nu(x.module.basis[k])
    return out
