"""Exact arithmetic in the field Q(q, s) of rational functions in two parameters.

Everything downstream (Hecke-module coefficients, vector-valued polynomials,
norms) computes over this field, so the representation is chosen for exact,
canonical, hashable values:

* a *polynomial* is a dict mapping ``(deg_q, deg_s)`` to a nonzero Python int;
  exponents are non-negative (negative powers live in denominators);
* a :class:`QSRat` is a reduced fraction ``num/den`` of two such dicts with

  - ``gcd(num, den) == 1`` (integer content and polynomial gcd removed),
  - the lexicographically-leading coefficient of ``den`` positive
    (monomials ordered by ``(deg_q, deg_s)``, q before s, descending),

  so equality of values is literal equality of the stored dicts.

The polynomial gcd treats polynomials as recursively univariate -- elements
of Z[s][q] -- and runs a primitive pseudo-remainder sequence; no floating
point, no modular shortcuts.  Fractions print in a fixed grammar::

    expr := poly | "(" poly ")/(" poly ")"
    poly := term (("+"|"-") term)*
    term := int ["*q^" int] ["*s^" int]

with exponent 1 elided (``3*q*s^2``) and exponent 0 eliding the variable
(``7``).  ``parse_qsrat`` inverts ``str`` bit-exactly.

>>> (one() - monomial(0, 2)) / (one() - monomial(0, 1))
QSRat('1*s+1')
>>> str(monomial(1, -1))
'(1*q)/(1*s)'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable

from .errors import DivisionByZero

__all__ = [
    "QSRat",
    "arith",
    "monomial",
    "pochhammer",
    "poincare",
    "iota",
    "parse_qsrat",
    "one",
    "zero",
    "from_int",
]

# ---------------------------------------------------------------------------
# plain-dict polynomial layer: {(deg_q, deg_s): int}, no zero values
# ---------------------------------------------------------------------------

_PZERO: dict = {}
_PONE = {(0, 0): 1}


def _padd(a: dict, b: dict) -> dict:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        n = out.get(k, 0) + c
        if n:
            out[k] = n
        else:
            out.pop(k, None)
    return out


def _pneg(a: dict) -> dict:
    return {k: -c for k, c in a.items()}


def _psub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        n = out.get(k, 0) - c
        if n:
            out[k] = n
        else:
            out.pop(k, None)
    return out


def _pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) == 1:
        ((aq, as_), ac), = a.items()
        if (aq, as_) == (0, 0) and ac == 1:
            return dict(b)
        return {(aq + bq, as_ + bs): ac * bc for (bq, bs), bc in b.items()}
    if len(b) == 1:
        return _pmul(b, a)
    out: dict = {}
    for (aq, as_), ac in a.items():
        for (bq, bs), bc in b.items():
            k = (aq + bq, as_ + bs)
            n = out.get(k, 0) + ac * bc
            if n:
                out[k] = n
            else:
                out.pop(k, None)
    return out


def _pscale(a: dict, c: int) -> dict:
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {k: v * c for k, v in a.items()}


def _plead(a: dict) -> tuple:
    """Lex-leading key, q before s, descending degree."""
    return max(a)


def _plead_coeff(a: dict) -> int:
    return a[max(a)]


def _picontent(a: dict) -> int:
    """Positive integer content (gcd of coefficients); 0 for the zero poly."""
    g = 0
    for c in a.values():
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _pmonomial_content(a: dict) -> tuple:
    mq = ms = None
    for (dq, ds) in a:
        mq = dq if mq is None else min(mq, dq)
        ms = ds if ms is None else min(ms, ds)
    return (mq or 0, ms or 0)


def _pshift(a: dict, dq: int, ds: int) -> dict:
    """Multiply by q^dq * s^ds (dq, ds may be negative if exponents allow)."""
    if dq == 0 and ds == 0:
        return dict(a)
    return {(kq + dq, ks + ds): c for (kq, ks), c in a.items()}


def _pdivexact(a: dict, b: dict) -> dict:
    """Exact division a/b in Z[q,s]; raises ArithmeticError if not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    if len(b) == 1:
        ((bq, bs), bc), = b.items()
        out = {}
        for (aq, as_), ac in a.items():
            if aq < bq or as_ < bs or ac % bc:
                raise ArithmeticError("inexact polynomial division")
            out[(aq - bq, as_ - bs)] = ac // bc
        return out
    rem = dict(a)
    quot: dict = {}
    blead = max(b)
    blc = b[blead]
    while rem:
        rlead = max(rem)
        kq, ks = rlead[0] - blead[0], rlead[1] - blead[1]
        rc = rem[rlead]
        if kq < 0 or ks < 0 or rc % blc:
            raise ArithmeticError("inexact polynomial division")
        c = rc // blc
        quot[(kq, ks)] = c
        for (bq, bs), bc in b.items():
            k = (bq + kq, bs + ks)
            n = rem.get(k, 0) - c * bc
            if n:
                rem[k] = n
            else:
                rem.pop(k, None)
    return quot


# -- univariate layer (lists, index = degree, last element nonzero) ---------


def _utrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _uicontent(a: list) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _uprim(a: list) -> list:
    g = _uicontent(a)
    if g <= 1:
        return a
    return [c // g for c in a]


def _uprem(a: list, b: list) -> list:
    """Pseudo-remainder of int-coefficient univariate polynomials."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        sh = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[sh + i] -= lr * bc
        _utrim(r)
    return r


def _ugcd(a: list, b: list) -> list:
    """Gcd in Z[x] via primitive PRS, positive leading coefficient."""
    a, b = _utrim(list(a)), _utrim(list(b))
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = _uicontent(a), _uicontent(b)
        a, b = _uprim(a), _uprim(b)
        while b:
            r = _uprem(a, b)
            a, b = b, _uprim(_utrim(r))
        c = math.gcd(ca, cb)
        g = [x * c for x in a]
    if g and g[-1] < 0:
        g = [-x for x in g]
    return g


def _udivexact(a: list, b: list) -> list:
    if not a:
        return []
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for i in range(len(q) - 1, -1, -1):
        top = r[i + len(b) - 1]
        if top % lb:
            raise ArithmeticError("inexact univariate division")
        c = top // lb
        q[i] = c
        if c:
            for j, bc in enumerate(b):
                r[i + j] -= c * bc
    if any(r):
        raise ArithmeticError("inexact univariate division")
    return q


# -- bivariate gcd: polynomials in q with Z[s] coefficients ------------------


def _to_rec(a: dict) -> list:
    """dict poly -> list over deg_q of Z[s] coefficient lists."""
    dq = max(k[0] for k in a)
    out: list = [None] * (dq + 1)
    for i in range(dq + 1):
        out[i] = []
    for (kq, ks), c in a.items():
        row = out[kq]
        if len(row) <= ks:
            row.extend([0] * (ks + 1 - len(row)))
        row[ks] = c
    for row in out:
        _utrim(row)
    return out


def _from_rec(rec: list) -> dict:
    out = {}
    for kq, row in enumerate(rec):
        for ks, c in enumerate(row):
            if c:
                out[(kq, ks)] = c
    return out


def _smul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                if bc:
                    out[i + j] += ac * bc
    return _utrim(out)


def _ssub(a: list, b: list) -> list:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _utrim(out)


def _rec_trim(rec: list) -> list:
    while rec and not rec[-1]:
        rec.pop()
    return rec


def _rec_content(rec: list) -> list:
    g: list = []
    for row in rec:
        if row:
            g = _ugcd(g, row)
            if g == [1]:
                return g
    return g


def _rec_scale_div(rec: list, g: list) -> list:
    if g == [1]:
        return rec
    return [(_udivexact(row, g) if row else []) for row in rec]


def _rec_prem(a: list, b: list) -> list:
    """Pseudo-remainder in (Z[s])[q]."""
    r = [list(row) for row in a]
    db = len(b) - 1
    lb = b[-1]
    while _rec_trim(r) and len(r) - 1 >= db:
        lr = r[-1]
        sh = len(r) - 1 - db
        r = [_smul(lb, row) for row in r]
        for i, brow in enumerate(b):
            r[sh + i] = _ssub(r[sh + i], _smul(lr, brow))
        _rec_trim(r)
    return r


def _pgcd(a: dict, b: dict) -> dict:
    """Gcd in Z[q,s], sign-normalized so the lex-leading coefficient is > 0."""
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    elif a == b:
        g = dict(a)
    else:
        ia, ib = _picontent(a), _picontent(b)
        ic = math.gcd(ia, ib)
        mqa, msa = _pmonomial_content(a)
        mqb, msb = _pmonomial_content(b)
        mq, ms = min(mqa, mqb), min(msa, msb)
        if len(a) == 1 or len(b) == 1:
            g = {(mq, ms): ic}
        else:
            pa = {(kq - mqa, ks - msa): c // ia for (kq, ks), c in a.items()}
            pb = {(kq - mqb, ks - msb): c // ib for (kq, ks), c in b.items()}
            if max(k[0] for k in pa) == 0 and max(k[0] for k in pb) == 0:
                core = _ugcd([pa.get((0, i), 0) for i in range(max(k[1] for k in pa) + 1)],
                             [pb.get((0, i), 0) for i in range(max(k[1] for k in pb) + 1)])
                gd = {(0, i): c for i, c in enumerate(core) if c}
            else:
                ra, rb = _to_rec(pa), _to_rec(pb)
                ca, cb = _rec_content(ra), _rec_content(rb)
                ra, rb = _rec_scale_div(ra, ca), _rec_scale_div(rb, cb)
                if len(rb) > len(ra):
                    ra, rb = rb, ra
                while _rec_trim(rb):
                    r = _rec_prem(ra, rb)
                    _rec_trim(r)
                    if r:
                        rc = _rec_content(r)
                        r = _rec_scale_div(r, rc)
                    ra, rb = rb, r
                cont = _ugcd(ca, cb)
                if cont != [1]:
                    ra = [_smul(row, cont) for row in ra]
                gd = _from_rec(ra)
            g = _pshift(gd, mq, ms)
            ig = _picontent(g)
            if ig > 1:
                g = {k: c // ig for k, c in g.items()}
            g = _pscale(g, ic)
    if g and _plead_coeff(g) < 0:
        g = _pneg(g)
    return g


# ---------------------------------------------------------------------------
# QSRat
# ---------------------------------------------------------------------------


class QSRat:
    """Immutable reduced fraction of integer polynomials in q and s.

    Construct through the module helpers (:func:`monomial`, :func:`from_int`,
    :func:`parse_qsrat`) or arithmetic; the raw constructor normalizes.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: dict, den: dict, _reduced: bool = False):
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            den = _PONE.copy()
        elif not _reduced:
            g = _pgcd(num, den)
            if len(g) != 1 or g != _PONE:
                num = _pdivexact(num, g)
                den = _pdivexact(den, g)
        if _plead_coeff(den) < 0:
            num, den = _pneg(num), _pneg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):  # pragma: no cover - guard rail
        raise AttributeError("QSRat is immutable")

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _PONE and self.den == _PONE

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if isinstance(other, int):
            other = from_int(other)
        if not isinstance(other, QSRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((frozenset(self.num.items()), frozenset(self.den.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = from_int(other)
        elif not isinstance(other, QSRat):
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        d1, d2 = self.den, other.den
        if d1 == d2:
            return QSRat(_padd(self.num, other.num), d1)
        g = _pgcd(d1, d2)
        if g == _PONE:
            num = _padd(_pmul(self.num, d2), _pmul(other.num, d1))
            return QSRat(num, _pmul(d1, d2), _reduced=True)
        d1g = _pdivexact(d1, g)
        d2g = _pdivexact(d2, g)
        t = _padd(_pmul(self.num, d2g), _pmul(other.num, d1g))
        if not t:
            return _ZERO
        g2 = _pgcd(t, g)
        if g2 != _PONE:
            t = _pdivexact(t, g2)
            g = _pdivexact(g, g2)
        return QSRat(t, _pmul(_pmul(d1g, d2g), g), _reduced=True)

    __radd__ = __add__

    def __neg__(self):
        if not self.num:
            return self
        return QSRat(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = from_int(other)
        elif not isinstance(other, QSRat):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = from_int(other)
        elif not isinstance(other, QSRat):
            return NotImplemented
        if not self.num or not other.num:
            return _ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        g1 = _pgcd(self.num, other.den)
        g2 = _pgcd(other.num, self.den)
        n1 = self.num if g1 == _PONE else _pdivexact(self.num, g1)
        d2 = other.den if g1 == _PONE else _pdivexact(other.den, g1)
        n2 = other.num if g2 == _PONE else _pdivexact(other.num, g2)
        d1 = self.den if g2 == _PONE else _pdivexact(self.den, g2)
        return QSRat(_pmul(n1, n2), _pmul(d1, d2), _reduced=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = from_int(other)
        elif not isinstance(other, QSRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, int):
            other = from_int(other)
        return other * self.inverse()

    def inverse(self) -> "QSRat":
        if not self.num:
            raise DivisionByZero("inverse of zero")
        return QSRat(dict(self.den), dict(self.num), _reduced=True)

    def __pow__(self, n: int) -> "QSRat":
        if n < 0:
            return self.inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- evaluation / substitution -------------------------------------------

    def evaluate(self, qv: Fraction, sv: Fraction) -> Fraction:
        """Evaluate at rational q=qv, s=sv (denominator must not vanish)."""
        def ev(p: dict) -> Fraction:
            acc = Fraction(0)
            for (dq, ds), c in p.items():
                acc += c * qv**dq * sv**ds
            return acc

        return ev(self.num) / ev(self.den)

    # -- printing -------------------------------------------------------------

    def __str__(self) -> str:
        if self.den == _PONE:
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"

    def __repr__(self) -> str:
        return f"QSRat({str(self)!r})"


def _pstr(p: dict) -> str:
    if not p:
        return "0"
    bits = []
    for (dq, ds) in sorted(p, reverse=True):
        c = p[(dq, ds)]
        term = str(abs(c))
        if dq:
            term += "*q" if dq == 1 else f"*q^{dq}"
        if ds:
            term += "*s" if ds == 1 else f"*s^{ds}"
        if not bits:
            bits.append(("-" if c < 0 else "") + term)
        else:
            bits.append(("-" if c < 0 else "+") + term)
    return "".join(bits)


# ---------------------------------------------------------------------------
# constructors and named operations
# ---------------------------------------------------------------------------

_ZERO = QSRat({}, _PONE.copy(), _reduced=True)
_ONE = QSRat(_PONE.copy(), _PONE.copy(), _reduced=True)


def zero() -> QSRat:
    return _ZERO


def one() -> QSRat:
    return _ONE


def from_int(c: int) -> QSRat:
    if c == 0:
        return _ZERO
    if c == 1:
        return _ONE
    return QSRat({(0, 0): c}, _PONE.copy(), _reduced=True)


def monomial(n: int, m: int) -> QSRat:
    """The monomial q^n * s^m as a canonical fraction (n, m may be negative)."""
    num = {(max(n, 0), max(m, 0)): 1}
    den = {(max(-n, 0), max(-m, 0)): 1}
    return QSRat(num, den, _reduced=True)


def arith(a: QSRat, b: QSRat, op: str) -> QSRat:
    """Dispatch one exact field operation: op in {'add','sub','mul','div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("div by zero rational")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def pochhammer(a: QSRat, n: int) -> QSRat:
    """q-shifted factorial (a; q)_n = (1-a)(1-qa)...(1-q^(n-1)a); n >= 0."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = _ONE
    qk = _ONE
    q = monomial(1, 0)
    for _ in range(n):
        out = out * (_ONE - qk * a)
        qk = qk * q
    return out


def poincare(n: int) -> QSRat:
    """Poincare polynomial of the symmetric group: prod_{j=2}^n (1+s+...+s^(j-1))."""
    if n < 0:
        raise ValueError("poincare needs n >= 0")
    out = _PONE.copy()
    for j in range(2, n + 1):
        out = _pmul(out, {(0, i): 1 for i in range(j)})
    return QSRat(out, _PONE.copy(), _reduced=True)


def iota(f: QSRat) -> QSRat:
    """Parameter involution q -> 1/q, s -> 1/s, re-canonicalized."""
    if not f.num:
        return f

    def rev(p: dict) -> tuple[dict, int, int]:
        dq = max(k[0] for k in p)
        ds = max(k[1] for k in p)
        return {(dq - kq, ds - ks): c for (kq, ks), c in p.items()}, dq, ds

    rn, nq, ns = rev(f.num)
    rd, dq, ds = rev(f.den)
    return QSRat(rn, rd) * monomial(dq - nq, ds - ns)


# ---------------------------------------------------------------------------
# parsing (exact inverse of __str__)
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)(?P<coeff>\d+)"
    r"(?:\*q(?:\^(?P<qe>\d+))?)?"
    r"(?:\*s(?:\^(?P<se>\d+))?)?"
)


def _parse_poly(text: str) -> dict:
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    if text == "0":
        return {}
    out: dict = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax at {text[pos:]!r}")
        sign = m.group("sign")
        if not first and sign == "":
            raise ValueError(f"missing +/- separator at {text[pos:]!r}")
        c = int(m.group("coeff"))
        if sign == "-":
            c = -c
        dq = 0 if m.group("qe") is None and "*q" not in m.group(0) else (
            1 if m.group("qe") is None else int(m.group("qe")))
        ds = 0 if m.group("se") is None and "*s" not in m.group(0) else (
            1 if m.group("se") is None else int(m.group("se")))
        k = (dq, ds)
        n = out.get(k, 0) + c
        if n:
            out[k] = n
        else:
            out.pop(k, None)
        pos = m.end()
        first = False
    return out


def parse_qsrat(text: str) -> QSRat:
    """Parse the printing grammar back into a canonical value."""
    text = text.strip()
    m = re.fullmatch(r"\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)", text)
    if m:
        num = _parse_poly(m.group("num"))
        den = _parse_poly(m.group("den"))
        if not den:
            raise DivisionByZero("zero denominator in parsed fraction")
        return QSRat(num, den)
    return QSRat(_parse_poly(text), _PONE.copy())


def prod(factors: Iterable[QSRat]) -> QSRat:
    """Product of an iterable of values (empty product is 1)."""
    out = _ONE
    for f in factors:
        out = out * f
    return out
