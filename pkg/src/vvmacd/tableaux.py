"""Partitions, compositions and tableaux.

Every Hecke-module basis in this package is indexed by *reverse standard
tableaux* (RSTs): fillings of a partition shape by the entries ``1..N``,
each used once, strictly decreasing along every row (left to right) and
up every column.  Rows are numbered from the bottom (row 1 is the
longest), so the largest entry sits in the bottom-left corner and the
*content* of the cell in column ``x``, row ``y`` is ``x - y``.

Weak tableaux (:class:`Filling`) carry non-negative integers weakly
increasing along rows and up columns; they index the connected components
of the Yang-Baxter graph once its affine edges are removed.
:func:`standardize` turns a weak tableau into an RST by one of two
reading orders and :func:`filling_of` is the inverse construction.

Compositions (exponent vectors ``v``) come with their rank permutation,
inversion set, sorted rearrangements and the dominance preorder used for
leading-term analysis.  Permutations are 1-based one-line tuples; the
rank permutation ``r_v`` satisfies ``v_plus[r_v[i]] == v[i]``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import CellOutOfShape, InvalidFilling

__all__ = [
    "Filling",
    "RST",
    "apply_perm",
    "cells",
    "check_partition",
    "conjugate",
    "contents",
    "dominance",
    "enumerate_rst",
    "filling_of",
    "hook_stats",
    "inversions",
    "partitions",
    "perm_compose",
    "perm_inverse",
    "perm_length",
    "rank",
    "reduced_word",
    "rst_from_contents",
    "sort_parts",
    "standardize",
    "swap_adjacent",
]


# ---------------------------------------------------------------------------
# partitions


def check_partition(parts: Iterable[int]) -> tuple:
    """Normalize ``parts`` to a tuple, dropping trailing zeros.

    Raises :class:`InvalidFilling` unless the parts are weakly decreasing
    non-negative integers.
    """
    shape = tuple(int(p) for p in parts)
    if any(p < 0 for p in shape):
        raise InvalidFilling(f"negative part in {shape}")
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        raise InvalidFilling(f"parts not weakly decreasing: {shape}")
    while shape and shape[-1] == 0:
        shape = shape[:-1]
    return shape


def conjugate(shape: Iterable[int]) -> tuple:
    """Transpose of the Ferrers diagram: ``conjugate(l)[x] = #{y : l[y] >= x}``."""
    shape = check_partition(shape)
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p >= x) for x in range(1, shape[0] + 1))


def cells(shape: Iterable[int]) -> Iterator[tuple]:
    """Yield the cells ``(x, y)`` of the diagram, row by row from the bottom."""
    shape = check_partition(shape)
    for y, row_len in enumerate(shape, start=1):
        for x in range(1, row_len + 1):
            yield (x, y)


def hook_stats(shape: Iterable[int], x: int, y: int) -> tuple:
    """Return ``(arm, leg, hook)`` of the cell in column ``x``, row ``y``.

    ``arm`` counts cells to the right in the same row, ``leg`` cells above
    in the same column, and ``hook = arm + leg + 1``.
    """
    shape = check_partition(shape)
    if not (1 <= y <= len(shape) and 1 <= x <= shape[y - 1]):
        raise CellOutOfShape(f"cell (x={x}, y={y}) outside shape {shape}")
    arm = shape[y - 1] - x
    leg = conjugate(shape)[x - 1] - y
    return (arm, leg, arm + leg + 1)


def partitions(n: int, max_part: int = None) -> list:
    """All partitions of ``n`` as tuples, in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(max_part, 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


# ---------------------------------------------------------------------------
# compositions


def sort_parts(v: Iterable[int], direction: str = "dec") -> tuple:
    """Sorted rearrangement of ``v``: decreasing (``v+``) or increasing (``vR``)."""
    if direction == "dec":
        return tuple(sorted(v, reverse=True))
    if direction == "inc":
        return tuple(sorted(v))
    raise ValueError(f"direction must be 'dec' or 'inc', got {direction!r}")


def rank(v: Sequence[int]) -> tuple:
    """Rank permutation ``r_v`` (1-based one-line form).

    ``r_v[i] = #{j <= i : v[j] >= v[i]} + #{j > i : v[j] > v[i]}``, so that
    sorting ``v`` decreasingly sends position ``i`` to position ``r_v[i]``.
    """
    n = len(v)
    return tuple(
        sum(1 for j in range(i + 1) if v[j] >= v[i])
        + sum(1 for j in range(i + 1, n) if v[j] > v[i])
        for i in range(n)
    )


def inversions(v: Sequence[int]) -> frozenset:
    """Set of pairs ``(i, j)`` with ``i < j`` (1-based) and ``v[i] < v[j]``."""
    n = len(v)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if v[i] < v[j]
    )


def _prefix_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    total = 0
    for a, b in zip(u, v):
        total += a - b
        if total > 0:
            return False
    return True


def dominance(u: Sequence[int], v: Sequence[int]) -> str:
    """Compare compositions in the dominance preorder.

    Returns ``"lt"``, ``"eq"``, ``"gt"`` or ``"incomparable"``.  ``u`` comes
    strictly before ``v`` when the decreasing rearrangements are strictly
    ordered by partition dominance, or coincide and ``u`` has weakly smaller
    prefix sums than ``v``.  Compositions of different length or total are
    never comparable.
    """
    u, v = tuple(u), tuple(v)
    if u == v:
        return "eq"
    if len(u) != len(v) or sum(u) != sum(v):
        return "incomparable"
    up, vp = sort_parts(u), sort_parts(v)
    if up == vp:
        # same parts: compare the vectors themselves by prefix sums
        up, vp = u, v
    if _prefix_leq(up, vp):
        return "lt"
    if _prefix_leq(vp, up):
        return "gt"
    return "incomparable"


# ---------------------------------------------------------------------------
# permutations (1-based one-line tuples)


def perm_length(sigma: Sequence[int]) -> int:
    """Number of inversions of the permutation (its Coxeter length)."""
    n = len(sigma)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
    )


def reduced_word(sigma: Sequence[int]) -> tuple:
    """A reduced word for ``sigma``, found by repeatedly removing the
    leftmost descent; the letters are the 1-based adjacent transpositions
    whose left-to-right product is ``sigma``.
    """
    w = list(sigma)
    letters = []
    i = 0
    while i < len(w) - 1:
        if w[i] > w[i + 1]:
            letters.append(i + 1)
            w[i], w[i + 1] = w[i + 1], w[i]
            i = max(i - 1, 0)
        else:
            i += 1
    letters.reverse()
    return tuple(letters)


def perm_inverse(sigma: Sequence[int]) -> tuple:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    return tuple(inv)


def perm_compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple:
    """Composition ``(sigma . tau)[i] = sigma[tau[i]]`` (apply ``tau`` first
    as a position map: acting on a sequence by ``tau`` then ``sigma`` equals
    acting once by ``perm_compose(sigma, tau)``)."""
    return tuple(sigma[t - 1] for t in tau)


def apply_perm(values: Sequence, sigma: Sequence[int]) -> tuple:
    """Rearranged sequence with ``result[i] = values[sigma[i]]`` (1-based)."""
    return tuple(values[s - 1] for s in sigma)


def swap_adjacent(values: Sequence, i: int) -> tuple:
    """Exchange entries ``i`` and ``i+1`` (1-based) of a sequence."""
    if not 1 <= i < len(values):
        raise IndexError(f"cannot swap positions {i},{i + 1} of {len(values)}")
    out = list(values)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# tableaux


def _normalize_rows(rows) -> tuple:
    try:
        out = tuple(tuple(int(e) for e in row) for row in rows)
    except (TypeError, ValueError) as exc:
        raise InvalidFilling(f"rows are not sequences of integers: {rows!r}") from exc
    if not out or not all(out):
        raise InvalidFilling("empty shape")
    return out


class RST:
    """A reverse standard tableau, stored as rows from the bottom up.

    Entries are ``1..N``, each used once, strictly decreasing along rows
    (left to right) and up columns, which forces ``N`` into the bottom-left
    corner.  Instances are immutable and hashable.
    """

    __slots__ = ("rows", "_cells", "_contents", "_hash")

    def __init__(self, rows):
        rows = _normalize_rows(rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise InvalidFilling(f"row lengths {shape} are not a partition")
        n = sum(shape)
        seen = sorted(e for row in rows for e in row)
        if seen != list(range(1, n + 1)):
            raise InvalidFilling(f"entries are not a permutation of 1..{n}")
        for row in rows:
            if any(row[i] <= row[i + 1] for i in range(len(row) - 1)):
                raise InvalidFilling(f"row {row} not strictly decreasing")
        for y in range(len(rows) - 1):
            upper = rows[y + 1]
            if any(rows[y][x] <= upper[x] for x in range(len(upper))):
                raise InvalidFilling(
                    f"column entries not strictly decreasing upward in {rows}"
                )
        cell_map = {}
        for y, row in enumerate(rows, start=1):
            for x, e in enumerate(row, start=1):
                cell_map[e] = (x, y)
        object.__setattr__(self, "_cells", cell_map)
        object.__setattr__(
            self, "_contents", tuple(cell_map[i][0] - cell_map[i][1] for i in range(1, n + 1))
        )
        object.__setattr__(self, "_hash", hash(rows))

    def __setattr__(self, name, value):
        raise AttributeError("RST instances are immutable")

    @property
    def N(self) -> int:
        return len(self._cells)

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def cell_of(self, entry: int) -> tuple:
        """Cell ``(x, y)`` holding ``entry`` (column then row, 1-based)."""
        try:
            return self._cells[entry]
        except KeyError:
            raise IndexError(f"no entry {entry} in a tableau of size {self.N}")

    def content(self, entry: int) -> int:
        x, y = self.cell_of(entry)
        return x - y

    @property
    def contents(self) -> tuple:
        """Content vector ``CT`` with ``CT[i-1]`` the content of entry ``i``."""
        return self._contents

    def entry(self, x: int, y: int) -> int:
        if not (1 <= y <= len(self.rows) and 1 <= x <= len(self.rows[y - 1])):
            raise CellOutOfShape(f"cell (x={x}, y={y}) outside shape {self.shape}")
        return self.rows[y - 1][x - 1]

    def swapped(self, k: int):
        """The tableau with entries ``k`` and ``k+1`` exchanged, or ``None``
        when they share a row or column (the exchange would not be an RST)."""
        xk, yk = self.cell_of(k)
        xk1, yk1 = self.cell_of(k + 1)
        if xk == xk1 or yk == yk1:
            return None
        rows = [list(r) for r in self.rows]
        rows[yk - 1][xk - 1] = k + 1
        rows[yk1 - 1][xk1 - 1] = k
        return RST(rows)

    def to_rows(self) -> list:
        """Rows as plain lists, bottom row first (the wire format)."""
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, RST) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RST({self.to_rows()!r})"

    def __str__(self):
        width = len(str(self.N))
        return "\n".join(
            " ".join(str(e).rjust(width) for e in row) for row in reversed(self.rows)
        )


class Filling:
    """A weak tableau: non-negative integers on a partition shape, weakly
    increasing along rows (left to right) and up columns.

    Equal values may stack in a column; ``is_column_strict`` and
    ``is_row_strict`` report the two strictness refinements.
    """

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        rows = _normalize_rows(rows)
        shape = tuple(len(r) for r in rows)
        if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
            raise InvalidFilling(f"row lengths {shape} are not a partition")
        if any(e < 0 for row in rows for e in row):
            raise InvalidFilling("negative value in filling")
        for row in rows:
            if any(row[i] > row[i + 1] for i in range(len(row) - 1)):
                raise InvalidFilling(f"row {row} not weakly increasing")
        for y in range(len(rows) - 1):
            upper = rows[y + 1]
            if any(rows[y][x] > upper[x] for x in range(len(upper))):
                raise InvalidFilling(
                    f"column values not weakly increasing upward in {rows}"
                )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Filling instances are immutable")

    @property
    def N(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    def entry(self, x: int, y: int) -> int:
        if not (1 <= y <= len(self.rows) and 1 <= x <= len(self.rows[y - 1])):
            raise CellOutOfShape(f"cell (x={x}, y={y}) outside shape {self.shape}")
        return self.rows[y - 1][x - 1]

    def is_column_strict(self) -> bool:
        """True when every column increases strictly upward."""
        for y in range(len(self.rows) - 1):
            upper = self.rows[y + 1]
            if any(self.rows[y][x] >= upper[x] for x in range(len(upper))):
                return False
        return True

    def is_row_strict(self) -> bool:
        """True when every row increases strictly left to right."""
        return all(
            row[i] < row[i + 1] for row in self.rows for i in range(len(row) - 1)
        )

    def values_sorted(self) -> tuple:
        """All cell values, sorted decreasingly (the ``v+`` of the component)."""
        return sort_parts([e for row in self.rows for e in row])

    def conjugate(self) -> "Filling":
        """The transposed filling on the conjugate shape."""
        shape = self.shape
        cols = conjugate(shape)
        return Filling(
            tuple(
                tuple(self.rows[y][x - 1] for y in range(cols[x - 1]))
                for x in range(1, len(cols) + 1)
            )
        )

    def level_shapes(self) -> list:
        """Partition shapes of the sub-diagrams ``{cells with value <= m}``
        for ``m = 0 .. max value``; each is a partition because rows and
        columns increase weakly."""
        out = []
        top = max(e for row in self.rows for e in row)
        for m in range(top + 1):
            shape = tuple(
                sum(1 for e in row if e <= m) for row in self.rows
            )
            out.append(check_partition(shape))
        return out

    def to_rows(self) -> list:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, Filling) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Filling({self.to_rows()!r})"

    def __str__(self):
        width = max(len(str(e)) for row in self.rows for e in row)
        return "\n".join(
            " ".join(str(e).rjust(width) for e in row) for row in reversed(self.rows)
        )


RowsLike = Union[RST, Sequence[Sequence[int]]]


def contents(tableau: RowsLike) -> tuple:
    """Content vector of a tableau given as an :class:`RST` or as raw rows
    (bottom row first).

    ``contents(t)[i-1]`` is ``x - y`` for the cell ``(x, y)`` holding ``i``.
    The computation only reads cell coordinates, so raw rows need not
    satisfy the RST orderings — any placement of ``1..N`` works.
    """
    if isinstance(tableau, RST):
        return tableau.contents
    rows = _normalize_rows(tableau)
    n = sum(len(r) for r in rows)
    where = {}
    for y, row in enumerate(rows, start=1):
        for x, e in enumerate(row, start=1):
            where[e] = x - y
    if sorted(where) != list(range(1, n + 1)):
        raise InvalidFilling(f"entries are not a permutation of 1..{n}")
    return tuple(where[i] for i in range(1, n + 1))


def enumerate_rst(shape: Iterable[int]) -> tuple:
    """All RSTs of the given shape, ordered by ascending lexicographic
    content vector (a total order: the content vector determines the
    tableau)."""
    shape = check_partition(shape)
    n = sum(shape)
    found = []

    def place(entry, lengths, cell_of):
        if entry == 0:
            rows = [[0] * shape_len for shape_len in shape]
            for e, (x, y) in cell_of.items():
                rows[y - 1][x - 1] = e
            found.append(RST(rows))
            return
        for y in range(1, len(shape) + 1):
            cur = lengths[y - 1]
            if cur >= shape[y - 1]:
                continue
            if y > 1 and lengths[y - 2] < cur + 1:
                continue
            lengths[y - 1] += 1
            cell_of[entry] = (cur + 1, y)
            place(entry - 1, lengths, cell_of)
            del cell_of[entry]
            lengths[y - 1] -= 1

    place(n, [0] * len(shape), {})
    found.sort(key=lambda t: t.contents)
    return tuple(found)


def rst_from_contents(cts: Sequence[int], shape: Iterable[int] = None) -> RST:
    """Rebuild the unique RST with content vector ``cts``.

    Entries are placed from ``N`` down to ``1``; at every step the growing
    diagram has at most one addable cell on each diagonal, so the content
    forces the cell.  Raises :class:`InvalidFilling` when some entry has no
    addable cell of its content, or when the result does not match
    ``shape`` (if given).
    """
    n = len(cts)
    lengths = []
    cell_of = {}
    for entry in range(n, 0, -1):
        d = cts[entry - 1]
        placed = False
        for y in range(1, len(lengths) + 2):
            cur = lengths[y - 1] if y <= len(lengths) else 0
            x = cur + 1
            if x - y != d:
                continue
            if y > 1 and lengths[y - 2] < x:
                continue
            if y <= len(lengths):
                lengths[y - 1] += 1
            else:
                lengths.append(1)
            cell_of[entry] = (x, y)
            placed = True
            break
        if not placed:
            raise InvalidFilling(
                f"no addable cell of content {d} for entry {entry} in {cts}"
            )
    result_shape = tuple(lengths)
    if shape is not None and check_partition(shape) != result_shape:
        raise InvalidFilling(
            f"contents {cts} build shape {result_shape}, not {tuple(shape)}"
        )
    rows = [[0] * l for l in lengths]
    for e, (x, y) in cell_of.items():
        rows[y - 1][x - 1] = e
    return RST(rows)


def standardize(tableau: Filling, variant: str) -> RST:
    """Replace the values of a weak tableau by ``N..1`` to get an RST.

    Cells are scanned column by column from the left, upward within each
    column (``"std0"``), or row by row from the bottom, rightward within
    each row (``"std1"``); equal values receive decreasing entries in scan
    order, smaller values receiving larger entries overall.
    """
    if variant == "std0":
        def scan_key(cell):
            return (cell[0], cell[1])
    elif variant == "std1":
        def scan_key(cell):
            return (cell[1], cell[0])
    else:
        raise ValueError(f"variant must be 'std0' or 'std1', got {variant!r}")
    cell_list = sorted(cells(tableau.shape), key=scan_key)
    cell_list.sort(key=lambda c: tableau.entry(*c))  # stable: scan order kept
    n = tableau.N
    rows = [[0] * l for l in tableau.shape]
    for entry, (x, y) in zip(range(n, 0, -1), cell_list):
        rows[y - 1][x - 1] = entry
    return RST(rows)


def filling_of(tableau: RST, v: Sequence[int]) -> Filling:
    """The weak tableau writing ``v_plus[i]`` on the cell of entry ``i``."""
    if len(v) != tableau.N:
        raise InvalidFilling(
            f"composition length {len(v)} != tableau size {tableau.N}"
        )
    vplus = sort_parts(v)
    rows = [[0] * l for l in tableau.shape]
    for i in range(1, tableau.N + 1):
        x, y = tableau.cell_of(i)
        rows[y - 1][x - 1] = vplus[i - 1]
    return Filling(rows)


def _selftest():  # pragma: no cover
    assert contents([[6, 3, 1], [5, 4], [2]]) == (2, -2, 1, 0, -1, 0)
    assert rank([4, 2, 2, 3, 2, 1, 4, 4]) == (1, 5, 6, 4, 7, 8, 2, 3)
    assert len(enumerate_rst((2, 1))) == 2


if __name__ == "__main__":  # pragma: no cover
    _selftest()
    print("ok")
