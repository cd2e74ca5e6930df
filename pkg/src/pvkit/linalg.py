"""Exact rational linear algebra.

Scalars are arbitrary-precision rationals (`fractions.Fraction`); every
elimination is fraction-free over the integers after clearing denominators,
so nothing is ever rounded.  Rows live as numpy int64 vectors on a fast path
guarded by exact overflow bounds; whenever a bound would be exceeded the row
falls back to arbitrary-precision Python integers.  Both paths follow the
same pivot rule, so results are bit-identical regardless of which path ran.
"""

from __future__ import annotations

import math
from fractions import Fraction as Q
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "Q",
    "Matrix",
    "Jet2",
    "DetRng",
    "SpanSolver",
    "DimensionMismatchError",
    "bracket",
    "rank",
    "nullspace",
    "det",
    "jet_eval2",
    "jet_line",
]

# int64 rows may only hold entries below _SMALL so that a*x - b*y with the
# guard below can never overflow 2**63.
_SMALL = 1 << 60
_GUARD = 1 << 62


class DimensionMismatchError(ValueError):
    """Raised when vector or matrix shapes do not line up."""


def _as_q(x) -> Q:
    return x if isinstance(x, Q) else Q(x)


def _clear_denominators(row: Sequence[Q]) -> tuple[list[int], int]:
    """Return (integer row, d) with integer_row = d * row and d > 0."""
    den = 1
    for x in row:
        d = x.denominator
        den = den * d // math.gcd(den, d)
    return [int(x.numerator * (den // x.denominator)) for x in row], den


def _to_row(ints: Sequence[int]):
    """Pack an integer vector as int64 if it comfortably fits, else a list."""
    if all(-_SMALL < v < _SMALL for v in ints):
        return np.array(ints, dtype=np.int64)
    return list(ints)


def _row_list(row) -> list[int]:
    return [int(v) for v in row] if isinstance(row, np.ndarray) else row


def _row_max(row) -> int:
    if isinstance(row, np.ndarray):
        return int(np.abs(row).max(initial=0))
    return max((abs(v) for v in row), default=0)


def _row_gcd(row) -> int:
    if isinstance(row, np.ndarray):
        return int(np.gcd.reduce(np.abs(row), initial=0))
    g = 0
    for v in row:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _row_div(row, g: int):
    if isinstance(row, np.ndarray):
        return row // g
    return [v // g for v in row]


def _combine(r, a: int, p, b: int):
    """Return gcd-reduced a*r - b*p, exactly, on either representation."""
    if (
        isinstance(r, np.ndarray)
        and isinstance(p, np.ndarray)
        and abs(a) * _row_max(r) + abs(b) * _row_max(p) < _GUARD
    ):
        out = r * np.int64(a) - np.int64(b) * p
        g = int(np.gcd.reduce(np.abs(out), initial=0))
        return out // g if g > 1 else out
    rl, pl = _row_list(r), _row_list(p)
    out = [a * x - b * y for x, y in zip(rl, pl)]
    g = 0
    for v in out:
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        out = [v // g for v in out]
    return _to_row(out)


def _entry(row, i: int) -> int:
    return int(row[i])


class SpanSolver:
    """Incremental exact row space with membership and coefficient queries.

    Vectors are cleared to integers on insertion.  Augmented tail columns
    record how each echelon row decomposes over the inserted vectors, and a
    final scratch column plays the same role for the vector currently being
    reduced; every row operation therefore scales the whole bookkeeping
    uniformly and gcd normalization stays valid.
    """

    def __init__(self, ncols: int, track: int = 0):
        self.ncols = ncols
        self.track = track
        self._width = ncols + track + 1
        self._rows: list = []         # echelon rows, scratch column always 0
        self._pivots: list[int] = []  # pivot column per row, strictly increasing
        self._scales: list[int] = []  # cleared vector j = scale_j * inserted_j
        self._inserted = 0

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, work):
        for idx, prow in enumerate(self._rows):
            c = self._pivots[idx]
            b = _entry(work, c)
            if b == 0:
                continue
            work = _combine(work, _entry(prow, c), prow, b)
        return work

    def _first_nonzero(self, work) -> int:
        if isinstance(work, np.ndarray):
            nz = np.nonzero(work[: self.ncols])[0]
            return int(nz[0]) if len(nz) else -1
        for i in range(self.ncols):
            if work[i] != 0:
                return i
        return -1

    def _store(self, work, piv: int) -> None:
        g = _row_gcd(work)
        if g > 1:
            work = _row_div(work, g)
        if _entry(work, piv) < 0:
            work = -work if isinstance(work, np.ndarray) else [-v for v in work]
        pos = 0
        while pos < len(self._pivots) and self._pivots[pos] < piv:
            pos += 1
        self._rows.insert(pos, work)
        self._pivots.insert(pos, piv)

    def insert(self, vec: Sequence) -> bool:
        """Add a vector; True if it enlarged the span."""
        if len(vec) != self.ncols:
            raise DimensionMismatchError(f"expected {self.ncols} entries, got {len(vec)}")
        ints, s = _clear_denominators([_as_q(x) for x in vec])
        slot = self._inserted
        if self.track and slot >= self.track:
            raise ValueError("SpanSolver coefficient capacity exceeded")
        self._inserted += 1
        self._scales.append(s)
        tail = [0] * (self.track + 1)
        if self.track:
            tail[slot] = 1
        work = self._reduce(_to_row(ints + tail))
        piv = self._first_nonzero(work)
        if piv < 0:
            return False
        self._store(work, piv)
        return True

    def residual(self, vec: Sequence) -> list[int]:
        """Integer residual of vec modulo the span (up to a nonzero scale)."""
        ints, _ = _clear_denominators([_as_q(x) for x in vec])
        work = self._reduce(_to_row(ints + [0] * self.track + [1]))
        return _row_list(work)[: self.ncols]

    def contains(self, vec: Sequence) -> bool:
        return all(v == 0 for v in self.residual(vec))

    def coefficients(self, vec: Sequence) -> list[Q] | None:
        """Exact coefficients of vec over the inserted vectors, or None.

        Requires coefficient tracking and that every insert() succeeded,
        i.e. the inserted vectors are linearly independent.
        """
        if not self.track:
            raise ValueError("SpanSolver built without coefficient tracking")
        if self._inserted != len(self._rows):
            raise ValueError("coefficient query requires independent inserts")
        ints, t = _clear_denominators([_as_q(x) for x in vec])
        work = self._reduce(_to_row(ints + [0] * self.track + [1]))
        lst = _row_list(work)
        if any(v != 0 for v in lst[: self.ncols]):
            return None
        mu = lst[-1]
        tail = lst[self.ncols : self.ncols + self.track]
        return [Q(-tail[j] * self._scales[j], mu * t) for j in range(self._inserted)]

    def echelon_rows(self) -> list[list[int]]:
        """Integer echelon rows of the span (main columns, pivot-sorted)."""
        return [_row_list(r)[: self.ncols] for r in self._rows]

    @property
    def pivots(self) -> list[int]:
        return list(self._pivots)


class Matrix:
    """Dense exact-rational matrix, row-major, immutable by convention."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence):
        if len(data) != rows * cols:
            raise DimensionMismatchError("entry count does not match shape")
        self.rows = rows
        self.cols = cols
        self.data = tuple(_as_q(x) for x in data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat: list = []
        for row in rows:
            if len(row) != c:
                raise DimensionMismatchError("ragged rows")
            flat.extend(row)
        return cls(r, c, flat)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence]) -> "Matrix":
        if not cols:
            return cls(0, 0, [])
        return cls.from_rows(list(zip(*cols)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [Q(1) if i == j else Q(0) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [Q(0)] * (rows * cols))

    def __getitem__(self, key) -> Q:
        i, j = key
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def tolists(self) -> list[list[Q]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self) -> Q:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Q(0))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self.data])

    def scale(self, s) -> "Matrix":
        s = _as_q(s)
        return Matrix(self.rows, self.cols, [s * a for a in self.data])

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError("shape mismatch")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError("inner dimensions differ")
        fast = _int_matmul(self, other)
        if fast is not None:
            return fast
        a, b = self.tolists(), other.tolists()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum((ai[k] * b[k][j] for k in range(self.cols)), Q(0)))
        return Matrix(self.rows, other.cols, out)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length differs from column count")
        v = [_as_q(x) for x in vec]
        return tuple(
            sum((self.data[i * self.cols + k] * v[k] for k in range(self.cols)), Q(0))
            for i in range(self.rows)
        )

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        for i in range(self.rows):
            for p in range(other.rows):
                for j in range(self.cols):
                    aij = self.data[i * self.cols + j]
                    for q in range(other.cols):
                        out.append(aij * other.data[p * other.cols + q])
        return Matrix(self.rows * other.rows, self.cols * other.cols, out)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in self.row(i)) for i in range(min(self.rows, 6))
        )
        return f"Matrix({self.rows}x{self.cols}: {body}{'...' if self.rows > 6 else ''})"


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """Commutator ab - ba."""
    return a @ b - b @ a


def _int_matmul(a: Matrix, b: Matrix) -> Matrix | None:
    """Exact numpy product after clearing denominators, when bounds allow."""
    da = db = 1
    for x in a.data:
        da = da * x.denominator // math.gcd(da, x.denominator)
        if da >= 1 << 16:
            return None
    for x in b.data:
        db = db * x.denominator // math.gcd(db, x.denominator)
        if db >= 1 << 16:
            return None
    ia = [int(x.numerator * (da // x.denominator)) for x in a.data]
    ib = [int(x.numerator * (db // x.denominator)) for x in b.data]
    ma = max((abs(v) for v in ia), default=0)
    mb = max((abs(v) for v in ib), default=0)
    if ma * mb * max(a.cols, 1) >= _GUARD:
        return None
    na = np.array(ia, dtype=np.int64).reshape(a.rows, a.cols)
    nb = np.array(ib, dtype=np.int64).reshape(b.rows, b.cols)
    prod = na @ nb
    d = da * db
    return Matrix(a.rows, b.cols, [Q(int(v), d) for v in prod.ravel()])


def rank(m: Matrix) -> int:
    """Row rank by exact fraction-free elimination."""
    solver = SpanSolver(m.cols)
    for i in range(m.rows):
        solver.insert(m.row(i))
    return solver.rank


def nullspace(m: Matrix) -> list[tuple[Q, ...]]:
    """Exact basis of {v : m v = 0}, one vector per free column.

    Each vector carries 1 at its free column and 0 at the other free columns,
    then is sign-normalized so its first nonzero coordinate is positive.
    """
    solver = SpanSolver(m.cols)
    for i in range(m.rows):
        solver.insert(m.row(i))
    rows = solver.echelon_rows()
    pivots = solver.pivots
    pivot_set = set(pivots)
    basis: list[tuple[Q, ...]] = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [Q(0)] * m.cols
        v[f] = Q(1)
        for r in range(len(rows) - 1, -1, -1):
            p = pivots[r]
            s = sum((Q(rows[r][c]) * v[c] for c in range(p + 1, m.cols) if v[c]), Q(0))
            v[p] = -s / rows[r][p]
        for x in v:
            if x != 0:
                if x < 0:
                    v = [-y for y in v]
                break
        basis.append(tuple(v))
    return basis


def det(m: Matrix) -> Q:
    """Exact determinant via Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise DimensionMismatchError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Q(1)
    a: list[list[int]] = []
    scale = 1
    for i in range(n):
        ints, d = _clear_denominators(list(m.row(i)))
        a.append(ints)
        scale *= d
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Q(0)
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row = a[i]
            prow = a[k]
            for j in range(k + 1, n):
                row[j] = (pk * row[j] - aik * prow[j]) // prev
            row[k] = 0
        prev = pk
    return Q(sign * a[n - 1][n - 1], scale)


class Jet2:
    """Second-order jet (value, first, second derivative) along one direction.

    Multiplication follows the truncated Taylor rule
    (a, a', a'')*(b, b', b'') = (ab, a'b + ab', a''b + 2 a'b' + a b'').
    """

    __slots__ = ("v", "d1", "d2")

    def __init__(self, v, d1=0, d2=0):
        self.v = _as_q(v)
        self.d1 = _as_q(d1)
        self.d2 = _as_q(d2)

    @staticmethod
    def _lift(x) -> "Jet2":
        return x if isinstance(x, Jet2) else Jet2(x)

    def __add__(self, other):
        o = Jet2._lift(other)
        return Jet2(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)

    __radd__ = __add__

    def __sub__(self, other):
        o = Jet2._lift(other)
        return Jet2(self.v - o.v, self.d1 - o.d1, self.d2 - o.d2)

    def __rsub__(self, other):
        o = Jet2._lift(other)
        return Jet2(o.v - self.v, o.d1 - self.d1, o.d2 - self.d2)

    def __mul__(self, other):
        o = Jet2._lift(other)
        return Jet2(
            self.v * o.v,
            self.d1 * o.v + self.v * o.d1,
            self.d2 * o.v + 2 * self.d1 * o.d1 + self.v * o.d2,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Jet2(-self.v, -self.d1, -self.d2)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("jets support nonnegative integer powers only")
        out = Jet2(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = Jet2._lift(other)
        return (self.v, self.d1, self.d2) == (o.v, o.d1, o.d2)

    def __repr__(self):
        return f"Jet2({self.v}, {self.d1}, {self.d2})"


def jet_line(f: Callable[[Sequence], object], x: Sequence, u: Sequence) -> Jet2:
    """Evaluate f along t -> x + t u as a single second-order jet."""
    if len(x) != len(u):
        raise DimensionMismatchError("x and u must have equal length")
    return Jet2._lift(
        f([Jet2(_as_q(xi), _as_q(ui)) for xi, ui in zip(x, u)])
    )


def jet_eval2(
    f: Callable[[Sequence], object],
    x: Sequence,
    u: Sequence,
    v: Sequence,
) -> tuple[Q, Q, Q, Q]:
    """Exact (f(x), D_u f, D_v f, D_u D_v f) via second-order jets.

    The mixed derivative comes from polarization:
    D_u D_v = (D^2_{u+v} - D^2_u - D^2_v) / 2.
    """
    if not (len(x) == len(u) == len(v)):
        raise DimensionMismatchError("x, u, v must have equal length")
    xq = [_as_q(t) for t in x]
    uq = [_as_q(t) for t in u]
    vq = [_as_q(t) for t in v]

    def along(direction):
        return Jet2._lift(f([Jet2(xi, di) for xi, di in zip(xq, direction)]))

    ju = along(uq)
    jv = along(vq)
    jw = along([a + b for a, b in zip(uq, vq)])
    mixed = (jw.d2 - ju.d2 - jv.d2) / 2
    return ju.v, ju.d1, jv.d1, mixed


class DetRng:
    """Deterministic splitmix64 generator; stable across platforms forever."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self._MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next_u64() % (hi - lo + 1)

    @staticmethod
    def for_stream(seed: int, *tags) -> "DetRng":
        """Derive an independent generator from a seed and string/int tags."""
        h = seed & DetRng._MASK
        for tag in tags:
            data = tag.encode() if isinstance(tag, str) else str(int(tag)).encode()
            for byte in data:
                h = ((h ^ byte) * 0x100000001B3) & DetRng._MASK
        return DetRng(h)
