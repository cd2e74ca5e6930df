"""Exact matrix realizations of the Lie algebras acting in the catalog.

A MatrixRep is a list of square rational matrices (the action of a basis of
the algebra on the space).  Closure under commutators is checked exactly and
the structure constants are cached, so isotropy subalgebras and derived
subalgebras can be handled in coefficient space.

Basis enumeration is deterministic everywhere (lexicographic elementary
matrices), so every downstream report is reproducible bit for bit.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Dict, Optional, Sequence

import numpy as np

from .linalg import Matrix, Q, SpanSolver, bracket
from .octonion import (
    OCT_DIM,
    albert_coords_dim,
    freudenthal_monomials,
    jordan_mult_operator,
    oct_table,
)

__all__ = [
    "MatrixRep",
    "Subalgebra",
    "ClosureError",
    "gl",
    "sl",
    "so",
    "sp",
    "spin_rep",
    "half_spin_rep10",
    "g2_rep",
    "e6_rep",
    "dual",
    "tensor",
    "sym2",
    "alt2",
    "add_torus",
    "direct_sum_shared",
    "natural_action",
    "dual_action",
    "left_action",
    "right_transpose_action",
    "right_neg_action",
    "sym2_action",
    "alt2_action",
    "sym_basis",
    "alt_basis",
    "sym_coords",
    "alt_coords",
]

_GUARD = 1 << 62


class ClosureError(RuntimeError):
    """A commutator fell outside the span of the declared basis."""


class MatrixRep:
    """A Lie algebra given by the matrices of a basis acting on a space."""

    def __init__(
        self,
        basis: Sequence[Matrix],
        labels: Sequence[str],
        summand_dims: Optional[Sequence[int]] = None,
    ):
        if not basis:
            raise ValueError("a representation needs at least one generator")
        n = basis[0].rows
        for b in basis:
            if b.rows != n or b.cols != n:
                raise ValueError("all basis matrices must be square of equal size")
        self.basis = tuple(basis)
        self.labels = tuple(labels)
        self.algebra_dim = len(self.basis)
        self.space_dim = n
        self.summand_dims = tuple(summand_dims or (n,))
        if sum(self.summand_dims) != n:
            raise ValueError("summand dimensions do not add up to the space")
        self._span: SpanSolver | None = None
        self._struct: tuple[np.ndarray, int] | None = None
        self._derived: "Subalgebra" | None = None

    # -- linear structure ---------------------------------------------------

    def _basis_span(self) -> SpanSolver:
        if self._span is None:
            span = SpanSolver(self.space_dim**2, track=self.algebra_dim)
            for b in self.basis:
                if not span.insert(b.data):
                    raise ClosureError("basis matrices are linearly dependent")
            self._span = span
        return self._span

    def structure_tensor(self) -> tuple[np.ndarray, int]:
        """(T, den) with [B_i, B_j] = sum_k T[i,j,k]/den * B_k, exactly."""
        if self._struct is not None:
            return self._struct
        span = self._basis_span()
        d = self.algebra_dim
        coeffs: Dict[tuple[int, int], list[Q]] = {}
        den = 1
        for i in range(d):
            for j in range(i + 1, d):
                com = bracket(self.basis[i], self.basis[j])
                c = span.coefficients(com.data)
                if c is None:
                    raise ClosureError(
                        f"commutator of generators {i}, {j} left the span"
                    )
                coeffs[(i, j)] = c
                for x in c:
                    den = den * x.denominator // math.gcd(den, x.denominator)
        tensor_ = np.zeros((d, d, d), dtype=np.int64)
        for (i, j), c in coeffs.items():
            for k, x in enumerate(c):
                v = int(x.numerator * (den // x.denominator))
                if abs(v) >= 1 << 31:
                    raise ClosureError("structure constants exceed the fast range")
                tensor_[i, j, k] = v
                tensor_[j, i, k] = -v
        self._struct = (tensor_, den)
        return self._struct

    def check_closure(self) -> bool:
        """Exact test that all commutators lie in the span of the basis."""
        self.structure_tensor()
        return True

    def coeff_bracket(self, v: Sequence[Q], w: Sequence[Q]) -> tuple[Q, ...]:
        """Bracket of two coefficient vectors, via the structure tensor."""
        tensor_, den = self.structure_tensor()
        vi, sv = _int_vector(v)
        wi, sw = _int_vector(w)
        scale = sv * sw / den
        d = self.algebra_dim
        bound = (
            int(np.abs(vi).max(initial=0))
            * int(np.abs(wi).max(initial=0))
            * int(np.abs(tensor_).max(initial=0))
            * d
            * d
        )
        if bound < _GUARD:
            out = np.einsum("i,j,ijk->k", vi, wi, tensor_)
            return tuple(scale * int(x) for x in out)
        acc = [0] * d
        for i in np.nonzero(vi)[0]:
            for j in np.nonzero(wi)[0]:
                c = int(vi[i]) * int(wi[j])
                row = tensor_[i, j]
                for k in np.nonzero(row)[0]:
                    acc[k] += c * int(row[k])
        return tuple(scale * x for x in acc)

    def derived_subalgebra(self) -> "Subalgebra":
        """Span of all pairwise commutators, echelon-reduced, exact."""
        if self._derived is not None:
            return self._derived
        tensor_, _ = self.structure_tensor()
        d = self.algebra_dim
        span = SpanSolver(d)
        for i in range(d):
            for j in range(i + 1, d):
                row = tensor_[i, j]
                if row.any():
                    span.insert([Q(int(x)) for x in row])
        basis = tuple(tuple(Q(x) for x in r) for r in span.echelon_rows())
        self._derived = Subalgebra(self, basis)
        return self._derived

    def __repr__(self) -> str:
        return (
            f"MatrixRep({' + '.join(self.labels)}: dim {self.algebra_dim} "
            f"on C^{self.space_dim})"
        )


def _int_vector(v: Sequence[Q]) -> tuple[np.ndarray, Q]:
    """Return (ints, s) with v = s * ints, entries gcd-reduced."""
    den = 1
    vq = [x if isinstance(x, Q) else Q(x) for x in v]
    for x in vq:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x.numerator * (den // x.denominator)) for x in vq]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    else:
        g = 1
    return np.array(ints, dtype=np.int64), Q(g, den)


class Subalgebra:
    """A subalgebra of a MatrixRep given by coefficient vectors on its basis."""

    def __init__(self, parent: MatrixRep, coefficient_basis: Sequence[Sequence[Q]]):
        self.parent = parent
        self.coefficient_basis = tuple(tuple(v) for v in coefficient_basis)
        for v in self.coefficient_basis:
            if len(v) != parent.algebra_dim:
                raise ValueError("coefficient vector has the wrong length")

    @property
    def dim(self) -> int:
        return len(self.coefficient_basis)

    def matrices(self) -> list[Matrix]:
        out = []
        for v in self.coefficient_basis:
            m = Matrix.zeros(self.parent.space_dim, self.parent.space_dim)
            for c, b in zip(v, self.parent.basis):
                if c:
                    m = m + b.scale(c)
            out.append(m)
        return out

    def is_bracket_closed(self) -> bool:
        """Every commutator of basis vectors re-solves within the span."""
        span = SpanSolver(self.parent.algebra_dim)
        for v in self.coefficient_basis:
            span.insert(v)
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                com = self.parent.coeff_bracket(
                    self.coefficient_basis[i], self.coefficient_basis[j]
                )
                if not span.contains(com):
                    return False
        return True


# -- classical algebras ------------------------------------------------------


def _unit(n: int, i: int, j: int) -> Matrix:
    data = [Q(0)] * (n * n)
    data[i * n + j] = Q(1)
    return Matrix(n, n, data)


def gl(n: int) -> MatrixRep:
    """gl(n) on C^n; basis E_ij in row-major order."""
    if n < 1:
        raise ValueError("gl needs n >= 1")
    basis = [_unit(n, i, j) for i in range(n) for j in range(n)]
    return MatrixRep(basis, (f"gl({n})",))


def sl(n: int) -> MatrixRep:
    """sl(n) on C^n; off-diagonal E_ij then H_i = E_ii - E_(i+1)(i+1)."""
    if n < 1:
        raise ValueError("sl needs n >= 1")
    if n == 1:
        raise ValueError("sl(1) is zero; use gl(1) or a torus")
    basis = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    basis += [_unit(n, i, i) - _unit(n, i + 1, i + 1) for i in range(n - 1)]
    return MatrixRep(basis, (f"sl({n})",))


def so(n: int) -> MatrixRep:
    """so(n) for the form sum x_i^2: antisymmetric matrices E_ij - E_ji."""
    if n < 2:
        raise ValueError("so needs n >= 2")
    basis = [_unit(n, i, j) - _unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    return MatrixRep(basis, (f"so({n})",))


def sym_basis(n: int) -> list[Matrix]:
    """Symmetric matrix basis: E_ii on the diagonal, E_ij + E_ji above it."""
    out = []
    for i in range(n):
        for j in range(i, n):
            out.append(_unit(n, i, i) if i == j else _unit(n, i, j) + _unit(n, j, i))
    return out


def alt_basis(n: int) -> list[Matrix]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(_unit(n, i, j) - _unit(n, j, i))
    return out


def sym_coords(m: Matrix) -> list[Q]:
    return [m[i, j] for i in range(m.rows) for j in range(i, m.rows)]


def alt_coords(m: Matrix) -> list[Q]:
    return [m[i, j] for i in range(m.rows) for j in range(i + 1, m.rows)]


def sp(n: int) -> MatrixRep:
    """sp(n) on C^(2n) for J = [[0, I], [-I, 0]]: blocks [[A, B], [C, -A^T]].

    Basis: A-part E_ij (row-major), then symmetric B-part, then C-part.
    """
    if n < 1:
        raise ValueError("sp needs n >= 1")
    basis = []
    zero = Matrix.zeros(n, n)
    for i in range(n):
        for j in range(n):
            a = _unit(n, i, j)
            basis.append(_blocks2(a, zero, zero, -a.transpose()))
    for s in sym_basis(n):
        basis.append(_blocks2(zero, s, zero, zero))
    for s in sym_basis(n):
        basis.append(_blocks2(zero, zero, s, zero))
    return MatrixRep(basis, (f"sp({n})",))


def _blocks2(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    n = a.rows
    rows = []
    for i in range(n):
        rows.append(list(a.row(i)) + list(b.row(i)))
    for i in range(n):
        rows.append(list(c.row(i)) + list(d.row(i)))
    return Matrix.from_rows(rows)


# -- spin representations via rational Clifford algebras ----------------------


@lru_cache(maxsize=None)
def _oct_left_mults() -> tuple[Matrix, ...]:
    """Left multiplication by e_0..e_7 on the octonions; integer matrices."""
    table = oct_table()
    out = []
    for i in range(OCT_DIM):
        data = [[Q(0)] * OCT_DIM for _ in range(OCT_DIM)]
        for j in range(OCT_DIM):
            k, s = table[i][j]
            data[k][j] = Q(s)
        out.append(Matrix.from_rows(data))
    return tuple(out)


@lru_cache(maxsize=None)
def _gammas16() -> tuple[Matrix, ...]:
    """Eight anticommuting 16x16 integer matrices with square -1.

    gamma_i doubles left multiplication by e_i (i = 1..7); gamma_8 swaps the
    two octonion copies with a sign.  Together they realize the rank-8
    negative-definite Clifford algebra over the rationals.
    """
    ls = _oct_left_mults()
    zero = Matrix.zeros(OCT_DIM, OCT_DIM)
    ident = Matrix.identity(OCT_DIM)
    gams = [_blocks2(zero, ls[i], ls[i], zero) for i in range(1, 8)]
    gams.append(_blocks2(zero, -ident, ident, zero))
    return tuple(gams)


def _so_pairs(m: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(m) for j in range(i + 1, m)]


@lru_cache(maxsize=None)
def spin_rep(m: int) -> MatrixRep:
    """Spinor representation of so(m) for m in {7, 8, 9}.

    Basis order matches so(m): the matrix for E_ij - E_ji (i < j) comes from
    products of the rational gamma matrices; brackets match the natural
    representation exactly.  Space dimensions: 8, 8 (a half-spin), 16.
    """
    if m == 7:
        ls = _oct_left_mults()
        half = Q(-1, 2)
        basis = [(ls[i + 1] @ ls[j + 1]).scale(half) for i, j in _so_pairs(7)]
        return MatrixRep(basis, ("spin(7)",))
    if m == 8:
        gams = _gammas16()
        basis = []
        for i, j in _so_pairs(8):
            prod = gams[i] @ gams[j]
            block = Matrix.from_rows(
                [[prod[r, c] for c in range(OCT_DIM)] for r in range(OCT_DIM)]
            )
            basis.append(block.scale(Q(-1, 2)))
        return MatrixRep(basis, ("spin(8) half-spin",))
    if m == 9:
        gams = _gammas16()
        basis = []
        for i, j in _so_pairs(9):
            if j <= 7:
                basis.append((gams[i] @ gams[j]).scale(Q(-1, 2)))
            else:
                basis.append(gams[i].scale(Q(1, 2)))
        return MatrixRep(basis, ("spin(9)",))
    raise ValueError("spin_rep supports m in {7, 8, 9}")


@lru_cache(maxsize=None)
def half_spin_rep10() -> MatrixRep:
    """A 16-dimensional half-spin representation of a rational form of so(10).

    The half-spins of the definite rational form are not defined over the
    rationals, so this uses the form of signature (9, 1); complexified it is
    the same algebra and every dimension count downstream is unchanged.
    Basis order: E_ij - E_ji for i < j <= 9, then E_i9 + E_9i for i <= 9
    (indices of the 10-dimensional natural space, 0-based).
    """
    gams = _gammas16()
    big = gams[0]
    for g in gams[1:]:
        big = big @ g
    fs = [g @ big for g in gams] + [big]  # nine generators squaring to +1
    basis = [(fs[i] @ fs[j]).scale(Q(1, 2)) for i, j in _so_pairs(9)]
    basis += [fs[i].scale(Q(-1, 2)) for i in range(9)]
    return MatrixRep(basis, ("so(9,1) half-spin",))


# -- exceptional algebras -----------------------------------------------------


@lru_cache(maxsize=None)
def g2_rep() -> MatrixRep:
    """Derivations of the octonions, restricted to the imaginary part.

    Solves D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for an 8x8 unknown matrix;
    the nullspace is 14-dimensional and every derivation kills the unit, so
    the action restricts to the 7 imaginary coordinates.
    """
    table = oct_table()
    tensor_ = [[[0] * OCT_DIM for _ in range(OCT_DIM)] for _ in range(OCT_DIM)]
    for i in range(OCT_DIM):
        for j in range(OCT_DIM):
            k, s = table[i][j]
            tensor_[i][j][k] = s
    rows = []
    for i in range(OCT_DIM):
        for j in range(OCT_DIM):
            m, sign = table[i][j]
            for k in range(OCT_DIM):
                row = [Q(0)] * (OCT_DIM * OCT_DIM)
                # D(e_i e_j)_k = sign * D[k][m]
                row[k * OCT_DIM + m] += Q(sign)
                # -(D(e_i) e_j)_k = -sum_a D[a][i] T[a][j][k]
                for a in range(OCT_DIM):
                    t = tensor_[a][j][k]
                    if t:
                        row[a * OCT_DIM + i] -= Q(t)
                # -(e_i D(e_j))_k = -sum_b D[b][j] T[i][b][k]
                for b in range(OCT_DIM):
                    t = tensor_[i][b][k]
                    if t:
                        row[b * OCT_DIM + j] -= Q(t)
                rows.append(row)
    from .linalg import nullspace

    kernel = nullspace(Matrix.from_rows(rows))
    if len(kernel) != 14:
        raise AssertionError(f"octonion derivations: got dim {len(kernel)}")
    basis = []
    for v in kernel:
        d = Matrix(OCT_DIM, OCT_DIM, v)
        if any(d[k, 0] != 0 for k in range(OCT_DIM)) or any(
            d[0, k] != 0 for k in range(OCT_DIM)
        ):
            raise AssertionError("a derivation moved the octonion unit")
        basis.append(
            Matrix.from_rows(
                [[d[i, j] for j in range(1, OCT_DIM)] for i in range(1, OCT_DIM)]
            )
        )
    return MatrixRep(basis, ("g2",))


@lru_cache(maxsize=None)
def _cubic_partials() -> tuple[dict, ...]:
    """partials[l]: quadratic monomial dict of the l-th partial of the cubic."""
    partials: list[dict] = [dict() for _ in range(albert_coords_dim)]
    for mono, c in freudenthal_monomials():
        for v in set(mono):
            m = mono.count(v)
            rest = list(mono)
            rest.remove(v)
            key = tuple(rest)
            partials[v][key] = partials[v].get(key, 0) + m * c
    return tuple(partials)


def _annihilates_cubic(a: np.ndarray) -> bool:
    """Exact test that x -> trilinear(a x, x, x) vanishes identically."""
    partials = _cubic_partials()
    acc: dict = {}
    for l in range(albert_coords_dim):
        row = a[l]
        nz = np.nonzero(row)[0]
        if len(nz) == 0:
            continue
        for pair, c in partials[l].items():
            for i in nz:
                key = tuple(sorted(pair + (int(i),)))
                acc[key] = acc.get(key, 0) + c * int(row[i])
    return all(v == 0 for v in acc.values())


@lru_cache(maxsize=None)
def _cubic_stabilizer_nullity_bound() -> int:
    """Upper bound for the stabilizer dimension: 729 - rank of the constraint
    matrix modulo a large prime (modular rank never exceeds rational rank)."""
    partials = _cubic_partials()
    n = albert_coords_dim
    row_index: dict = {}
    entries: list[tuple[int, int, int]] = []
    for l in range(n):
        for pair, c in partials[l].items():
            for i in range(n):
                key = tuple(sorted(pair + (i,)))
                r = row_index.setdefault(key, len(row_index))
                entries.append((r, l * n + i, c))
    mat = np.zeros((len(row_index), n * n), dtype=np.int64)
    for r, cidx, c in entries:
        mat[r, cidx] += c
    p = (1 << 31) - 1
    mat %= p
    rows, cols = mat.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(mat[r:, c])[0]
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        inv = pow(int(mat[r, c]), p - 2, p)
        mat[r] = (mat[r] * inv) % p
        col = mat[r + 1 :, c]
        nzl = np.nonzero(col)[0]
        if len(nzl):
            mat[r + 1 :][nzl] = (mat[r + 1 :][nzl] - np.outer(col[nzl], mat[r])) % p
        r += 1
        if r == rows:
            break
    return n * n - r


@lru_cache(maxsize=None)
def e6_rep() -> MatrixRep:
    """The 78-dimensional algebra of 27x27 matrices annihilating the cubic.

    Candidate generators are the traceless Jordan multiplications and all of
    their pairwise commutators; each surviving basis element is verified
    exactly to annihilate the cubic form, and a modular rank bound certifies
    that the stabilizer has dimension at most 78, so the span is the whole
    nullspace of the degree-3 coefficient conditions.
    """
    n = albert_coords_dim
    mults = []
    for j in range(n):
        coords = [Q(0)] * n
        coords[j] = Q(1)
        op = jordan_mult_operator(coords)
        mults.append(np.array([[int(2 * x) for x in row] for row in op], dtype=np.int64))
    # traceless diagonal combinations, then the off-diagonal coordinates
    candidates = [mults[0] - mults[1], mults[1] - mults[2]] + mults[3:]
    for i in range(n):
        for j in range(i + 1, n):
            candidates.append(mults[i] @ mults[j] - mults[j] @ mults[i])
    span = SpanSolver(n * n)
    basis_ints: list[np.ndarray] = []
    for cand in candidates:
        if span.insert([Q(int(v)) for v in cand.ravel()]):
            basis_ints.append(cand)
    if len(basis_ints) != 78:
        raise AssertionError(f"cubic stabilizer candidates span {len(basis_ints)} dims")
    if _cubic_stabilizer_nullity_bound() != 78:
        raise AssertionError("modular rank certificate failed")
    for a in basis_ints:
        if not _annihilates_cubic(a):
            raise AssertionError("a basis element fails to annihilate the cubic")
    basis = [
        Matrix(n, n, [Q(int(v)) for v in a.ravel()]) for a in basis_ints
    ]
    return MatrixRep(basis, ("e6 (27-dim rep)",))


# -- combinators ---------------------------------------------------------------


def dual(rep: MatrixRep) -> MatrixRep:
    """Contragredient representation: X -> -X^T."""
    return MatrixRep(
        [-b.transpose() for b in rep.basis],
        tuple(f"{l}*" for l in rep.labels),
        rep.summand_dims,
    )


def tensor(r1: MatrixRep, r2: MatrixRep) -> MatrixRep:
    """Outer tensor product: X (x) I + I (x) Y on the product space."""
    i1 = Matrix.identity(r1.space_dim)
    i2 = Matrix.identity(r2.space_dim)
    basis = [b.kron(i2) for b in r1.basis] + [i1.kron(b) for b in r2.basis]
    return MatrixRep(basis, r1.labels + r2.labels)


def sym2(rep: MatrixRep) -> MatrixRep:
    """Action s -> X s + s X^T on symmetric matrices, in triangle coordinates."""
    n = rep.space_dim
    return MatrixRep(sym2_action(rep.basis, n), tuple(f"S2({l})" for l in rep.labels))


def alt2(rep: MatrixRep) -> MatrixRep:
    """Action x -> X x + x X^T on antisymmetric matrices."""
    n = rep.space_dim
    return MatrixRep(alt2_action(rep.basis, n), tuple(f"L2({l})" for l in rep.labels))


def add_torus(rep: MatrixRep, k: int) -> MatrixRep:
    """Append k commuting scaling generators.

    k = 1 scales the whole space; k = number of summands scales each summand
    separately (the saturating centers of the catalog).
    """
    n = rep.space_dim
    if k == 1:
        extra = [Matrix.identity(n)]
    elif k == len(rep.summand_dims) and k > 1:
        extra = []
        off = 0
        for d in rep.summand_dims:
            m = Matrix.zeros(n, n).tolists()
            for i in range(off, off + d):
                m[i][i] = Q(1)
            extra.append(Matrix.from_rows(m))
            off += d
    else:
        raise ValueError("torus count must be 1 or the number of summands")
    return MatrixRep(
        list(rep.basis) + extra,
        rep.labels + ("torus",) * k,
        rep.summand_dims,
    )


def direct_sum_shared(
    factors: Sequence[tuple[str, Sequence[Optional[Sequence[Matrix]]]]],
) -> MatrixRep:
    """Direct sum of summands with factors acting diagonally where shared.

    Each factor is (label, actions); actions has one entry per summand,
    either None (the factor ignores that summand) or the matrices of its
    basis acting there.  A factor shared between summands must appear as a
    single entry; duplicate labels are rejected as mis-wired sharing.
    """
    labels = [label for label, _ in factors]
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate factor label: wire shared factors as one entry")
    n_summands = len(factors[0][1])
    dims: list[Optional[int]] = [None] * n_summands
    for label, actions in factors:
        if len(actions) != n_summands:
            raise ValueError(f"factor {label}: wrong number of summand slots")
        for s, act in enumerate(actions):
            if act is None:
                continue
            d = act[0].rows
            if dims[s] is None:
                dims[s] = d
            elif dims[s] != d:
                raise ValueError(f"factor {label}: summand {s} dimension mismatch")
    if any(d is None for d in dims):
        raise ValueError("every summand needs at least one acting factor")
    offsets = [0]
    for d in dims:
        offsets.append(offsets[-1] + d)
    total = offsets[-1]
    basis: list[Matrix] = []
    out_labels: list[str] = []
    for label, actions in factors:
        gens = None
        for act in actions:
            if act is not None:
                gens = len(act)
                break
        for act in actions:
            if act is not None and len(act) != gens:
                raise ValueError(f"factor {label}: inconsistent generator counts")
        for g in range(gens):
            rows = [[Q(0)] * total for _ in range(total)]
            for s, act in enumerate(actions):
                if act is None:
                    continue
                block = act[g]
                for i in range(block.rows):
                    for j in range(block.cols):
                        rows[offsets[s] + i][offsets[s] + j] = block[i, j]
            basis.append(Matrix.from_rows(rows))
        out_labels.append(label)
    return MatrixRep(basis, tuple(out_labels), tuple(dims))


# -- factor action helpers -----------------------------------------------------


def natural_action(rep: MatrixRep) -> list[Matrix]:
    return list(rep.basis)


def dual_action(rep: MatrixRep) -> list[Matrix]:
    return [-b.transpose() for b in rep.basis]


def left_action(rep: MatrixRep, cols: int) -> list[Matrix]:
    """M -> X M on row-major M(space_dim, cols)."""
    ident = Matrix.identity(cols)
    return [b.kron(ident) for b in rep.basis]


def right_transpose_action(rep: MatrixRep, rows: int) -> list[Matrix]:
    """M -> M X^T on row-major M(rows, space_dim)."""
    ident = Matrix.identity(rows)
    return [ident.kron(b) for b in rep.basis]


def right_neg_action(rep: MatrixRep, rows: int) -> list[Matrix]:
    """M -> -M X on row-major M(rows, space_dim)."""
    ident = Matrix.identity(rows)
    return [ident.kron(-b.transpose()) for b in rep.basis]


def sym2_action(basis: Sequence[Matrix], n: int) -> list[Matrix]:
    mats = sym_basis(n)
    out = []
    for x in basis:
        cols = [sym_coords(x @ b + b @ x.transpose()) for b in mats]
        out.append(Matrix.from_cols(cols))
    return out


def alt2_action(basis: Sequence[Matrix], n: int) -> list[Matrix]:
    mats = alt_basis(n)
    out = []
    for x in basis:
        cols = [alt_coords(x @ b + b @ x.transpose()) for b in mats]
        out.append(Matrix.from_cols(cols))
    return out
