"""Exact linear algebra kernel: frozen examples and randomized agreement."""

from fractions import Fraction as Q

import pytest

from pvkit.linalg import (
    DetRng,
    DimensionMismatchError,
    Jet2,
    Matrix,
    SpanSolver,
    det,
    jet_eval2,
    nullspace,
    rank,
)


def naive_rank(rows):
    """Textbook Gaussian elimination over Fractions; independent oracle."""
    m = [[Q(x) for x in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c] / pv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == n_rows:
            break
    return r


def rand_matrix(rng, rows, cols, bound=5, denom=False):
    data = []
    for _ in range(rows * cols):
        num = rng.randint(-bound, bound)
        den = rng.randint(1, 4) if denom else 1
        data.append(Q(num, den))
    return Matrix(rows, cols, data)


def test_rank_identity():
    assert rank(Matrix.identity(3)) == 3


def test_rank_zero_matrix():
    assert rank(Matrix.zeros(2, 5)) == 0


def test_rank_proportional_rows():
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_nullspace_identity():
    assert nullspace(Matrix.identity(4)) == []


def test_nullspace_zero():
    basis = nullspace(Matrix.zeros(2, 3))
    assert len(basis) == 3
    assert basis[0] == (Q(1), Q(0), Q(0))
    assert basis[1] == (Q(0), Q(1), Q(0))
    assert basis[2] == (Q(0), Q(0), Q(1))


def test_nullspace_single_relation():
    assert nullspace(Matrix.from_rows([[1, 1]])) == [(Q(1), Q(-1))]


def test_nullspace_solves():
    rng = DetRng(7)
    for _ in range(50):
        m = rand_matrix(rng, rng.randint(1, 5), rng.randint(1, 6), denom=True)
        for v in nullspace(m):
            assert all(x == 0 for x in m.apply(v))


def test_rank_plus_nullity():
    rng = DetRng(11)
    for _ in range(100):
        m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        assert rank(m) + len(nullspace(m)) == m.cols


def test_fraction_free_agrees_with_naive_on_200_matrices():
    rng = DetRng(2024)
    for _ in range(200):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = rand_matrix(rng, rows, cols, denom=True)
        assert rank(m) == naive_rank(m.tolists())


def leibniz_det(m):
    """Permutation-sum determinant; independent oracle for small sizes."""
    import itertools

    n = m.rows
    total = Q(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Q(1)
        for i in range(n):
            term *= m[i, perm[i]]
        total += sign * term
    return total


def test_det_against_leibniz():
    rng = DetRng(5)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = rand_matrix(rng, n, n, denom=True)
        assert det(m) == leibniz_det(m)


def test_det_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        det(Matrix.zeros(2, 3))


def test_jet_square_example():
    out = jet_eval2(lambda v: v[0] * v[0], [3], [1], [1])
    assert out == (Q(9), Q(6), Q(6), Q(2))


def det2(v):
    return v[0] * v[3] - v[1] * v[2]


def test_jet_det2_equal_directions():
    # expand det(I + t E11) = 1 + t
    x = [1, 0, 0, 1]
    e11 = [1, 0, 0, 0]
    assert jet_eval2(det2, x, e11, e11) == (Q(1), Q(1), Q(1), Q(0))


def test_jet_det2_mixed_directions():
    # expand det(I + t E11 + s E22) = (1 + t)(1 + s)
    x = [1, 0, 0, 1]
    e11 = [1, 0, 0, 0]
    e22 = [0, 0, 0, 1]
    assert jet_eval2(det2, x, e11, e22) == (Q(1), Q(1), Q(1), Q(1))


def test_jet_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        jet_eval2(det2, [1, 0, 0, 1], [1, 0], [0, 0, 0, 1])


def poly_second_derivative(coeffs, t):
    """d^2/dt^2 of sum c_k t^k at t, exactly."""
    return sum(
        Q(k * (k - 1)) * c * t ** (k - 2) for k, c in enumerate(coeffs) if k >= 2
    )


def test_jet_multiplication_matches_symbolic_products():
    # jets of univariate polynomials: multiply polynomials, compare jets
    rng = DetRng(99)
    for _ in range(100):
        a = [Q(rng.randint(-3, 3)) for _ in range(3)]
        b = [Q(rng.randint(-3, 3)) for _ in range(3)]
        ja = Jet2(a[0], a[1], 2 * a[2])
        jb = Jet2(b[0], b[1], 2 * b[2])
        prod = [Q(0)] * 5
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
        jc = ja * jb
        assert jc.v == prod[0]
        assert jc.d1 == prod[1]
        assert jc.d2 == 2 * prod[2]


def test_jet_associativity_random_triples():
    rng = DetRng(17)
    for _ in range(100):
        a, b, c = (
            Jet2(rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(-3, 3))
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_span_solver_coefficients_roundtrip():
    rng = DetRng(31)
    for _ in range(30):
        dim = rng.randint(2, 5)
        count = rng.randint(1, dim)
        solver = SpanSolver(dim, track=count)
        vecs = []
        while len(vecs) < count:
            v = [Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(dim)]
            if solver.insert(v):
                vecs.append(v)
            else:
                solver = SpanSolver(dim, track=count)
                vecs = []
        coeffs = [Q(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(count)]
        target = [
            sum((c * v[i] for c, v in zip(coeffs, vecs)), Q(0)) for i in range(dim)
        ]
        got = solver.coefficients(target)
        assert got == coeffs


def test_span_solver_membership():
    solver = SpanSolver(3)
    solver.insert([1, 0, 1])
    solver.insert([0, 1, 1])
    assert solver.contains([1, 1, 2])
    assert not solver.contains([0, 0, 1])


def test_detrng_is_frozen():
    rng = DetRng(0)
    assert [rng.randint(0, 99) for _ in range(5)] == [35, 0, 79, 44, 47]
    rng2 = DetRng.for_stream(0, "generic-point")
    first = rng2.randint(-3, 3)
    rng3 = DetRng.for_stream(0, "generic-point")
    assert rng3.randint(-3, 3) == first
