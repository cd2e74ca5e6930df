"""Matrix realizations: dimensions, closure, spin and exceptional algebras."""

from fractions import Fraction as Q

import pytest

from pvkit.invariants import freudenthal_cubic
from pvkit.linalg import DetRng, Matrix, bracket, nullspace
from pvkit.reps import (
    ClosureError,
    MatrixRep,
    add_torus,
    alt2,
    direct_sum_shared,
    dual,
    e6_rep,
    g2_rep,
    gl,
    half_spin_rep10,
    natural_action,
    sl,
    so,
    sp,
    spin_rep,
    sym2,
    tensor,
)


def test_classical_dimensions():
    assert gl(3).algebra_dim == 9
    assert sl(2).algebra_dim == 3
    assert so(4).algebra_dim == 6
    assert sp(2).algebra_dim == 10  # basis enumeration matches n(2n+1)
    assert sp(3).algebra_dim == 21


def test_so_preserves_standard_form():
    for b in so(5).basis:
        assert b.transpose() == -b


def test_sp_preserves_standard_symplectic_form():
    n = 3
    j = Matrix.zeros(2 * n, 2 * n).tolists()
    for i in range(n):
        j[i][n + i] = Q(1)
        j[n + i][i] = Q(-1)
    jm = Matrix.from_rows(j)
    for b in sp(n).basis:
        assert (b.transpose() @ jm + jm @ b).is_zero()


@pytest.mark.parametrize(
    "maker",
    [
        lambda: gl(3),
        lambda: sl(4),
        lambda: so(5),
        lambda: sp(2),
        lambda: spin_rep(7),
        lambda: spin_rep(8),
        lambda: spin_rep(9),
        lambda: g2_rep(),
        lambda: half_spin_rep10(),
        lambda: tensor(sp(2), gl(2)),
        lambda: sym2(gl(3)),
        lambda: alt2(gl(4)),
    ],
)
def test_bracket_closure(maker):
    assert maker().check_closure()


def _assert_homomorphism(src: MatrixRep, dst: MatrixRep):
    """[rho(X), rho(Y)] = rho([X, Y]) for all basis pairs, exactly."""
    tensor_, den = src.structure_tensor()
    d = src.algebra_dim
    for i in range(d):
        for j in range(i + 1, d):
            lhs = bracket(dst.basis[i], dst.basis[j])
            rhs = Matrix.zeros(dst.space_dim, dst.space_dim)
            for k in range(d):
                c = Q(int(tensor_[i, j, k]), den)
                if c:
                    rhs = rhs + dst.basis[k].scale(c)
            assert lhs == rhs, (i, j)


@pytest.mark.parametrize("m,dim", [(7, 8), (8, 8), (9, 16)])
def test_spin_rep_is_a_representation(m, dim):
    rho = spin_rep(m)
    assert rho.space_dim == dim  # 2^floor(m/2) for 7 and 9; a half-spin for 8
    _assert_homomorphism(so(m), rho)


def test_spin8_not_equivalent_to_vector():
    """No intertwiner: rho(X) T = T sigma(X) forces T = 0."""
    rho = spin_rep(8)
    vec = so(8)
    rows = []
    for a, b in zip(rho.basis, vec.basis):
        for i in range(8):
            for j in range(8):
                row = [Q(0)] * 64
                for k in range(8):
                    row[i * 8 + k] += b[k, j]      # (T sigma)_ij
                    row[k * 8 + j] -= a[i, k]      # -(rho T)_ij
                rows.append(row)
    assert len(nullspace(Matrix.from_rows(rows))) == 0


from helpers import invariant_form_space


@pytest.mark.parametrize("m", [7, 9])
def test_spin_invariant_quadratic_is_unique(m):
    assert invariant_form_space(spin_rep(m)) == 1


def test_g2_dimensions_and_derivation_property():
    from pvkit.octonion import oct_mul

    g2 = g2_rep()
    assert g2.algebra_dim == 14
    assert g2.space_dim == 7
    rng = DetRng(41)
    for b in g2.basis[:5]:
        for _ in range(5):
            x = [Q(0)] + [Q(rng.randint(-3, 3)) for _ in range(7)]
            y = [Q(0)] + [Q(rng.randint(-3, 3)) for _ in range(7)]
            dx = [Q(0)] + list(b.apply(x[1:]))
            dy = [Q(0)] + list(b.apply(y[1:]))
            xy = oct_mul(x, y)
            dxy = [Q(0)] + list(b.apply(xy[1:]))
            lhs = oct_mul(dx, y)
            rhs = oct_mul(x, dy)
            assert dxy == [a + b2 for a, b2 in zip(lhs, rhs)], "not a derivation"
            assert xy[0] + 0 == xy[0]  # product kept its real part untouched by D


def test_g2_and_e6_are_perfect():
    assert g2_rep().derived_subalgebra().dim == 14
    assert e6_rep().derived_subalgebra().dim == 78


def test_e6_dimensions():
    r = e6_rep()
    assert r.algebra_dim == 78
    assert r.space_dim == 27


def test_e6_annihilates_cubic_at_50_points():
    r = e6_rep()
    f = freudenthal_cubic()
    rng = DetRng(42)
    from pvkit.linalg import jet_eval2

    zero = [Q(0)] * 27
    for _ in range(50):
        x = [Q(rng.randint(-3, 3)) for _ in range(27)]
        b = r.basis[rng.randint(0, 77)]
        u = list(b.apply(x))
        _, d1, _, _ = jet_eval2(f, x, u, zero)
        assert d1 == 0


def test_dual_is_involution():
    r = sl(3)
    assert dual(dual(r)).basis == r.basis
    for a, b in zip(r.basis, dual(r).basis):
        assert b == -a.transpose()
        assert b.trace() == -a.trace()


def test_dual_acts_on_row_vectors():
    # for the natural sl(n) action, the dual is v -> -v X on rows
    r = sl(2)
    rng = DetRng(43)
    v = [Q(rng.randint(-3, 3)) for _ in range(2)]
    for a, b in zip(r.basis, dual(r).basis):
        row_action = [
            -sum(v[i] * a[i, j] for i in range(2)) for j in range(2)
        ]
        assert list(b.apply(v)) == row_action


def test_sym2_alt2_space_dims():
    assert sym2(sl(4)).space_dim == 10
    assert alt2(sl(4)).space_dim == 6
    assert alt2(sl(6)).space_dim == 15


def test_sym2_preserves_symmetry():
    from pvkit.invariants import sym_unpack

    r = sym2(gl(3))
    rng = DetRng(44)
    s = [Q(rng.randint(-3, 3)) for _ in range(6)]
    for b in r.basis:
        image = sym_unpack(list(b.apply(s)), 3)
        for i in range(3):
            for j in range(3):
                assert image[i][j] == image[j][i]


def test_tensor_dims():
    t = tensor(sl(2), sl(3))
    assert t.algebra_dim == 3 + 8
    assert t.space_dim == 6


def test_direct_sum_shared_example_dims():
    n = 2
    s = sp(n)
    rep = direct_sum_shared([(f"sp({n})", [natural_action(s), natural_action(s)])])
    rep = add_torus(rep, 2)
    assert rep.algebra_dim == n * (2 * n + 1) + 2
    assert rep.space_dim == 4 * n
    assert rep.summand_dims == (2 * n, 2 * n)


def test_direct_sum_shared_rejects_duplicate_labels():
    s = sl(2)
    with pytest.raises(ValueError):
        direct_sum_shared(
            [
                ("sl(2)", [natural_action(s), None]),
                ("sl(2)", [None, natural_action(s)]),
            ]
        )


def test_add_torus_rules():
    r = so(3)
    assert add_torus(r, 1).algebra_dim == 4
    with pytest.raises(ValueError):
        add_torus(r, 2)  # single summand cannot take two scaling generators


def test_derived_subalgebras():
    assert gl(3).derived_subalgebra().dim == 8
    torus_only = MatrixRep([Matrix.identity(2)], ("torus",))
    assert torus_only.derived_subalgebra().dim == 0
    sp_two_tori = add_torus(
        direct_sum_shared(
            [("sp(2)", [natural_action(sp(2)), natural_action(sp(2))])]
        ),
        2,
    )
    assert sp_two_tori.derived_subalgebra().dim == 10


def test_dependent_basis_rejected():
    a = Matrix.identity(2)
    with pytest.raises(ClosureError):
        MatrixRep([a, a.scale(2)], ("bad",)).check_closure()


def test_subalgebra_bracket_closure():
    r = gl(3)
    der = r.derived_subalgebra()
    assert der.is_bracket_closed()
