"""Executable criteria for prehomogeneous spaces with exact certificates.

A point is generic exactly when the infinitesimal action map is onto, so
genericity is certified by an exact rank computation and never guessed.
The isotropy subalgebra is a nullspace, the character-lattice rank is a
corank, relative invariance is checked through exact jets, and regularity
is the nonvanishing of an exact Hessian determinant at a certified point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .invariants import InvariantPolynomial
from .linalg import DetRng, Matrix, Q, SpanSolver, det, jet_line, nullspace, rank
from .reps import MatrixRep, Subalgebra

__all__ = [
    "GenericPoint",
    "AnalysisReport",
    "NotPrehomogeneousError",
    "ZeroAtTestPointError",
    "action_matrix",
    "find_generic_point",
    "certify",
    "isotropy_algebra",
    "character_space_dim",
    "verify_relative_invariant",
    "hessian_matrix",
    "hessian_regularity",
    "classify",
    "sample_certified_points",
]


class NotPrehomogeneousError(RuntimeError):
    """No certified generic point was found; absence of a certificate only."""


class ZeroAtTestPointError(RuntimeError):
    """An invariant vanished at a point where it was expected not to."""


@dataclass(frozen=True)
class GenericPoint:
    coordinates: Tuple[Q, ...]
    certified: bool


@dataclass(frozen=True)
class InvariantCheck:
    name: str
    verified: bool
    lam: Tuple[Q, ...]          # infinitesimal character on the algebra basis
    points_checked: int

    @property
    def lambda_nonzero(self) -> bool:
        return any(x != 0 for x in self.lam)


@dataclass(frozen=True)
class AnalysisReport:
    prehomogeneous: bool
    algebra_dim: int
    space_dim: int
    isotropy_dim: int
    character_dim: int
    qd1: bool
    invariant_checks: Tuple[InvariantCheck, ...]
    regular: Optional[bool]
    notes: str = ""


def action_matrix(rep: MatrixRep, x: Sequence[Q]) -> Matrix:
    """space_dim x algebra_dim matrix with columns B_i . x."""
    if len(x) != rep.space_dim:
        raise ValueError("point length differs from the space dimension")
    cols = [b.apply(x) for b in rep.basis]
    return Matrix.from_cols(cols)


def certify(rep: MatrixRep, x: Sequence[Q]) -> bool:
    """Exact certificate: the orbit map at x is onto."""
    return rank(action_matrix(rep, x)) == rep.space_dim


def find_generic_point(
    rep: MatrixRep,
    seed: int = 0,
    max_retries: int = 64,
    hint: Optional[Sequence[Q]] = None,
) -> GenericPoint:
    """A certified generic point: the hint when given, else seeded sampling.

    Sampling draws integer coordinates in [-3, 3].  Exhausting the retries
    raises NotPrehomogeneousError; failing to find a point is evidence, not
    proof, and the caller is expected to report it as inconclusive.
    """
    if hint is not None:
        pt = tuple(Q(c) for c in hint)
        if not certify(rep, pt):
            raise NotPrehomogeneousError("the registered point is not generic")
        return GenericPoint(pt, True)
    rng = DetRng.for_stream(seed, "generic-point")
    for _ in range(max_retries):
        pt = tuple(Q(rng.randint(-3, 3)) for _ in range(rep.space_dim))
        if certify(rep, pt):
            return GenericPoint(pt, True)
    raise NotPrehomogeneousError(
        f"no certified point in {max_retries} samples (inconclusive)"
    )


def isotropy_algebra(rep: MatrixRep, point: GenericPoint) -> Subalgebra:
    """Annihilator {X : X.x = 0} as a nullspace; dimension is forced."""
    if not point.certified:
        raise ValueError("isotropy requires a certified point")
    kernel = nullspace(action_matrix(rep, point.coordinates))
    sub = Subalgebra(rep, kernel)
    if sub.dim != rep.algebra_dim - rep.space_dim:
        raise AssertionError("isotropy dimension violates the rank identity")
    return sub


def character_space_dim(rep: MatrixRep, point: GenericPoint) -> int:
    """Corank of derived subalgebra + isotropy inside the algebra.

    This is the rank of the lattice of characters available to relative
    invariants; the span is already a subalgebra because all brackets land
    in the derived part.
    """
    span = SpanSolver(rep.algebra_dim)
    for v in rep.derived_subalgebra().coefficient_basis:
        span.insert(v)
    for v in isotropy_algebra(rep, point).coefficient_basis:
        span.insert(v)
    return rep.algebra_dim - span.rank


def sample_certified_points(
    rep: MatrixRep,
    count: int,
    seed: int = 0,
    avoid_zero_of: Optional[InvariantPolynomial] = None,
    hint: Optional[Sequence[Q]] = None,
    max_retries: int = 512,
) -> list[GenericPoint]:
    """Deterministic certified points, optionally off an invariant's zero set.

    The hint (when provided and acceptable) is always the first point.
    """
    points: list[GenericPoint] = []
    if hint is not None:
        pt = tuple(Q(c) for c in hint)
        if not certify(rep, pt):
            raise NotPrehomogeneousError("the registered point is not generic")
        if avoid_zero_of is None or avoid_zero_of(pt) != 0:
            points.append(GenericPoint(pt, True))
    rng = DetRng.for_stream(seed, "point-sample")
    tries = 0
    while len(points) < count and tries < max_retries:
        tries += 1
        pt = tuple(Q(rng.randint(-3, 3)) for _ in range(rep.space_dim))
        if any(pt == p.coordinates for p in points):
            continue
        if not certify(rep, pt):
            continue
        if avoid_zero_of is not None and avoid_zero_of(pt) == 0:
            continue
        points.append(GenericPoint(pt, True))
    if len(points) < count:
        raise NotPrehomogeneousError(
            f"only {len(points)} certified points in {max_retries} samples"
        )
    return points


def verify_relative_invariant(
    rep: MatrixRep,
    f: InvariantPolynomial,
    points: Sequence[GenericPoint],
) -> tuple[bool, Tuple[Q, ...]]:
    """Infinitesimal relative invariance at certified points, exactly.

    For each basis element X the directional derivative along X.x must be
    lambda_X * f(x) with one lambda vector shared by every supplied point;
    lambda must also vanish on the derived subalgebra and on the isotropy
    of the first point.  Returns (verified, lambda).
    """
    if not points:
        raise ValueError("need at least one point")
    lam: list[Q] | None = None
    for p in points:
        fx = f(p.coordinates)
        if fx == 0:
            raise ZeroAtTestPointError(f"{f.name} vanishes at a test point")
        cur = []
        for b in rep.basis:
            u = b.apply(p.coordinates)
            cur.append(jet_line(f, p.coordinates, u).d1 / fx)
        if lam is None:
            lam = cur
        elif lam != cur:
            return False, tuple(lam)
    assert lam is not None
    for v in rep.derived_subalgebra().coefficient_basis:
        if sum((a * b for a, b in zip(lam, v)), Q(0)) != 0:
            return False, tuple(lam)
    for v in isotropy_algebra(rep, points[0]).coefficient_basis:
        if sum((a * b for a, b in zip(lam, v)), Q(0)) != 0:
            return False, tuple(lam)
    return True, tuple(lam)


def hessian_matrix(f: InvariantPolynomial, x: Sequence[Q]) -> Matrix:
    """Exact Hessian assembled from polarized second jets."""
    n = len(x)
    e = [tuple(Q(1) if j == i else Q(0) for j in range(n)) for i in range(n)]
    pure = [jet_line(f, x, e[i]).d2 for i in range(n)]
    h = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        h[i][i] = pure[i]
        for j in range(i + 1, n):
            both = tuple(a + b for a, b in zip(e[i], e[j]))
            mixed = (jet_line(f, x, both).d2 - pure[i] - pure[j]) / 2
            h[i][j] = mixed
            h[j][i] = mixed
    return Matrix.from_rows(h)


def hessian_regularity(
    f: InvariantPolynomial, rep: MatrixRep, point: GenericPoint
) -> bool:
    """True iff det Hess f is nonzero at the certified point.

    One point decides: the Hessian determinant of a relative invariant is
    itself relatively invariant, hence identically zero or nowhere zero on
    the open orbit (exercised as a tested dichotomy elsewhere).
    """
    if f(point.coordinates) == 0:
        raise ZeroAtTestPointError(f"{f.name} vanishes at the chosen point")
    return det(hessian_matrix(f, point.coordinates)) != 0


def classify(
    rep: MatrixRep,
    declared_invariants: Sequence[InvariantPolynomial] = (),
    x_hint: Optional[Sequence[Q]] = None,
    seed: int = 0,
    lambda_points: int = 10,
) -> AnalysisReport:
    """Run the whole per-entry pipeline and assemble a report.

    Regularity is decided from the first declared invariant exactly when the
    character space is one-dimensional (the invariant is then fundamental);
    otherwise the flag stays undecided.
    """
    notes: list[str] = []
    try:
        point = find_generic_point(rep, seed=seed, hint=x_hint)
    except NotPrehomogeneousError as exc:
        return AnalysisReport(
            prehomogeneous=False,
            algebra_dim=rep.algebra_dim,
            space_dim=rep.space_dim,
            isotropy_dim=-1,
            character_dim=-1,
            qd1=False,
            invariant_checks=(),
            regular=None,
            notes=str(exc),
        )
    notes.append("point from registered data" if x_hint is not None else "seeded point")
    iso = isotropy_algebra(rep, point)
    char_dim = character_space_dim(rep, point)
    if char_dim == 0:
        notes.append("no nontrivial relative invariant at the algebra level")
    checks: list[InvariantCheck] = []
    for f in declared_invariants:
        pts = sample_certified_points(
            rep, lambda_points, seed=seed, avoid_zero_of=f, hint=x_hint
        )
        verified, lam = verify_relative_invariant(rep, f, pts)
        checks.append(InvariantCheck(f.name, verified, lam, len(pts)))
    regular: Optional[bool] = None
    if char_dim == 1 and declared_invariants:
        f = declared_invariants[0]
        pts = sample_certified_points(rep, 1, seed=seed, avoid_zero_of=f, hint=x_hint)
        regular = hessian_regularity(f, rep, pts[0])
    return AnalysisReport(
        prehomogeneous=True,
        algebra_dim=rep.algebra_dim,
        space_dim=rep.space_dim,
        isotropy_dim=iso.dim,
        character_dim=char_dim,
        qd1=char_dim == 1,
        invariant_checks=tuple(checks),
        regular=regular,
        notes="; ".join(notes),
    )
