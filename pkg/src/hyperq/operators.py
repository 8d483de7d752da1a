"""Residual operators for the modified Cauchy-Fueter calculus.

Everything here reduces to first-order Wirtinger jets of the two components
of a quaternion-valued function.  The operator

    D f = 1/2 (d/dz1bar + j d/dz2bar) f

annihilates exactly the functions whose components satisfy the residual pair
returned by ``hyperholomorphy_residuals``.  The remaining operators evaluate
the product-rule splits, the PDE system characterizing functions whose right
inverse is also in the kernel of D, and the sum/product closure conditions;
``classify_on_grid`` runs the whole ladder over a sample grid.

Derived systems are never trusted blindly: each has a direct computation
next to it (D applied to the constructed function) so tests can compare.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyGrid, NearPole, SingularValue
from .functions import QFunction, q_fun_add, q_fun_inverse, q_fun_mul
from .grid import as_points
from .jets import WirtingerJet, seed_const
from .quaternion import J, Quaternion

#: Points where norm_sq(f) falls at or below this are treated as poles.
EPS_POLE = 1e-6


def _fueter_from_jets(j1: WirtingerJet, j2: WirtingerJet) -> Quaternion:
    # conj-direction partials of conjugated components: d conj(f)/dz = conj(df/dzbar)
    return Quaternion(
        0.5 * (j1.d_z1bar - j2.d_z2bar.conjugate()),
        0.5 * (j2.d_z1bar + j1.d_z2bar.conjugate()),
    )


def fueter(f: QFunction, point) -> Quaternion:
    """Apply D to f at the point."""
    j1, j2 = f.jets(point)
    return _fueter_from_jets(j1, j2)


def hyperholomorphy_residuals(f: QFunction, point) -> tuple[complex, complex]:
    """The two complex equations whose joint vanishing means D f = 0.

    Returns (df1/dz1bar - d conj(f2)/dz2,  df1/dz2bar + d conj(f2)/dz1).
    The pair equals (2*D0, conj(2*D1)) for the components (D0, D1) of fueter().
    """
    j1, j2 = f.jets(point)
    return (
        j1.d_z1bar - j2.d_z2bar.conjugate(),
        j1.d_z2bar + j2.d_z1bar.conjugate(),
    )


def _dbar1(j1: WirtingerJet, j2: WirtingerJet) -> Quaternion:
    return Quaternion(j1.d_z1bar, j2.d_z1bar)


def _dbar2(j1: WirtingerJet, j2: WirtingerJet) -> Quaternion:
    return Quaternion(j1.d_z2bar, j2.d_z2bar)


def _d1(j1: WirtingerJet, j2: WirtingerJet) -> Quaternion:
    return Quaternion(j1.d_z1, j2.d_z1)


def _d2(j1: WirtingerJet, j2: WirtingerJet) -> Quaternion:
    return Quaternion(j1.d_z2, j2.d_z2)


def leibniz_decomposition(f: QFunction, g: QFunction, point):
    """Two-term product-rule split of D(f*g).

    Returns (lhs, term1, term2) with

        lhs   = D(f*g)
        term1 = (D f) * g
        term2 = 1/2 (f * dg/dz1bar + (j*f) * dg/dz2bar)

    where dg/dzkbar is the componentwise quaternion-valued partial.  The
    split is reported, not assumed: lhs - term1 - term2 is generally nonzero
    because the barred directions flip when pushed past j (see
    ``product_rule_second_term`` for the split that does close exactly).
    """
    lhs = fueter(q_fun_mul(f, g), point)
    fj1, fj2 = f.jets(point)
    gj1, gj2 = g.jets(point)
    fv = Quaternion(fj1.value, fj2.value)
    gv = Quaternion(gj1.value, gj2.value)
    term1 = _fueter_from_jets(fj1, fj2) * gv
    term2 = 0.5 * (fv * _dbar1(gj1, gj2) + (J * fv) * _dbar2(gj1, gj2))
    return lhs, term1, term2


def product_rule_second_term(f: QFunction, g: QFunction, point) -> Quaternion:
    """Exact second-factor term: D(f*g) = (D f)*g + this, identically.

    Commuting the z1bar/z2bar stencils past j conjugates the direction, so
    the f2 and conj(f1) slots pick up unbarred partials of g:

        1/2 [ f1 dg/dz1bar + f2 (j dg/dz1) + conj(f1) (j dg/dz2bar)
              - conj(f2) dg/dz2 ]
    """
    fj1, fj2 = f.jets(point)
    gj1, gj2 = g.jets(point)
    f1, f2 = fj1.value, fj2.value
    out = (
        f1 * _dbar1(gj1, gj2)
        + f2 * (J * _d1(gj1, gj2))
        + f1.conjugate() * (J * _dbar2(gj1, gj2))
        - f2.conjugate() * _d2(gj1, gj2)
    )
    return 0.5 * out


def product_rule_rhs_literal(f: QFunction, g: QFunction, point):
    """The product-rule right-hand side in its printed one-line form.

    Returns (rhs, lhs) where rhs = (D f)*(j*g) + f * dg/dz1bar
    + (conj(f)*j) * dg/dz2bar and lhs = D(f*g).  No equality is asserted;
    callers log the discrepancy.
    """
    lhs = fueter(q_fun_mul(f, g), point)
    fj1, fj2 = f.jets(point)
    gj1, gj2 = g.jets(point)
    fv = Quaternion(fj1.value, fj2.value)
    gv = Quaternion(gj1.value, gj2.value)
    rhs = (
        _fueter_from_jets(fj1, fj2) * (J * gv)
        + fv * _dbar1(gj1, gj2)
        + (fv.conj() * J) * _dbar2(gj1, gj2)
    )
    return rhs, lhs


def inverse_hyperholomorphy_residuals(f: QFunction, point) -> tuple[complex, complex]:
    """PDE system for the right inverse of f staying in the kernel of D.

    Returns the two displayed left-hand sides:

        (conj(f1) - f1) d conj(f1)/dz1 - conj(f2) d f2/dz1 - f2 d conj(f1)/dz2bar
        conj(f2) d f1/dz1 + d conj(f2)/dz1 (conj(f1) - f1) - f2 d conj(f2)/dz2bar
    """
    j1, j2 = f.jets(point)
    f1, f2 = j1.value, j2.value
    f1b, f2b = f1.conjugate(), f2.conjugate()
    d_f1b_z1 = j1.d_z1bar.conjugate()
    d_f1b_z2b = j1.d_z2.conjugate()
    d_f2b_z1 = j2.d_z1bar.conjugate()
    d_f2b_z2b = j2.d_z2.conjugate()
    r1 = (f1b - f1) * d_f1b_z1 - f2b * j2.d_z1 - f2 * d_f1b_z2b
    r2 = f2b * j1.d_z1 + d_f2b_z1 * (f1b - f1) - f2 * d_f2b_z2b
    return r1, r2


def fueter_of_inverse(f: QFunction, point, eps_pole: float = EPS_POLE) -> Quaternion:
    """D applied to the right inverse conj(f)/norm_sq(f); ground truth for
    the inverse-hyperholomorphy system."""
    value = f.value(point)
    if value.norm_sq() <= eps_pole:
        raise NearPole(f"norm_sq(f)={value.norm_sq()!r} at {point}")
    return fueter(q_fun_inverse(f), point)


def sum_condition_residual(h: QFunction, point, eps_pole: float = EPS_POLE):
    """Both routes to norm_sq(h)^2 * D(h^-1) at the point.

    Returns (factored, direct):

        factored = -(D s) * conj(h) + s * D(conj h),  s = |h1|^2 + |h2|^2
        direct   = s^2 * D(h^-1)

    The two agree identically (the scale field s is real, so the product
    rule is unobstructed); both are returned so callers can check.
    """
    j1, j2 = h.jets(point)
    hv = Quaternion(j1.value, j2.value)
    s = hv.norm_sq()
    if s <= eps_pole:
        raise NearPole(f"norm_sq(h)={s!r} at {point}")
    s_jet = j1 * j1.conjugate() + j2 * j2.conjugate()
    d_scale = _fueter_from_jets(s_jet, seed_const(0))
    d_hbar = _fueter_from_jets(j1.conjugate(), -j2)
    factored = -(d_scale * hv.conj()) + s * d_hbar
    direct = s * s * fueter(q_fun_inverse(h), point)
    return factored, direct


def product_condition_residuals(f: QFunction, g: QFunction, point) -> tuple[complex, complex]:
    """The two displayed equations of the product closure condition.

        g1 (df1/dz1bar + d conj(f2)/dz2) + (f1 - conj(f1)) dg1/dz1bar
            + conj(f2) dg1/dz2 - f2 d conj(g2)/dz1bar
        g1 (df1/dz2bar - d conj(f2)/dz1) + (f1 - conj(f1)) dg1/dz2bar
            - conj(f2) dg1/dz1 - f2 d conj(g2)/dz2bar

    Evaluated from component jets exactly as printed; co-vanishing with
    D(f*g) is a property to test, not an assumption.
    """
    fj1, fj2 = f.jets(point)
    gj1, gj2 = g.jets(point)
    f1, f2 = fj1.value, fj2.value
    g1 = gj1.value
    f1b = f1.conjugate()
    f2b = f2.conjugate()
    d_f2b_z2 = fj2.d_z2bar.conjugate()
    d_f2b_z1 = fj2.d_z1bar.conjugate()
    d_g2b_z1b = gj2.d_z1.conjugate()
    d_g2b_z2b = gj2.d_z2.conjugate()
    r1 = (g1 * (fj1.d_z1bar + d_f2b_z2) + (f1 - f1b) * gj1.d_z1bar
          + f2b * gj1.d_z2 - f2 * d_g2b_z1b)
    r2 = (g1 * (fj1.d_z2bar - d_f2b_z1) + (f1 - f1b) * gj1.d_z2bar
          - f2b * gj1.d_z1 - f2 * d_g2b_z2b)
    return r1, r2


# ---------------------------------------------------------------------------
# Grid classification

HYPERHOLOMORPHIC = "HYPERHOLOMORPHIC"
W_HYPERMEROMORPHIC = "W_HYPERMEROMORPHIC"
HYPERMEROMORPHIC_IN_FAMILY = "HYPERMEROMORPHIC_IN_FAMILY"
UNCLASSIFIED = "UNCLASSIFIED"


@dataclass
class Classification:
    label: str
    failing_check: str | None = None
    max_residuals: dict[str, float] = field(default_factory=dict)
    skipped: int = 0
    #: grid points where norm_sq(f) sits inside the pole guard; a proxy
    #: census of the common zero set of the two components
    zero_points: int = 0


def _pair_abs(pair) -> float:
    return (abs(pair[0]) ** 2 + abs(pair[1]) ** 2) ** 0.5


def _max_over_grid(fn, points):
    worst = 0.0
    skipped = 0
    for p in points:
        try:
            worst = max(worst, fn(p))
        except (SingularValue, NearPole):
            skipped += 1
    return worst, skipped


def classify_on_grid(fs, grid, tol: float = 1e-8,
                     eps_pole: float = EPS_POLE) -> list[Classification]:
    """Run the classification ladder for each function of the family.

    Ladder: hyperholomorphy residuals on the grid, then the
    inverse-hyperholomorphy system, then (pairwise against every other
    family member) the sum and product closure conditions, where the sum
    condition is judged by the direct value norm_sq^2 * D((f+g)^-1).
    """
    points = as_points(grid)
    if not points:
        raise EmptyGrid("classification needs at least one sample point")
    results = []
    for f in fs:
        cls = Classification(label=UNCLASSIFIED)
        for p in points:
            try:
                if f.value(p).norm_sq() <= eps_pole:
                    cls.zero_points += 1
            except SingularValue:
                pass
        worst, skipped = _max_over_grid(
            lambda p: _pair_abs(hyperholomorphy_residuals(f, p)), points)
        cls.max_residuals["eq1"] = worst
        cls.skipped += skipped
        if worst > tol:
            cls.failing_check = "eq1"
            results.append(cls)
            continue
        cls.label = HYPERHOLOMORPHIC

        worst, skipped = _max_over_grid(
            lambda p: _pair_abs(inverse_hyperholomorphy_residuals(f, p)), points)
        cls.max_residuals["prop31"] = worst
        cls.skipped += skipped
        if worst > tol:
            cls.failing_check = "prop31"
            results.append(cls)
            continue
        cls.label = W_HYPERMEROMORPHIC

        family_ok = True
        for g in fs:
            if g is f:
                continue
            h = q_fun_add(f, g)
            worst, skipped = _max_over_grid(
                lambda p: sum_condition_residual(h, p, eps_pole)[1].abs(), points)
            cls.max_residuals["sum"] = max(cls.max_residuals.get("sum", 0.0), worst)
            cls.skipped += skipped
            if worst > tol:
                cls.failing_check = "sum"
                family_ok = False
                break
            worst, skipped = _max_over_grid(
                lambda p: _pair_abs(product_condition_residuals(f, g, p)), points)
            cls.max_residuals["product"] = max(cls.max_residuals.get("product", 0.0), worst)
            cls.skipped += skipped
            if worst > tol:
                cls.failing_check = "product"
                family_ok = False
                break
        if family_ok:
            cls.label = HYPERMEROMORPHIC_IN_FAMILY
        results.append(cls)
    return results
