"""The quaternionic projective line and related geometric checks.

Points of the hypersphere are quaternion lines through the origin of H^2:
homogeneous pairs (q1, q2) != (0, 0) modulo RIGHT multiplication by a
nonzero quaternion.  The two charts are zeta = q1 * q2^-1 (defined away
from the point at infinity) and zeta' = q2 * q1^-1 (defined away from
zero); on the overlap zeta * zeta' = 1.

Also here: complex lines and the complex projective line embedded in the
hypersphere, the membership test for the two-parameter algebra of
real-component functions, elementary symmetric coefficients of a branch
tuple, and atlas verification driven by the sha (no zeroes, no poles,
kernel conditions) check on transition functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BothZero, OutsideChart, SingularValue
from .functions import QFunction, parse
from .grid import GridSpec, require_points
from .operators import (hyperholomorphy_residuals,
                        inverse_hyperholomorphy_residuals)
from .quaternion import EPS_SING, ONE, Quaternion, ZERO
from .report import ResidualReport, pair_abs, run_pointwise


@dataclass(frozen=True)
class HPPoint:
    """Normalized homogeneous pair: (zeta, 1) for finite points, (1, 0) for
    the point at infinity."""
    q1: Quaternion
    q2: Quaternion

    def is_infinity(self) -> bool:
        return self.q2 == ZERO


def hp_normalize(q1: Quaternion, q2: Quaternion, eps: float = EPS_SING) -> HPPoint:
    if q2.norm_sq() > eps:
        return HPPoint(q1 * q2.inverse(eps), ONE)
    if q1.norm_sq() > eps:
        return HPPoint(ONE, ZERO)
    raise BothZero("(0, 0) is not a projective point")


def chart_zeta(p: HPPoint) -> Quaternion:
    if p.q2.norm_sq() <= EPS_SING:
        raise OutsideChart("zeta is undefined at infinity")
    return p.q1 * p.q2.inverse()


def chart_zeta_prime(p: HPPoint) -> Quaternion:
    if p.q1.norm_sq() <= EPS_SING:
        raise OutsideChart("zeta' is undefined at zero")
    return p.q2 * p.q1.inverse()


def embed_complex_line(a: Quaternion, z: complex) -> Quaternion:
    """Point of the complex line through a: a + (z, 0)."""
    return a + Quaternion.from_complex(z)


def embed_cp1(w1: complex, w2: complex) -> HPPoint:
    """Complex homogeneous pair into the hypersphere via c -> (c, 0)."""
    return hp_normalize(Quaternion.from_complex(w1), Quaternion.from_complex(w2))


# ---------------------------------------------------------------------------
# sha verification and atlases


def verify_sha_transition(t: QFunction, overlap_samples, tol: float = 1e-8,
                          zero_tol: float = 1e-6) -> ResidualReport:
    """Check that a transition function is sha on the sampled overlap.

    Per sample: both kernel systems (hyperholomorphy and
    inverse-hyperholomorphy) must vanish within tol and the value must stay
    away from zero (norm_sq above zero_tol).  Evaluation singularities
    (poles on the overlap) fail the check rather than being skipped.
    """
    points = require_points(overlap_samples)
    report = ResidualReport(name="sha", tolerance=tol, n_points=len(points))
    zeroes = 0
    singular = 0
    for point in points:
        try:
            value = t.value(point)
            residual = max(pair_abs(hyperholomorphy_residuals(t, point)),
                           pair_abs(inverse_hyperholomorphy_residuals(t, point)))
        except SingularValue:
            singular += 1
            continue
        if value.norm_sq() < zero_tol:
            zeroes += 1
        if report.argmax_point is None or residual > report.max_abs:
            report.max_abs = residual
            report.argmax_point = point
    report.extra["zero_points"] = zeroes
    report.extra["singular_points"] = singular
    report.passed = (report.max_abs <= tol and zeroes == 0 and singular == 0)
    return report


@dataclass
class Transition:
    between: tuple[str, str]
    function: QFunction
    samples: list
    source: str = ""


@dataclass
class Atlas:
    charts: list[str]
    transitions: list[Transition]


def load_atlas(data: dict) -> Atlas:
    """Build an Atlas from its JSON description.

    Expected shape:
        {"charts": ["zeta", "zeta_prime"],
         "transitions": [{"between": ["zeta", "zeta_prime"],
                          "function": "f1 = ...; f2 = ...",
                          "grid": {...}}]}
    A transition may carry an explicit "points" list of [re1, im1, re2, im2]
    rows instead of a "grid" spec.
    """
    charts = [str(c) for c in data["charts"]]
    transitions = []
    for row in data["transitions"]:
        src = row["function"]
        if "points" in row:
            samples = [(complex(a, b), complex(c, d))
                       for a, b, c, d in row["points"]]
        else:
            samples = GridSpec.from_json(row.get("grid", {})).points()
        pair = row.get("between", charts[:2])
        transitions.append(Transition((str(pair[0]), str(pair[1])),
                                      parse(src), samples, source=src))
    return Atlas(charts, transitions)


def verify_atlas(atlas: Atlas, tol: float = 1e-8,
                 zero_tol: float = 1e-6) -> list[tuple[Transition, ResidualReport]]:
    out = []
    for transition in atlas.transitions:
        report = verify_sha_transition(transition.function, transition.samples,
                                       tol, zero_tol)
        report.name = f"sha:{transition.between[0]}->{transition.between[1]}"
        out.append((transition, report))
    return out


# ---------------------------------------------------------------------------
# Membership in the alpha/beta algebra of real-component functions


def a_alpha_beta_membership(f: QFunction, alpha: float, beta: float,
                            grid, tol: float = 1e-8) -> ResidualReport:
    """Pointwise membership in the algebra alpha*(a+bi) + beta*(c+dj).

    Values must satisfy f1 in alpha*C + beta*R and f2 in beta*R, where a
    zero coefficient collapses the factor: beta = 0 forces f2 = 0, alpha = 0
    forces f1 real (or zero when beta = 0 too).  The report carries the max
    deviation from the allowed value set over the grid.
    """
    def deviation(point) -> float:
        value = f.value(point)
        if beta != 0:
            d2 = abs(value.z2.imag)
        else:
            d2 = abs(value.z2)
        if alpha != 0:
            d1 = 0.0
        elif beta != 0:
            d1 = abs(value.z1.imag)
        else:
            d1 = abs(value.z1)
        return max(d1, d2)

    report = run_pointwise("a_alpha_beta", deviation, grid, tol)
    report.extra["alpha"] = alpha
    report.extra["beta"] = beta
    return report


# ---------------------------------------------------------------------------
# Symmetric functions of branch values


def elementary_symmetric_coeffs(branch_values) -> list[Quaternion]:
    """Coefficients [c1, ..., cn] of (T - f1)(T - f2)...(T - fn).

    T is treated as central and the factor order is exactly the given
    order; with pairwise commuting values this reproduces the classical
    signed elementary symmetric functions.
    """
    values = list(branch_values)
    if not values:
        raise ValueError("need at least one branch value")
    coeffs: list[Quaternion] = []
    for v in values:
        # multiply the accumulated monic polynomial by (T - v) on the right:
        # with c0 = 1 and c_{k+1} = 0, each new c_j = c_j - c_{j-1} * v
        padded = [ONE] + coeffs + [ZERO]
        coeffs = [padded[j] - padded[j - 1] * v for j in range(1, len(padded))]
    return coeffs


def eval_monic_poly(coeffs, t: Quaternion) -> Quaternion:
    """t^n + c1 t^(n-1) + ... + cn with coefficients multiplied on the left."""
    coeffs = list(coeffs)
    n = len(coeffs)
    powers = [ONE]
    for _ in range(n):
        powers.append(powers[-1] * t)
    out = powers[n]
    for j, c in enumerate(coeffs, start=1):
        out = out + c * powers[n - j]
    return out
