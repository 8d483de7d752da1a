"""Canonical polynomial form in z1, conj(z1), z2, conj(z2) and vanishing orders.

A polynomial is a map from exponent quadruples (a, b, c, d), meaning
z1^a conj(z1)^b z2^c conj(z2)^d, to complex coefficients; zero coefficients
are never stored.  Rational expressions convert to numerator/denominator
pairs, and zero/pole orders at a point come from exact Taylor shifts:
the order is the lowest total degree carrying a nonvanishing coefficient.
"""

from __future__ import annotations

from math import comb, inf

from . import expr as ex
from .errors import NotAZero, NotPolynomial, NotRational
from .functions import QFunction

#: Coefficients whose magnitude falls below COEFF_TOL times the largest
#: coefficient magnitude are treated as numerical zeros.
COEFF_TOL = 1e-12

Key = tuple[int, int, int, int]


class Polynomial4:
    """Polynomial over the four Wirtinger directions, dict-backed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[Key, complex] | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}

    @staticmethod
    def constant(value: complex) -> "Polynomial4":
        return Polynomial4({(0, 0, 0, 0): complex(value)} if value else {})

    @staticmethod
    def variable(name: str) -> "Polynomial4":
        key = {"z1": (1, 0, 0, 0), "z2": (0, 0, 1, 0)}[name]
        return Polynomial4({key: 1 + 0j})

    def __eq__(self, other):
        return isinstance(other, Polynomial4) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Polynomial4({self.coeffs!r})"

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Polynomial4") -> "Polynomial4":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, 0j) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return Polynomial4(out)

    def __neg__(self) -> "Polynomial4":
        return Polynomial4({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "Polynomial4") -> "Polynomial4":
        return self + (-other)

    def __mul__(self, other: "Polynomial4") -> "Polynomial4":
        out: dict[Key, complex] = {}
        for ka, va in self.coeffs.items():
            for kb, vb in other.coeffs.items():
                k = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3])
                s = out.get(k, 0j) + va * vb
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        return Polynomial4(out)

    def __pow__(self, n: int) -> "Polynomial4":
        out = Polynomial4.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def conjugate(self) -> "Polynomial4":
        # conj swaps z <-> conj(z) exponents and conjugates coefficients
        return Polynomial4({
            (b, a, d, c): v.conjugate() for (a, b, c, d), v in self.coeffs.items()
        })

    def evaluate(self, z1: complex, z2: complex) -> complex:
        z1b, z2b = z1.conjugate(), z2.conjugate()
        total = 0j
        for (a, b, c, d), v in self.coeffs.items():
            total += v * z1 ** a * z1b ** b * z2 ** c * z2b ** d
        return total

    def shift(self, point: tuple[complex, complex]) -> "Polynomial4":
        """Taylor shift: re-express in local coordinates centered at point.

        Substitutes z1 -> z1 + q1 (and matching conjugates) and expands, so
        the constant term of the result is the value at the point.
        """
        q1, q2 = complex(point[0]), complex(point[1])
        offsets = (q1, q1.conjugate(), q2, q2.conjugate())
        out = self
        for axis, offset in enumerate(offsets):
            if offset == 0:
                continue
            shifted: dict[Key, complex] = {}
            for key, v in out.coeffs.items():
                n = key[axis]
                for k in range(n + 1):
                    new_key = list(key)
                    new_key[axis] = k
                    nk = tuple(new_key)
                    term = v * comb(n, k) * offset ** (n - k)
                    s = shifted.get(nk, 0j) + term
                    if s == 0:
                        shifted.pop(nk, None)
                    else:
                        shifted[nk] = s
            out = Polynomial4(shifted)
        return out

    def low_degree(self, coeff_tol: float = COEFF_TOL) -> int | float:
        """Smallest total degree with a non-negligible coefficient; inf if none."""
        if not self.coeffs:
            return inf
        scale = max(abs(v) for v in self.coeffs.values())
        degrees = [sum(k) for k, v in self.coeffs.items()
                   if abs(v) > coeff_tol * scale]
        return min(degrees) if degrees else inf


def to_poly(expr: ex.Expr) -> Polynomial4:
    """Canonical polynomial form; rejects reciprocal nodes."""
    if isinstance(expr, ex.Var):
        return Polynomial4.variable(expr.name)
    if isinstance(expr, ex.Lit):
        return Polynomial4.constant(expr.value)
    if isinstance(expr, ex.Neg):
        return -to_poly(expr.arg)
    if isinstance(expr, ex.Conj):
        return to_poly(expr.arg).conjugate()
    if isinstance(expr, ex.Add):
        return to_poly(expr.left) + to_poly(expr.right)
    if isinstance(expr, ex.Mul):
        return to_poly(expr.left) * to_poly(expr.right)
    if isinstance(expr, ex.Pow):
        return to_poly(expr.base) ** expr.exponent
    if isinstance(expr, ex.Recip):
        raise NotPolynomial(f"reciprocal in polynomial context: {ex.to_source(expr)}")
    raise TypeError(f"not an expression node: {expr!r}")


def to_rational(expr: ex.Expr) -> tuple[Polynomial4, Polynomial4]:
    """Exact numerator/denominator pair; no cancellation is attempted."""
    if isinstance(expr, ex.Recip):
        num, den = to_rational(expr.arg)
        if num.is_zero():
            raise NotRational(f"reciprocal of zero: {ex.to_source(expr)}")
        return den, num
    if isinstance(expr, ex.Neg):
        num, den = to_rational(expr.arg)
        return -num, den
    if isinstance(expr, ex.Conj):
        num, den = to_rational(expr.arg)
        return num.conjugate(), den.conjugate()
    if isinstance(expr, ex.Add):
        na, da = to_rational(expr.left)
        nb, db = to_rational(expr.right)
        return na * db + nb * da, da * db
    if isinstance(expr, ex.Mul):
        na, da = to_rational(expr.left)
        nb, db = to_rational(expr.right)
        return na * nb, da * db
    if isinstance(expr, ex.Pow):
        num, den = to_rational(expr.base)
        return num ** expr.exponent, den ** expr.exponent
    return to_poly(expr), Polynomial4.constant(1)


def zero_order(f: QFunction, point, coeff_tol: float = COEFF_TOL) -> int | float:
    """Order of the zero of f at point: min over components of the lowest
    total degree in the Taylor expansion there.

    Components must be polynomial; a component that vanishes identically
    contributes infinity.  Raises NotAZero when f(point) != 0.
    """
    orders = []
    for component in (f.f1, f.f2):
        shifted = to_poly(component).shift(point)
        order = shifted.low_degree(coeff_tol)
        if order == 0:
            raise NotAZero(
                f"component {ex.to_source(component)} is nonzero at {point}")
        orders.append(order)
    return min(orders)


def pole_order(f: QFunction, point, coeff_tol: float = COEFF_TOL) -> int:
    """Order of the pole of f at point, from numerator/denominator pairs.

    Per component: (vanishing order of denominator) minus (vanishing order
    of numerator), clamped at zero; the result is the max over components.
    An identically-zero component has no pole.
    """
    orders = [0]
    for component in (f.f1, f.f2):
        num, den = to_rational(component)
        if num.is_zero():
            continue
        num_order = num.shift(point).low_degree(coeff_tol)
        den_order = den.shift(point).low_degree(coeff_tol)
        orders.append(max(0, den_order - num_order))
    return max(orders)
