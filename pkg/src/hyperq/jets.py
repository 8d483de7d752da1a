"""First-order Wirtinger jets and a finite-difference oracle.

A jet carries the value of a complex expression at a point of C^2 together
with its four first-order Wirtinger partials, treating z1, conj(z1), z2,
conj(z2) as independent directions.  Conjugation swaps the barred and
unbarred slots and conjugates everything; the reciprocal uses
d(1/f) = -df / f^2 per direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SingularValue
from .quaternion import EPS_SING


@dataclass(frozen=True)
class WirtingerJet:
    value: complex
    d_z1: complex = 0j
    d_z1bar: complex = 0j
    d_z2: complex = 0j
    d_z2bar: complex = 0j

    def __add__(self, other: "WirtingerJet") -> "WirtingerJet":
        return WirtingerJet(
            self.value + other.value,
            self.d_z1 + other.d_z1,
            self.d_z1bar + other.d_z1bar,
            self.d_z2 + other.d_z2,
            self.d_z2bar + other.d_z2bar,
        )

    def __neg__(self) -> "WirtingerJet":
        return WirtingerJet(-self.value, -self.d_z1, -self.d_z1bar,
                            -self.d_z2, -self.d_z2bar)

    def __sub__(self, other: "WirtingerJet") -> "WirtingerJet":
        return self + (-other)

    def __mul__(self, other: "WirtingerJet") -> "WirtingerJet":
        u, v = self.value, other.value
        return WirtingerJet(
            u * v,
            u * other.d_z1 + v * self.d_z1,
            u * other.d_z1bar + v * self.d_z1bar,
            u * other.d_z2 + v * self.d_z2,
            u * other.d_z2bar + v * self.d_z2bar,
        )

    def conjugate(self) -> "WirtingerJet":
        return WirtingerJet(
            self.value.conjugate(),
            self.d_z1bar.conjugate(),
            self.d_z1.conjugate(),
            self.d_z2bar.conjugate(),
            self.d_z2.conjugate(),
        )

    def recip(self, eps: float = EPS_SING) -> "WirtingerJet":
        v = self.value
        if abs(v) ** 2 <= eps:
            raise SingularValue(f"reciprocal of near-zero value {v!r}")
        w = 1 / v
        m = -w * w
        return WirtingerJet(w, m * self.d_z1, m * self.d_z1bar,
                            m * self.d_z2, m * self.d_z2bar)


def seed_z1(point: tuple[complex, complex]) -> WirtingerJet:
    return WirtingerJet(complex(point[0]), d_z1=1)


def seed_z2(point: tuple[complex, complex]) -> WirtingerJet:
    return WirtingerJet(complex(point[1]), d_z2=1)


def seed_const(value: complex) -> WirtingerJet:
    return WirtingerJet(complex(value))


def jet_add(a: WirtingerJet, b: WirtingerJet) -> WirtingerJet:
    return a + b


def jet_mul(a: WirtingerJet, b: WirtingerJet) -> WirtingerJet:
    return a * b


def jet_conj(a: WirtingerJet) -> WirtingerJet:
    return a.conjugate()


def jet_recip(a: WirtingerJet, eps: float = EPS_SING) -> WirtingerJet:
    return a.recip(eps)


#: Default central-difference step; balances truncation against roundoff.
FD_STEP = 1e-5


def fd_partials(f, point, step: float = FD_STEP):
    """Central-difference Wirtinger partials of f: (z1, z2) -> complex.

    Returns (d_z1, d_z1bar, d_z2, d_z2bar) built from the real/imaginary
    coordinate stencils:  d/dz = (d/dx - i d/dy)/2, d/dzbar = (d/dx + i d/dy)/2.
    """
    z1, z2 = point
    h = step
    dx1 = (f(z1 + h, z2) - f(z1 - h, z2)) / (2 * h)
    dy1 = (f(z1 + 1j * h, z2) - f(z1 - 1j * h, z2)) / (2 * h)
    dx2 = (f(z1, z2 + h) - f(z1, z2 - h)) / (2 * h)
    dy2 = (f(z1, z2 + 1j * h) - f(z1, z2 - 1j * h)) / (2 * h)
    return (
        0.5 * (dx1 - 1j * dy1),
        0.5 * (dx1 + 1j * dy1),
        0.5 * (dx2 - 1j * dy2),
        0.5 * (dx2 + 1j * dy2),
    )
