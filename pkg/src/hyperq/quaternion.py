"""Quaternions as pairs of complex numbers.

A quaternion q = z1 + z2*j is stored as the pair (z1, z2).  Multiplication
follows the rule c*j = j*conj(c) for complex c, so

    (a1 + a2 j)(b1 + b2 j) = (a1 b1 - a2 conj(b2)) + (a1 b2 + a2 conj(b1)) j

Only right multiplication is exposed; norm_sq(q) = |z1|^2 + |z2|^2 and the
right inverse is q^-1 = conj(q) / norm_sq(q).

An independent oracle over the classical (1, i, j, k) basis lives in
``hamilton_mul_real4`` so the pair formula can be cross-checked; the bridge
is ``to_real4`` / ``from_real4`` with components (Re z1, Im z1, Re z2, Im z2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SingularValue

#: Absolute guard on norm_sq below which inversion refuses to proceed.
EPS_SING = 1e-12


@dataclass(frozen=True)
class Quaternion:
    z1: complex
    z2: complex

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.z1 + other.z1, self.z2 + other.z2)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.z1 - other.z1, self.z2 - other.z2)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.z1, -self.z2)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(
                self.z1 * other.z1 - self.z2 * other.z2.conjugate(),
                self.z1 * other.z2 + self.z2 * other.z1.conjugate(),
            )
        if isinstance(other, (int, float, complex)):
            # right multiplication by the embedded scalar (other, 0)
            c = complex(other)
            return Quaternion(self.z1 * c, self.z2 * c.conjugate())
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            # left multiplication by the embedded scalar: scales both parts
            c = complex(other)
            return Quaternion(c * self.z1, c * self.z2)
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.z1.conjugate(), -self.z2)

    def norm_sq(self) -> float:
        return abs(self.z1) ** 2 + abs(self.z2) ** 2

    def abs(self) -> float:
        """Euclidean length, i.e. sqrt(norm_sq)."""
        return self.norm_sq() ** 0.5

    def inverse(self, eps: float = EPS_SING) -> "Quaternion":
        s = self.norm_sq()
        if s <= eps:
            raise SingularValue(f"cannot invert quaternion with norm_sq={s!r}")
        return Quaternion(self.z1.conjugate() / s, -self.z2 / s)

    def to_real4(self) -> tuple[float, float, float, float]:
        return (self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    @staticmethod
    def from_real4(r0: float, r1: float, r2: float, r3: float) -> "Quaternion":
        return Quaternion(complex(r0, r1), complex(r2, r3))

    @staticmethod
    def from_complex(c: complex) -> "Quaternion":
        return Quaternion(complex(c), 0j)

    def is_close(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return (self - other).abs() <= tol


ZERO = Quaternion(0j, 0j)
ONE = Quaternion(1 + 0j, 0j)
I = Quaternion(1j, 0j)
J = Quaternion(0j, 1 + 0j)
K = Quaternion(0j, 1j)


def q_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def q_conj(q: Quaternion) -> Quaternion:
    return q.conj()


def norm_sq(q: Quaternion) -> float:
    return q.norm_sq()


def q_inverse(q: Quaternion, eps: float = EPS_SING) -> Quaternion:
    return q.inverse(eps)


def to_real4(q: Quaternion) -> tuple[float, float, float, float]:
    return q.to_real4()


def from_real4(r0: float, r1: float, r2: float, r3: float) -> Quaternion:
    return Quaternion.from_real4(r0, r1, r2, r3)


def hamilton_mul_real4(a, b):
    """Multiply two real 4-tuples with the classical Hamilton table.

    Basis order (1, i, j, k) with ij = k, jk = i, ki = j.  Kept free of any
    complex-pair arithmetic so it can serve as an independent oracle.
    """
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )
