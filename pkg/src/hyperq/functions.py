"""Quaternion-valued functions as pairs of component expressions.

A QFunction holds the two component expressions of f = f1 + f2*j.  It can
be evaluated to a quaternion value plus one Wirtinger jet per component,
and combined with the algebraic operations of the quaternion product:

    f + g     componentwise
    f * g     (f1 g1 - f2 conj(g2),  f1 g2 + f2 conj(g1))
    conj(f)   (conj(f1), -f2)
    f^-1      conj(f) / (f1 conj(f1) + f2 conj(f2))

All combinators work on the expression trees, so singularities only appear
at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import expr as ex
from .expr import Add, Conj, Expr, Lit, Mul, Neg, Recip, Var
from .jets import WirtingerJet, seed_z1, seed_z2
from .quaternion import Quaternion


@dataclass(frozen=True)
class QFunction:
    f1: Expr
    f2: Expr

    def value(self, point: tuple[complex, complex]) -> Quaternion:
        z1, z2 = complex(point[0]), complex(point[1])
        return Quaternion(self.f1.evaluate(z1, z2), self.f2.evaluate(z1, z2))

    def jets(self, point) -> tuple[WirtingerJet, WirtingerJet]:
        j1 = seed_z1(point)
        j2 = seed_z2(point)
        return self.f1.evaluate(j1, j2), self.f2.evaluate(j1, j2)

    def eval(self, point) -> tuple[Quaternion, WirtingerJet, WirtingerJet]:
        g1, g2 = self.jets(point)
        return Quaternion(g1.value, g2.value), g1, g2

    def source(self) -> str:
        return ex.program_source(self.f1, self.f2)


def parse(text: str) -> QFunction:
    f1, f2 = ex.parse_program(text)
    return QFunction(f1, f2)


def eval_q(f: QFunction, point) -> tuple[Quaternion, WirtingerJet, WirtingerJet]:
    return f.eval(point)


def q_fun_add(f: QFunction, g: QFunction) -> QFunction:
    return QFunction(Add(f.f1, g.f1), Add(f.f2, g.f2))


def q_fun_mul(f: QFunction, g: QFunction) -> QFunction:
    return QFunction(
        Add(Mul(f.f1, g.f1), Neg(Mul(f.f2, Conj(g.f2)))),
        Add(Mul(f.f1, g.f2), Mul(f.f2, Conj(g.f1))),
    )


def q_fun_conj(f: QFunction) -> QFunction:
    return QFunction(Conj(f.f1), Neg(f.f2))


def q_fun_inverse(f: QFunction) -> QFunction:
    scale = Recip(Add(Mul(f.f1, Conj(f.f1)), Mul(f.f2, Conj(f.f2))))
    return QFunction(Mul(scale, Conj(f.f1)), Neg(Mul(scale, f.f2)))


def identity() -> QFunction:
    return QFunction(Var("z1"), Var("z2"))


def constant(q: Quaternion) -> QFunction:
    return QFunction(Lit(q.z1), Lit(q.z2))
