import random

import pytest

from hyperq.expr import Add, Conj, Lit, Mul, Neg, Pow, Recip, Var, walk
from hyperq.quaternion import Quaternion


@pytest.fixture
def rng():
    return random.Random(20240811)


def random_complex(rng, scale=1.0):
    return complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))


def random_quaternion(rng, scale=1.0):
    return Quaternion(random_complex(rng, scale), random_complex(rng, scale))


def random_expr(rng, depth, allow_recip=True, allow_conj=True):
    """Random expression tree, leaves at depth 0."""
    if depth <= 0:
        pick = rng.random()
        if pick < 0.4:
            return Var("z1")
        if pick < 0.8:
            return Var("z2")
        return Lit(random_complex(rng))
    choices = ["add", "mul", "neg", "leaf", "pow"]
    if allow_conj:
        choices.append("conj")
    if allow_recip:
        choices.append("recip")
    kind = rng.choice(choices)
    if kind == "add":
        return Add(random_expr(rng, depth - 1, allow_recip, allow_conj),
                   random_expr(rng, depth - 1, allow_recip, allow_conj))
    if kind == "mul":
        return Mul(random_expr(rng, depth - 1, allow_recip, allow_conj),
                   random_expr(rng, depth - 1, allow_recip, allow_conj))
    if kind == "neg":
        return Neg(random_expr(rng, depth - 1, allow_recip, allow_conj))
    if kind == "conj":
        return Conj(random_expr(rng, depth - 1, allow_recip, allow_conj))
    if kind == "recip":
        return Recip(random_expr(rng, depth - 1, allow_recip, allow_conj))
    if kind == "pow":
        return Pow(random_expr(rng, depth - 2 if depth > 1 else 0,
                               allow_recip, allow_conj), rng.choice([2, 3]))
    return random_expr(rng, 0, allow_recip, allow_conj)


def subexpression_magnitudes(expr, point):
    """Magnitudes of every subexpression value at the point; None if singular."""
    from hyperq.errors import SingularValue
    out = []
    for node in walk(expr):
        try:
            out.append(abs(node.evaluate(complex(point[0]), complex(point[1]))))
        except SingularValue:
            return None
    return out


def regular_sample(rng, depth=6, lo=1e-3, hi=1e3, allow_recip=True,
                   allow_conj=True, max_tries=500):
    """(expr, point) with all subexpression magnitudes inside [lo, hi]."""
    for _ in range(max_tries):
        expr = random_expr(rng, rng.randint(1, depth), allow_recip, allow_conj)
        point = (random_complex(rng, 1.5), random_complex(rng, 1.5))
        mags = subexpression_magnitudes(expr, point)
        if mags is None:
            continue
        if all(lo <= m <= hi for m in mags):
            return expr, point
    raise RuntimeError("could not draw a regular sample")


def smooth_pair(rng, depth=4):
    """Random smooth function pair (no reciprocals) and nothing else."""
    return (random_expr(rng, rng.randint(1, depth), allow_recip=False),
            random_expr(rng, rng.randint(1, depth), allow_recip=False))
