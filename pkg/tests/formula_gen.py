"""Seeded random generators shared by the logic tests and the acceptance
suite: arbitrary ASTs for the print/parse round-trip, and normal-form
existential sentences with a brute-force truth oracle."""

from __future__ import annotations

import random
from fractions import Fraction

from beatty.golden import f_floor
from beatty.logic import (
    F,
    Add,
    And,
    Cmp,
    Const,
    Div,
    Exists,
    Forall,
    Implies,
    Not,
    Or,
    PPred,
    Scale,
    Sub,
    Var,
)

_VAR_POOL = ["x", "y", "z", "u", "v", "w", "n0", "n1"]


def random_term(rng: random.Random, depth: int, variables: list[str]):
    if depth <= 0 or rng.random() < 0.35:
        if variables and rng.random() < 0.6:
            return Var(rng.choice(variables))
        return Const(rng.randint(-99, 99))
    kind = rng.randrange(4)
    if kind == 0:
        return Add(random_term(rng, depth - 1, variables), random_term(rng, depth - 1, variables))
    if kind == 1:
        return Sub(random_term(rng, depth - 1, variables), random_term(rng, depth - 1, variables))
    if kind == 2:
        return Scale(rng.choice([-7, -3, -2, -1, 0, 1, 2, 3, 5, 12]),
                     random_term(rng, depth - 1, variables))
    return F(random_term(rng, depth - 1, variables))


def random_formula(rng: random.Random, depth: int, variables: list[str] | None = None):
    variables = list(variables or [])
    if depth <= 0 or rng.random() < 0.2:
        kind = rng.randrange(4)
        if kind == 0:
            return Cmp(random_term(rng, 2, variables), rng.choice(["<", "="]),
                       random_term(rng, 2, variables))
        if kind == 1:
            return Div(rng.randint(1, 9), random_term(rng, 2, variables))
        if kind == 2:
            return PPred(rng.randint(1, 6), rng.randint(1, 6),
                         rng.randint(0, 9), rng.randint(0, 9),
                         random_term(rng, 1, variables), random_term(rng, 1, variables))
        return Not(Cmp(random_term(rng, 1, variables), "=", random_term(rng, 1, variables)))
    kind = rng.randrange(6)
    if kind == 0:
        return Not(random_formula(rng, depth - 1, variables))
    if kind <= 3:
        ctor = (And, Or, Implies)[kind - 1]
        return ctor(random_formula(rng, depth - 1, variables),
                    random_formula(rng, depth - 1, variables))
    fresh = next((v for v in _VAR_POOL if v not in variables), f"t{len(variables)}")
    body = random_formula(rng, depth - 1, variables + [fresh])
    return (Exists if kind == 4 else Forall)(fresh, body)


# --- normal-form sentence generation with an independent oracle --------------

NF_SLOPES = [Fraction(0), Fraction(1), Fraction(3, 2), Fraction(8, 5),
             Fraction(5, 3), Fraction(2), Fraction(13, 8)]


def random_nf_sentence(rng: random.Random, max_modulus: int = 12, max_width: int = 10_000):
    """An existential normal-form sentence with a finite window, plus the
    raw data needed to brute-force it."""
    x = Var("x")
    conjuncts = []
    congruences_x = []
    for _ in range(rng.randrange(3)):
        n = rng.randint(1, max_modulus)
        m = rng.randrange(n)
        congruences_x.append((n, m))
        conjuncts.append(Div(n, Sub(x, Const(m))))
    congruences_fx = []
    for _ in range(rng.randrange(3)):
        n = rng.randint(1, max_modulus)
        m = rng.randrange(n)
        congruences_fx.append((n, m))
        conjuncts.append(Div(n, Sub(F(x), Const(m))))
    low = rng.randint(-100, 5000)
    high = low + rng.randint(2, max_width)
    conjuncts.append(Cmp(Const(low), "<", x))
    conjuncts.append(Cmp(x, "<", Const(high)))
    linear = None
    if rng.random() < 0.6:
        slope = rng.choice(NF_SLOPES)
        offset = rng.randint(-8, 8)
        relation = rng.choice(["<", "=", ">"])
        linear = (relation, slope, offset)
        lhs = Scale(slope.denominator, F(x))
        rhs = Add(Scale(slope.numerator, x), Const(offset * slope.denominator))
        if relation == "<":
            conjuncts.append(Cmp(lhs, "<", rhs))
        elif relation == "=":
            conjuncts.append(Cmp(lhs, "=", rhs))
        else:
            conjuncts.append(Cmp(rhs, "<", lhs))
    body = conjuncts[0]
    for conj in conjuncts[1:]:
        body = And(body, conj)
    sentence = Exists("x", body)
    data = (congruences_x, congruences_fx, low, high, linear)
    return sentence, data


def nf_brute_holds(data, x: int) -> bool:
    congruences_x, congruences_fx, low, high, linear = data
    if not low < x < high:
        return False
    if any(x % n != m for n, m in congruences_x):
        return False
    fx = f_floor(x)
    if any(fx % n != m for n, m in congruences_fx):
        return False
    if linear is not None:
        relation, slope, offset = linear
        lhs = slope.denominator * fx
        rhs = slope.numerator * x + offset * slope.denominator
        if relation == "<" and not lhs < rhs:
            return False
        if relation == "=" and not lhs == rhs:
            return False
        if relation == ">" and not lhs > rhs:
            return False
    return True


def nf_brute_witness(data) -> int | None:
    _, _, low, high, _ = data
    for x in range(low + 1, high):
        if nf_brute_holds(data, x):
            return x
    return None
