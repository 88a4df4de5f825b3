import random
from fractions import Fraction

import pytest

from qsphere.scalars import (ONE, Q, ZERO, NumericField, RationalFunction,
                             SYMBOLIC, arith, q_bracket, q_int_bracket,
                             specialize)


def rf(num, den=(1,)):
    return RationalFunction(num, den)


def test_arith_examples():
    assert arith(Q, Q, "mul") == rf((0, 0, 1))
    assert arith(rf((-1, 0, 1)), rf((-1, 1)), "div") == rf((1, 1))  # q+1
    lhs = arith((ONE + Q) / Q, (ONE - Q) / Q, "add")
    assert lhs == rf((2,), (0, 1))
    with pytest.raises(ZeroDivisionError):
        arith(ONE, ZERO, "div")
    with pytest.raises(ValueError):
        arith(ONE, ONE, "pow")


def test_canonical_form_is_unique():
    a = rf((2, 2), (4,))
    b = rf((1, 1), (2,))
    assert a == b and hash(a) == hash(b)
    # denominator sign is normalised
    assert rf((1,), (-1, 1)) == rf((-1,), (1, -1))
    # common polynomial factors cancel
    assert rf((-1, 0, 1), (1, 1)) == rf((-1, 1))


def test_field_axioms_random():
    rng = random.Random(11)

    def rnd():
        num = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 4)))
        den = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 3)))
        return rf(num if any(num) else (1,), den if any(den) else (1,))

    for _ in range(300):
        a, b, c = rnd(), rnd(), rnd()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == ZERO
        if b != ZERO:
            assert (a / b) * b == a


def test_specialize_examples_and_homomorphism():
    assert specialize(Q * Q + ONE, 2) == 5
    assert specialize(ONE / Q, Fraction(1, 2)) == 2
    assert specialize((Q - 2) / (Q + 1), 2) == 0
    with pytest.raises(ValueError):
        specialize(Q, 0)
    with pytest.raises(ValueError):
        specialize(Q, 1)
    with pytest.raises(ZeroDivisionError):
        specialize(ONE / (Q - 2), 2)
    rng = random.Random(5)
    q0 = Fraction(5, 3)
    for _ in range(100):
        a = rf(tuple(rng.randint(-4, 4) for _ in range(3)) or (1,))
        b = rf(tuple(rng.randint(-4, 4) for _ in range(3)) or (1,))
        if not a.num:
            a = ONE
        if not b.num:
            b = ONE
        assert specialize(a * b, q0) == specialize(a, q0) * specialize(b, q0)
        assert specialize(a + b, q0) == specialize(a, q0) + specialize(b, q0)


def test_q_bracket_values():
    assert q_bracket(2, 1) == ONE + Q ** 2
    assert q_bracket(3, 1) == ONE + Q ** 2 + Q ** 4
    # the value at (4, 2) is fixed by the reduction oracle (see
    # test_koszul/test_acceptance); the two readings diverge exactly here
    assert q_bracket(4, 2) == rf((1, 0, 1, 0, 2, 0, 1, 0, 1))
    assert q_int_bracket(4, 2) == rf((1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1))
    assert q_bracket(4, 2) != q_int_bracket(4, 2)


def test_q_bracket_trivial_ends_and_errors():
    for j in range(9):
        assert q_bracket(j, 0) == ONE
        assert q_bracket(j, j) == ONE
    with pytest.raises(ValueError):
        q_bracket(2, 3)
    with pytest.raises(ValueError):
        q_bracket(-1, 0)


def test_q_bracket_coefficients_nonnegative():
    # values are polynomials in q^2 with coefficients in {0, 1, ...}
    for j in range(7):
        for r in range(j + 1):
            v = q_bracket(j, r)
            assert v.den == (1,)
            assert all(c >= 0 for c in v.num)
            assert all(c == 0 for i, c in enumerate(v.num) if i % 2 == 1)


def test_render_roundtrip_styles():
    assert (Q ** -2).render() == "q^-2"
    assert (ONE + Q).render() == "q + 1"
    assert ((ONE + Q) / Q).render() == "1 + q^-1"
    assert (ONE / (ONE + Q)).render() == "1/(q + 1)"
    assert ZERO.render() == "0"


def test_numeric_field_guards():
    f = NumericField(Fraction(3, 2))
    assert f.q_power(-1) == Fraction(2, 3)
    with pytest.raises(ValueError):
        NumericField(0)
    with pytest.raises(ValueError):
        NumericField(-1)
    assert SYMBOLIC.q_power(2) == Q * Q
