import random
from fractions import Fraction
from math import comb

import pytest
import sympy

from conftest import to_sympy
from errors import StructuralError
from poly import (ONE, VariableTable, boolean_reduce, evaluate, monomials_up_to, mono_from_vars,
                  product, substitute)


@pytest.fixture
def table():
    return VariableTable.build(["x1", "x2", "x3"])


def random_poly(rng, table, terms=4, degree=3):
    p = table.zero()
    for _ in range(terms):
        mono = table.const(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        for _ in range(rng.randint(0, degree)):
            mono = mono * table.var(rng.randrange(table.size))
        p = p + mono
    return p


def test_graded_lex_order():
    assert monomials_up_to(2, 2) == [
        (),
        ((0, 1),),
        ((1, 1),),
        ((0, 2),),
        ((0, 1), (1, 1)),
        ((1, 2),),
    ]


@pytest.mark.parametrize("n, d", [(1, 4), (3, 2), (5, 3), (4, 0)])
def test_monomial_count(n, d):
    assert len(monomials_up_to(n, d)) == comb(n + d, d)


def test_text_form(table):
    x1, x2 = table.var(0), table.var(1)
    beta = Fraction(-1, 2) - x1.scale(Fraction(1, 2)) - x2.scale(Fraction(1, 2))
    assert beta.to_text() == "-1/2 + -1/2*x1 + -1/2*x2"
    assert table.zero().to_text() == "0"
    assert (x1 * x1 * x2).to_text() == "x1^2*x2"


def test_floats_rejected(table):
    with pytest.raises(TypeError):
        table.const(0.5)


def test_zero_polynomial(table):
    zero = table.var(0) - table.var(0)
    assert zero.is_zero()
    assert zero.degree == -1
    assert zero == 0


def test_product_against_sympy(table):
    rng = random.Random(7)
    for _ in range(25):
        a, b = random_poly(rng, table), random_poly(rng, table)
        assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
        assert sympy.expand(to_sympy(a + b) - to_sympy(a) - to_sympy(b)) == 0


def test_distributive_and_commutative(table):
    rng = random.Random(11)
    for _ in range(20):
        a, b, c = (random_poly(rng, table) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


def test_empty_product_is_one(table):
    assert product([], table) == 1


def test_boolean_reduce(table):
    x1, x2, x3 = (table.var(i) for i in range(3))
    p = x1 ** 2 * x2 ** 3 + x3 ** 2
    reduced = boolean_reduce(p, [0, 1])
    assert reduced == x1 * x2 + x3 ** 2


def test_evaluate(table):
    x1, x2 = table.var(0), table.var(1)
    p = x1 * x2 - 2
    assert evaluate(p, {0: 3, 1: Fraction(1, 3)}) == -1
    with pytest.raises(StructuralError):
        evaluate(p, {0: 1})


def test_complement_substitution(table):
    other = VariableTable.build(["y1", "y2", "y3"])
    p = table.var(0) * table.var(1)
    image = substitute(p, {i: 1 - other.var(i) for i in range(3)})
    y1, y2 = other.var(0), other.var(1)
    assert image == 1 - y1 - y2 + y1 * y2
    assert image.table == other


def test_mixed_tables_rejected(table):
    other = VariableTable.build(["y1"])
    with pytest.raises(StructuralError):
        table.var(0) + other.var(0)


def test_duplicate_names_rejected():
    with pytest.raises(StructuralError):
        VariableTable.build(["x1", "x1"])


def test_squarefree_monomial(table):
    assert mono_from_vars([2, 0, 2]) == ((0, 1), (2, 1))
    assert table.const(4).coefficient(ONE) == 4


def random_point(rng, table):
    return {i: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for i in range(table.size)}


def test_associativity(table):
    rng = random.Random(17)
    for _ in range(20):
        a, b, c = (random_poly(rng, table) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)


def test_evaluate_is_multiplicative(table):
    rng = random.Random(19)
    for _ in range(20):
        a, b = random_poly(rng, table), random_poly(rng, table)
        point = random_point(rng, table)
        assert evaluate(a * b, point) == evaluate(a, point) * evaluate(b, point)
        assert evaluate(a + b, point) == evaluate(a, point) + evaluate(b, point)


def test_boolean_reduce_idempotent_and_exact_on_cube(table):
    rng = random.Random(23)
    for _ in range(20):
        p = random_poly(rng, table, degree=5)
        once = boolean_reduce(p, range(3))
        assert boolean_reduce(once, range(3)) == once
        for bits in range(8):
            point = {i: (bits >> i) & 1 for i in range(3)}
            assert evaluate(once, point) == evaluate(p, point)


@pytest.mark.slow
def test_ten_thousand_identities(table):
    rng = random.Random(31)
    for _ in range(2500):
        a, b, c = (random_poly(rng, table, terms=3, degree=2) for _ in range(3))
        assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
        assert (a * b) * c == a * (b * c)
        point = random_point(rng, table)
        assert evaluate(a * (b + c), point) == evaluate(a, point) * (evaluate(b, point) + evaluate(c, point))
        reduced = boolean_reduce(a * b, range(3))
        assert boolean_reduce(reduced, range(3)) == reduced
