import itertools
import random
from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from conres.cohomring import (
    DegreeTwoClass,
    RingElement,
    cup,
    elementary_symmetric,
    first_order_h4,
    generator,
    h2_order,
    normal_form,
    ring_poincare,
    shift_difference,
    staircase_monomials,
)
from conres.qcombinat import QPoly


# --------------------------------------------------------------------------
# independent oracle: row reduction of the relation space, degree by degree
# --------------------------------------------------------------------------


def _monomials_of_degree(n, d):
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        mono = [0] * n
        for var in combo:
            mono[var] += 1
        out.append(tuple(mono))
    return sorted(out)


def _relation_rows(n, d):
    """Spanning set of the degree-d part of the symmetric ideal: m * e_k for
    all monomials m of degree d - k, k = 1..min(n, d)."""
    columns = {mono: j for j, mono in enumerate(_monomials_of_degree(n, d))}
    rows = []
    for k in range(1, min(n, d) + 1):
        e_k = elementary_symmetric(n, k)
        for m in _monomials_of_degree(n, d - k):
            row = [Fraction(0)] * len(columns)
            for mono, coeff in e_k.items():
                product = tuple(a + b for a, b in zip(m, mono))
                row[columns[product]] += coeff
            rows.append(row)
    return columns, rows


def _rref(rows):
    pivots = {}
    for row in rows:
        row = list(row)
        for col, prow in pivots.items():
            factor = row[col]
            if factor:
                row = [x - factor * p for x, p in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = Fraction(1) / row[lead]
        row = [x * inv for x in row]
        for col, prow in list(pivots.items()):
            factor = prow[lead]
            if factor:
                pivots[col] = [x - factor * y for x, y in zip(prow, row)]
        pivots[lead] = row
    return pivots


def _oracle_reduce(n, d, vector):
    """Reduce a degree-d coefficient vector modulo the symmetric ideal."""
    columns, rows = _relation_rows(n, d)
    pivots = _rref(rows)
    vec = [Fraction(0)] * len(columns)
    for mono, coeff in vector.items():
        vec[columns[mono]] += coeff
    for col, prow in pivots.items():
        factor = vec[col]
        if factor:
            for j in range(len(vec)):
                vec[j] -= factor * prow[j]
    return {mono: vec[j] for mono, j in columns.items() if vec[j]}


def _oracle_is_zero(n, expr):
    by_degree = {}
    for mono, coeff in expr.items():
        bucket = by_degree.setdefault(sum(mono), {})
        bucket[mono] = bucket.get(mono, 0) + coeff
    return all(not _oracle_reduce(n, d, vec) for d, vec in by_degree.items())


def _difference(x, y):
    out = dict(x)
    for mono, coeff in y.items():
        out[mono] = out.get(mono, 0) - coeff
    return out


def _oracle_quotient_dims(n):
    dims = {0: 1}
    top = n * (n - 1) // 2
    for d in range(1, top + 1):
        columns, rows = _relation_rows(n, d)
        rank = len(_rref(rows))
        dims[d] = len(columns) - rank
    return dims


@pytest.mark.parametrize("n", [2, 3])
def test_oracle_quotient_dimensions(n):
    assert _oracle_quotient_dims(n) == dict(ring_poincare(n).items())


@pytest.mark.parametrize("n", [2, 3, 4])
def test_normal_form_agrees_with_oracle_on_random_pairs(n):
    rng = random.Random(7 * n)
    monos = list(staircase_monomials(n)) + _monomials_of_degree(n, 2) + _monomials_of_degree(n, 3)
    for _ in range(25):
        x = {rng.choice(monos): rng.randint(-3, 3) for _ in range(3)}
        y = {rng.choice(monos): rng.randint(-3, 3) for _ in range(3)}
        same_class = _oracle_is_zero(n, _difference(x, y))
        assert (normal_form(x, n) == normal_form(y, n)) == same_class


def test_normal_form_matches_oracle_zero_detection():
    # the defining relations are zero in the quotient
    for n in (2, 3):
        for k in range(1, n + 1):
            assert _oracle_is_zero(n, elementary_symmetric(n, k))
    # square of the first generator in two variables
    assert _oracle_is_zero(2, {(2, 0): 1})
    # complete degree-2 relation in three variables
    assert _oracle_is_zero(3, {(2, 0, 0): 1, (1, 1, 0): 1, (0, 2, 0): 1})


# --------------------------------------------------------------------------
# normal form
# --------------------------------------------------------------------------


def test_normal_form_kills_symmetric_relations():
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert normal_form(elementary_symmetric(n, k), n).is_zero()


def test_normal_form_idempotent_and_linear():
    rng = random.Random(11)
    n = 4
    monos = _monomials_of_degree(n, 2) + _monomials_of_degree(n, 3)
    for _ in range(20):
        x = {rng.choice(monos): rng.randint(-4, 4) for _ in range(3)}
        y = {rng.choice(monos): rng.randint(-4, 4) for _ in range(3)}
        nx, ny = normal_form(x, n), normal_form(y, n)
        assert normal_form(nx, n) == nx
        sum_xy = Counter(x)
        for m, c in y.items():
            sum_xy[m] += c
        assert normal_form(dict(sum_xy), n) == nx + ny


def test_normal_form_examples():
    # first symmetric polynomial of the generators
    assert normal_form(elementary_symmetric(5, 1), 5).is_zero()
    # (c^1)^2 collapses in two variables
    assert normal_form({(2, 0): 1}, 2).is_zero()
    # in three variables (c^1)^2 is already on the staircase
    nf = normal_form({(2, 0, 0): 1}, 3)
    assert nf == RingElement(3, (((2, 0, 0), 1),))


def test_staircase_dimensions():
    for n in range(1, 9):
        monos = list(staircase_monomials(n))
        assert len(monos) == factorial(n)
        by_degree = Counter(sum(m) for m in monos)
        assert dict(sorted(by_degree.items())) == dict(ring_poincare(n).items())


# --------------------------------------------------------------------------
# cup products
# --------------------------------------------------------------------------


def test_cup_examples():
    one = RingElement.one(2)
    c1 = generator(2, 1)
    c2 = generator(2, 2)
    assert cup(one, c1) == c1
    assert cup(c1, c1).is_zero()
    assert cup(c1, c2).is_zero()
    with pytest.raises(ValueError):
        cup(generator(2, 1), generator(3, 1))


def _random_element(n, rng):
    monos = list(staircase_monomials(n))
    return normal_form({rng.choice(monos): rng.randint(-3, 3) for _ in range(3)}, n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_cup_commutative_associative(n):
    rng = random.Random(100 + n)
    for _ in range(10):
        x, y, z = (_random_element(n, rng) for _ in range(3))
        assert cup(x, y) == cup(y, x)
        assert cup(cup(x, y), z) == cup(x, cup(y, z))


# --------------------------------------------------------------------------
# ring Poincare polynomial
# --------------------------------------------------------------------------


def test_ring_poincare_examples():
    assert ring_poincare(1) == QPoly.one()
    assert ring_poincare(2) == QPoly({0: 1, 1: 1})
    assert ring_poincare(3) == QPoly({0: 1, 1: 2, 2: 2, 3: 1})
    with pytest.raises(ValueError):
        ring_poincare(0)


# --------------------------------------------------------------------------
# degree-2 order filtration
# --------------------------------------------------------------------------


def test_h2_order_examples():
    assert h2_order((5, 5, 5, 5)) == 0
    assert h2_order((1, 2, 3, 4, 5)) == 1
    assert h2_order((0, 0, 1, -1, 0)) == 4
    assert h2_order((0, 1, 4, 9, 16)) == 2


def test_h2_order_constant_shift_invariance():
    assert h2_order((3, 4, 7, 12)) == h2_order((13, 14, 17, 22))
    assert DegreeTwoClass((3, 4, 7)) == DegreeTwoClass((10, 11, 14))


def test_h2_order_bounded_by_length():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(1, 8)
        seq = tuple(rng.randint(-9, 9) for _ in range(n))
        assert 0 <= h2_order(seq) <= n - 1


def test_shift_difference_examples():
    assert shift_difference((1, 2, 3, 4)) == DegreeTwoClass((1, 1, 1))
    assert shift_difference((1, 4, 9, 16)) == DegreeTwoClass((3, 5, 7))
    assert shift_difference((7, 7, 7)) == DegreeTwoClass((0, 0))
    with pytest.raises(ValueError):
        shift_difference((1,))


def test_shift_difference_drops_order_by_one():
    rng = random.Random(23)
    for _ in range(40):
        degree = rng.randint(1, 6)
        length = rng.randint(degree + 2, degree + 6)
        coeffs = [rng.randint(-5, 5) for _ in range(degree)] + [rng.choice((-3, -2, -1, 1, 2, 3))]
        seq = tuple(sum(c * i**j for j, c in enumerate(coeffs)) for i in range(1, length + 1))
        assert h2_order(seq) == degree
        assert h2_order(shift_difference(seq)) == degree - 1


# --------------------------------------------------------------------------
# the order-1 generator in degree 4
# --------------------------------------------------------------------------


def test_first_order_h4_degenerates_for_n2():
    # the q^2-part of the two-variable quotient is zero, so so is the class
    assert first_order_h4(2).is_zero()
    assert ring_poincare(2).coefficient(2) == 0


def test_first_order_h4_small_values():
    assert first_order_h4(3) == RingElement(3, (((1, 1, 0), 1), ((2, 0, 0), -1)))
    for n in (3, 4, 5, 6):
        element = first_order_h4(n)
        assert not element.is_zero()
        assert element.homogeneous(2) == element


def test_first_order_h4_matches_oracle():
    for n in (2, 3):
        raw = {
            tuple(2 if j == i else 0 for j in range(1, n + 1)): i
            for i in range(1, n + 1)
        }
        nf = first_order_h4(n)
        assert _oracle_is_zero(n, _difference(raw, nf.as_dict()))
