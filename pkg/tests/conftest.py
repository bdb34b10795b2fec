import random
from fractions import Fraction

import pytest

from wittbc import GroupRingElem, QmodZ, TruncSeries, W0Elem, WittVector


@pytest.fixture
def rng():
    return random.Random(20260810)


def rand_fraction(rng, max_num=6, max_den=3, nonzero=False):
    num = rng.randint(-max_num, max_num)
    if nonzero and num == 0:
        num = 1
    return Fraction(num, rng.randint(1, max_den))


def rand_witt(rng, order, max_num=4, max_den=3):
    return WittVector([rand_fraction(rng, max_num, max_den)
                       for _ in range(order)])


def rand_series(rng, order, max_num=4, max_den=3):
    return TruncSeries([Fraction(1)] + [rand_fraction(rng, max_num, max_den)
                                        for _ in range(order)])


def rand_qmz(rng, max_den=12):
    den = rng.randint(1, max_den)
    return QmodZ.from_value(Fraction(rng.randint(0, den - 1), den))


def rand_w0(rng, max_terms=3, max_den=12, max_mult=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.randint(-max_mult, max_mult)
        if m:
            a = rand_qmz(rng, max_den)
            terms[a] = terms.get(a, 0) + m
    return W0Elem(terms)


def rand_group_elem(rng, ring="Z", max_terms=3, max_den=12, with_qexp=False):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        c = rng.randint(-4, 4)
        if not c:
            continue
        qexp = Fraction(rng.randint(0, 4), rng.randint(1, 3)) if with_qexp else Fraction(0)
        key = (qexp, rand_qmz(rng, max_den))
        terms[key] = terms.get(key, 0) + c
    return GroupRingElem(terms, ring)
