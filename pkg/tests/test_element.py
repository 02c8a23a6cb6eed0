import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antl.center import central_from_character, central_generator
from antl.checks import monomials
from antl.element import (
    Element,
    NotCentral,
    add,
    central_character,
    is_central,
    mul,
    parse_element,
    scale,
)
from antl.fock import configs, matrix_block
from antl.qpoly import QPoly
from antl.words import Word, zn_degree

q = QPoly.q()


def a(n, i):
    return Element.generator(n, i)


def random_element(rng, n, pool, terms=3):
    return Element(n, {rng.choice(pool): rng.randint(-3, 3) or 1 for _ in range(terms)})


def test_add_and_scale():
    e = a(4, 1) + a(4, 0) * 3
    assert add(e, Element.zero(4)) == e
    assert add(e, scale(-1, e)).is_zero()
    assert scale(2, a(4, 1)).terms == {(1,): 2}
    with pytest.raises(ValueError):
        a(3, 0) + a(4, 0)


def test_mul_examples():
    x, y = mul(a(3, 0), a(3, 1)), mul(a(3, 1), a(3, 0))
    assert x and y and x != y
    assert mul(central_generator(1, 3), central_generator(2, 3)).is_zero()
    assert mul(a(5, 1), a(5, 1)).is_zero()
    assert mul(a(5, 0), a(5, 2)) == mul(a(5, 2), a(5, 0))


def test_from_word_canonicalizes():
    assert Element.from_word(Word(5, (2, 0))) == Element.from_word(Word(5, (0, 2)))
    assert Element.from_word(Word(5, (2, 2))).is_zero()


def test_is_central_examples():
    assert is_central(Element.one(4))
    assert not is_central(a(4, 0))
    for n in (3, 4, 5, 6):
        for k in range(1, n):
            assert is_central(central_generator(k, n))


def test_central_character_examples():
    assert central_character(Element.one(4)) == [QPoly.const(1)] * 3
    for k in range(1, 4):
        chars = central_character(central_generator(k, 4))
        assert chars == [q if j == k else QPoly() for j in range(1, 4)]
    e = central_generator(1, 4) + central_generator(2, 4) ** 2
    assert central_character(e) == [q, q**2, QPoly()]
    with pytest.raises(NotCentral):
        central_character(a(4, 1))


def test_central_character_against_matrix_blocks():
    e = central_generator(1, 4) + central_generator(2, 4) ** 2
    for k, p in enumerate(central_character(e), start=1):
        block = matrix_block(e, k)
        assert all(r == c and v == p for (r, c), v in block.entries.items())
        assert len(block.entries) == (len(configs(4, k)) if p else 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_central_decomposition_roundtrip(n):
    rng = random.Random(n)
    for _ in range(4):
        chars = [QPoly({e: rng.randint(-2, 2) for e in range(1, 4)}) for _ in range(n - 1)]
        c = central_from_character(n, chars)
        assert is_central(c)
        assert central_character(c) == chars
        for w in c.terms:
            assert all(zn_degree(Word(n, w)))


def test_central_from_character_with_constant():
    chars = [QPoly({0: 2, 1: 1}), QPoly({0: 2})]
    c = central_from_character(3, chars)
    assert c.constant_term() == 2
    assert central_character(c) == chars
    with pytest.raises(ValueError):
        central_from_character(3, [QPoly.const(1), QPoly.const(2)])


def test_element_text_roundtrip():
    t = central_generator(2, 4)
    assert parse_element(4, str(t)) == t
    assert str(Element.zero(4)) == "0"
    assert parse_element(4, "0").is_zero()
    assert parse_element(3, "+2·[] -1·[1 0]") == Element.one(3) * 2 - Element.from_word(Word(3, (1, 0)))
    with pytest.raises(ValueError):
        parse_element(3, "+1·[1] garbage")


@pytest.mark.parametrize("n", [3, 4, 5])
def test_mul_associative_and_unital(n):
    rng = random.Random(10 + n)
    pool = monomials(n, 5)
    one = Element.one(n)
    for _ in range(60):
        x, y, z = (random_element(rng, n, pool) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert one * x == x == x * one


@pytest.mark.parametrize("n", [3, 4])
def test_mul_respects_representation(n):
    rng = random.Random(20 + n)
    pool = monomials(n, 5)
    for _ in range(40):
        x, y = random_element(rng, n, pool), random_element(rng, n, pool)
        for k in range(1, n):
            assert matrix_block(x * y, k) == matrix_block(x, k) @ matrix_block(y, k)


@settings(max_examples=40)
@given(st.integers(3, 6), st.data())
def test_distributivity(n, data):
    pool = monomials(n, 4)
    pick = lambda: Element(n, {data.draw(st.sampled_from(pool)): data.draw(st.integers(-3, 3))})
    x, y, z = pick(), pick(), pick()
    assert x * (y + z) == x * y + x * z
    assert (y + z) * x == y * x + z * x
