from itertools import combinations

import pytest

from antl.center import (
    BasisLabel,
    basis_element,
    basis_size,
    basis_word,
    central_generator,
    e_word,
    enumerate_basis,
    factorize,
    fntl_dimension,
    projector_monomial,
    unsigned_central_generator,
)
from antl.element import Element, is_central
from antl.fock import Config, act_word
from antl.words import Word, commutation_equal, is_nonzero, zn_degree

from oracles import (
    RewritingZeroOracle,
    basis_coverage,
    class_key,
    nonzero_words,
    particle_paths,
    wedge_act,
)

KNOWN_CENTRAL = {
    (3, 1): [((2, 1, 0), 1), ((0, 2, 1), 1), ((1, 0, 2), 1)],
    (3, 2): [((0, 1, 2), -1), ((1, 2, 0), -1), ((2, 0, 1), -1)],
    (4, 1): [((3, 2, 1, 0), 1), ((0, 3, 2, 1), 1), ((1, 0, 3, 2), 1), ((2, 1, 0, 3), 1)],
    (4, 2): [
        ((0, 2, 1, 3), -1), ((1, 3, 0, 2), -1), ((0, 1, 3, 2), -1),
        ((1, 2, 0, 3), -1), ((2, 3, 1, 0), -1), ((3, 0, 2, 1), -1),
    ],
    (4, 3): [((0, 1, 2, 3), 1), ((1, 2, 3, 0), 1), ((2, 3, 0, 1), 1), ((3, 0, 1, 2), 1)],
}


def subsets(n):
    for k in range(1, n):
        yield from combinations(range(n), k)


def test_projector_examples():
    assert projector_monomial((1, 5, 6), 8).letters == (0, 7, 4, 3, 2, 1, 5, 6)
    assert projector_monomial((1,), 3).letters == (0, 2, 1)
    for n in (3, 5):
        with pytest.raises(ValueError):
            projector_monomial(range(1, n + 1), n)
        with pytest.raises(ValueError):
            projector_monomial((), n)


def _projector_with_gap(I, n, gap):
    """Projector word built from an explicitly chosen gap (positions 1..n)."""
    pos = sorted((x % n) or n for x in I)
    k = len(pos)
    letters = [x % n for x in range(pos[0] - 1 + n, pos[-1], -1)]
    for s in range(k - 1):
        letters += range(pos[s + 1] - 1, pos[s], -1)
    letters += [p % n for p in pos[gap:] + pos[:gap]]
    return Word(n, tuple(letters))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_projector_gap_independence(n):
    for I in subsets(n):
        pos = sorted((x % n) or n for x in I)
        k = len(pos)
        gaps = [l for l in range(1, k) if pos[l - 1] + 1 < pos[l]]
        if pos[-1] + 1 < pos[0] + n:
            gaps.append(k)
        ref = projector_monomial(I, n)
        assert zn_degree(ref) == (1,) * n
        for g in gaps:
            assert commutation_equal(ref, _projector_with_gap(I, n, g))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_projector_action_against_wedge_oracle(n):
    for I in subsets(n):
        w = projector_monomial(I, n).letters
        target = tuple(sorted((x % n) or n for x in I))
        for k in range(n + 1):
            for J in combinations(range(1, n + 1), k):
                got = wedge_act(n, w, J)
                if J == target:
                    assert got == ((-1) ** (k - 1), 1, target)
                else:
                    assert got is None


@pytest.mark.parametrize("key", sorted(KNOWN_CENTRAL))
def test_central_generator_examples(key):
    n, k = key
    expected = Element.from_terms(n, KNOWN_CENTRAL[key])
    got = central_generator(k, n)
    assert got == expected
    assert len(got.terms) == len(list(combinations(range(n), k)))


def test_central_generator_text_order():
    assert str(central_generator(1, 3)) == "+1·[2 1 0] +1·[0 2 1] +1·[1 0 2]"
    with pytest.raises(ValueError):
        central_generator(3, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_central_generator_powers(n):
    ts = [central_generator(k, n) for k in range(1, n)]
    for i, t in enumerate(ts):
        assert is_central(t)
        for other in ts[i + 1:]:
            assert (t * other).is_zero()
        power = t
        for _ in range(4):
            power = power * t
            assert power
    assert unsigned_central_generator(2, n) == central_generator(2, n) * -1


def test_e_word_examples():
    assert e_word((2,), (1,), 7).letters == (1,)
    assert commutation_equal(e_word((0, 2), (0, 1), 7), Word(7, (6, 5, 4, 3, 1, 2, 0, 1)))
    assert e_word((1, 5, 6), (1, 5, 6), 8) == projector_monomial((1, 5, 6), 8)
    with pytest.raises(ValueError):
        e_word((0,), (0, 1), 4)
    with pytest.raises(ValueError):
        e_word((0, 1, 2), (0, 1, 2), 3)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_e_word_diagonal(n):
    for I in subsets(n):
        assert e_word(I, I, n) == projector_monomial(I, n)


@pytest.mark.parametrize("n", [3, 4])
def test_e_word_minimal_and_unique(n):
    """Every word that moves all particles of J onto I with fewest q agrees with e_word."""
    produced = {}
    for k in range(1, n):
        for I in combinations(range(n), k):
            for J in combinations(range(n), k):
                w = e_word(I, J, n)
                res = act_word(w, Config.from_labels(n, J))
                assert res is not None and res[1].labels() == I
                (ell, _), = res[0].items()
                produced[I, J] = (ell, w)
    worst = max(ell for ell, _ in produced.values())
    bound = n * (n - 1 + worst - 1)
    best: dict = {}
    for w in nonzero_words(n, bound, RewritingZeroOracle(n)):
        for k in range(1, n):
            for J in combinations(range(n), k):
                travel = particle_paths(n, w, J)
                if travel is None or min(travel.values()) < 1:
                    continue
                coef, qpow, out = wedge_act(n, w, tuple(sorted((x or n) for x in J)))
                I = tuple(sorted(p % n for p in out))
                prev = best.get((I, J))
                if prev is None or qpow < prev[0]:
                    best[I, J] = (qpow, {class_key(n, w)})
                elif qpow == prev[0]:
                    prev[1].add(class_key(n, w))
    assert set(best) == set(produced)
    for pair, (ell, w) in produced.items():
        qmin, classes = best[pair]
        assert qmin == ell
        assert classes == {class_key(n, w.letters)}


@pytest.mark.parametrize(
    "word, n, label",
    [
        ((1,), 7, BasisLabel(1, 0, (2,), (1,))),
        ((0, 2, 1, 0, 2, 1), 3, BasisLabel(1, 1, (1,), (1,))),
        ((0, 7, 4, 3, 2, 1, 5, 6), 8, BasisLabel(3, 0, (1, 5, 6), (1, 5, 6))),
    ],
)
def test_factorize_examples(word, n, label):
    assert factorize(Word(n, word)) == label


def test_factorize_rejects_zero_and_empty():
    with pytest.raises(ValueError):
        factorize(Word(3, (1, 1)))
    with pytest.raises(ValueError):
        factorize(Word(3, ()))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_factorize_projectors(n):
    for I in subsets(n):
        assert factorize(projector_monomial(I, n)) == BasisLabel(len(I), 0, I, I)


def test_enumerate_basis_counts():
    assert len(enumerate_basis(3, 0)) == 18
    assert len(enumerate_basis(4, 1)) == 136 == basis_size(4, 1)
    with pytest.raises(ValueError):
        enumerate_basis(3, -1)


@pytest.mark.parametrize("n, ell_max", [(3, 2), (4, 1), (5, 1)])
def test_basis_roundtrip(n, ell_max):
    basis = enumerate_basis(n, ell_max)
    labels = [label for label, _ in basis]
    assert len(set(labels)) == len(labels)
    assert len({w.letters for _, w in basis}) == len(basis)
    for label, w in basis:
        assert factorize(w) == label
        assert basis_word(label, n) == w and is_nonzero(w)


@pytest.mark.parametrize("n", [3, 4])
def test_basis_word_equals_element_product(n):
    for label, w in enumerate_basis(n, 2):
        assert basis_element(label, n) == Element.from_word(w)


@pytest.mark.parametrize("n", [3, 4])
def test_basis_covers_low_q_monomials(n):
    basis = enumerate_basis(n, 1)
    bound = max(len(w) for _, w in basis)
    assert {class_key(n, w.letters) for _, w in basis} == basis_coverage(n, bound, 1)


def test_basis_label_text():
    label = BasisLabel(2, 1, (0, 2), (0, 1))
    assert str(label) == "k=2 l=1 I=(0,2) J=(0,1)"
    assert BasisLabel.parse(str(label)) == label
    with pytest.raises(ValueError):
        BasisLabel.parse("k=2 l=1 I=(0) J=(0,1)")
    with pytest.raises(ValueError):
        BasisLabel.parse("nonsense")


@pytest.mark.parametrize("n, expected", [(3, 5), (4, 14), (5, 42)])
def test_fntl_dimension(n, expected):
    assert fntl_dimension(n) == expected


def test_fntl_dimension_brute_force():
    # count commutation classes of nonzero words avoiding a_0
    for n, expected in [(3, 5), (4, 14)]:
        oracle = RewritingZeroOracle(n)
        classes = set()
        layer = [()]
        while layer:
            nxt = []
            for w in layer:
                classes.add(class_key(n, w))
                for g in range(1, n):
                    v = (g,) + w
                    if not oracle.is_zero(v) and class_key(n, v) not in classes:
                        nxt.append(v)
            layer = nxt
        assert len(classes) == expected
