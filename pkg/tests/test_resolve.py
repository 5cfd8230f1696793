import random

import pytest

from oracles import random_rewrite, random_word
from posbraid.braidcore import BraidWord, Permutation, coxeter_length, is_simple_word, perm_of_word
from posbraid.poly import Laurent2
from posbraid.resolve import (
    ResolutionTree, build_tree, collect_decomposition, find_square_split,
    hecke_decompose_iterative,
)

W = BraidWord


def perm(*letters, n=4):
    return perm_of_word(W(n, letters))


def poly(terms):
    return Laurent2(terms)


# Figure 5 coefficients, as (dv, dz) -> c
FIG5 = {
    perm(): poly({(8, 0): 1, (8, 2): 1}),
    perm(2): poly({(7, 1): 1, (7, 3): 1}),
    perm(3): poly({(7, 1): 2, (7, 3): 1}),
    perm(2, 3): poly({(6, 2): 2, (6, 4): 1}),
    perm(3, 2): poly({(6, 2): 2, (6, 4): 1}),
    perm(3, 2, 3): poly({(5, 1): 1, (5, 3): 3, (5, 5): 1}),
}


def test_find_square_split_examples():
    assert tuple(find_square_split(W(2, (1, 1)))) == (W(2), 1, W(2))
    assert find_square_split(W(3, (1, 2, 1))) is None

    P, i, Q = find_square_split(W(3, (1, 2, 1, 2)))
    assert perm_of_word(P) == perm(2, 1, n=3) and len(P) == 2
    assert i == 2 and Q == W(3)
    # brute force: P s2 s2 Q is the same braid as 1212 up to permutation and length
    assert perm_of_word(P + W(3, (2, 2))) == perm_of_word(W(3, (1, 2, 1, 2)))


def test_find_square_split_invariants():
    rng = random.Random(10)
    for _ in range(300):
        w = random_word(rng, rng.randint(2, 5), 12)
        split = find_square_split(w)
        if split is None:
            assert is_simple_word(w)
            continue
        assert not is_simple_word(w)
        P, i, Q = split
        full = P + W(w.n, (i, i)) + Q
        assert perm_of_word(full) == perm_of_word(w)
        assert len(full) == len(w)
        assert is_simple_word(P + W(w.n, (i,)))
        assert split.prefix.letters + (i,) + Q.letters == w.letters


def check_tree(t: ResolutionTree):
    if t.is_leaf:
        assert is_simple_word(t.word)
        return
    P, i, Q = t.split
    assert perm_of_word(P + W(t.word.n, (i, i)) + Q) == perm_of_word(t.word)
    assert len(P) + 2 + len(Q) == len(t.word)
    assert len(t.left.word) == len(t.word) - 2
    assert len(t.right.word) == len(t.word) - 1
    check_tree(t.left)
    check_tree(t.right)


def test_build_tree_examples():
    assert build_tree(W(3, (1, 2, 1))).is_leaf
    t = build_tree(W(2, (1, 1)))
    assert t.left.word == W(2) and t.right.word == W(2, (1,))
    assert t.left.is_leaf and t.right.is_leaf
    check_tree(build_tree(W.parse("32322323")))


def test_tree_invariants_random():
    rng = random.Random(11)
    for _ in range(60):
        check_tree(build_tree(random_word(rng, rng.randint(2, 5), 10)))


def test_collect_decomposition_fig5():
    dec = collect_decomposition(build_tree(W.parse("32322323")))
    assert dict(dec) == FIG5


def test_iterative_fig5():
    assert dict(hecke_decompose_iterative(W.parse("32322323"))) == FIG5


def test_small_decompositions():
    one = Laurent2.one()
    assert dict(hecke_decompose_iterative(W(3))) == {Permutation.identity(3): one}
    expected = {Permutation.identity(2): Laurent2.monomial(1, 2, 0),
                Permutation.s(1, 2): Laurent2.monomial(1, 1, 1)}
    assert dict(hecke_decompose_iterative(W(2, (1, 1)))) == expected
    assert dict(collect_decomposition(build_tree(W(2, (1, 1))))) == expected
    u = W(4, (1, 3, 2, 1))
    assert dict(collect_decomposition(build_tree(u))) == {perm_of_word(u): one}


def test_iterative_equals_tree():
    rng = random.Random(12)
    for _ in range(150):
        w = random_word(rng, rng.randint(1, 5), 12)
        assert hecke_decompose_iterative(w) == collect_decomposition(build_tree(w))


def test_tree_independence():
    rng = random.Random(13)
    for _ in range(80):
        w = random_word(rng, rng.randint(2, 4), 14)
        base = hecke_decompose_iterative(w)
        for _ in range(3):
            other = random_rewrite(rng, w, rng.randint(1, 12))
            assert collect_decomposition(build_tree(other)) == base


def test_coefficient_monomials():
    rng = random.Random(14)
    for _ in range(100):
        w = random_word(rng, rng.randint(2, 5), 12)
        dec = hecke_decompose_iterative(w)
        for a, c in dec.items():
            assert c
            for (e, zexp), coeff in c.items():
                assert coeff > 0
                assert e == len(w) - coxeter_length(a)
                assert 0 <= zexp <= e


def test_v1_specialization():
    dec = hecke_decompose_iterative(W.parse("32322323"))
    at1 = dec.at_v1()
    assert at1[Permutation.identity(4)] == Laurent2({(0, 0): 1, (0, 2): 1})
    assert all(dv == 0 for c in at1.values() for dv, _ in c.terms)


@pytest.mark.parametrize("word", ["11", "121", "32322323"])
def test_tree_json_shape(word):
    w = W.parse(word)
    data = build_tree(w).to_json()
    assert data["word"] == word

    def walk(node):
        if node.get("split", "x") is None:
            assert set(node) == {"word", "split"}
            return 1
        assert node["left_label"] == "v^2" and node["right_label"] == "v*z"
        return walk(node["left"]) + walk(node["right"])

    assert walk(data) == len(list(build_tree(w).leaves()))
