import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alt_width.errors import CycleSyntaxError, TypeMismatch
from alt_width.perm import (
    CycleType,
    Parity,
    Permutation,
    compose,
    conjugate,
    conjugator,
    cycle_type,
    even_conjugator,
    format_cycles,
    inverse,
    iota,
    is_even,
    parity,
    parse_cycles,
    product,
    word_length,
)

from helpers import from_images, perms, sparse_perms, word_product

P = parse_cycles
E = Permutation.identity()


@pytest.mark.parametrize(
    "text, mapping",
    [
        ("(1 2 3)", {1: 2, 2: 3, 3: 1}),
        ("()", {}),
        ("(1 2)(3 4)", {1: 2, 2: 1, 3: 4, 4: 3}),
        ("(1,2,3)", {1: 2, 2: 3, 3: 1}),
        ("  (5  7) (2, 9)", {5: 7, 7: 5, 2: 9, 9: 2}),
    ],
)
def test_parse(text, mapping):
    assert P(text) == Permutation(mapping)


def test_parse_iota2():
    assert P("(1 2)(3 4)") == iota(2)


@pytest.mark.parametrize(
    "bad",
    ["", "(1 2", "1 2)", "(1)", "(1 2)(2 3)", "(1 1)", "(0 1)", "(-1 2)", "(a b)", "(1 2)x", "(1 2 3) 4"],
)
def test_parse_rejects(bad):
    with pytest.raises(CycleSyntaxError):
        P(bad)


def test_parse_max_point():
    assert P("(1 4294967295)").max_point == 2**32 - 1
    with pytest.raises(CycleSyntaxError):
        P("(1 4294967296)")
    with pytest.raises(CycleSyntaxError):
        P("(1 11)", max_point=10)


@pytest.mark.parametrize(
    "p, text",
    [(E, "()"), (Permutation({1: 2, 2: 3, 3: 1}), "(1 2 3)"), (iota(2), "(1 2)(3 4)"), (P("(3 1 2)(9 4)"), "(1 2 3)(4 9)")],
)
def test_format(p, text):
    assert format_cycles(p) == text


def test_invalid_mapping():
    with pytest.raises(ValueError):
        Permutation({1: 2})
    with pytest.raises(ValueError):
        Permutation({1: 2, 2: 2})
    with pytest.raises(ValueError):
        Permutation({0: 1, 1: 0})
    # fixed points in the input are dropped
    assert Permutation({1: 1, 2: 3, 3: 2}).support == (2, 3)


def test_compose_examples():
    assert compose(P("(1 2)"), P("(1 2)")) == E
    assert compose(P("(1 3 2)"), P("(1 3 4)")) == P("(1 2)(3 4)")
    assert compose(P("(2 3)(4 5)"), P("(1 2)(3 4)")) == P("(1 3 5 4 2)")


def test_compose_right_factor_first():
    # (1 2) applied first sends 1 -> 2, then (2 3) sends 2 -> 3
    assert compose(P("(2 3)"), P("(1 2)"))(1) == 3


@pytest.mark.parametrize("p, q", [("(1 2 3)", "(1 3 2)"), ("(1 2)", "(1 2)"), ("(1 2 3 5)", "(1 5 3 2)")])
def test_inverse(p, q):
    assert inverse(P(p)) == P(q)


@pytest.mark.parametrize(
    "p, c, out",
    [("(1 2)", "(2 3)", "(1 3)"), ("(1 2)(3 4)", "(1 3)", "(2 3)(1 4)"), ("(1 2)(3 4)", "()", "(1 2)(3 4)")],
)
def test_conjugate(p, c, out):
    assert conjugate(P(p), P(c)) == P(out)


def test_conjugate_is_c_p_cinv():
    p, c = P("(1 2 3)(4 5)"), P("(1 4 6)(2 7)")
    assert conjugate(p, c) == product([c, p, inverse(c)])


@pytest.mark.parametrize("p, lengths", [("(1 2 3)", (3,)), ("(1 2)(3 4)", (2, 2)), ("()", ()), ("(1 2)(3 4 5 6)(7 9 8)", (4, 3, 2))])
def test_cycle_type(p, lengths):
    assert cycle_type(P(p)) == CycleType(lengths)


@pytest.mark.parametrize("k", range(0, 8))
def test_word_length_iota(k):
    assert word_length(iota(k)) == k


def test_word_length_examples():
    assert word_length(P("(1 2 3)")) == 2
    assert word_length(P("(1 2 3 5 6 7)")) == 5
    assert word_length(E) == 0


def test_parity_examples():
    assert parity(E) is Parity.EVEN
    assert parity(P("(1 2)")) is Parity.ODD
    assert parity(iota(2)) is Parity.EVEN


def test_iota():
    assert iota(1) == P("(1 2)")
    assert iota(2) == P("(1 2)(3 4)")
    assert iota(0) == E
    with pytest.raises(ValueError):
        iota(-1)


def test_word_length_is_minimal_transposition_count():
    # BFS over S_5 with all transpositions as generators.
    n = 5
    trans = [Permutation({a: b, b: a}) for a, b in itertools.combinations(range(1, n + 1), 2)]
    dist = {E: 0}
    frontier = [E]
    while frontier:
        nxt = []
        for x in frontier:
            for t in trans:
                y = compose(x, t)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    assert len(dist) == 120
    for p, d in dist.items():
        assert word_length(p) == d


def test_conjugator_examples():
    c = conjugator(P("(1 2)"), P("(3 4)"))
    assert c(1) == 3 and c(2) == 4
    assert c == P("(1 3)(2 4)")
    assert conjugator(P("(1 2 3)"), P("(1 2 3)")) == E
    assert conjugator(P("(1 2 3)"), P("(1 3 2)")) == P("(2 3)")
    with pytest.raises(TypeMismatch):
        conjugator(P("(1 2 3)"), P("(1 2)"))


def test_even_conjugator_examples():
    assert even_conjugator(P("(1 2 3)"), P("(1 3 2)")) == compose(P("(4 5)"), P("(2 3)"))
    assert even_conjugator(P("(1 2)"), P("(1 2)")) == E
    assert even_conjugator(iota(2), iota(2)) == E
    with pytest.raises(TypeMismatch):
        even_conjugator(P("(1 2)"), P("(1 2)(3 4)"))


def test_cycle_type_parse_roundtrip():
    t = CycleType((2, 3, 2))
    assert t.lengths == (3, 2, 2)
    assert str(t) == "3+2+2"
    assert CycleType.parse("3+2+2") == t
    assert CycleType.parse("1") == CycleType(())
    with pytest.raises(CycleSyntaxError):
        CycleType.parse("3+1")
    assert cycle_type(t.representative()) == t


def _all_perms(n):
    return [from_images(img) for img in itertools.permutations(range(1, n + 1))]


def test_even_conjugator_exhaustive_small_support():
    # every cycle-type-matched pair with support inside 1..6
    by_type = {}
    for p in _all_perms(6):
        by_type.setdefault(cycle_type(p), []).append(p)
    checked = 0
    for members in by_type.values():
        for src in members:
            for dst in members:
                c = even_conjugator(src, dst)
                assert is_even(c)
                assert conjugate(src, c) == dst
                checked += 1
    assert checked == sum(len(v) ** 2 for v in by_type.values())


# --- properties -------------------------------------------------------------

@given(sparse_perms())
def test_roundtrip(p):
    assert P(format_cycles(p)) == p


@given(perms(), perms(), perms())
def test_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perms())
def test_inverse_law(p):
    assert compose(p, inverse(p)) == Permutation.identity()
    assert compose(inverse(p), p) == Permutation.identity()
    assert cycle_type(inverse(p)) == cycle_type(p)


@given(sparse_perms(), sparse_perms())
def test_conjugation_invariants(p, c):
    q = conjugate(p, c)
    assert cycle_type(q) == cycle_type(p)
    assert word_length(q) == word_length(p)


@given(sparse_perms(), sparse_perms())
def test_subadditive(p, q):
    assert word_length(compose(p, q)) <= word_length(p) + word_length(q)


@given(sparse_perms())
def test_parity_matches_word_length(p):
    assert (parity(p) is Parity.EVEN) == (word_length(p) % 2 == 0)


@given(st.lists(sparse_perms(max_moved=6, max_point=30), max_size=6))
def test_product_matches_pointwise(fs):
    assert product(fs) == word_product(fs)


@settings(max_examples=200)
@given(sparse_perms(), sparse_perms())
def test_conjugator_transports(p, c):
    q = conjugate(p, c)
    assert conjugate(p, conjugator(p, q)) == q
    e = even_conjugator(p, q)
    assert is_even(e) and conjugate(p, e) == q


def test_hash_eq():
    assert hash(P("(1 2 3)")) == hash(P("(2 3 1)"))
    assert len({P("(1 2)"), P("(2 1)"), P("(1 3)")}) == 2
