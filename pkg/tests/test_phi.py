import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import read_golden
from nonderangements import oracle
from nonderangements.invseq import R, avoiders, encode_word, parse_sequence
from nonderangements.perm import (
    Permutation,
    apply_transposition,
    embed,
    fixed_points,
    identity,
    is_non_derangement,
    parse_permutation,
)
from nonderangements.phi import (
    TaggedNonDerangement,
    ext_bijection,
    ext_inverse,
    extend,
    phi,
    phi_cyclewise,
    phi_inverse,
    phi_trace,
)
from nonderangements.recurrences import SplitPair, varphi_inverse

P = parse_permutation
S = parse_sequence


def hand_phi(e):
    """The one-line rule written out on plain lists, independent of the library."""
    w = [None, None, *encode_word(e)]  # w[k] = w_k
    sigma = [1]
    for k in range(2, len(e) + 1):
        if w[k] == R:
            continue
        after_r = k > 2 and w[k - 1] == R
        grown = sigma + list(range(len(sigma) + 1, k + 1))
        others = [i for i, y in enumerate(sigma, 1) if i == y and i != w[k]]
        t = k - 1 if after_r or not others else k
        sigma = [t if y == w[k] else w[k] if y == t else y for y in grown]
    return sigma


@pytest.mark.parametrize("name, e", [("table1.txt", "001322"), ("table2.txt", "0102230")])
def test_trace_matches_golden_table(name, e):
    rows = read_golden(name)
    trace = phi_trace(S(e))
    assert len(trace) == len(rows)
    for row, (k, letter, one_line, cycles) in zip(trace, rows):
        assert row.k == int(k)
        assert (row.letter is None and letter == "") or str(row.letter) == letter
        assert row.sigma == P(one_line) == P(cycles)


def test_trace_single_row():
    (row,) = phi_trace((0,))
    assert (row.k, row.letter, row.one_line, row.cycles) == (1, None, "1", "(1)")


def test_trace_rows_quoted():
    assert phi_trace(S("001322"))[4].sigma == P("21543")
    r = phi_trace(S("0102230"))[3]
    assert (r.k, r.letter, r.one_line) == (4, 2, "2314")
    assert r.sigma == P("(2,3,1)(4)")


def test_phi_examples():
    t = phi(S("001322"))
    assert t.perm == P("21543") and t.component == 5 and t.n == 6
    t = phi(S("0102230"))
    assert t.perm == P("2574361") and t.component == 7
    assert phi((0,)).perm == identity(1)


def test_phi_cyclewise_examples():
    assert phi_cyclewise(S("001322")).perm == P("(2,1)(5,3)(4)")
    assert phi_cyclewise(S("0102230")).perm == P("(2,5,3,7,1)(4)(6)")
    # w_2 = 1 with sigma_1 = (1): (1,1) fixes everything, so the image is 12
    assert phi_cyclewise(S("01")).perm == P("12") == phi(S("01")).perm


def test_hand_simulation_of_01():
    assert hand_phi(S("01")) == [1, 2]


@pytest.mark.parametrize("n", range(1, 8))
def test_against_hand_simulation(n):
    for e in avoiders(n):
        assert list(phi(e).perm.images) == hand_phi(e)


def test_phi_rejects_bad_input():
    for e in [(0, 0, 0), (0, 2), ()]:
        with pytest.raises(ValueError):
            phi(e)
        with pytest.raises(ValueError):
            phi_cyclewise(e)


def test_phi_inverse_examples():
    assert phi_inverse(TaggedNonDerangement(6, P("21543"))) == S("001322")
    assert phi_inverse(P("2574361")) == S("0102230")
    assert phi_inverse(P("21543"), n=6) == S("001322")
    assert phi_inverse(identity(1)) == (0,)


def test_phi_inverse_errors():
    with pytest.raises(ValueError):
        phi_inverse(P("2143"))  # derangement
    with pytest.raises(ValueError):
        phi_inverse(P("21543"), n=7)  # neither [7] nor [6]
    with pytest.raises(ValueError):
        phi_inverse(TaggedNonDerangement(6, P("21543")), n=5)


@pytest.mark.parametrize("n", range(1, 8))
def test_object_level_bijection(n):
    images = {}
    for e in avoiders(n):
        t = phi(e)
        assert t == phi_cyclewise(e)
        assert (t.component == n - 1) == (n > 1 and e[-1] == e[-2])
        assert phi_inverse(t) == e
        images[t.perm] = e
    codomain = {Permutation(p) for p in oracle.non_derangements(n) + oracle.non_derangements(n - 1)}
    assert set(images) == codomain
    for p in codomain:
        assert phi(phi_inverse(p, n)).perm == p


@pytest.mark.parametrize("n", range(1, 8))
def test_intermediate_permutations_are_non_derangements(n):
    for e in avoiders(n):
        w = (None, *encode_word(e))
        for row in phi_trace(e):
            assert is_non_derangement(row.sigma)
            assert row.sigma.n == (row.k - 1 if w[row.k - 1] == R else row.k)


@pytest.mark.parametrize("n", range(2, 8))
def test_each_step_is_varphi_inverse(n):
    for e in avoiders(n):
        trace = phi_trace(e)
        for prev, row in zip(trace, trace[1:]):
            if row.letter != R:
                assert row.sigma == varphi_inverse(SplitPair(row.k, row.letter, prev.sigma))


def test_extend_examples():
    assert extend(1, S("010223")) == S("0102230")
    assert extend(1, (0,)) == S("01")
    assert extend(2, S("01")) == S("012")
    with pytest.raises(ValueError):
        extend(3, S("01"))
    with pytest.raises(ValueError):
        extend(0, S("01"))


@pytest.mark.parametrize("n", range(1, 9))
def test_extend_is_a_bijection_onto_nonrepeating_tail(n):
    image = [extend(a, e) for e in avoiders(n) for a in range(1, n + 1)]
    target = [e for e in avoiders(n + 1) if e[-1] != e[-2]]
    assert sorted(image) == sorted(target)
    assert len(set(image)) == len(image)


def test_ext_examples():
    assert ext_bijection(1, S("010223")) == P("2574361")
    assert ext_bijection(1, (0,)) == P("12")
    assert ext_inverse(P("2574361")) == (1, S("010223"))


@pytest.mark.parametrize("n", range(1, 7))
def test_ext_round_trip(n):
    seen = set()
    for e in avoiders(n):
        for a in range(1, n + 1):
            p = ext_bijection(a, e)
            assert p.n == n + 1
            assert ext_inverse(p) == (a, e)
            seen.add(p)
    assert len(seen) == oracle.count_non_derangements(n + 1)


def test_union_cardinality_small():
    for n in range(1, 9):
        assert sum(1 for _ in avoiders(n)) == oracle.count_non_derangements(n) + oracle.count_non_derangements(n - 1)


def test_apply_transposition_on_embedded_sigma():
    assert apply_transposition(3, 5, embed(P("2134"), 5)) == P("21543")
    assert fixed_points(P("21543")) == (4,)


@st.composite
def long_avoiders(draw):
    n = draw(st.integers(1, 40))
    e = []
    for i in range(n):
        choices = [x for x in range(i + 1) if not (len(e) >= 2 and e[-1] == e[-2] == x)]
        e.append(draw(st.sampled_from(choices)))
    return tuple(e)


@given(long_avoiders())
@settings(max_examples=300, deadline=None)
def test_random_long_inputs(e):
    t = phi(e)
    assert t == phi_cyclewise(e)
    assert is_non_derangement(t.perm)
    assert phi_inverse(t) == e
