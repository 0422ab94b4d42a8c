
import pytest

from conftest import read_golden
from nonderangements import _kernels, oracle
from nonderangements.perm import (
    MarkedPermutation,
    Permutation,
    fixed_points,
    parse_marked,
    parse_permutation,
)
from nonderangements.recurrences import (
    SplitPair,
    derangement_split,
    derangement_split_inverse,
    in_theta_codomain,
    in_theta_domain,
    parse_split_pair,
    theta,
    theta_case,
    theta_excluded_codomain,
    theta_excluded_domain,
    theta_inverse,
    theta_inverse_case,
    varphi,
    varphi_alt,
    varphi_alt_inverse,
    varphi_inverse,
)

P = parse_permutation


def nd(n):
    return [Permutation(p) for p in oracle.non_derangements(n)]


def marked(n):
    return [MarkedPermutation(Permutation(p), m) for p, m in oracle.marked_permutations(n)]


# -- golden tables -------------------------------------------------------------


def test_table3_varphi():
    rows = read_golden("table3.txt")
    assert len(rows) == 15
    for pi, image in rows:
        assert varphi(P(pi)) == parse_split_pair(image, 4), pi
    assert {P(pi) for pi, _ in rows} == set(nd(4))


def test_table4_theta():
    rows = read_golden("table4.txt")
    assert len(rows) == 15
    for pi, image in rows:
        assert theta(P(pi)) == parse_marked(image), pi
    assert {parse_marked(m) for _, m in rows} == {m for m in marked(4) if in_theta_codomain(m)}


@pytest.mark.parametrize("row", read_golden("theta_examples.txt"), ids=lambda r: r[0])
def test_theta_worked_examples(row):
    pi, case, k, image = row
    p = P(pi)
    assert theta_case(p) == (case, int(k))
    assert theta(p) == parse_marked(image)
    assert theta_inverse(parse_marked(image)) == p


# -- classical split -------------------------------------------------------------


def test_split_examples():
    assert derangement_split(P("(1,2)(3,4)")) == SplitPair(4, 3, P("(1,2)"))
    assert derangement_split(P("(1,2,3)")) == SplitPair(3, 1, P("(1,2)"))
    # the 2-cycle case relabels the survivors order-preservingly
    assert derangement_split(P("(1,4)(2,3)")) == SplitPair(4, 1, P("(1,2)"))
    assert derangement_split_inverse(SplitPair(4, 1, P("(1,2)"))) == P("(1,4)(2,3)")


def test_split_rejects_non_derangements():
    with pytest.raises(ValueError):
        derangement_split(P("123"))
    with pytest.raises(ValueError):
        derangement_split(P("1"))


@pytest.mark.parametrize("n", range(2, 8))
def test_split_round_trip(n):
    images = set()
    for p in map(Permutation, oracle.derangements(n)):
        s = derangement_split(p)
        assert (s.label, s.perm.images) == _kernels.pure.split(p.images)
        assert derangement_split_inverse(s) == p
        images.add(s)
    assert len(images) == (n - 1) * (oracle.count_derangements(n - 1) + oracle.count_derangements(n - 2))


# -- varphi ------------------------------------------------------------------------


def test_varphi_alt_examples():
    assert varphi_alt(P("(1,2)(3)(4)")) == SplitPair(4, 3, P("(3)(1,2)"))
    assert varphi_alt(P("(1,2,3)(4)")) == SplitPair(4, 1, P("(1)(2,3)"))
    assert varphi(P("(1,2,3)(4)")) == SplitPair(4, 2, P("(2)(1,3)"))


def test_split_pair_text():
    s = SplitPair(4, 3, P("(1,2)(3)"))
    assert str(s) == "(3, (1,2)(3))"
    assert parse_split_pair(str(s), 4) == s
    with pytest.raises(ValueError):
        SplitPair(4, 4, P("(1,2)(3)"))
    with pytest.raises(ValueError):
        SplitPair(5, 1, P("(1)"))
    with pytest.raises(ValueError):
        parse_split_pair("3, (1)", 4)


@pytest.mark.parametrize("fwd, bwd, kfwd, kbwd", [
    (varphi, varphi_inverse, "varphi", "varphi_inverse"),
    (varphi_alt, varphi_alt_inverse, "varphi_alt", "varphi_alt_inverse"),
], ids=["varphi", "varphi-alt"])
@pytest.mark.parametrize("n", range(2, 8))
def test_varphi_literal_matches_kernels(fwd, bwd, kfwd, kbwd, n):
    seen = set()
    for p in nd(n):
        s = fwd(p)
        assert (s.label, s.perm.images) == getattr(_kernels.pure, kfwd)(p.images)
        assert bwd(s) == p
        assert getattr(_kernels.pure, kbwd)(s.label, s.perm.images, n) == p.images
        seen.add(s)
    assert len(seen) == (n - 1) * (oracle.count_non_derangements(n - 1) + oracle.count_non_derangements(n - 2))


def test_varphi_inverse_rejects_derangement():
    with pytest.raises(ValueError):
        varphi_inverse(SplitPair(4, 1, P("231")))


# -- theta -------------------------------------------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_theta_literal_matches_kernel_and_is_bijective(n):
    ex = theta_excluded_domain(n)
    images = set()
    for p in nd(n):
        if p == ex:
            with pytest.raises(ValueError):
                theta(p)
            with pytest.raises(ValueError):
                _kernels.pure.theta(p.images)
            continue
        m = theta(p)
        assert _kernels.pure.theta(p.images) == (m.perm.images, m.mark)
        assert theta_inverse(m) == p
        images.add(m)
    cod = {m for m in marked(n) if in_theta_codomain(m)}
    assert images == cod


@pytest.mark.parametrize("n", range(2, 10))
def test_case_b_ranges(n):
    bound = (n - 1) / 2
    ks = set()
    for p in nd(n) if n <= 8 else []:
        if in_theta_domain(p):
            case, k = theta_case(p)
            if case.startswith("B"):
                assert 0 <= k < bound
                ks.add(k)
    for m in marked(n) if n <= 7 else []:
        if in_theta_codomain(m):
            case, kp = theta_inverse_case(m)
            if case in ("B.i", "B.ii"):
                assert 1 <= kp < bound


def test_case_b_k_values_seen():
    # n = 7 leaves no room for a 3-cycle after two 2-cycles; n = 8 does
    for n, expected in [(7, {0, 1}), (8, {0, 1, 2})]:
        cases = [theta_case(p) for p in nd(n) if in_theta_domain(p)]
        assert {k for case, k in cases if case.startswith("B")} == expected


def test_excluded_elements():
    assert theta_excluded_domain(1) == P("1")
    assert theta_excluded_codomain(1) is None
    assert theta_excluded_domain(2) is None
    assert theta_excluded_codomain(2) == MarkedPermutation(P("12"), 1)
    assert theta_excluded_domain(5) == P("(1,2)(3,4)(5)")
    assert theta_excluded_codomain(6) == parse_marked("(*1)(2,3)(4,5)(6)")
    # n = 1: the only non-derangement is excluded and M_1 is empty
    assert nd(1) == [P("1")] and marked(1) == []
    # n = 2: D̄_2 = {12} and M_2 = {(*1)(2), (1)(*2)}; the first is excluded
    assert len(marked(2)) == 2 and theta(P("12")) == parse_marked("(1)(*2)")


@pytest.mark.parametrize("n", range(1, 9))
def test_parity_bookkeeping(n):
    dbar = oracle.count_non_derangements(n)
    m = len(oracle.marked_permutations(n)) if n <= 7 else n * oracle.count_non_derangements(n - 1)
    d_star = 0 if theta_excluded_domain(n) is None else 1
    m_star = 0 if theta_excluded_codomain(n) is None else 1
    assert (dbar - d_star) == (m - m_star)
    assert dbar - m == -(-1) ** n
    assert abs(d_star - m_star) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_marked_count(n):
    assert len(oracle.marked_permutations(n)) == n * oracle.count_non_derangements(n - 1)


def test_marked_permutation_validation():
    with pytest.raises(ValueError):
        MarkedPermutation(P("213"), 3)
    with pytest.raises(ValueError):
        MarkedPermutation(P("132"), 2)


def test_theta_rejects_derangement():
    with pytest.raises(ValueError):
        theta(P("21"))


def test_fixed_point_structure_of_theta():
    for p in nd(6):
        m = theta(p)
        assert len(fixed_points(m.perm)) >= 2
        assert m.n == 6
