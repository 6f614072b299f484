import json
import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from radgen.field import GF
from radgen.ideal import (
    MEMBER,
    NON_MEMBER,
    RADICAL_MEMBER,
    GroebnerBasis,
    Ideal,
    ImproperIdealError,
    Limits,
    ResourceLimitError,
    buchberger,
    dimension,
    eliminate,
    groebner,
    ideal_member,
    ideals_equal,
    intersect,
    is_groebner,
    is_reduced,
    normal_form,
    radical_equal,
    radical_member,
    reduce_basis,
)
from radgen.poly import RingContext, format_poly

from conftest import polys, power_oracle, sympy_reduced_basis


def I_(ctx, *texts):
    return Ideal.parse(ctx, texts)


def strs(gb):
    return [format_poly(g) for g in gb]


@pytest.fixture
def example1(R6):
    return I_(R6, "x1*x2 + x3*x4", "x1*x6", "x3*x6", "x5*x6")


@pytest.fixture
def J5(R5):
    return I_(R5, "x1*x2 + x3*x4", "x1*x5", "x3*x5")


# Groebner bases

def test_principal(R6):
    assert strs(groebner(I_(R6, "x1"))) == ["x1"]


def test_single_spoly_lex():
    ctx = RingContext.standard(2, order="lex")
    assert strs(groebner(I_(ctx, "x1 - x2", "x1"))) == ["x1", "x2"]


def test_coprime_leading_terms(R6):
    gb = buchberger(I_(R6, "x1*x2 + x3*x4", "x6"))
    assert sorted(strs(reduce_basis(gb))) == ["x1*x2 + x3*x4", "x6"]
    assert gb.counters.zero_reductions == 0


@pytest.mark.parametrize("gens, expected", [
    (["x1", "x1 + x2"], ["x1", "x2"]),
    (["2*x1"], ["x1"]),
    (["x1^2", "x1^2 + x2"], ["x1^2", "x2"]),
])
def test_reduce_basis(R6, gens, expected):
    gb = reduce_basis(GroebnerBasis(R6, [R6.parse(g) for g in gens]))
    assert sorted(strs(gb)) == sorted(expected)
    assert gb.reduced and is_reduced(gb)


def test_unit_ideal(R6):
    gb = groebner(I_(R6, "x1", "x1 + 1"))
    assert gb.is_unit and strs(gb) == ["1"]


def test_resource_limit(R6):
    cyclic4 = I_(R6, "x1 + x2 + x3 + x4", "x1*x2 + x2*x3 + x3*x4 + x4*x1",
                 "x1*x2*x3 + x2*x3*x4 + x3*x4*x1 + x4*x1*x2", "x1*x2*x3*x4 - 1")
    assert buchberger(cyclic4).counters.pairs > 3
    with pytest.raises(ResourceLimitError):
        groebner(cyclic4, limits=Limits(max_pairs=3))
    with pytest.raises(ResourceLimitError):
        groebner(cyclic4, limits=Limits(max_basis=3))


@pytest.mark.parametrize("field", [None, GF(32003)])
@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_matches_sympy_on_corpus(field, order):
    ctx = RingContext.standard(6) if field is None else RingContext.standard(6, field)
    ctx = ctx.with_order(order)
    corpus = [
        I_(ctx, "x1*x2 + x3*x4", "x1*x6", "x3*x6", "x5*x6"),
        I_(ctx, "x1*x2 + x3*x4", "x1*x5", "x3*x5", "x1*x6", "x3*x6"),
        I_(ctx, "x1*x2^4 + x2^3*x3*x4 + x2^2*x3*x5 + x3*x6", "x1*x2*x4 + x3*x4^2 - x1*x5",
           "x1*x2^3*x4 + x2^2*x3*x4^2 + x1*x2^2*x5 + 2*x2*x3*x4*x5 + x3*x5^2 - x1*x6"),
        I_(ctx, "x1^2 - 3*x2*x3 + 1/2", "x2^2*x4 - x5", "x1*x6 - x4"),
    ]
    for ideal in corpus:
        assert list(groebner(ideal)) == sympy_reduced_basis(ideal)


R4 = RingContext.standard(4)


@settings(max_examples=30, deadline=None)
@given(st.lists(polys(R4, max_terms=3, max_exp=2), min_size=1, max_size=3))
def test_random_bases_match_sympy(gens):
    ideal = Ideal(R4, gens)
    if not ideal.generators:
        return
    assert list(groebner(ideal)) == sympy_reduced_basis(ideal)


@settings(max_examples=30, deadline=None)
@given(st.lists(polys(R4, max_terms=3, max_exp=2), min_size=1, max_size=4), st.randoms())
def test_spolys_reduce_and_permutation_invariance(gens, rnd):
    ideal = Ideal(R4, gens)
    if not ideal.generators:
        return
    raw = buchberger(ideal)
    assert is_groebner(raw)
    gb = reduce_basis(raw)
    assert is_groebner(gb) and is_reduced(gb)
    assert all(normal_form(g, gb).is_zero for g in ideal)
    shuffled = list(ideal.generators)
    rnd.shuffle(shuffled)
    assert groebner(Ideal(R4, shuffled)) == gb


def test_permutations_of_example1(example1):
    reference = groebner(example1)
    for perm in permutations(example1.generators):
        assert groebner(Ideal(example1.ctx, perm)) == reference


# normal forms and membership

def test_generator_reduces_to_zero(example1, R6):
    assert normal_form(R6.parse("x1*x2 + x3*x4"), groebner(example1)).is_zero


def test_untouched_normal_form(R6):
    assert normal_form(R6.parse("x2"), groebner(I_(R6, "x1", "x3"))) == R6.parse("x2")


def test_eq6_in_J(J5, R5):
    q1 = R5.parse("x2*(x1*x2 + x3*x4) + x3*x5")
    assert normal_form(q1, groebner(J5)).is_zero


def test_ideal_member_examples(R6):
    cert = ideal_member(R6.parse("(x1*x2 + x3*x4)*x5*x6"), I_(R6, "x1*x6", "x3*x6"))
    assert cert.verdict == MEMBER
    assert ideal_member(R6.parse("x1"), I_(R6, "x1^2")).verdict == NON_MEMBER
    cert = ideal_member(R6.parse("x1*x2"), I_(R6, "x1^2*x2", "x1*x2^2"))
    assert cert.verdict == NON_MEMBER and cert.normal_form == R6.parse("x1*x2")


def test_radical_member_examples(R6):
    assert radical_member(R6.parse("x1*x2"), I_(R6, "x1^2*x2", "x1*x2^2")).verdict == RADICAL_MEMBER
    assert radical_member(R6.parse("x1"), I_(R6, "x1^3")).verdict == RADICAL_MEMBER
    cert = radical_member(R6.parse("x2"), I_(R6, "x1"))
    assert cert.verdict == NON_MEMBER and not cert.holds
    assert not any(g.is_constant for g in cert.witness_basis)


def test_radical_example_agrees_with_power_oracle(R6):
    f = R6.parse("x1*x2")
    gens = [(2, 1, 0, 0, 0, 0), (1, 2, 0, 0, 0, 0)]
    assert power_oracle(f, gens) and not power_oracle(f, gens, max_power=1)


def test_fresh_variable_avoids_clash():
    ctx = RingContext(RingContext.standard(1).field, ("t", "x"))
    cert = radical_member(ctx.parse("x"), I_(ctx, "x^2 - t*x"))
    assert cert.fresh_variable not in ctx.variables
    assert cert.verdict == NON_MEMBER


def test_certificate_replay_and_recheck(example1, R6):
    for f, I in [(R6.parse("x5*x6"), example1),
                 (R6.parse("x1*x2 + x3*x4 + x5*x6"), example1),
                 (R6.parse("x2"), example1)]:
        for cert in (ideal_member(f, I), radical_member(f, I)):
            assert cert.replay()
            assert cert.recheck()


def test_certificate_recheck_detects_tampering(R6):
    cert = ideal_member(R6.parse("x2"), I_(R6, "x1"))
    cert.verdict = MEMBER
    assert not cert.recheck()


def test_certificate_json_shape(J5, R5):
    cert = radical_member(R5.parse("x1*x2^2 + x2*x3*x4 + x3*x5"), J5)
    d = cert.to_dict()
    assert {"query", "ideal_hash", "verdict", "order", "witness_basis"} <= set(d)
    assert d["witness_basis"] == ["1"]
    assert json.dumps(d, sort_keys=True) == json.dumps(radical_member(cert.query, J5).to_dict(), sort_keys=True)


# radical equality

def test_radical_equal_examples(example1, R6):
    assert radical_equal(example1, I_(R6, "x1*x6", "x3*x6", "x1*x2 + x3*x4 + x5*x6"))
    assert radical_equal(I_(R6, "x1"), I_(R6, "x1^2"))
    eq = radical_equal(I_(R6, "x1"), I_(R6, "x2"))
    assert not eq and len(eq.certificates) == 2


def test_radical_equal_context_mismatch(R6, R5):
    with pytest.raises(ValueError):
        radical_equal(I_(R6, "x1"), I_(R5, "x1"))


R4_MONO = [(a, b, c, d) for a in range(4) for b in range(4) for c in range(4) for d in range(4)]


def test_radical_member_against_power_oracle_monomial_ideals():
    rnd = random.Random(20261019)
    agree = 0
    for _ in range(60):
        gens = [tuple(rnd.randint(0, 3) for _ in range(4)) for _ in range(rnd.randint(1, 3))]
        gens = [g for g in gens if any(g)] or [(1, 0, 0, 0)]
        ideal = Ideal(R4, [R4.one().mul_term(g, 1) for g in gens])
        m = tuple(rnd.randint(0, 2) for _ in range(4))
        f = R4.one().mul_term(m, 1)
        if rnd.random() < 0.5:
            f = f + R4.one().mul_term(tuple(rnd.randint(0, 2) for _ in range(4)), 1)
        assert radical_member(f, ideal).holds == power_oracle(f, gens)
        agree += 1
    assert agree == 60


# elimination and intersection

def test_eliminate_examples():
    ctx = RingContext(RingContext.standard(1).field, ("t", "x1"))
    assert len(eliminate(I_(ctx, "1 - t*x1"), ["t"])) == 0
    assert strs(eliminate(I_(ctx, "t*x1", "1 - t"), ["t"])) == ["x1"]
    R3 = RingContext.standard(3)
    assert strs(eliminate(I_(R3, "x1 - x2", "x2 - x3"), ["x2"])) == ["x1 - x3"]


def test_intersect_examples(example1, R6):
    inter = intersect(I_(R6, "x1*x2 + x3*x4", "x6"), I_(R6, "x1", "x3", "x5"))
    assert ideals_equal(inter, example1)
    assert strs(intersect(I_(R6, "x1"), I_(R6, "x1"))) == ["x1"]
    assert strs(intersect(I_(R6, "x1"), I_(R6, "x2"))) == ["x1*x2"]


@settings(max_examples=15, deadline=None)
@given(st.lists(polys(RingContext.standard(3), max_terms=2, max_exp=2), min_size=1, max_size=2),
       st.lists(polys(RingContext.standard(3), max_terms=2, max_exp=2), min_size=1, max_size=2))
def test_intersection_properties(gi, gj):
    R3 = RingContext.standard(3)
    I, J = Ideal(R3, gi), Ideal(R3, gj)
    if not I.generators or not J.generators:
        return
    X = intersect(I, J)
    gb_i, gb_j, gb_x = groebner(I), groebner(J), groebner(X)
    assert all(gb_i.contains(h) and gb_j.contains(h) for h in X)
    assert all(gb_x.contains(g * h) for g in I for h in J)


# dimension

def test_dimension_examples(J5):
    assert dimension(J5) == 3
    R4_ = RingContext.standard(4)
    assert dimension(I_(R4_, "x1", "x2", "x3", "x4")) == 0
    R6 = RingContext.standard(6)
    I6 = I_(R6, "x1*x2 + x3*x4", "x1*x5", "x1*x6", "x3*x5", "x3*x6")
    assert dimension(I6) == 4


def test_dimension_brute_force_against_sympy_leading_terms():
    R6 = RingContext.standard(6)
    I6 = I_(R6, "x1*x2 + x3*x4", "x1*x5", "x1*x6", "x3*x5", "x3*x6")
    from itertools import combinations
    lms = [g.lm for g in sympy_reduced_basis(I6)]
    best = max(len(S) for k in range(7) for S in combinations(range(6), k)
               if not any(all(i in S for i, e in enumerate(m) if e) for m in lms))
    assert dimension(I6) == best == 4


def test_dimension_invariant_under_order_and_permutation(example1):
    lex = example1.in_context(example1.ctx.with_order("lex"))
    assert dimension(example1) == dimension(lex) == 4
    rev = Ideal(example1.ctx, list(reversed(example1.generators)))
    assert dimension(rev) == 4


def test_dimension_of_unit_ideal(R6):
    with pytest.raises(ImproperIdealError):
        dimension(I_(R6, "1"))
