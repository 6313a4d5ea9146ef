from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from fanodeg.bott import (
    ProblemInstance,
    bott_sum,
    bott_terms,
    expected_dimension,
    fano_degree_bott,
    lines_on_hypersurface,
    p2_localization_identity,
    q_term,
    s_term,
    t_term,
)
from fanodeg.combinatorics import binomial
from fanodeg.errors import (
    DistinctnessViolation,
    HypothesisViolation,
    InvalidArgument,
    NegativeDelta,
)
from fanodeg.oracle import dm_degree, vdw_lines
from fanodeg.weights import random_weights, sequential_weights


def test_expected_dimension():
    assert expected_dimension(1, 3, 3) == 0
    assert expected_dimension(1, 5, 4) == 0
    assert expected_dimension(1, 3, 4) == 2
    assert expected_dimension(1, 4, 3) == -1
    with pytest.raises(InvalidArgument):
        expected_dimension(3, 3, 3)
    with pytest.raises(InvalidArgument):
        expected_dimension(1, 0, 3)


def test_problem_instance_flags():
    p = ProblemInstance(2, 2, 4)
    assert p.delta == 0 and not p.hypothesis_holds
    with pytest.raises(HypothesisViolation):
        p.check()
    ProblemInstance(2, 2, 4, force_hypothesis=True).check()
    assert ProblemInstance(1, 2, 3).hypothesis_holds
    with pytest.raises(NegativeDelta):
        ProblemInstance(1, 4, 3).check()


def test_s_term():
    assert s_term((1, 2), (1, 2), 2) == 24
    assert s_term((1, 2, 3, 4), (1, 2), 1) == 2
    assert s_term((1, 2, 3, 4), (1, 2), 3) == 360


def test_q_term():
    assert q_term((1, 2, 3, 4), (1, 2)) == 7
    assert q_term((1, 2, 3), (1, 2, 3)) == 0
    assert q_term((-1, 0, 2, 5), (2, 4)) == 1


def test_t_term():
    assert t_term((1, 2, 3, 4), (1, 2)) == 12
    assert t_term((1, 2, 3), (1, 2, 3)) == 1
    assert t_term((0, 1, 5), (2,)) == -4


def test_fano_degree_examples():
    assert fano_degree_bott(ProblemInstance(1, 3, 3), (1, 2, 3, 4)) == 27
    assert fano_degree_bott(ProblemInstance(1, 5, 4)) == 2875
    assert fano_degree_bott(ProblemInstance(1, 5, 4), (-3, 8, 0, 2, 11)) == 2875
    assert fano_degree_bott(ProblemInstance(0, 3, 2)) == 3
    assert fano_degree_bott(ProblemInstance(1, 3, 4)) == 45


def test_fano_degree_errors():
    with pytest.raises(NegativeDelta):
        fano_degree_bott(ProblemInstance(1, 4, 3))
    with pytest.raises(HypothesisViolation):
        fano_degree_bott(ProblemInstance(2, 2, 4))
    with pytest.raises(DistinctnessViolation):
        fano_degree_bott(ProblemInstance(1, 3, 3), (1, 2, 2, 4))
    with pytest.raises(InvalidArgument):
        fano_degree_bott(ProblemInstance(1, 3, 3), (1, 2, 3))


def test_forced_quadric_value_is_computed():
    # planes on a quadric threefold: the formula is still well defined
    assert fano_degree_bott(ProblemInstance(2, 2, 4, force_hypothesis=True)) == dm_degree(
        ProblemInstance(2, 2, 4, force_hypothesis=True)
    )


def test_lines_on_hypersurface():
    assert lines_on_hypersurface(3, (1, 2, 3, 4)) == 27
    assert lines_on_hypersurface(4) == 2875 == vdw_lines(4)
    assert lines_on_hypersurface(5) == 698005 == dm_degree(ProblemInstance(1, 7, 5))
    for n in (3, 4, 5):
        w = random_weights(n + 1, n, 50)
        assert lines_on_hypersurface(n, w) == fano_degree_bott(ProblemInstance(1, 2 * n - 3, n), w)


@pytest.mark.parametrize("w", [(1, 2, 3), (0, 1, -1), (5, 11, -7)])
def test_p2_identity(w):
    assert p2_localization_identity(w) == 1


def test_p2_identity_terms():
    h1, h2, h3 = 1, 2, 3
    terms = [
        Fraction(h1**2, (h3 - h1) * (h2 - h1)),
        Fraction(h2**2, (h3 - h2) * (h1 - h2)),
        Fraction(h3**2, (h1 - h3) * (h2 - h3)),
    ]
    assert terms == [Fraction(1, 2), -4, Fraction(9, 2)]


@pytest.mark.parametrize("k,d,n", [(1, 3, 4), (2, 3, 6), (0, 5, 3), (1, 1, 5)])
def test_factor_counts(k, d, n):
    # each factor is linear in the weights, so scaling by c exposes the count
    w = random_weights(n + 1, k + d + n, 40)
    c = 3
    cw = [c * h for h in w]
    p = ProblemInstance(k, d, n)
    for term in bott_terms(p, w):
        I = term.index_set
        assert term.term == Fraction(term.s_value * term.q_value**p.delta, term.t_value)
        if term.s_value:
            assert s_term(cw, I, d) == c ** binomial(d + k, d) * term.s_value
        assert t_term(cw, I) == c ** ((k + 1) * (n - k)) * term.t_value


def test_symbolic_sum_is_constant():
    # independent of the integer engine: symbolic rational function collapses to 27
    n, k, d = 3, 1, 3
    h = sp.symbols("h1:5")
    total = 0
    for i in range(4):
        for j in range(i + 1, 4):
            s = sp.prod([a * h[i] + (d - a) * h[j] for a in range(d + 1)])
            t = sp.prod([(h[a] - h[b]) for a in (i, j) for b in range(4) if b not in (i, j)])
            total += s / t
    assert sp.cancel(sp.together(total)) == 27


GRID = [
    (k, d, n)
    for k in range(3)
    for d in (1, 3, 4, 5, 6)
    for n in range(k + 1, 9)
    if expected_dimension(k, d, n) >= 0
]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(GRID), st.integers(0, 2**32))
def test_weight_independence(kdn, seed):
    p = ProblemInstance(*kdn)
    base = fano_degree_bott(p)
    assert fano_degree_bott(p, random_weights(p.n + 1, seed, 40)) == base


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GRID), st.integers(-50, 50))
def test_translation_invariance(kdn, c):
    p = ProblemInstance(*kdn)
    w = sequential_weights(p.n + 1)
    assert fano_degree_bott(p, [h + c for h in w]) == fano_degree_bott(p, w)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(GRID), st.integers(-9, 9).filter(bool), st.integers(0, 1000))
def test_per_term_scaling(kdn, c, seed):
    p = ProblemInstance(*kdn)
    w = random_weights(p.n + 1, seed, 30)
    for a, b in zip(bott_terms(p, w), bott_terms(p, [c * h for h in w])):
        assert a.index_set == b.index_set
        assert a.term == b.term


def test_parallel_matches_serial():
    p = ProblemInstance(2, 3, 8)
    serial = bott_sum(p)
    assert bott_sum(p, workers=3) == serial
    with ProcessPoolExecutor(max_workers=4) as pool:
        assert bott_sum(p, workers=4, executor=pool) == serial
    assert serial.denominator == 1
