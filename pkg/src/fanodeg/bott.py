"""Degree of the Fano scheme of k-planes on a general degree-d hypersurface.

The degree is a sum of local contributions over the torus-fixed points of the
Grassmannian ``G(k, n)``, one per ``(k+1)``-subset ``I`` of ``{1..n+1}``::

    deg F_k(X) = (-1)**delta * sum_I S_I * Q_I**delta / T_I

with ``S_I`` the product of the linear forms ``sum v_i h_i`` over all
compositions ``v`` of ``d``, ``Q_I`` the sum of the weights outside ``I`` and
``T_I`` the product of ``h_i - h_j`` for ``i`` in ``I``, ``j`` outside ``I``.
The right hand side is a constant rational function of the weights, so every
evaluation point with distinct coordinates gives the same integer.
"""
from __future__ import annotations

import math
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .combinatorics import (
    IndexSet,
    binomial,
    complement,
    enumerate_compositions,
    enumerate_index_sets,
)
from .errors import (
    HypothesisViolation,
    InternalError,
    InvalidArgument,
    NegativeDelta,
)
from .weights import WeightVector, sequential_weights, validate


def expected_dimension(k: int, d: int, n: int) -> int:
    """``(k+1)(n-k) - C(d+k, d)``. May be negative."""
    if k < 0 or k >= n:
        raise InvalidArgument(f"need 0 <= k < n, got k={k}, n={n}")
    if d < 1:
        raise InvalidArgument(f"need d >= 1, got d={d}")
    return (k + 1) * (n - k) - binomial(d + k, d)


@dataclass(frozen=True)
class ProblemInstance:
    """A triple ``(k, d, n)``: k-planes on a degree-d hypersurface in P^n.

    ``force_hypothesis`` lets the Bott engine evaluate the formula for
    ``d == 2, n < 2k+1``, where its geometric meaning is not guaranteed.
    """

    k: int
    d: int
    n: int
    force_hypothesis: bool = False
    delta: int = field(init=False)

    def __post_init__(self):
        # validates k < n and d >= 1
        object.__setattr__(self, "delta", expected_dimension(self.k, self.d, self.n))

    @property
    def hypothesis_holds(self) -> bool:
        return self.d != 2 or self.n >= 2 * self.k + 1

    @property
    def num_fixed_points(self) -> int:
        return math.comb(self.n + 1, self.k + 1)

    def check(self) -> None:
        """Raise unless the degree formula may be evaluated for this instance."""
        if self.delta < 0:
            raise NegativeDelta(
                f"expected dimension {self.delta} < 0 for (k, d, n) = "
                f"({self.k}, {self.d}, {self.n})"
            )
        if not self.hypothesis_holds and not self.force_hypothesis:
            raise HypothesisViolation(
                f"d = 2 and n = {self.n} < 2k+1 = {2 * self.k + 1}; "
                "pass force_hypothesis=True to evaluate the formula anyway"
            )


@dataclass(frozen=True)
class BottTerm:
    index_set: IndexSet
    s_value: int
    q_value: int
    t_value: int
    term: Fraction


def s_term(w: Sequence[int], I: IndexSet, d: int) -> int:
    """Product over compositions ``v`` of ``d`` into ``len(I)`` parts of ``sum v_j h_{I_j}``.

    Part ``j`` of each composition multiplies the weight of the j-th smallest
    element of ``I``.
    """
    hs = [w[i - 1] for i in I]
    prod = 1
    for v in enumerate_compositions(d, len(I)):
        prod *= sum(vj * h for vj, h in zip(v, hs))
    return prod


def q_term(w: Sequence[int], I: IndexSet) -> int:
    return sum(w[j - 1] for j in complement(I, len(w)))


def t_term(w: Sequence[int], I: IndexSet) -> int:
    out = complement(I, len(w))
    prod = 1
    for i in I:
        for j in out:
            prod *= w[i - 1] - w[j - 1]
    if prod == 0:
        raise InternalError(
            f"T_I vanished at I={I}; the weight vector was not validated"
        )
    return prod


def bott_term(w: Sequence[int], I: IndexSet, d: int, delta: int) -> BottTerm:
    s = s_term(w, I, d)
    q = q_term(w, I)
    t = t_term(w, I)
    # Python already has 0**0 == 1, which is the convention we need at delta=0
    return BottTerm(I, s, q, t, Fraction(s * q**delta, t))


def _prepare(p: ProblemInstance, w: Optional[Sequence[int]]) -> WeightVector:
    p.check()
    if w is None:
        return sequential_weights(p.n + 1)
    w = validate(w)
    if len(w) != p.n + 1:
        raise InvalidArgument(f"need {p.n + 1} weights, got {len(w)}")
    return w


def bott_terms(
    p: ProblemInstance, w: Optional[Sequence[int]] = None
) -> Iterator[BottTerm]:
    """Per-fixed-point contributions, without the global sign ``(-1)**delta``."""
    w = _prepare(p, w)
    for I in enumerate_index_sets(p.n + 1, p.k + 1):
        yield bott_term(w, I, p.d, p.delta)


def partial_sum(
    p: ProblemInstance, w: WeightVector, lo: int, hi: int
) -> Fraction:
    """Unsigned sum of the terms with lexicographic rank in ``[lo, hi)``."""
    total = Fraction(0)
    for I in enumerate_index_sets(p.n + 1, p.k + 1, lo, hi):
        total += bott_term(w, I, p.d, p.delta).term
    return total


def rank_chunks(total: int, pieces: int) -> List[Tuple[int, int]]:
    """Split ``range(total)`` into at most ``pieces`` contiguous, near-equal ranges."""
    pieces = max(1, min(pieces, total))
    step, extra = divmod(total, pieces)
    out = []
    lo = 0
    for i in range(pieces):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def bott_sum(
    p: ProblemInstance,
    w: Optional[Sequence[int]] = None,
    workers: int = 1,
    executor: Optional[Executor] = None,
) -> Fraction:
    """The signed residue sum as a reduced fraction.

    With ``workers > 1`` (or an ``executor``) the fixed points are split into
    rank ranges and summed in separate processes. Exact arithmetic makes the
    result independent of the partition.
    """
    w = _prepare(p, w)
    if workers < 1:
        raise InvalidArgument("workers must be >= 1")
    total = p.num_fixed_points
    if workers == 1 and executor is None:
        s = partial_sum(p, w, 0, total)
    else:
        jobs = [(p, w, lo, hi) for lo, hi in rank_chunks(total, 4 * workers)]
        if executor is None:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_partial_sum_star, jobs))
        else:
            parts = list(executor.map(_partial_sum_star, jobs))
        s = sum(parts, Fraction(0))
    return -s if p.delta % 2 else s


def _partial_sum_star(args):
    return partial_sum(*args)


def fano_degree_bott(
    p: ProblemInstance,
    w: Optional[Sequence[int]] = None,
    workers: int = 1,
    executor: Optional[Executor] = None,
) -> int:
    """Degree of ``F_k(X)`` via the Bott residue sum.

    ``w`` defaults to ``(1, ..., n+1)``. Raises :class:`InternalError` if the
    sum is not an integer, which only a bug can cause.

    >>> fano_degree_bott(ProblemInstance(k=1, d=3, n=3))
    27
    """
    value = bott_sum(p, w, workers=workers, executor=executor)
    if value.denominator != 1:
        raise InternalError(f"Bott sum {value} for {p} is not an integer")
    return value.numerator


def lines_on_hypersurface(n: int, w: Optional[Sequence[int]] = None) -> int:
    """Number of lines on a general hypersurface of degree ``2n-3`` in P^n.

    Uses the pair form of the sum, ``sum_{i<j} S_ij / T_ij`` with
    ``S_ij = prod_a (a h_i + (d-a) h_j)``.
    """
    if n < 3:
        raise InvalidArgument(f"need n >= 3, got {n}")
    d = 2 * n - 3
    if w is None:
        w = sequential_weights(n + 1)
    w = validate(w)
    if len(w) != n + 1:
        raise InvalidArgument(f"need {n + 1} weights, got {len(w)}")
    total = Fraction(0)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            num = 1
            for a in range(d + 1):
                num *= a * w[i] + (d - a) * w[j]
            den = 1
            for m in range(n + 1):
                if m != i and m != j:
                    den *= (w[i] - w[m]) * (w[j] - w[m])
            total += Fraction(num, den)
    if total.denominator != 1:
        raise InternalError(f"line count {total} is not an integer")
    return total.numerator


def p2_localization_identity(w: Sequence[int]) -> Fraction:
    """Bott's formula for the degree of a point class on P^2; always 1."""
    w = validate(w)
    if len(w) != 3:
        raise InvalidArgument("the P^2 identity takes exactly three weights")
    h1, h2, h3 = w
    return (
        Fraction(h1 * h1, (h3 - h1) * (h2 - h1))
        + Fraction(h2 * h2, (h3 - h2) * (h1 - h2))
        + Fraction(h3 * h3, (h1 - h3) * (h2 - h3))
    )
