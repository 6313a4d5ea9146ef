"""Coefficient-extraction oracles for the Fano degree.

Two closed formulas from Schubert calculus, both reading off one coefficient
of an explicit product of linear forms:

* Debarre-Manivel: ``deg F_k(X)`` is the coefficient of
  ``x_0^n x_1^(n-1) ... x_k^(n-k)`` in
  ``prod_v (sum_i v_i x_i) * (x_0 + ... + x_k)^delta * prod_{i<j} (x_i - x_j)``.
* van der Waerden: the number of lines on a general hypersurface of degree
  ``d = 2n-3`` is the coefficient of ``x^n y^(n-1)`` in
  ``(x - y) * prod_{i=0}^{d} ((d-i) x + i y)``.

Only one coefficient is needed, so every product is truncated at the target
exponents.
"""
from __future__ import annotations

from typing import Dict, Iterable, Optional, Sequence, Tuple

from .combinatorics import enumerate_compositions
from .errors import InvalidArgument, NegativeDelta

Exponent = Tuple[int, ...]
ExponentCap = Tuple[int, ...]


class SparsePolynomial:
    """Polynomial in ``num_vars`` variables with integer coefficients.

    Terms live in a dict from exponent tuples to nonzero ints. Instances are
    treated as immutable.
    """

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars: int, terms: Optional[Dict[Exponent, int]] = None):
        if num_vars < 1:
            raise InvalidArgument("num_vars must be positive")
        self.num_vars = num_vars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise InvalidArgument(f"bad exponent vector {exp}")
            if c:
                clean[exp] = c
        self._terms = clean

    @classmethod
    def constant(cls, num_vars: int, c: int = 1) -> "SparsePolynomial":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "SparsePolynomial":
        """``sum coeffs[i] * x_i``."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    @property
    def terms(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def items(self):
        """Terms in a fixed order (lexicographic on exponents, descending)."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.items():
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exp) if e
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

    def __mul__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return poly_mul_truncated(self, other, None)


def poly_mul_truncated(
    a: SparsePolynomial, b: SparsePolynomial, cap: Optional[ExponentCap]
) -> SparsePolynomial:
    """Product of ``a`` and ``b`` keeping only exponents ``<= cap`` coordinatewise.

    ``cap=None`` gives the full product.
    """
    if a.num_vars != b.num_vars:
        raise InvalidArgument(
            f"cannot multiply polynomials in {a.num_vars} and {b.num_vars} variables"
        )
    if cap is not None:
        cap = tuple(cap)
        if len(cap) != a.num_vars or any(c < 0 for c in cap):
            raise InvalidArgument(f"bad exponent cap {cap}")
    out: Dict[Exponent, int] = {}
    b_items = list(b._terms.items())
    for ea, ca in a._terms.items():
        for eb, cb in b_items:
            e = tuple(x + y for x, y in zip(ea, eb))
            if cap is not None and any(x > c for x, c in zip(e, cap)):
                continue
            out[e] = out.get(e, 0) + ca * cb
    return SparsePolynomial(a.num_vars, out)


def poly_pow_truncated(
    a: SparsePolynomial, exponent: int, cap: Optional[ExponentCap]
) -> SparsePolynomial:
    """``a ** exponent`` by repeated squaring, truncated at ``cap``."""
    if exponent < 0:
        raise InvalidArgument("negative power")
    result = SparsePolynomial.constant(a.num_vars)
    base = a
    while exponent:
        if exponent & 1:
            result = poly_mul_truncated(result, base, cap)
        exponent >>= 1
        if exponent:
            base = poly_mul_truncated(base, base, cap)
    return result


def vandermonde(k_plus_1: int) -> SparsePolynomial:
    """Expanded ``prod_{0 <= i < j < k_plus_1} (x_i - x_j)``."""
    if k_plus_1 < 1:
        raise InvalidArgument("need at least one variable")
    out = SparsePolynomial.constant(k_plus_1)
    for i in range(k_plus_1):
        for j in range(i + 1, k_plus_1):
            coeffs = [0] * k_plus_1
            coeffs[i], coeffs[j] = 1, -1
            out = out * SparsePolynomial.linear(coeffs)
    return out


def dm_product(k: int, d: int, n: int, delta: int, cap: Optional[ExponentCap]):
    """The Debarre-Manivel product polynomial, truncated at ``cap``."""
    nv = k + 1
    poly = SparsePolynomial.constant(nv)
    for v in enumerate_compositions(d, nv):
        poly = poly_mul_truncated(poly, SparsePolynomial.linear(v), cap)
    poly = poly_mul_truncated(
        poly, poly_pow_truncated(SparsePolynomial.linear([1] * nv), delta, cap), cap
    )
    return poly_mul_truncated(poly, vandermonde(nv), cap)


def dm_degree(p, truncate: bool = True) -> int:
    """Degree of ``F_k(X)`` by the Debarre-Manivel coefficient formula.

    ``p`` is a :class:`~fanodeg.bott.ProblemInstance`. The hypothesis on
    ``d == 2`` is not checked here; the coefficient is defined regardless.
    ``truncate=False`` expands the full product and exists for testing.
    """
    if p.delta < 0:
        raise NegativeDelta(f"expected dimension {p.delta} < 0")
    target = tuple(p.n - i for i in range(p.k + 1))
    poly = dm_product(p.k, p.d, p.n, p.delta, target if truncate else None)
    return poly.coefficient(target)


def vdw_product(n: int, cap: Optional[ExponentCap]) -> SparsePolynomial:
    d = 2 * n - 3
    poly = SparsePolynomial.linear([1, -1])
    for i in range(d + 1):
        poly = poly_mul_truncated(poly, SparsePolynomial.linear([d - i, i]), cap)
    return poly


def vdw_lines(n: int) -> int:
    """Lines on a general degree ``2n-3`` hypersurface in P^n (van der Waerden)."""
    if n < 3:
        raise InvalidArgument(f"need n >= 3, got {n}")
    target = (n, n - 1)
    return vdw_product(n, target).coefficient(target)
