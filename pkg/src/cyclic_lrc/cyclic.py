"""Cyclic codes: construction, encoding, membership, bounds and the
exhaustive minimum-distance oracle.

A cyclic code of length n over GF(q) is the set of coefficient vectors of
multiples of a monic generator g(x) dividing x**n - 1; its dimension is
n - deg g, its parity polynomial is h = (x**n - 1)/g, and its dual is
generated by the monic-normalized reciprocal of h.  Codes are immutable
values; the oracle delegates its inner loop to :mod:`cyclic_lrc.kernels`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import kernels
from .field import (
    FieldElement,
    FiniteField,
    make_field,
    primitive_nth_root,
    splitting_degree,
)
from .poly import Poly

DEFAULT_BUDGET = 1 << 24


@dataclass(frozen=True)
class CyclicCode:
    field: FiniteField
    n: int
    g: Poly
    k: int
    h: Poly
    dual_g: Poly

    @classmethod
    def build(cls, field: FiniteField, n: int, g: Poly) -> CyclicCode:
        """Validate (field, n, g) and derive dimension, parity and dual.

        Rejects gcd(n, q) != 1, non-monic g, and g not dividing x**n - 1.
        """
        if n < 1:
            raise ValueError(f"length must be >= 1, got {n}")
        if math.gcd(n, field.q) != 1:
            raise ValueError(f"gcd(n, q) = {math.gcd(n, field.q)} != 1 for n={n}, q={field.q}")
        if g.field != field:
            raise ValueError("generator polynomial is over the wrong field")
        if g.is_zero or not g.is_monic:
            raise ValueError("generator polynomial must be monic and nonzero")
        if g.degree > n:
            raise ValueError(f"deg g = {g.degree} exceeds the length {n}")
        quotient, remainder = divmod(Poly.x_pow_minus_one(field, n), g)
        if not remainder.is_zero:
            raise ValueError(f"g(x) = {g} does not divide x^{n} - 1 over {field}")
        return cls(field, n, g, n - g.degree, quotient, quotient.reciprocal().monic())

    @cached_property
    def generator_matrix(self) -> tuple[tuple[FieldElement, ...], ...]:
        """k rows; row i holds the coefficients of x**i * g padded to length n."""
        zero = self.field.zero()
        rows = []
        for i in range(self.k):
            rows.append((zero,) * i + self.g.coeffs + (zero,) * (self.n - i - len(self.g.coeffs)))
        return tuple(rows)

    def encode_systematic(self, message: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
        """Codeword carrying the message verbatim in the last k coordinates.

        Encodes m(x) as x**(n-k) * m(x) minus its remainder mod g, so the
        parity symbols occupy the low-degree positions.
        """
        if len(message) != self.k:
            raise ValueError(f"message length {len(message)} != k = {self.k}")
        zero = self.field.zero()
        shifted = Poly.make(self.field, (zero,) * (self.n - self.k) + tuple(message))
        codeword = shifted - (shifted % self.g)
        return codeword.padded(self.n)

    def contains(self, word: Sequence[FieldElement]) -> bool:
        """True iff the word's polynomial is divisible by g."""
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != n = {self.n}")
        return (Poly.make(self.field, word) % self.g).is_zero

    def dual(self) -> CyclicCode:
        """The dual code, generated by the monic reciprocal of h."""
        return CyclicCode.build(self.field, self.n, self.dual_g)

    def root_exponents(self) -> frozenset[int]:
        """Exponents e with g(beta**e) = 0 for the canonical primitive root."""
        return _root_exponents(self)

    def bch_lower_bound(self, root_exponents: Sequence[int] | None = None) -> int:
        """Certified distance lower bound from consecutive root exponents.

        Returns the largest delta such that delta - 1 cyclically consecutive
        exponents are all roots of g (n + 1 for the zero code).  A supplied
        exponent set is checked against the recomputed one.
        """
        computed = self.root_exponents()
        if root_exponents is not None and frozenset(e % self.n for e in root_exponents) != computed:
            raise ValueError(
                f"supplied root exponents {sorted(root_exponents)} are inconsistent with "
                f"g; actual set is {sorted(computed)}"
            )
        return _longest_cyclic_run(computed, self.n) + 1


@functools.lru_cache(maxsize=None)
def _root_exponents(code: CyclicCode) -> frozenset[int]:
    fld = code.field
    ext_degree = splitting_degree(fld.q, code.n)
    ext = fld if ext_degree == 1 else make_field(fld.p, fld.m * ext_degree)
    beta = primitive_nth_root(ext, code.n)
    exps = []
    point = ext.one()
    for e in range(code.n):
        if code.g(point).is_zero:
            exps.append(e)
        point = point * beta
    return frozenset(exps)


def _longest_cyclic_run(exponents: frozenset[int], n: int) -> int:
    if len(exponents) == n:
        return n
    best = 0
    for e in exponents:
        if (e - 1) % n in exponents:
            continue
        length = 1
        while (e + length) % n in exponents:
            length += 1
        best = max(best, length)
    return best


@dataclass(frozen=True)
class DistanceScan:
    """Outcome of a (possibly budget-limited) minimum-weight scan.

    ``exact`` is True only when the whole nonzero message space was
    enumerated; then lower == upper is the true minimum distance.  Otherwise
    lower is a certified bound (BCH) and upper the best witness weight seen.
    """

    lower: int
    upper: int
    exact: bool
    enumerated: int

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "enumerated": self.enumerated,
        }


def min_distance_exhaustive(
    code: CyclicCode, budget: int = DEFAULT_BUDGET, sample_cap: int | None = None
) -> DistanceScan:
    """Exact minimum distance when q**k fits the budget, else a bracket.

    Exact mode enumerates every nonzero message once; the result does not
    depend on enumeration order, so the message space may be partitioned
    freely.  The fallback pairs the BCH lower bound with the minimum weight
    over the first ``min(budget, sample_cap)`` messages of the deterministic
    enumeration order and is flagged non-exact.  The zero code reports the
    conventional n + 1.
    """
    if budget < 1:
        raise ValueError(f"enumeration budget must be >= 1, got {budget}")
    if code.k == 0:
        return DistanceScan(code.n + 1, code.n + 1, True, 0)
    total = code.field.q**code.k
    matrix = kernels.matrix_indices(code.generator_matrix)
    if total <= budget:
        w = kernels.min_nonzero_weight(matrix, code.field, total - 1)
        return DistanceScan(w, w, True, total - 1)
    lower = max(1, code.bch_lower_bound())
    count = min(total - 1, budget if sample_cap is None else min(budget, sample_cap))
    upper = kernels.min_nonzero_weight(matrix, code.field, count)
    return DistanceScan(lower, upper, False, count)
