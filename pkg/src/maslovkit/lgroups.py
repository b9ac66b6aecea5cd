"""L-group recursion and the classification of loop classes.

The four-periodic family of form groups over the Laurent extensions of F_p
satisfies L_n(d) = L_n(d-1) + L_{n-1}(d-1) with base L_0(0) the Witt group
of F_p and L_1(0) = L_2(0) = L_3(0) = 0.  The fundamental ideal of the Witt
group is Z/2 up to three Laurent variables and Z/2 + W(F_p) in four; the
loop classification is the quotient of the ideal by its constant Z/2:

    OmegaC(d, p) = 0            for d = 0, 1, 2, 3
    OmegaC(4, p) = Z/2 + Z/2    for p = 1 mod 4
    OmegaC(4, p) = Z/4          for p = 3 mod 4
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import DomainError, UnsupportedRing
from .ring import _is_prime

VALIDATED_DIMENSIONS = 4


def _prime_factorization(n: int) -> dict:
    out: dict = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _canonical_factors(orders) -> tuple:
    """Invariant-factor form (each divides the next) of a cyclic-order list."""
    per_prime: dict = {}
    for n in orders:
        if n < 2:
            raise DomainError(f"cyclic order must be >= 2, got {n}")
        for q, e in _prime_factorization(n).items():
            per_prime.setdefault(q, []).append(e)
    if not per_prime:
        return ()
    width = max(len(v) for v in per_prime.values())
    factors = []
    for i in range(width):
        f = 1
        for q, exps in per_prime.items():
            exps = sorted(exps, reverse=True)
            if i < len(exps):
                f *= q ** exps[i]
        factors.append(f)
    return tuple(sorted(factors))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Finite abelian group in canonical invariant-factor form."""

    cyclic_orders: tuple

    @classmethod
    def from_orders(cls, orders) -> "FiniteAbelianGroup":
        return cls(_canonical_factors(orders))

    @classmethod
    def trivial(cls) -> "FiniteAbelianGroup":
        return cls(())

    def is_trivial(self) -> bool:
        return not self.cyclic_orders

    def order(self) -> int:
        out = 1
        for n in self.cyclic_orders:
            out *= n
        return out

    def direct_sum(self, other: "FiniteAbelianGroup") -> "FiniteAbelianGroup":
        return FiniteAbelianGroup.from_orders(self.cyclic_orders + other.cyclic_orders)

    @property
    def name(self) -> str:
        if not self.cyclic_orders:
            return "0"
        return " + ".join(f"Z/{n}" for n in self.cyclic_orders)

    def __repr__(self):
        return f"FiniteAbelianGroup({self.name})"


def _check_prime(p: int):
    if not _is_prime(p) or p == 2:
        raise DomainError(f"p must be an odd prime, got {p}")


def witt_group_structure(p: int) -> FiniteAbelianGroup:
    """The order-four Witt group of F_p: Z/2 + Z/2 or Z/4 by p mod 4."""
    _check_prime(p)
    if p % 4 == 1:
        return FiniteAbelianGroup.from_orders((2, 2))
    return FiniteAbelianGroup.from_orders((4,))


def lgroup_base(n: int, p: int) -> FiniteAbelianGroup:
    """Base of the recursion: the Witt group for n = 0, trivial otherwise."""
    _check_prime(p)
    if n % 4 == 0:
        return witt_group_structure(p)
    return FiniteAbelianGroup.trivial()


def lgroup(n: int, d: int, p: int) -> FiniteAbelianGroup:
    """L_n over d Laurent variables, unrolled from the base recursion."""
    _check_prime(p)
    if d < 0:
        raise DomainError("d must be >= 0")
    if d > VALIDATED_DIMENSIONS:
        warnings.warn(
            f"L-groups for d = {d} > {VALIDATED_DIMENSIONS} are extrapolated "
            "beyond the validated range",
            stacklevel=2,
        )
    n %= 4
    if d == 0:
        return lgroup_base(n, p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        left = lgroup(n, d - 1, p)
        right = lgroup((n - 1) % 4, d - 1, p)
    return left.direct_sum(right)


def fundamental_ideal_group(d: int, p: int) -> FiniteAbelianGroup:
    """Even-rank ideal of the Witt group: Z/2 for d <= 3, Z/2 + W for d = 4."""
    _check_prime(p)
    if d < 0 or d > VALIDATED_DIMENSIONS:
        raise UnsupportedRing("fundamental ideal validated only for 0 <= d <= 4")
    if d <= 3:
        return FiniteAbelianGroup.from_orders((2,))
    return FiniteAbelianGroup.from_orders((2,)).direct_sum(witt_group_structure(p))


def classify_loops(d: int, p: int) -> FiniteAbelianGroup:
    """Loop classes modulo shifts and constant-dimension loops.

    The quotient of the fundamental ideal by its constant Z/2: trivial up to
    three dimensions, the Witt group of F_p in four.
    """
    _check_prime(p)
    if d < 0 or d > VALIDATED_DIMENSIONS:
        raise UnsupportedRing("loop classification validated only for 0 <= d <= 4")
    if d <= 3:
        return FiniteAbelianGroup.trivial()
    return witt_group_structure(p)
