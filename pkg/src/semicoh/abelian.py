"""Canonical finitely generated abelian groups.

A group is stored as a free rank plus its torsion invariant factors
(a divisibility chain, smallest first, every factor > 1).  The canonical
form is unique, so equality is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from math import prod


def _factorint(n: int) -> dict[int, int]:
    """Prime factorization by trial division; torsion orders here are tiny."""
    result: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            result[d] = result.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        result[n] = result.get(n, 0) + 1
    return result


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + a torsion divisibility chain.

    >>> AbelianGroup.from_factors(1, [2, 6])
    AbelianGroup(rank=1, torsion=(2, 6))
    >>> AbelianGroup.from_factors(0, [2, 3]) == AbelianGroup.from_factors(0, [6])
    True
    >>> print(AbelianGroup.from_factors(2, [2, 2, 3]))
    Z^2 + (Z/2)^2 + (Z/3)
    """

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(f < 2 for f in self.torsion):
            raise ValueError("torsion factors must exceed 1")

    @classmethod
    def from_factors(cls, rank: int, factors) -> "AbelianGroup":
        """Canonicalize an arbitrary multiset of cyclic orders.

        Factors equal to 1 are dropped, 0 counts toward the rank, and the
        rest are recombined into a divisibility chain.
        """
        rank = int(rank)
        exponents: dict[int, list[int]] = {}
        for f in factors:
            f = abs(int(f))
            if f == 0:
                rank += 1
                continue
            if f == 1:
                continue
            for p, e in _factorint(f).items():
                exponents.setdefault(p, []).append(e)
        for p in exponents:
            exponents[p].sort(reverse=True)
        chain = []
        for tup in zip_longest(*(tuple(p**e for e in es) for p, es in sorted(exponents.items())), fillvalue=1):
            chain.append(prod(tup))
        chain.reverse()
        return cls(rank, tuple(chain))

    @classmethod
    def zero(cls) -> "AbelianGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank, ())

    @classmethod
    def direct_sum(cls, *groups: "AbelianGroup") -> "AbelianGroup":
        rank = sum(g.rank for g in groups)
        factors = [f for g in groups for f in g.torsion]
        return cls.from_factors(rank, factors)

    def prime_power_view(self) -> dict[int, tuple[int, ...]]:
        """Torsion as a map prime -> sorted tuple of prime-power exponents."""
        exponents: dict[int, list[int]] = {}
        for f in self.torsion:
            for p, e in _factorint(f).items():
                exponents.setdefault(p, []).append(e)
        return {p: tuple(sorted(es)) for p, es in sorted(exponents.items())}

    def p_multiplicity(self, p: int) -> int:
        """Number of Z/p^e summands for the prime p (counting multiplicity)."""
        count = 0
        for f in self.torsion:
            while f % p == 0:
                f //= p
                count += 1
        return count

    def torsion_order(self) -> int:
        return prod(self.torsion) if self.torsion else 1

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        counts: dict[int, int] = {}
        for f in self.torsion:
            for p, e in sorted(_factorint(f).items()):
                counts[p**e] = counts.get(p**e, 0) + 1
        for q in sorted(counts):
            k = counts[q]
            parts.append(f"(Z/{q})" + (f"^{k}" if k > 1 else ""))
        return " + ".join(parts) if parts else "0"
