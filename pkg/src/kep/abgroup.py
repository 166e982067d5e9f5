"""Finitely generated abelian groups as isomorphism classes.

A group is stored in canonical form: a free rank plus an invariant-factor
chain (each factor >= 2, each dividing the next).  By the structure theorem
two values are equal exactly when the groups are isomorphic, so equality,
hashing and printing are all decidable and stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .intmat import IntMatrix, snf


def _invariant_chain(factors: list[int]) -> tuple[int, ...]:
    """Canonical divisor chain of the torsion group ⊕ Z/f.

    Uses the exchange Z/a ⊕ Z/b = Z/gcd(a,b) ⊕ Z/lcm(a,b) until every pair
    is comparable under divisibility; sorting then gives the invariant
    factors.  Only gcd arithmetic, so hundred-digit factors are fine.
    """
    factors = [f for f in factors if f > 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors)):
            for j in range(i + 1, len(factors)):
                a, b = factors[i], factors[j]
                if a % b and b % a:
                    g = gcd(a, b)
                    factors[i], factors[j] = g, a * b // g
                    changed = True
    return tuple(sorted(f for f in factors if f > 1))


@dataclass(frozen=True)
class FGAbelianGroup:
    """Isomorphism class of a finitely generated abelian group.

    >>> FGAbelianGroup(1, ())
    FGAbelianGroup(free_rank=1, torsion=())
    >>> print(FGAbelianGroup(0, (2, 4)))
    Z/2 ⊕ Z/4
    >>> print(FGAbelianGroup(0, ()))
    0
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = 1
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion factors must be >= 2")
            if d % prev:
                raise ValueError("torsion factors must form a divisor chain")
            prev = d

    @classmethod
    def trivial(cls) -> "FGAbelianGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FGAbelianGroup":
        return cls(rank, ())

    @classmethod
    def from_cyclic_orders(cls, orders: tuple[int, ...] | list[int], free_rank: int = 0) -> "FGAbelianGroup":
        """Canonicalize a direct sum of cyclic groups Z/d (d = 0 meaning Z).

        >>> FGAbelianGroup.from_cyclic_orders([2, 3])
        FGAbelianGroup(free_rank=0, torsion=(6,))
        """
        rank = free_rank + sum(1 for d in orders if d == 0)
        return cls(rank, _invariant_chain([abs(d) for d in orders]))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def torsion_order(self) -> int:
        """Order of the torsion subgroup."""
        order = 1
        for d in self.torsion:
            order *= d
        return order

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"


def _from_diagonal(diagonal: tuple[int, ...], free_rank: int) -> FGAbelianGroup:
    torsion = tuple(d for d in diagonal if d > 1)
    free_rank += sum(1 for d in diagonal if d == 0)
    return FGAbelianGroup(free_rank, torsion)


def from_cokernel(m: IntMatrix) -> FGAbelianGroup:
    """Z^rows / (column lattice of M), in canonical form.

    For a square n x n matrix this is Z^n / M Z^n with free rank
    n - rank(M) and torsion the invariant factors > 1.
    """
    diagonal = snf(m).diagonal()
    return _from_diagonal(diagonal, free_rank=m.rows - min(m.rows, m.cols))


def kernel_group(m: IntMatrix) -> FGAbelianGroup:
    """The kernel {x : M x = 0} as an abstract group: free of rank nullity(M)."""
    rank = snf(m).rank()
    return FGAbelianGroup.free(m.cols - rank)


def direct_sum(g: FGAbelianGroup, h: FGAbelianGroup) -> FGAbelianGroup:
    """Canonical form of G ⊕ H (torsion renormalized to a divisor chain).

    >>> direct_sum(FGAbelianGroup(0, (2,)), FGAbelianGroup(0, (3,)))
    FGAbelianGroup(free_rank=0, torsion=(6,))
    >>> direct_sum(FGAbelianGroup(0, (2,)), FGAbelianGroup(0, (4,))).torsion
    (2, 4)
    """
    return FGAbelianGroup(
        g.free_rank + h.free_rank,
        _invariant_chain(list(g.torsion) + list(h.torsion)),
    )


def is_isomorphic(g: FGAbelianGroup, h: FGAbelianGroup) -> bool:
    """Decide isomorphism: equal free ranks and identical torsion chains."""
    return g == h
