"""Finite abelian groups as explicit direct products of cyclic groups.

Elements are tuples of residues, one per modulus.  Everything here is pure
and immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product Z_m1 x ... x Z_mk described by its moduli.

    Moduli equal to 1 are tolerated (they contribute nothing), and no
    normalization to invariant factors is performed, so ``(6,)`` and
    ``(2, 3)`` are distinct descriptions of isomorphic groups.

    >>> FiniteAbelianGroup((4, 2)).order
    8
    >>> FiniteAbelianGroup((4, 2)).two_rank
    2
    >>> FiniteAbelianGroup((3,)).two_rank
    0
    """

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))
        for m in self.moduli:
            if m < 1:
                raise ValueError(f"modulus {m} is not a positive integer")

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def two_rank(self) -> int:
        """Largest d with a subgroup isomorphic to Z_2^d: the number of even moduli.

        The 2-rank of a direct sum is additive and Z_m contains an
        involution exactly when m is even.
        """
        return sum(1 for m in self.moduli if m % 2 == 0)

    def _check(self, a: GroupElement) -> GroupElement:
        if len(a) != len(self.moduli):
            raise ValueError(f"element {a} has {len(a)} components, expected {len(self.moduli)}")
        for r, m in zip(a, self.moduli):
            if not 0 <= r < m:
                raise ValueError(f"residue {r} out of range for modulus {m}")
        return a

    def zero(self) -> GroupElement:
        return (0,) * len(self.moduli)

    def is_zero(self, a: GroupElement) -> bool:
        return not any(self._check(a))

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a), self._check(b)
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def negate(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def double(self, a: GroupElement) -> GroupElement:
        """a + a.

        >>> FiniteAbelianGroup((4,)).double((2,))
        (0,)
        """
        return self.add(a, a)

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic order of residue tuples."""
        return itertools.product(*(range(m) for m in self.moduli))

    def nonzero_elements(self) -> Iterator[GroupElement]:
        zero = self.zero()
        return (a for a in self.elements() if a != zero)

    def index_of(self, a: GroupElement) -> int:
        """Position of ``a`` in ``elements()`` (mixed-radix value); zero maps to 0."""
        self._check(a)
        i = 0
        for r, m in zip(a, self.moduli):
            i = i * m + r
        return i

    def label(self) -> str:
        """Human name such as ``Z4 x Z2``; the trivial group is ``Z1``."""
        if not self.moduli:
            return "Z1"
        return " x ".join(f"Z{m}" for m in self.moduli)

    def spec(self) -> str:
        """Comma-separated moduli, the CLI's group syntax."""
        return ",".join(str(m) for m in self.moduli)


def parse_group_spec(spec: str) -> FiniteAbelianGroup:
    """Parse ``"4,2"`` into Z4 x Z2; the empty string is the trivial group."""
    s = spec.strip()
    if not s:
        return FiniteAbelianGroup(())
    try:
        moduli = tuple(int(tok.strip()) for tok in s.split(","))
    except ValueError:
        raise ValueError(f"group spec {spec!r} is not a comma-separated list of integers") from None
    return FiniteAbelianGroup(moduli)


def _partitions(k: int) -> Iterator[tuple[int, ...]]:
    """Integer partitions of k with parts in non-increasing order."""
    if k == 0:
        yield ()
        return

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(k, k)


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """All abelian groups of order n up to isomorphism, in a fixed order.

    One group per choice of partition of each prime exponent; the moduli are
    the prime-power cyclic factors, sorted descending.

    >>> [g.moduli for g in abelian_groups_of_order(4)]
    [(4,), (2, 2)]
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    per_prime = [
        [tuple(p**part for part in partition) for partition in _partitions(a)]
        for p, a in sorted(_factorize(n).items())
    ]
    groups = []
    for choice in itertools.product(*per_prime):
        moduli = tuple(sorted((m for factors in choice for m in factors), reverse=True))
        groups.append(FiniteAbelianGroup(moduli))
    return sorted(groups, key=lambda g: g.moduli, reverse=True)


def abelian_groups_up_to(max_order: int) -> list[FiniteAbelianGroup]:
    """All abelian groups of order 1..max_order up to isomorphism."""
    return [g for n in range(1, max_order + 1) for g in abelian_groups_of_order(n)]


def group_pairs_same_invariants(
    max_order: int,
) -> list[tuple[FiniteAbelianGroup, FiniteAbelianGroup]]:
    """Non-isomorphic pairs sharing both order and 2-rank, for orders <= max_order.

    >>> [(a.moduli, b.moduli) for a, b in group_pairs_same_invariants(9)]
    [((9,), (3, 3))]
    """
    pairs = []
    for n in range(1, max_order + 1):
        buckets: dict[int, list[FiniteAbelianGroup]] = {}
        for g in abelian_groups_of_order(n):
            buckets.setdefault(g.two_rank, []).append(g)
        for d in sorted(buckets):
            pairs.extend(itertools.combinations(buckets[d], 2))
    return pairs
