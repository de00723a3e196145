"""Compositions, partitions, set decompositions and Schensted insertion."""

from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import Iterator


class Composition(tuple):
    """Finite sequence of strictly positive integers."""

    def __new__(cls, parts) -> "Composition":
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("composition must have at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be >= 1, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


class WeakComposition(tuple):
    """Fixed-length sequence of non-negative integers."""

    def __new__(cls, parts) -> "WeakComposition":
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"weak composition parts must be >= 0, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"WeakComposition({tuple(self)})"


class Partition(tuple):
    """Weakly decreasing sequence of positive integers.  May be empty."""

    def __new__(cls, parts) -> "Partition":
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be >= 1, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def set_of_composition(alpha: Composition) -> frozenset[int]:
    """Partial sums of alpha excluding the total, a subset of {1..n-1}."""
    alpha = Composition(alpha)
    acc = 0
    out = []
    for part in alpha[:-1]:
        acc += part
        out.append(acc)
    return frozenset(out)


def composition_of_set(s, n: int) -> Composition:
    """Inverse of set_of_composition for subsets of {1..n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    points = sorted(s)
    if any(not 1 <= p <= n - 1 for p in points):
        raise ValueError(f"descent set {points} not contained in 1..{n - 1}")
    bounds = [0] + points + [n]
    return Composition(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def pad(alpha, n: int) -> WeakComposition:
    """Append zeros until alpha has n parts."""
    alpha = tuple(alpha)
    if len(alpha) > n:
        raise ValueError(f"cannot pad {len(alpha)} parts down to {n}")
    return WeakComposition(alpha + (0,) * (n - len(alpha)))


def compositions_of(n: int) -> Iterator[Composition]:
    """All 2^(n-1) compositions of n, lexicographic on the descent set."""
    for mask in range(1 << (n - 1)):
        s = {i + 1 for i in range(n - 1) if mask >> i & 1}
        yield composition_of_set(s, n)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first within each."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


def decompositions(mu: Partition) -> Iterator[tuple[frozenset[int], ...]]:
    """Ordered decompositions T_1..T_k of {1..n} with |T_i| = mu_i.

    Enumerated in lexicographic order of the block-membership word
    (block index of 1, block index of 2, ...).
    """
    mu = Partition(mu)
    n = mu.weight
    k = len(mu)
    blocks: list[list[int]] = [[] for _ in range(k)]

    def fill(value: int) -> Iterator[tuple[frozenset[int], ...]]:
        if value > n:
            yield tuple(frozenset(b) for b in blocks)
            return
        for i in range(k):
            if len(blocks[i]) < mu[i]:
                blocks[i].append(value)
                yield from fill(value + 1)
                blocks[i].pop()

    yield from fill(1)


def decomposition_count(mu: Partition) -> int:
    mu = Partition(mu)
    count = factorial(mu.weight)
    for part in mu:
        count //= factorial(part)
    return count


def inverse_permutation(sigma) -> tuple[int, ...]:
    """Inverse of a one-line permutation word over {1..n}."""
    inv = [0] * len(sigma)
    for pos, value in enumerate(sigma, start=1):
        inv[value - 1] = pos
    return tuple(inv)


def descent_set(word) -> frozenset[int]:
    """Positions i with word[i] > word[i+1] (1-indexed)."""
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def rsk_insert(sigma) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Robinson-Schensted row insertion of a permutation word.

    Returns the pair (P, Q) of standard tableaux as tuples of rows.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, value in enumerate(sigma, start=1):
        row = 0
        while True:
            if row == len(p_rows):
                p_rows.append([value])
                q_rows.append([step])
                break
            current = p_rows[row]
            # bump the leftmost entry strictly larger than the incoming value
            bump = next((j for j, entry in enumerate(current) if entry > value), None)
            if bump is None:
                current.append(value)
                q_rows[row].append(step)
                break
            current[bump], value = value, current[bump]
            row += 1
    freeze = lambda rows: tuple(tuple(r) for r in rows)
    return freeze(p_rows), freeze(q_rows)


def rsk_shape(sigma) -> Partition:
    p, _ = rsk_insert(sigma)
    return Partition(len(row) for row in p)


def permutation_sign(perm) -> int:
    """Sign of a permutation given as a word over 0..n-1 or 1..n."""
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def all_permutation_words(n: int) -> Iterator[tuple[int, ...]]:
    yield from permutations(range(1, n + 1))
