"""Composition-indexed Schur functions: straightening and two evaluations."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .combinatorics import Partition, WeakComposition, pad, permutation_sign
from .polynomial import (
    SparsePoly,
    antisymmetrize,
    exact_divide,
    staircase,
    vandermonde,
)


@dataclass(frozen=True)
class SignedSchur:
    """Normal form of a composition-indexed Schur function: 0 or +/- s_shape."""

    sign: int
    shape: Partition | None

    def is_zero(self) -> bool:
        return self.sign == 0

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        body = ",".join(str(p) for p in self.shape)
        return f"{'+' if self.sign > 0 else '-'}s[{body}]"

    def to_json_dict(self) -> dict:
        if self.is_zero():
            return {"zero": True}
        return {"sign": self.sign, "shape": list(self.shape)}

    @classmethod
    def zero(cls) -> "SignedSchur":
        return cls(0, None)

    @classmethod
    def of(cls, sign: int, shape) -> "SignedSchur":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return cls(sign, Partition(shape))


def straighten(gamma) -> SignedSchur:
    """Normal form of s_gamma for a weak composition gamma.

    The shifted vector (gamma_j + n - j) determines everything: a repeated
    entry gives zero, otherwise the sign of the sorting permutation and the
    sorted vector minus the staircase give the signed partition.
    """
    gamma = WeakComposition(gamma)
    n = len(gamma)
    shifted = tuple(gamma[j] + n - 1 - j for j in range(n))
    if len(set(shifted)) != n:
        return SignedSchur.zero()
    order = sorted(range(n), key=lambda j: -shifted[j])
    sign = permutation_sign(order)
    sorted_shifted = [shifted[j] for j in order]
    shape = [sorted_shifted[j] - (n - 1 - j) for j in range(n)]
    while shape and shape[-1] == 0:
        shape.pop()
    return SignedSchur.of(sign, shape)


def straighten_once(gamma, i: int) -> WeakComposition:
    """One application of the exchange rule at positions i, i+1 (1-based)."""
    gamma = WeakComposition(gamma)
    if gamma[i] == 0:
        raise ValueError("exchange requires a positive entry on the right")
    out = list(gamma)
    out[i - 1], out[i] = gamma[i] - 1, gamma[i - 1] + 1
    return WeakComposition(out)


def schur_bialternant(gamma, nvars: int | None = None) -> SparsePoly:
    """s_gamma as the ratio of the alternant of gamma + staircase by the
    Vandermonde determinant.  May be the zero polynomial."""
    gamma = WeakComposition(gamma)
    if nvars is None:
        nvars = len(gamma)
    if len(gamma) != nvars:
        raise ValueError("gamma must have one part per variable")
    delta = staircase(nvars)
    numerator = antisymmetrize(
        SparsePoly.monomial(nvars, tuple(g + d for g, d in zip(gamma, delta)))
    )
    return exact_divide(numerator, vandermonde(nvars))


@lru_cache(maxsize=None)
def schur_ssyt(shape, nvars: int) -> SparsePoly:
    """s_shape by direct enumeration of semistandard tableaux with entries
    at most nvars.  Independent of the bialternant path."""
    shape = Partition(shape)
    if not shape:
        return SparsePoly.one(nvars)
    rows = len(shape)
    counts: dict[tuple[int, ...], int] = {}
    content = [0] * nvars
    tableau: list[list[int]] = [[] for _ in range(rows)]

    def fill(row: int, col: int) -> None:
        if row == rows:
            key = tuple(content)
            counts[key] = counts.get(key, 0) + 1
            return
        if col == shape[row]:
            fill(row + 1, 0)
            return
        lo = 1
        if col > 0:
            lo = max(lo, tableau[row][col - 1])  # weak increase along rows
        if row > 0:
            lo = max(lo, tableau[row - 1][col] + 1)  # strict increase down columns
        for value in range(lo, nvars + 1):
            tableau[row].append(value)
            content[value - 1] += 1
            fill(row, col + 1)
            content[value - 1] -= 1
            tableau[row].pop()

    fill(0, 0)
    return SparsePoly(nvars, {exps: count for exps, count in counts.items()})


def straightened_equals_bialternant(gamma) -> bool:
    """Cross-check the closed form against the determinant ratio."""
    gamma = WeakComposition(gamma)
    nvars = len(gamma)
    normal = straighten(gamma)
    via_ratio = schur_bialternant(gamma, nvars)
    if normal.is_zero():
        return via_ratio.is_zero()
    expected = schur_ssyt(normal.shape, nvars).scalar_mul(normal.sign)
    return via_ratio == expected


def partition_fixed_by_straightening(shape, nvars: int) -> bool:
    normal = straighten(pad(shape, nvars))
    return normal.sign == 1 and normal.shape == Partition(shape)
