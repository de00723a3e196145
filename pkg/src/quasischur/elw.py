"""The fundamental-to-Schur replacement and its sign-reversing involution."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .combinatorics import Composition, WeakComposition, pad, set_of_composition
from .polynomial import (
    QT_ZERO,
    SparsePoly,
    antisymmetrize,
    exact_divide,
    staircase,
    vandermonde,
)
from .quasisym import Expansion
from .schur import schur_bialternant, straighten


def elw_to_schur(e: Expansion) -> Expansion:
    """Replace each F_alpha by s_alpha and straighten.

    For a symmetric input this yields its Schur expansion; for any input it
    is a well-defined formal signed result.
    """
    if e.basis != "F":
        raise ValueError("input expansion must be over the F basis")
    n = e.degree
    terms: dict[tuple[int, ...], object] = {}
    for alpha, coeff in e.terms():
        normal = straighten(pad(alpha, n))
        if normal.is_zero():
            continue
        key = tuple(normal.shape)
        new = terms.get(key, QT_ZERO) + coeff * normal.sign
        if new:
            terms[key] = new
        else:
            terms.pop(key, None)
    return Expansion("s", n, terms)


@dataclass(frozen=True)
class ConstrainedMonomial:
    """A weakly increasing word 1 <= a_1 <= ... <= a_n <= n with strict rises
    at the descent positions of alpha, together with its exponent data."""

    alpha: Composition
    word: tuple[int, ...]

    @property
    def gamma(self) -> WeakComposition:
        n = len(self.word)
        counts = [0] * n
        for a in self.word:
            counts[a - 1] += 1
        return WeakComposition(counts)

    @property
    def full_exponent(self) -> tuple[int, ...]:
        n = len(self.word)
        delta = staircase(n)
        return tuple(g + d for g, d in zip(self.gamma, delta))


class FixedPoint:
    """Sentinel returned by the involution on its unique fixed point."""

    def __repr__(self) -> str:
        return "FixedPoint"


FIXED_POINT = FixedPoint()


@dataclass(frozen=True)
class InvolutionStep:
    """Block data of one involution move."""

    s: int
    r: int
    before: tuple[int, int]
    after: tuple[int, int]


def constrained_monomials(alpha) -> Iterator[ConstrainedMonomial]:
    """All words for alpha, in lexicographic order."""
    alpha = Composition(alpha)
    n = alpha.weight
    strict_after = set_of_composition(alpha)
    word: list[int] = []

    def extend(position: int, minimum: int) -> Iterator[ConstrainedMonomial]:
        if position == n:
            yield ConstrainedMonomial(alpha, tuple(word))
            return
        for value in range(minimum, n + 1):
            word.append(value)
            nxt = value + 1 if (position + 1) in strict_after else value
            yield from extend(position + 1, nxt)
            word.pop()

    yield from extend(0, 1)


def _word_from_gamma(gamma) -> tuple[int, ...]:
    out: list[int] = []
    for letter, count in enumerate(gamma, start=1):
        out.extend([letter] * count)
    return tuple(out)


def _word_is_constrained(word, alpha: Composition) -> bool:
    n = alpha.weight
    strict_after = set_of_composition(alpha)
    if any(not 1 <= a <= n for a in word):
        return False
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return False
        if (i + 1) in strict_after and word[i] >= word[i + 1]:
            return False
    return True


def locate_block(u: ConstrainedMonomial) -> InvolutionStep:
    """Find s(u), r(u) and the exponent pair the involution exchanges.

    s is the longest prefix on which the exponents match alpha exactly; the
    next letter block then spans positions s+1..s+r with exponent sum
    alpha_{s+1} and a positive final exponent.
    """
    alpha = u.alpha
    gamma = u.gamma
    s = 0
    while s < len(alpha) and gamma[s] == alpha[s]:
        s += 1
    if s == len(alpha):
        raise ValueError("monomial is the fixed point; no block to move")
    target = alpha[s]
    acc = 0
    r = 0
    last_positive = 0
    for offset in range(s, len(gamma)):
        acc += gamma[offset]
        if gamma[offset] > 0:
            last_positive = offset - s + 1
        if acc == target and gamma[offset] > 0:
            r = offset - s + 1
            break
        if acc > target:
            raise AssertionError("block sum overshot alpha; word not constrained")
    if r < 2:
        raise AssertionError(f"expected a split block, got r={r} (last +ve {last_positive})")
    before = (gamma[s + r - 2], gamma[s + r - 1])
    after = (before[1] - 1, before[0] + 1)
    return InvolutionStep(s=s, r=r, before=before, after=after)


def involution(u: ConstrainedMonomial) -> ConstrainedMonomial | FixedPoint:
    """The sign-reversing pairing on constrained monomials.

    The fixed point is the word whose exponent vector is alpha padded; every
    other word has the exponent pair at positions s+r-1, s+r replaced by
    (b_{s+r} - 1, b_{s+r-1} + 1), the exchange that flips the sign of the
    straightened Schur value.
    """
    alpha = u.alpha
    gamma = u.gamma
    if gamma == pad(alpha, len(gamma)):
        return FIXED_POINT
    step = locate_block(u)
    new_gamma = list(gamma)
    new_gamma[step.s + step.r - 2] = step.after[0]
    new_gamma[step.s + step.r - 1] = step.after[1]
    word = _word_from_gamma(new_gamma)
    if not _word_is_constrained(word, alpha):
        raise ValueError("involution image left the constrained family")
    return ConstrainedMonomial(alpha, word)


@dataclass
class VerificationReport:
    """Outcome of the four involution checks for one composition."""

    alpha: Composition
    monomial_count: int = 0
    fixed_points: list[tuple[int, ...]] = field(default_factory=list)
    pair_count: int = 0
    self_cancelling: int = 0
    unique_fixed_point: bool = False
    sign_reversing: bool = False
    telescopes: bool = False
    polynomial_check: bool = False
    witness: tuple[int, ...] | None = None

    def passed(self) -> bool:
        return (
            self.unique_fixed_point
            and self.sign_reversing
            and self.telescopes
            and self.polynomial_check
        )

    def to_json_dict(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "monomials": self.monomial_count,
            "fixed_points": [list(w) for w in self.fixed_points],
            "pairs": self.pair_count,
            "self_cancelling": self.self_cancelling,
            "clauses": {
                "unique_fixed_point": self.unique_fixed_point,
                "sign_reversing": self.sign_reversing,
                "telescopes": self.telescopes,
                "polynomial_check": self.polynomial_check,
            },
            "passed": self.passed(),
            "witness": list(self.witness) if self.witness else None,
        }


def verify_involution(alpha) -> VerificationReport:
    """Run all four checks: unique fixed point, sign-reversing pairing,
    telescoping of the signed Schur sum, and the bialternant cross-check."""
    alpha = Composition(alpha)
    n = alpha.weight
    report = VerificationReport(alpha=alpha)
    monomials = list(constrained_monomials(alpha))
    report.monomial_count = len(monomials)
    alpha_padded = pad(alpha, n)

    by_word = {u.word: u for u in monomials}
    seen_pairs: set[frozenset] = set()
    signed_total: dict[tuple[int, ...], int] = {}
    sign_ok = True
    witness = None
    for u in monomials:
        normal = straighten(u.gamma)
        if not normal.is_zero():
            key = tuple(normal.shape)
            signed_total[key] = signed_total.get(key, 0) + normal.sign
            if not signed_total[key]:
                del signed_total[key]
        image = involution(u)
        if isinstance(image, FixedPoint):
            report.fixed_points.append(u.word)
            continue
        if image.word not in by_word or not isinstance(involution(image), ConstrainedMonomial) or involution(image).word != u.word:
            sign_ok = False
            witness = witness or u.word
            continue
        pair = frozenset({u.word, image.word})
        if pair in seen_pairs:
            continue
        seen_pairs.add(pair)
        a = straighten(u.gamma)
        b = straighten(image.gamma)
        cancels = (a.is_zero() and b.is_zero()) or (
            not a.is_zero()
            and not b.is_zero()
            and a.shape == b.shape
            and a.sign == -b.sign
        )
        if not cancels:
            sign_ok = False
            witness = witness or u.word

    report.pair_count = sum(1 for pair in seen_pairs if len(pair) == 2)
    # a monomial can be exchanged onto itself; its straightened value is then
    # forced to zero and it cancels alone
    report.self_cancelling = sum(1 for pair in seen_pairs if len(pair) == 1)
    report.unique_fixed_point = (
        len(report.fixed_points) == 1
        and ConstrainedMonomial(alpha, report.fixed_points[0]).gamma == alpha_padded
    )
    report.sign_reversing = sign_ok

    target = straighten(alpha_padded)
    if target.is_zero():
        report.telescopes = not signed_total
    else:
        report.telescopes = signed_total == {tuple(target.shape): target.sign}

    # independent polynomial route: antisymmetrize the raw monomial sum and
    # divide once, bypassing the straightening closed form entirely
    summed: dict[tuple[int, ...], int] = {}
    for u in monomials:
        exps = u.full_exponent
        summed[exps] = summed.get(exps, 0) + 1
    numerator = SparsePoly(n, {e: c for e, c in summed.items()})
    lhs = exact_divide(antisymmetrize(numerator), vandermonde(n))
    rhs = schur_bialternant(alpha_padded, n)
    report.polynomial_check = lhs == rhs

    if not report.passed() and witness:
        report.witness = witness
    return report
