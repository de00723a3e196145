"""Gessel fundamental quasisymmetric polynomials and F-expansion extraction."""

from __future__ import annotations

from math import comb
from typing import Mapping

from .combinatorics import (
    Composition,
    Partition,
    compositions_of,
    set_of_composition,
)
from .polynomial import QT, QT_ZERO, SparsePoly, _as_qt
from .schur import schur_ssyt

BASES = ("F", "M", "s")


class Expansion:
    """Homogeneous linear combination over a named basis.

    Indices are compositions for the F and M bases and partitions for the
    s basis; coefficients live in Z[q,t].
    """

    __slots__ = ("basis", "degree", "_terms")

    def __init__(self, basis: str, degree: int, terms: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.degree = degree
        cleaned: dict[tuple[int, ...], QT] = {}
        if terms:
            for index, coeff in terms.items():
                index = self._normalize_index(index)
                coeff = _as_qt(coeff)
                if coeff:
                    cleaned[index] = coeff
        self._terms = cleaned

    def _normalize_index(self, index) -> tuple[int, ...]:
        if self.basis == "s":
            index = tuple(Partition(index))
        else:
            index = tuple(Composition(index))
        if sum(index) != self.degree:
            raise ValueError(
                f"index {index} has weight {sum(index)}, expected {self.degree}"
            )
        return index

    def terms(self):
        return self._terms.items()

    def coefficient(self, index) -> QT:
        return self._terms.get(tuple(index), QT_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Expansion):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __add__(self, other: "Expansion") -> "Expansion":
        if self.basis != other.basis or self.degree != other.degree:
            raise ValueError("cannot add expansions over different bases/degrees")
        out = dict(self._terms)
        for index, coeff in other._terms.items():
            new = out.get(index, QT_ZERO) + coeff
            if new:
                out[index] = new
            else:
                out.pop(index, None)
        return Expansion(self.basis, self.degree, out)

    def __neg__(self) -> "Expansion":
        return Expansion(
            self.basis, self.degree, {i: -c for i, c in self._terms.items()}
        )

    def __sub__(self, other: "Expansion") -> "Expansion":
        return self + (-other)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], QT]]:
        return sorted(self._terms.items())

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"index": list(index), "coeff": coeff.triples()}
                for index, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "Expansion":
        terms: dict[tuple[int, ...], QT] = {}
        for entry in doc["terms"]:
            index = tuple(int(i) for i in entry["index"])
            coeff = QT.from_triples(entry["coeff"])
            terms[index] = terms.get(index, QT_ZERO) + coeff
        return cls(doc["basis"], int(doc["degree"]), terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, coeff in self.sorted_terms():
            c = str(coeff)
            if "+" in c:
                c = f"({c})"
            body = ",".join(str(i) for i in index)
            pieces.append(f"{c}*{self.basis}[{body}]")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"Expansion({self})"


def fundamental(alpha, nvars: int) -> SparsePoly:
    """F_alpha(x_1..x_nvars): sum over weakly increasing sequences with a
    forced strict rise after each descent position of alpha."""
    alpha = Composition(alpha)
    n = alpha.weight
    strict_after = set_of_composition(alpha)
    counts: dict[tuple[int, ...], int] = {}
    exps = [0] * nvars

    def extend(position: int, minimum: int) -> None:
        if position == n:
            key = tuple(exps)
            counts[key] = counts.get(key, 0) + 1
            return
        for value in range(minimum, nvars + 1):
            exps[value - 1] += 1
            nxt = value + 1 if (position + 1) in strict_after else value
            extend(position + 1, nxt)
            exps[value - 1] -= 1

    extend(0, 1)
    return SparsePoly(nvars, {e: c for e, c in counts.items()})


def monomial_quasisym(beta, nvars: int) -> SparsePoly:
    """M_beta: sum of x_{i_1}^{beta_1} ... x_{i_l}^{beta_l} over i_1 < ... < i_l."""
    beta = Composition(beta)
    length = len(beta)
    terms: dict[tuple[int, ...], int] = {}

    def choose(slot: int, minimum: int, exps: list[int]) -> None:
        if slot == length:
            terms[tuple(exps)] = 1
            return
        for i in range(minimum, nvars - (length - slot) + 2):
            exps[i - 1] = beta[slot]
            choose(slot + 1, i + 1, exps)
            exps[i - 1] = 0

    choose(0, 1, [0] * nvars)
    return SparsePoly(nvars, {e: c for e, c in terms.items()})


def monomial_qs_coefficients(p: SparsePoly) -> dict[Composition, QT]:
    """Coefficients c_beta of the monomial quasisymmetric expansion of p.

    Verifies quasisymmetry: every monomial with the same support-composition
    must carry the same coefficient, and each pattern must occur on every
    choice of support.
    """
    if not p.is_homogeneous():
        raise ValueError("polynomial is not homogeneous")
    groups: dict[tuple[int, ...], list[QT]] = {}
    for exps, coeff in p.terms():
        pattern = tuple(e for e in exps if e)
        if sum(exps) != sum(pattern):
            raise AssertionError("impossible: dropped nonzero exponent")
        groups.setdefault(pattern, []).append(coeff)
    out: dict[Composition, QT] = {}
    for pattern, coeffs in groups.items():
        expected = comb(p.nvars, len(pattern))
        if len(coeffs) != expected or any(c != coeffs[0] for c in coeffs):
            raise ValueError("polynomial is not quasisymmetric")
        out[Composition(pattern)] = coeffs[0]
    return out


def extract_f_expansion(p: SparsePoly) -> Expansion:
    """The unique F-basis coefficients of a quasisymmetric polynomial.

    Works through monomial quasisymmetric coefficients and inclusion-exclusion
    on the descent-set lattice.  Since c_beta = sum of a_alpha over coarsenings
    alpha of beta, the inverse is a_alpha = sum over Set(beta) <= Set(alpha) of
    (-1)^(|Set(alpha)| - |Set(beta)|) c_beta.
    """
    if p.is_zero():
        return Expansion("F", 0)
    n = p.degree()
    if p.nvars < n:
        raise ValueError(
            f"need at least {n} variables to separate degree-{n} fundamentals"
        )
    c = monomial_qs_coefficients(p)
    by_set = {set_of_composition(beta): coeff for beta, coeff in c.items()}
    terms: dict[tuple[int, ...], QT] = {}
    # a coefficient can be nonzero even where the monomial coefficient
    # cancels to zero, so sweep every composition of n
    for alpha in compositions_of(n):
        sa = set_of_composition(alpha)
        total = QT_ZERO
        for other_set, coeff in by_set.items():
            if other_set <= sa:
                sign = -1 if (len(sa) - len(other_set)) % 2 else 1
                total = total + coeff * sign
        if total:
            terms[tuple(alpha)] = total
    return Expansion("F", n, terms)


def expansion_to_poly(e: Expansion, nvars: int) -> SparsePoly:
    """Evaluate an expansion as a polynomial in nvars variables."""
    builders = {
        "F": fundamental,
        "M": monomial_quasisym,
        "s": schur_ssyt,
    }
    build = builders[e.basis]
    total = SparsePoly.zero(nvars)
    for index, coeff in e.terms():
        total = total + build(index, nvars).scalar_mul(coeff)
    return total
