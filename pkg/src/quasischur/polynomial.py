"""Sparse exact polynomials in x_1..x_N over the coefficient ring Z[q,t]."""

from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping

from .combinatorics import permutation_sign


class ExactDivisionError(ArithmeticError):
    """Raised when a quotient does not exist in the polynomial ring."""


class QT:
    """Element of Z[q,t] stored as a sparse map (q-exp, t-exp) -> nonzero int."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        cleaned = {}
        if terms:
            for (qe, te), c in terms.items():
                if qe < 0 or te < 0:
                    raise ValueError("negative q/t exponent")
                if c:
                    cleaned[(qe, te)] = int(c)
        self._terms = cleaned

    @classmethod
    def integer(cls, n: int) -> "QT":
        return cls({(0, 0): n})

    @classmethod
    def term(cls, coeff: int, qexp: int = 0, texp: int = 0) -> "QT":
        return cls({(qexp, texp): coeff})

    def is_zero(self) -> bool:
        return not self._terms

    def is_q_free(self) -> bool:
        return all(qe == 0 for qe, _ in self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QT.integer(other)
        if not isinstance(other, QT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "QT") -> "QT":
        if isinstance(other, int):
            other = QT.integer(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            new = out.get(key, 0) + c
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        result = QT.__new__(QT)
        result._terms = out
        return result

    def __neg__(self) -> "QT":
        result = QT.__new__(QT)
        result._terms = {key: -c for key, c in self._terms.items()}
        return result

    def __sub__(self, other: "QT") -> "QT":
        return self + (-other)

    def __mul__(self, other) -> "QT":
        if isinstance(other, int):
            other = QT.integer(other)
        out: dict[tuple[int, int], int] = {}
        for (q1, t1), c1 in self._terms.items():
            for (q2, t2), c2 in other._terms.items():
                key = (q1 + q2, t1 + t2)
                new = out.get(key, 0) + c1 * c2
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        result = QT.__new__(QT)
        result._terms = out
        return result

    __rmul__ = __mul__

    def exact_div(self, other: "QT") -> "QT":
        """Exact quotient in Z[q,t]; raises ExactDivisionError otherwise."""
        if isinstance(other, int):
            other = QT.integer(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Z[q,t]")
        rem = dict(self._terms)
        quot: dict[tuple[int, int], int] = {}
        dlead = max(other._terms)
        dcoeff = other._terms[dlead]
        while rem:
            rlead = max(rem)
            qe, te = rlead[0] - dlead[0], rlead[1] - dlead[1]
            if qe < 0 or te < 0 or rem[rlead] % dcoeff:
                raise ExactDivisionError("inexact coefficient division in Z[q,t]")
            c = rem[rlead] // dcoeff
            quot[(qe, te)] = c
            for (q2, t2), c2 in other._terms.items():
                key = (qe + q2, te + t2)
                new = rem.get(key, 0) - c * c2
                if new:
                    rem[key] = new
                else:
                    rem.pop(key, None)
        return QT(quot)

    def triples(self) -> list[list[int]]:
        """Serialized form: [[qexp, texp, coeff], ...] sorted by (qexp, texp)."""
        return [[qe, te, c] for (qe, te), c in sorted(self._terms.items())]

    @classmethod
    def from_triples(cls, triples: Iterable[Iterable[int]]) -> "QT":
        out: dict[tuple[int, int], int] = {}
        for qe, te, c in triples:
            out[(qe, te)] = out.get((qe, te), 0) + c
        return cls(out)

    def t_coefficient(self, texp: int) -> int:
        """Integer coefficient of t^texp; requires a q-free value."""
        if not self.is_q_free():
            raise ValueError("coefficient involves q")
        return self._terms.get((0, texp), 0)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (qe, te), c in sorted(self._terms.items()):
            factors = []
            if c != 1 or (qe == 0 and te == 0):
                factors.append(str(c))
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            if te:
                factors.append("t" if te == 1 else f"t^{te}")
            pieces.append("*".join(factors))
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"QT({self})"


QT_ZERO = QT()
QT_ONE = QT.integer(1)
Q = QT.term(1, qexp=1)
T = QT.term(1, texp=1)


def _as_qt(value) -> QT:
    if isinstance(value, QT):
        return value
    if isinstance(value, int):
        return QT.integer(value)
    raise TypeError(f"cannot use {type(value).__name__} as a Z[q,t] coefficient")


class SparsePoly:
    """Polynomial in x_1..x_N with Z[q,t] coefficients, stored sparsely.

    Treated as immutable; all operations return new values.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], QT] | None = None):
        if nvars < 0:
            raise ValueError("variable count must be non-negative")
        self.nvars = nvars
        cleaned: dict[tuple[int, ...], QT] = {}
        if terms:
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent vector {exps} does not match {nvars} variables"
                    )
                coeff = _as_qt(coeff)
                if coeff:
                    cleaned[exps] = coeff
        self._terms = cleaned

    @classmethod
    def zero(cls, nvars: int) -> "SparsePoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: QT_ONE})

    @classmethod
    def monomial(cls, nvars: int, exps, coeff=QT_ONE) -> "SparsePoly":
        return cls(nvars, {tuple(exps): _as_qt(coeff)})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePoly":
        """The variable x_index (1-based)."""
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls.monomial(nvars, exps)

    def terms(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def _check_compatible(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"ambient dimension mismatch: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check_compatible(other)
        out = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = out.get(exps, QT_ZERO) + coeff
            if new:
                out[exps] = new
            else:
                out.pop(exps, None)
        return self._wrap(out)

    def __neg__(self) -> "SparsePoly":
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, (QT, int)):
            return self.scalar_mul(other)
        self._check_compatible(other)
        out: dict[tuple[int, ...], QT] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = out.get(key, QT_ZERO) + c1 * c2
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
        return self._wrap(out)

    __rmul__ = __mul__

    def scalar_mul(self, scalar) -> "SparsePoly":
        scalar = _as_qt(scalar)
        if not scalar:
            return SparsePoly.zero(self.nvars)
        return self._wrap({e: c * scalar for e, c in self._terms.items()})

    def _wrap(self, terms: dict[tuple[int, ...], QT]) -> "SparsePoly":
        result = SparsePoly.__new__(SparsePoly)
        result.nvars = self.nvars
        result._terms = terms
        return result

    def permute_variables(self, perm) -> "SparsePoly":
        """Apply sigma: exponent in slot i moves to variable perm[i] (1-based)."""
        out: dict[tuple[int, ...], QT] = {}
        for exps, coeff in self._terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i] - 1] = e
            out[tuple(new)] = coeff
        return self._wrap(out)

    def swap_variables(self, i: int, j: int) -> "SparsePoly":
        """Exchange x_i and x_j (1-based)."""
        out: dict[tuple[int, ...], QT] = {}
        for exps, coeff in self._terms.items():
            new = list(exps)
            new[i - 1], new[j - 1] = new[j - 1], new[i - 1]
            out[tuple(new)] = coeff
        return self._wrap(out)

    def is_symmetric(self) -> bool:
        """Invariance under adjacent transpositions, which generate S_n."""
        for i in range(1, self.nvars):
            if self.swap_variables(i, i + 1) != self:
                return False
        return True

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    def degree(self) -> int:
        """Total degree in the x variables; zero polynomial has degree 0."""
        if not self._terms:
            return 0
        return max(sum(e) for e in self._terms)

    def set_variable_to_zero(self, index: int) -> "SparsePoly":
        """Substitute x_index = 0 and drop the slot (1-based index)."""
        out: dict[tuple[int, ...], QT] = {}
        for exps, coeff in self._terms.items():
            if exps[index - 1]:
                continue
            out[exps[: index - 1] + exps[index:]] = coeff
        result = SparsePoly.__new__(SparsePoly)
        result.nvars = self.nvars - 1
        result._terms = out
        return result

    def sorted_terms(self) -> list[tuple[tuple[int, ...], QT]]:
        """Terms in ascending graded-lexicographic order of exponents."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json_dict(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [
                {"exps": list(exps), "coeff": coeff.triples()}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, doc: Mapping) -> "SparsePoly":
        nvars = int(doc["vars"])
        terms: dict[tuple[int, ...], QT] = {}
        for entry in doc["terms"]:
            exps = tuple(int(e) for e in entry["exps"])
            coeff = QT.from_triples(entry["coeff"])
            terms[exps] = terms.get(exps, QT_ZERO) + coeff
        return cls(nvars, terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            c = str(coeff)
            if "+" in c:
                c = f"({c})"
            pieces.append(f"{c}*{mono}" if mono else c)
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"SparsePoly({self.nvars}, {self})"


def _sort_sign(exps: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Sort an exponent vector into decreasing order, tracking the sign."""
    order = sorted(range(len(exps)), key=lambda i: -exps[i])
    return tuple(exps[i] for i in order), permutation_sign(order)


@lru_cache(maxsize=16)
def _signed_permutations(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple(
        (perm, permutation_sign(perm)) for perm in permutations(range(n))
    )


def antisymmetrize(p: SparsePoly) -> SparsePoly:
    """Signed sum over all variable permutations sigma of sgn(sigma)*sigma(p).

    Monomials with a repeated exponent vanish and are skipped; the rest are
    grouped by sorted exponent vector before the n! expansion.
    """
    n = p.nvars
    classes: dict[tuple[int, ...], QT] = {}
    for exps, coeff in p.terms():
        if len(set(exps)) != n:
            continue
        key, sign = _sort_sign(exps)
        new = classes.get(key, QT_ZERO) + coeff * sign
        if new:
            classes[key] = new
        else:
            classes.pop(key, None)
    out: dict[tuple[int, ...], QT] = {}
    for exps, coeff in classes.items():
        for perm, sign in _signed_permutations(n):
            out[tuple(exps[i] for i in perm)] = coeff * sign
    return SparsePoly(n, out)


def staircase(n: int) -> tuple[int, ...]:
    """The exponent vector (n-1, n-2, ..., 0)."""
    return tuple(range(n - 1, -1, -1))


@lru_cache(maxsize=16)
def vandermonde(n: int) -> SparsePoly:
    """Product of (x_i - x_j) over i < j."""
    result = SparsePoly.one(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result = result * (
                SparsePoly.variable(n, i) - SparsePoly.variable(n, j)
            )
    return result


def _graded_lex_lead(terms: dict[tuple[int, ...], QT]) -> tuple[int, ...]:
    return max(terms, key=lambda e: (sum(e), e))


def _heap_key(exps: tuple[int, ...]) -> tuple:
    # min-heap entry whose smallest element is the graded-lex largest monomial
    return (-sum(exps), tuple(-e for e in exps))


def _as_plain_int(coeff: QT) -> int | None:
    terms = coeff._terms
    if not terms:
        return 0
    if len(terms) == 1 and (0, 0) in terms:
        return terms[(0, 0)]
    return None


def _exact_divide_int(
    p_terms: dict[tuple[int, ...], int],
    d_terms: dict[tuple[int, ...], int],
    nvars: int,
) -> SparsePoly:
    """Integer-coefficient division loop; the common case for alternants."""
    dlead = max(d_terms, key=lambda e: (sum(e), e))
    dcoeff = d_terms[dlead]
    rem = dict(p_terms)
    heap = [_heap_key(e) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple[int, ...], int] = {}
    while rem:
        while heap:
            key = heapq.heappop(heap)
            rlead = tuple(-e for e in key[1])
            if rem.get(rlead):
                break
        else:
            break
        shift = tuple(a - b for a, b in zip(rlead, dlead))
        if any(e < 0 for e in shift) or rem[rlead] % dcoeff:
            raise ExactDivisionError("leading term not divisible")
        c = rem[rlead] // dcoeff
        quot[shift] = c
        for exps, dc in d_terms.items():
            key = tuple(a + b for a, b in zip(shift, exps))
            new = rem.get(key, 0) - c * dc
            if new:
                if key not in rem:
                    heapq.heappush(heap, _heap_key(key))
                rem[key] = new
            else:
                rem.pop(key, None)
    return SparsePoly(nvars, {e: QT.integer(c) for e, c in quot.items()})


def exact_divide(p: SparsePoly, d: SparsePoly) -> SparsePoly:
    """Exact quotient p/d; raises ExactDivisionError on a nonzero remainder."""
    p._check_compatible(d)
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p_ints = {e: _as_plain_int(c) for e, c in p._terms.items()}
    d_ints = {e: _as_plain_int(c) for e, c in d._terms.items()}
    if all(v is not None for v in p_ints.values()) and all(
        v is not None for v in d_ints.values()
    ):
        return _exact_divide_int(p_ints, d_ints, p.nvars)
    dlead = _graded_lex_lead(d._terms)
    dcoeff = d._terms[dlead]
    rem = dict(p._terms)
    heap = [_heap_key(e) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple[int, ...], QT] = {}
    while rem:
        while heap:
            key = heapq.heappop(heap)
            rlead = tuple(-e for e in key[1])
            if rem.get(rlead):
                break
        else:
            break
        shift = tuple(a - b for a, b in zip(rlead, dlead))
        if any(e < 0 for e in shift):
            raise ExactDivisionError("leading monomial not divisible")
        c = rem[rlead].exact_div(dcoeff)
        quot[shift] = c
        for exps, dc in d._terms.items():
            key = tuple(a + b for a, b in zip(shift, exps))
            new = rem.get(key, QT_ZERO) - c * dc
            if new:
                if key not in rem:
                    heapq.heappush(heap, _heap_key(key))
                rem[key] = new
            else:
                rem.pop(key, None)
    return SparsePoly(p.nvars, quot)
