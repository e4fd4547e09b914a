"""Exact polynomial arithmetic and block-partition combinatorics.

Everything downstream is bookkeeping with two kinds of integer polynomials:

* ``QPoly`` -- polynomials in ``q``, where the coefficient of ``q^k`` is the
  rank of a cohomology group in real degree ``2k``.  Complex manifolds with
  algebraic cell decompositions (Grassmannians, partial flag manifolds) live
  here.
* ``GradedDims`` -- Laurent polynomials in ``t``, where the coefficient of
  ``t^j`` is the rank of a (Borel-Moore) homology group in degree ``j``.

The only bridge between the two gradings is :meth:`QPoly.to_graded`, which
doubles every exponent (``q = t^2``).  There is deliberately no implicit
coercion: off-by-one degree shifts are the dominant failure mode in this kind
of computation, and keeping the gradings in separate types makes them
impossible to confuse silently.

The module also owns the index combinatorics: integer partitions,
multi-indices ``A`` of eigenvalue multiplicities, and the conjugacy classes of
the group permuting equal-size parts of ``A``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, Mapping, Sequence, TypeVar


class ConsistencyError(RuntimeError):
    """A quantity that must hold by theory came out wrong.

    This always signals a bug (or a deliberately falsified sign convention),
    never bad user input.
    """


class InexactDivisionError(ConsistencyError):
    """A polynomial division that must be exact left a remainder."""


class BudgetExceededError(RuntimeError):
    """A brute-force oracle was asked to enumerate more than its budget."""


# --------------------------------------------------------------------------
# sparse integer polynomials
# --------------------------------------------------------------------------

_P = TypeVar("_P", bound="_SparsePoly")


class _SparsePoly:
    """Immutable sparse polynomial with integer coefficients.

    Stored as a map exponent -> coefficient with no zero entries, so equality
    is structural.  Subclasses fix the variable name and whether negative
    exponents are allowed.
    """

    __slots__ = ("_coeffs",)

    _var = "x"
    _allow_negative = True

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exponent, coefficient in items:
            if not isinstance(exponent, int) or not isinstance(coefficient, int):
                raise TypeError("exponents and coefficients must be integers")
            if coefficient:
                acc[exponent] = acc.get(exponent, 0) + coefficient
        acc = {e: c for e, c in acc.items() if c}
        if not self._allow_negative and acc and min(acc) < 0:
            raise ValueError(f"{type(self).__name__} does not allow negative exponents")
        self._coeffs = acc

    @classmethod
    def zero(cls: type[_P]) -> _P:
        return cls()

    @classmethod
    def one(cls: type[_P]) -> _P:
        return cls({0: 1})

    @classmethod
    def term(cls: type[_P], exponent: int, coefficient: int = 1) -> _P:
        return cls({exponent: coefficient})

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        """Terms as (exponent, coefficient) pairs, ascending exponent."""
        return tuple(sorted(self._coeffs.items()))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    def min_degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return min(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._coeffs.items())))

    def __neg__(self: _P) -> _P:
        return type(self)({e: -c for e, c in self._coeffs.items()})

    def _check_same_type(self, other: object) -> None:
        if type(other) is not type(self):
            raise TypeError(
                f"cannot combine {type(self).__name__} with {type(other).__name__};"
                " convert explicitly"
            )

    def __add__(self: _P, other: _P) -> _P:
        self._check_same_type(other)
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return type(self)(acc)

    def __sub__(self: _P, other: _P) -> _P:
        self._check_same_type(other)
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) - c
        return type(self)(acc)

    def __mul__(self: _P, other: _P | int) -> _P:
        if isinstance(other, int):
            return type(self)({e: c * other for e, c in self._coeffs.items()})
        self._check_same_type(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return type(self)(acc)

    def __rmul__(self: _P, other: int) -> _P:
        return self.__mul__(other)

    def __call__(self, value: int) -> int:
        """Evaluate at an integer, e.g. at q = 1 for a total rank."""
        return sum(c * value**e for e, c in self._coeffs.items())

    def substitute_power(self: _P, c: int) -> _P:
        """Multiply every exponent by c >= 1, keeping coefficients."""
        if not isinstance(c, int) or c < 1:
            raise ValueError("substitution power must be a positive integer")
        return type(self)({e * c: coeff for e, coeff in self._coeffs.items()})

    def times_power(self: _P, k: int) -> _P:
        """Multiply by the k-th power of the variable (degree shift)."""
        return type(self)({e + k: c for e, c in self._coeffs.items()})

    def exact_div(self: _P, divisor: _P) -> _P:
        """Divide exactly; raise :class:`InexactDivisionError` otherwise."""
        self._check_same_type(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return type(self)()
        den = sorted(divisor._coeffs.items())
        low_exp, low_coeff = den[0]
        max_quotient_degree = self.degree() - divisor.degree()
        num = dict(self._coeffs)
        quotient: dict[int, int] = {}
        while num:
            e = min(num)
            c = num[e]
            if c % low_coeff:
                raise InexactDivisionError(f"{self!r} is not divisible by {divisor!r}")
            qe, qc = e - low_exp, c // low_coeff
            if qe > max_quotient_degree:
                raise InexactDivisionError(f"{self!r} is not divisible by {divisor!r}")
            quotient[qe] = qc
            for de, dc in den:
                ne = de + qe
                nc = num.get(ne, 0) - dc * qc
                if nc:
                    num[ne] = nc
                else:
                    num.pop(ne, None)
        return type(self)(quotient)

    def is_palindromic(self) -> bool:
        if not self._coeffs:
            return True
        lo, hi = self.min_degree(), self.degree()
        return all(self.coefficient(lo + k) == self.coefficient(hi - k) for k in range(hi - lo + 1))

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        chunks: list[str] = []
        for e, c in self.items():
            mono = "1" if e == 0 else (self._var if e == 1 else f"{self._var}^{e}")
            if e == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(self.items())!r})"


class QPoly(_SparsePoly):
    """Cohomology ranks of a complex manifold: coefficient of ``q^k`` = rank
    in real degree ``2k``.  Exponents are never negative."""

    __slots__ = ()
    _var = "q"
    _allow_negative = False

    def to_graded(self) -> "GradedDims":
        """The same ranks on the t-grading: every exponent doubles (q = t^2)."""
        return GradedDims({2 * e: c for e, c in self._coeffs.items()})


class GradedDims(_SparsePoly):
    """Integer Laurent polynomial in ``t`` recording ranks by homological degree."""

    __slots__ = ()
    _var = "t"


def substitute_power(p: _P, c: int) -> _P:
    """Multiply every exponent of ``p`` by ``c`` (the graded trace of a
    c-cycle permuting c tensor copies of a graded vector space, signs aside)."""
    return p.substitute_power(c)


def one_minus_q(exponent: int) -> QPoly:
    """The factor ``1 - q^exponent``."""
    if exponent < 1:
        raise ValueError("exponent must be positive")
    return QPoly({0: 1, exponent: -1})


@cache
def q_pochhammer(k: int, step: int = 1) -> QPoly:
    """The product ``(1 - q^step)(1 - q^{2 step}) ... (1 - q^{k step})``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return QPoly.one()
    return q_pochhammer(k - 1, step) * one_minus_q(k * step)


def integer_combination(pairs: Iterable[tuple[Fraction, _P]], cls: type[_P]) -> _P:
    """Sum weight * polynomial with rational weights; the result must have
    integer coefficients (it is a rank), else :class:`ConsistencyError`."""
    acc: dict[int, Fraction] = {}
    for weight, poly in pairs:
        for e, c in poly.items():
            acc[e] = acc.get(e, Fraction(0)) + weight * c
    out: dict[int, int] = {}
    for e, val in acc.items():
        if val:
            if val.denominator != 1:
                raise ConsistencyError(f"non-integral rank {val} at exponent {e}")
            out[e] = int(val)
    return cls(out)


# --------------------------------------------------------------------------
# partitions and multi-indices
# --------------------------------------------------------------------------


def partitions(m: int, min_part: int = 1) -> tuple[tuple[int, ...], ...]:
    """All partitions of ``m`` with every part >= ``min_part``.

    Returned in lexicographically decreasing order, e.g.
    ``partitions(6, 2) == ((6,), (4, 2), (3, 3), (2, 2, 2))``.  The order is
    part of the contract: golden outputs depend on it.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if min_part < 1:
        raise ValueError("min_part must be at least 1")
    return _partitions_bounded(m, m, min_part)


@cache
def _partitions_bounded(m: int, max_part: int, min_part: int) -> tuple[tuple[int, ...], ...]:
    if m == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(m, max_part), min_part - 1, -1):
        for rest in _partitions_bounded(m - first, first, min_part):
            out.append((first,) + rest)
    return tuple(out)


def centralizer_order(rho: Sequence[int]) -> int:
    """z_rho = prod over part sizes k of k^{m_k} * m_k!, the centralizer order
    of a permutation of cycle type ``rho``."""
    mult: dict[int, int] = {}
    for part in rho:
        mult[part] = mult.get(part, 0) + 1
    return prod(k**m * factorial(m) for k, m in mult.items())


@dataclass(frozen=True)
class MultiIndex:
    """A weakly decreasing tuple of eigenvalue multiplicities, all >= 2.

    For an ambient dimension n (supplied per call), the derived quantities are
    the size ``|A|``, the length ``#A``, the complexity ``|A| - #A`` and the
    liberty ``n - |A|``.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(p < 2 for p in self.parts):
            raise ValueError("every part must be at least 2")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def complexity(self) -> int:
        return self.size - self.length

    def liberty(self, n: int) -> int:
        if self.size > n:
            raise ValueError(f"index {self} does not fit in ambient dimension {n}")
        return n - self.size

    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """Pairs (part size, multiplicity), sizes descending."""
        return tuple((size, len(tuple(run))) for size, run in itertools.groupby(self.parts))

    @property
    def symmetry_order(self) -> int:
        """Order of the group permuting equal-size parts among themselves."""
        return prod(factorial(m) for _, m in self.multiplicities())

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """(complexity, lexicographically decreasing parts): the listing order."""
        return (self.complexity, tuple(-p for p in self.parts))

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def multiindices(n: int, max_complexity: int) -> list[MultiIndex]:
    """All multi-indices with size <= n and complexity <= max_complexity,
    ordered by complexity, then lexicographically decreasing parts."""
    if n < 2:
        raise ValueError("ambient dimension must be at least 2")
    out = [
        MultiIndex(parts)
        for s in range(2, n + 1)
        for parts in partitions(s, 2)
        if s - len(parts) <= max_complexity
    ]
    out.sort(key=MultiIndex.sort_key)
    return out


@dataclass(frozen=True)
class BlockClass:
    """A conjugacy class of the group permuting equal-size parts of a
    multi-index: one partition (cycle type) per distinct part size.

    ``rho`` pairs each distinct part size with the cycle type of the permutation
    of its equal-size parts, sizes descending.
    """

    rho: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def cycles(self) -> tuple[tuple[int, int], ...]:
        """All block cycles as (cycle length, part size) pairs."""
        return tuple((c, size) for size, cycle_type in self.rho for c in cycle_type)

    @property
    def class_size(self) -> int:
        return prod(
            factorial(sum(cycle_type)) // centralizer_order(cycle_type)
            for _, cycle_type in self.rho
        )

    @property
    def sign(self) -> int:
        """Sign character: product of (-1)^(c-1) over all block cycles."""
        return prod(-1 if c % 2 == 0 else 1 for c, _ in self.cycles)

    @property
    def is_trivial(self) -> bool:
        return all(c == 1 for c, _ in self.cycles)

    def __str__(self) -> str:
        return " ".join(
            f"{size}:({','.join(map(str, ct))})" for size, ct in self.rho
        ) or "()"


def conjugacy_classes(A: MultiIndex) -> list[BlockClass]:
    """Conjugacy classes of the equal-part permutation group of ``A``.

    Class sizes add up to the group order (prod of multiplicity factorials).
    The trivial class comes first.
    """
    mults = A.multiplicities()
    choices = [
        [(size, cycle_type) for cycle_type in _cycle_types_identity_first(m)]
        for size, m in mults
    ]
    return [BlockClass(tuple(combo)) for combo in itertools.product(*choices)]


def _cycle_types_identity_first(m: int) -> list[tuple[int, ...]]:
    # (1, 1, ..., 1) first, then the rest in the standard partition order
    all_types = list(partitions(m, 1))
    identity = (1,) * m
    all_types.remove(identity)
    return [identity] + all_types


def gauss_multinomial(n: int, parts: Sequence[int]) -> QPoly:
    """Gaussian multinomial ``[n; parts, n - sum(parts)]_q``.

    The Poincare polynomial (in q) of the manifold of ordered tuples of
    pairwise orthogonal complex subspaces of the given dimensions inside C^n;
    the remainder is appended as an implicit last part.  Palindromic, with
    degree the second elementary symmetric function of all parts.
    """
    parts = tuple(parts)
    if any((not isinstance(p, int)) or p < 1 for p in parts):
        raise ValueError("parts must be positive integers")
    total = sum(parts)
    if total > n:
        raise ValueError(f"parts sum to {total} > n = {n}")
    denominator = QPoly.one()
    for a in parts + (n - total,):
        denominator = denominator * q_pochhammer(a)
    result = q_pochhammer(n).exact_div(denominator)
    if not result.nonnegative():
        raise ConsistencyError(f"negative coefficient in [{n}; {parts}]_q")
    return result
