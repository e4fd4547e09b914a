"""The cohomology ring of n x n Hermitian operators with simple spectrum.

Ordering the eigenvalues makes the eigenspaces into n complex line bundles
over this space; writing ``c^1, ..., c^n`` for their first Chern classes, the
integral cohomology ring is

    Z[c^1, ..., c^n] / (all symmetric polynomials of positive degree).

A free Z-basis of the quotient is the staircase of monomials with the exponent
of ``c^i`` at most ``n - i``.  Normal forms are computed by rewriting with the
relations ``h_{n-k+1}(c^1, ..., c^k) = 0`` (complete homogeneous sums), whose
extremal monomial is ``(c^k)^{n-k+1}``; repeated rewriting strictly decreases
monomials and lands on the staircase basis.

Degree-2 classes are integer sequences ``(a_1, ..., a_n)`` (meaning
``sum a_i c^i``) modulo constant sequences.  Their *order* is the degree of the
integer polynomial in ``i`` interpolating the sequence, read off from finite
differences; the first-difference operator drops the order by one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterator, Mapping, Sequence

from .qcombinat import QPoly

Monomial = tuple[int, ...]


def _validate_monomial(mono: Monomial, n: int) -> None:
    if len(mono) != n:
        raise ValueError(f"monomial {mono} has {len(mono)} exponents, expected {n}")
    if any((not isinstance(e, int)) or e < 0 for e in mono):
        raise ValueError(f"monomial {mono} has invalid exponents")


def _within_staircase(mono: Monomial, n: int) -> bool:
    # exponent of c^i bounded by n - i (i is 1-based)
    return all(e <= n - i for i, e in enumerate(mono, start=1))


@cache
def _rewrite_products(n: int, k: int) -> tuple[Monomial, ...]:
    """Monomials of h_{n-k+1}(c^1, ..., c^k) other than (c^k)^{n-k+1}.

    Each appears with coefficient 1 in the relation, so the rewrite replaces
    (c^k)^{n-k+1} by minus their sum.
    """
    d = n - k + 1
    out = []
    for combo in itertools.combinations_with_replacement(range(k), d):
        mono = [0] * n
        for var in combo:
            mono[var] += 1
        mono_t = tuple(mono)
        if mono_t != tuple(0 if i != k - 1 else d for i in range(n)):
            out.append(mono_t)
    return tuple(out)


def _reduce(terms: Mapping[Monomial, int], n: int) -> dict[Monomial, int]:
    work = {m: c for m, c in terms.items() if c}
    result: dict[Monomial, int] = {}
    while work:
        mono = max(work)
        coeff = work.pop(mono)
        if not coeff:
            continue
        violation = None
        for k in range(n, 0, -1):
            if mono[k - 1] > n - k:
                violation = k
                break
        if violation is None:
            new = result.get(mono, 0) + coeff
            if new:
                result[mono] = new
            else:
                result.pop(mono, None)
            continue
        k = violation
        base = list(mono)
        base[k - 1] -= n - k + 1
        for product in _rewrite_products(n, k):
            new_mono = tuple(b + p for b, p in zip(base, product))
            acc = work.get(new_mono, 0) - coeff
            if acc:
                work[new_mono] = acc
            else:
                work.pop(new_mono, None)
    return result


@dataclass(frozen=True)
class RingElement:
    """An element of the quotient ring in staircase normal form.

    ``terms`` maps staircase monomials (exponent tuples for ``c^1 .. c^n``) to
    integer coefficients; the monomial ``(e_1, ..., e_n)`` sits in real
    cohomological degree ``2 * sum(e_i)``.
    """

    n: int
    terms: tuple[tuple[Monomial, int], ...]

    def __post_init__(self) -> None:
        for mono, coeff in self.terms:
            _validate_monomial(mono, self.n)
            if not _within_staircase(mono, self.n):
                raise ValueError(f"monomial {mono} is not in normal form for n={self.n}")
            if coeff == 0:
                raise ValueError("zero coefficients must not be stored")

    @classmethod
    def _from_dict(cls, n: int, terms: Mapping[Monomial, int]) -> "RingElement":
        return cls(n, tuple(sorted((m, c) for m, c in terms.items() if c)))

    @classmethod
    def zero(cls, n: int) -> "RingElement":
        return cls(n, ())

    @classmethod
    def one(cls, n: int) -> "RingElement":
        return cls(n, (((0,) * n, 1),))

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def coefficient(self, mono: Monomial) -> int:
        return dict(self.terms).get(tuple(mono), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def q_degrees(self) -> QPoly:
        """Number of terms per q-degree (half the real degree)."""
        acc: dict[int, int] = {}
        for mono, _ in self.terms:
            d = sum(mono)
            acc[d] = acc.get(d, 0) + 1
        return QPoly(acc)

    def homogeneous(self, q_degree: int) -> "RingElement":
        return RingElement(
            self.n, tuple((m, c) for m, c in self.terms if sum(m) == q_degree)
        )

    def __add__(self, other: "RingElement") -> "RingElement":
        if self.n != other.n:
            raise ValueError("ambient dimensions differ")
        acc = self.as_dict()
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return RingElement._from_dict(self.n, acc)

    def __neg__(self) -> "RingElement":
        return RingElement(self.n, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        def mono_str(mono: Monomial) -> str:
            factors = [
                f"c{i}" if e == 1 else f"c{i}^{e}"
                for i, e in enumerate(mono, start=1)
                if e
            ]
            return "*".join(factors) if factors else "1"

        chunks = []
        for mono, coeff in self.terms:
            body = mono_str(mono) if abs(coeff) == 1 and any(mono) else (
                f"{abs(coeff)}*{mono_str(mono)}" if any(mono) else str(abs(coeff))
            )
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)


def normal_form(expr: Mapping[Monomial, int] | RingElement, n: int) -> RingElement:
    """Canonical staircase representative of a formal integer combination of
    monomials in ``c^1 .. c^n``.  Idempotent and Z-linear."""
    if isinstance(expr, RingElement):
        if expr.n != n:
            raise ValueError("ambient dimensions differ")
        terms: Mapping[Monomial, int] = expr.as_dict()
    else:
        terms = {tuple(m): c for m, c in expr.items()}
        for mono in terms:
            _validate_monomial(mono, n)
    return RingElement._from_dict(n, _reduce(terms, n))


def generator(n: int, i: int) -> RingElement:
    """The Chern class ``c^i`` of the i-th eigenline bundle, 1 <= i <= n."""
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    mono = tuple(1 if j == i else 0 for j in range(1, n + 1))
    return normal_form({mono: 1}, n)


def elementary_symmetric(n: int, k: int) -> dict[Monomial, int]:
    """The formal (unreduced) k-th elementary symmetric polynomial of the
    generators; its normal form is zero for 1 <= k <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    out: dict[Monomial, int] = {}
    for combo in itertools.combinations(range(n), k):
        mono = tuple(1 if j in combo else 0 for j in range(n))
        out[mono] = 1
    return out


def cup(x: RingElement, y: RingElement) -> RingElement:
    """Cup product: multiply and renormalize.  All generators have even
    degree, so the product is commutative on the nose."""
    if x.n != y.n:
        raise ValueError("ambient dimensions differ")
    acc: dict[Monomial, int] = {}
    for m1, c1 in x.terms:
        for m2, c2 in y.terms:
            m = tuple(a + b for a, b in zip(m1, m2))
            acc[m] = acc.get(m, 0) + c1 * c2
    return RingElement._from_dict(x.n, _reduce(acc, x.n))


def staircase_monomials(n: int) -> Iterator[Monomial]:
    """All normal-form monomials: exponent of c^i at most n - i.  There are
    n! of them."""
    yield from itertools.product(*(range(n - i + 1) for i in range(1, n + 1)))


def ring_poincare(n: int) -> QPoly:
    """Rank of the quotient ring per q-degree:
    (1 + q)(1 + q + q^2) ... (1 + q + ... + q^{n-1})."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = QPoly.one()
    for j in range(2, n + 1):
        out = out * QPoly({k: 1 for k in range(j)})
    return out


# --------------------------------------------------------------------------
# degree-2 classes and the order filtration
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeTwoClass:
    """A degree-2 class ``sum alpha_i c^i``, stored modulo constant sequences
    (canonical representative has first entry 0)."""

    alpha: tuple[int, ...]

    def __post_init__(self) -> None:
        alpha = tuple(self.alpha)
        if not alpha:
            raise ValueError("the sequence must be nonempty")
        if any(not isinstance(a, int) for a in alpha):
            raise ValueError("entries must be integers")
        object.__setattr__(self, "alpha", tuple(a - alpha[0] for a in alpha))

    def __len__(self) -> int:
        return len(self.alpha)


def _as_sequence(alpha: DegreeTwoClass | Sequence[int]) -> tuple[int, ...]:
    if isinstance(alpha, DegreeTwoClass):
        return alpha.alpha
    return tuple(alpha)


def shift_difference(alpha: DegreeTwoClass | Sequence[int]) -> DegreeTwoClass:
    """First finite difference (a_2 - a_1, ..., a_n - a_{n-1}); the image of
    the spectrum-shift derivative on degree-2 classes."""
    seq = _as_sequence(alpha)
    if len(seq) < 2:
        raise ValueError("need a sequence of length at least 2")
    return DegreeTwoClass(tuple(b - a for a, b in zip(seq, seq[1:])))


def h2_order(alpha: DegreeTwoClass | Sequence[int]) -> int:
    """Order of a degree-2 class: the least p such that the sequence agrees
    (modulo constants) with an integer-valued polynomial of degree <= p.

    Computed as the order of the last nonvanishing finite difference; constant
    sequences (the zero class) have order 0.  Always at most n - 1.
    """
    seq = _as_sequence(alpha)
    if not seq:
        raise ValueError("the sequence must be nonempty")
    order = 0
    step = 0
    current = seq
    while len(current) >= 2:
        current = tuple(b - a for a, b in zip(current, current[1:]))
        step += 1
        if any(current):
            order = step
    return order


def first_order_h4(n: int) -> RingElement:
    """Normal form of ``sum_i i * (c^i)^2``, the generator of the order-1 part
    of degree-4 cohomology.

    For n = 2 the q^2-component of the ring is already zero, so the element
    vanishes; it is nonzero for every n >= 3.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    terms: dict[Monomial, int] = {}
    for i in range(1, n + 1):
        mono = tuple(2 if j == i else 0 for j in range(1, n + 1))
        terms[mono] = i
    return normal_form(terms, n)
