"""Stabilization of the cohomological table as the ambient dimension grows.

Embedding the Hermitian operators on C^n into those on C^N (extending by an
operator with simple spectrum on the complement) is compatible with the whole
construction, and the induced maps between cohomological tables are onto and
eventually bijective cell by cell.  The engine behind the estimate is that the
low-degree cohomology of the flag manifold of a fixed shape A stops changing
once the ambient dimension is large enough: ``stab_index`` finds that moment
by scanning Gaussian-multinomial coefficients, and ``e1_stable_bound`` turns
it into a sufficient bound for one cohomological cell,

    n*(p, q) = max over A of complexity -p of stab(A, p + q - 2 #A).

``stable_table`` evaluates cells at n*, n* + 1, n* + 2 and insists the ranks
agree, which is how the bound is kept honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .qcombinat import ConsistencyError, MultiIndex, QPoly, gauss_multinomial, multiindices
from .resolution import spectral_table


@dataclass(frozen=True)
class StabReport:
    """Outcome of a stabilization scan for one shape and one degree.

    ``witness`` holds the stable coefficients of the flag Poincare polynomial
    in q-degrees up to degree // 2.
    """

    A: MultiIndex
    degree: int
    stab_n: int
    witness: QPoly


def _low_coefficients(A: MultiIndex, m: int, q_cut: int) -> tuple[int, ...]:
    poly = gauss_multinomial(m, A.parts)
    return tuple(poly.coefficient(j) for j in range(q_cut + 1))


@cache
def stab_index(A: MultiIndex, degree: int) -> StabReport:
    """Smallest ambient dimension past which the flag cohomology of shape A
    stops changing in real degrees up to ``degree``.

    Odd degrees are empty, so only q-degrees up to ``degree // 2`` matter;
    negative degrees are clamped to 0.  The scan accepts m once the low
    coefficients agree at m, m + 1 and m + 2, and cannot run past
    ``degree // 2 + |A|``: low Gaussian-multinomial coefficients are
    nondecreasing in the ambient dimension and constant from that point on.
    """
    q_cut = max(degree, 0) // 2
    bound = q_cut + A.size
    for m in range(A.size, bound + 1):
        low = _low_coefficients(A, m, q_cut)
        if low == _low_coefficients(A, m + 1, q_cut) == _low_coefficients(A, m + 2, q_cut):
            witness = QPoly({j: c for j, c in enumerate(low)})
            return StabReport(A, degree, m, witness)
    raise ConsistencyError(
        f"coefficients of shape {A} failed to stabilize by m={bound}"
    )


def complexity_indices(p: int) -> list[MultiIndex]:
    """All multi-indices of complexity exactly p >= 1 (their size is at most
    2p, so the list is finite)."""
    if p < 1:
        raise ValueError("complexity is at least 1 for a nonempty index")
    return [A for A in multiindices(2 * p, p) if A.complexity == p]


def e1_stable_bound(p: int, q: int) -> int:
    """Ambient dimension by which the cohomological cell (p, q) has reached
    its stable rank: max over shapes A of complexity -p of
    ``stab_index(A, p + q - 2 #A)``.

    The column p = 0 holds only the unit class, which never moves; by
    convention the bound returned for it is 2 (the smallest ambient
    dimension the tables are built for).
    """
    if p > 0:
        raise ValueError("cohomological columns have p <= 0")
    if p + q < 0:
        raise ValueError("cells below the diagonal p + q = 0 are empty")
    if p == 0:
        return 2
    return max(
        stab_index(A, p + q - 2 * A.length).stab_n for A in complexity_indices(-p)
    )


def cohomological_rank(n: int, p: int, q: int) -> int:
    """Rank of the cohomological cell (p, q) in ambient dimension n; the
    column p = 0 carries exactly the unit class."""
    if p > 0 or p + q < 0:
        raise ValueError("cells must satisfy p <= 0 <= p + q")
    if p == 0:
        return 1 if q == 0 else 0
    return spectral_table(n).cohomological_rank(p, q)


@dataclass(frozen=True)
class StableCell:
    p: int
    q: int
    bound_n: int
    rank: int


def stable_table(p_min: int, q_max: int) -> tuple[StableCell, ...]:
    """Stable cohomological ranks for all cells with p_min <= p <= 0 and
    -p <= q <= q_max, each evaluated at its bound and re-evaluated twice
    beyond it; any disagreement raises :class:`ConsistencyError`."""
    if p_min > 0:
        raise ValueError("p_min must be at most 0")
    cells: list[StableCell] = []
    for p in range(p_min, 1):
        for q in range(-p, q_max + 1):
            bound = e1_stable_bound(p, q)
            ranks = [cohomological_rank(m, p, q) for m in (bound, bound + 1, bound + 2)]
            if len(set(ranks)) != 1:
                raise ConsistencyError(
                    f"cell ({p}, {q}) not stable at its bound {bound}: ranks {ranks}"
                )
            cells.append(StableCell(p, q, bound, ranks[0]))
    return tuple(cells)
