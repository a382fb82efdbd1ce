"""Composite product-mean quadrature for Stieltjes integrals.

The rule approximates the integral of f*g du over [a, b] by summing, per
partition cell, the product of the two cell integrals normalised by the
cell increment of u.  Certified remainder estimates come in an oscillation
form (continuous f) and a Holder form; both also return the sharper
per-cell sum that drives the adaptive partitioner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DegenerateCell, DomainError, ToleranceUnreachable
from .funcrep import (PiecewiseFunction, RegularityCertificate,
                      inf_sup_on, require_certificate, sup_norm_on,
                      total_variation)
from .stieltjes import rs_integral

_SPAN_FLOOR = 1e-300


@dataclass(frozen=True)
class Partition:
    points: tuple[float, ...]

    def __post_init__(self):
        if len(self.points) < 2:
            raise DomainError("a partition needs at least two points")
        for x, y in zip(self.points, self.points[1:]):
            if not (x < y):
                raise DomainError("partition points must increase strictly")

    @classmethod
    def uniform(cls, a: float, b: float, n: int) -> "Partition":
        if n < 1:
            raise DomainError("n must be >= 1")
        return cls(tuple(a + (b - a) * i / n for i in range(n)) + (b,))

    @property
    def n(self) -> int:
        return len(self.points) - 1

    @property
    def widths(self) -> tuple[float, ...]:
        return tuple(y - x for x, y in zip(self.points, self.points[1:]))

    @property
    def mesh(self) -> float:
        return max(self.widths)

    def cells(self) -> list[tuple[float, float]]:
        return list(zip(self.points, self.points[1:]))


class RemainderBound(NamedTuple):
    stated: float      # max-form estimate
    tight: float       # per-cell sum, never larger than `stated`
    per_cell: tuple[float, ...]


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    remainder_bound: float
    tight_bound: float
    partition: Partition
    per_cell: tuple[tuple[float, float, float], ...]
    # per cell: (oscillation of f, centred sup of g, variation of u)

    def as_integral(self):
        """The certified enclosure as an IntegralResult (method 'refined')."""
        from .stieltjes import IntegralResult
        return IntegralResult(self.value, min(self.remainder_bound,
                                              self.tight_bound), "refined")


def _cell_state(u: PiecewiseFunction, lo: float, hi: float) -> str:
    """'ok', 'constant' (u flat on the cell) or 'degenerate'."""
    scale = 1.0 + max(abs(u(lo)), abs(u(hi)))
    if abs(u(hi) - u(lo)) > 1e-12 * scale:
        return "ok"
    if total_variation(u, lo, hi).mid <= 1e-10 * scale:
        return "constant"
    return "degenerate"


def oscillation_v(f: PiecewiseFunction, partition: Partition) -> float:
    """max over cells of (sup f - inf f), certified from above."""
    worst = 0.0
    for lo, hi in partition.cells():
        inf_e, sup_e = inf_sup_on(f, lo, hi)
        worst = max(worst, sup_e.hi - inf_e.lo)
    return worst


def composite_S(f: PiecewiseFunction, g: PiecewiseFunction,
                u: PiecewiseFunction, partition: Partition) -> float:
    """Sum over cells of cell-integral(f du) * cell-integral(g du) divided
    by the cell increment of u.  Cells on which u is constant contribute
    zero; other zero-increment cells raise DegenerateCell."""
    total = 0.0
    for i, (lo, hi) in enumerate(partition.cells()):
        state = _cell_state(u, lo, hi)
        if state == "constant":
            continue
        if state == "degenerate":
            raise DegenerateCell(i, (lo, hi))
        span = u(hi) - u(lo)
        i_f = rs_integral(f, u, lo, hi).value
        i_g = rs_integral(g, u, lo, hi).value
        total += i_f * i_g / span
    return total


def _cell_terms(f: PiecewiseFunction, g: PiecewiseFunction,
                u: PiecewiseFunction, lo: float, hi: float) \
        -> tuple[float, float, float]:
    """(oscillation of f, sup |g - cell mean|, variation of u) on a cell."""
    state = _cell_state(u, lo, hi)
    if state == "constant":
        return 0.0, 0.0, 0.0
    if state == "degenerate":
        raise DegenerateCell(-1, (lo, hi))
    var_u = total_variation(u, lo, hi).hi
    inf_e, sup_e = inf_sup_on(f, lo, hi)
    osc = sup_e.hi - inf_e.lo
    span = u(hi) - u(lo)
    mean_g = rs_integral(g, u, lo, hi).value / span
    sup_g = sup_norm_on(g - mean_g, lo, hi).hi
    return osc, sup_g, var_u


def remainder_bound_osc(f: PiecewiseFunction, g: PiecewiseFunction,
                        u: PiecewiseFunction,
                        partition: Partition) -> RemainderBound:
    """Oscillation-form remainder estimate
    (1/2) max_osc * max_cell_sup * Var(u), plus the per-cell tight sum."""
    per = []
    oscs = []
    sups = []
    for lo, hi in partition.cells():
        osc, sup_g, var_u = _cell_terms(f, g, u, lo, hi)
        per.append(0.5 * osc * sup_g * var_u)
        oscs.append(osc)
        sups.append(sup_g)
    stated = 0.5 * max(oscs) * max(sups) * total_variation(u).hi
    return RemainderBound(stated, sum(per), tuple(per))


def remainder_bound_holder(f: PiecewiseFunction, g: PiecewiseFunction,
                           u: PiecewiseFunction, partition: Partition,
                           f_holder: RegularityCertificate) -> RemainderBound:
    """Holder-form estimate (H/2^r) mesh^r * max_cell_sup * Var(u), plus the
    per-cell sum with the individual cell widths."""
    require_certificate(f, f_holder, "f")
    H, r = f_holder.params
    cells = partition.cells()
    per = []
    sups = []
    for lo, hi in cells:
        _, sup_g, var_u = _cell_terms(f, g, u, lo, hi)
        sups.append(sup_g)
        per.append(H / (2.0 ** r) * (hi - lo) ** r * sup_g * var_u)
    stated = H / (2.0 ** r) * partition.mesh ** r * max(sups) \
        * total_variation(u).hi
    return RemainderBound(stated, sum(per), tuple(per))


def adaptive_quadrature(f: PiecewiseFunction, g: PiecewiseFunction,
                        u: PiecewiseFunction, tol: float,
                        max_cells: int = 4096) -> QuadratureResult:
    """Bisect the worst cell of the per-cell oscillation bound until the
    tight bound drops below ``tol`` (or the cell budget is exhausted).

    Bisection points where u would repeat a cell-end value are shifted by a
    quarter cell; cells on which u is constant are frozen with a zero term.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    a, b = u.domain

    def term(lo: float, hi: float) -> float:
        state = _cell_state(u, lo, hi)
        if state == "constant":
            return 0.0
        if state == "degenerate":
            return math.inf  # force a split of this cell first
        osc, sup_g, var_u = _cell_terms(f, g, u, lo, hi)
        return 0.5 * osc * sup_g * var_u

    cells: list[tuple[float, float, float]] = [(a, b, term(a, b))]
    while True:
        tight = sum(t for _, _, t in cells if t != math.inf)
        pending = any(t == math.inf for _, _, t in cells)
        if not pending and tight <= tol:
            break
        if len(cells) >= max_cells and not pending:
            break
        if len(cells) >= max_cells + 64:
            worst_cell = max(cells, key=lambda c: c[2])
            raise ToleranceUnreachable((worst_cell[0], worst_cell[1]), tight)
        idx = max(range(len(cells)), key=lambda i: cells[i][2])
        lo, hi, worst = cells[idx]
        width = hi - lo
        split = None
        for frac in (0.5, 0.25, 0.75, 0.375, 0.625):
            cand = lo + frac * width
            if not (lo < cand < hi):
                continue
            if _cell_state(u, lo, cand) != "degenerate" \
                    and _cell_state(u, cand, hi) != "degenerate":
                split = cand
                break
        if split is None or width < 1e-13 * (b - a):
            if worst == math.inf or worst > tol:
                raise ToleranceUnreachable((lo, hi),
                                           worst if worst != math.inf
                                           else tol)
            break
        cells[idx] = (lo, split, term(lo, split))
        cells.insert(idx + 1, (split, hi, term(split, hi)))

    points = tuple(sorted({lo for lo, _, _ in cells} | {b}))
    partition = Partition(points)
    value = composite_S(f, g, u, partition)
    rb = remainder_bound_osc(f, g, u, partition)
    per_cell = tuple(_cell_terms(f, g, u, lo, hi)
                     for lo, hi in partition.cells())
    return QuadratureResult(value, rb.stated, rb.tight, partition, per_cell)
