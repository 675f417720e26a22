"""Exhaustive solution search over bounded parameter boxes.

Two modes: fixed_k iterates (n, A, B, x, k) and derives the unique
candidate y exactly; derived_k iterates (n, A, B, x, y) and sets
k = B*y^n - A*x^n.  A deliberately dumb brute-force oracle backs both in
tests.  Boxes split into disjoint sub-boxes whose merged results are
identical to a single-box run, so parallel schedules cannot change output.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace
from decimal import Decimal
from math import gcd
from time import perf_counter

from .bigmath import nth_root_floor
from .factor import FactorBudgetExceeded
from .gains import (
    GainReport,
    Solution,
    compute_gains,
    compute_gains_partial,
    validate_solution,
)

FIXED_K = "fixed_k"
DERIVED_K = "derived_k"

DEFAULT_CELL_CEILING = 10 ** 10
ORACLE_CELL_CEILING = 10 ** 7
PROGRESS_INTERVAL = 10 ** 6

_AXES = ("n", "x", "y", "A", "B", "k")


class BoxTooLarge(ValueError):
    """The box's cell count exceeds the allowed ceiling."""

    def __init__(self, cells: int, ceiling: int):
        super().__init__(f"box has {cells} cells, ceiling is {ceiling}")
        self.cells = cells
        self.ceiling = ceiling


@dataclass(frozen=True, slots=True)
class SearchBox:
    """Inclusive parameter intervals plus search mode.

    k_range applies only in fixed_k mode.  q_threshold filters derived_k
    output by quality.  require_nontrivial lifts the effective x lower
    bound to 2 (trivial x = 1 solutions are skipped).
    """

    n_range: tuple[int, int]
    x_range: tuple[int, int]
    y_range: tuple[int, int]
    A_range: tuple[int, int]
    B_range: tuple[int, int]
    mode: str
    k_range: tuple[int, int] | None = None
    q_threshold: Decimal | None = None
    require_nontrivial: bool = True


@dataclass(frozen=True)
class SearchResult:
    """Solutions with their reports, plus scan accounting.

    Wall time is excluded from equality: two runs over the same box are
    equal results even though they never take identical time.
    """

    solutions: tuple[tuple[Solution, GainReport], ...]
    cells_scanned: int
    duration: float = field(compare=False)


def _check_range(name: str, rng: tuple[int, int], minimum: int) -> None:
    lo, hi = rng
    if not isinstance(lo, int) or not isinstance(hi, int):
        raise ValueError(f"{name} bounds must be integers")
    if lo > hi:
        raise ValueError(f"{name} interval [{lo}, {hi}] is empty")
    if lo < minimum:
        raise ValueError(f"{name} lower bound {lo} violates minimum {minimum}")


def _normalized(box: SearchBox, expected_mode: str) -> SearchBox:
    """Validate the box and apply the non-triviality floor to x."""
    if box.mode != expected_mode:
        raise ValueError(f"box mode is {box.mode!r}, expected {expected_mode!r}")
    _check_range("n_range", box.n_range, 2)
    _check_range("x_range", box.x_range, 1)
    _check_range("y_range", box.y_range, 2)
    _check_range("A_range", box.A_range, 1)
    _check_range("B_range", box.B_range, 1)
    if expected_mode == FIXED_K:
        if box.k_range is None:
            raise ValueError("fixed_k mode requires k_range")
        _check_range("k_range", box.k_range, 1)
    if box.require_nontrivial and box.x_range[0] < 2:
        box = replace(box, x_range=(2, box.x_range[1]))
    return box


def _axis_width(box: SearchBox, axis: str) -> int:
    rng = getattr(box, f"{axis}_range")
    if rng is None:
        return 0
    lo, hi = rng
    return max(0, hi - lo + 1)


def iterated_axes(mode: str) -> tuple[str, ...]:
    """The box axes a given mode actually loops over."""
    if mode == FIXED_K:
        return ("n", "A", "B", "x", "k")
    if mode == DERIVED_K:
        return ("n", "A", "B", "x", "y")
    raise ValueError(f"unknown mode {mode!r}")


def cell_count(box: SearchBox) -> int:
    """Number of tuples the mode's loops visit (after the x floor)."""
    out = 1
    probe = box
    if probe.require_nontrivial and probe.x_range[0] < 2 and probe.x_range[1] >= 2:
        probe = replace(probe, x_range=(2, probe.x_range[1]))
    elif probe.require_nontrivial and probe.x_range[1] < 2:
        return 0
    for axis in iterated_axes(box.mode):
        out *= _axis_width(probe, axis)
    return out


class _Progress:
    """Liveness ticks to stderr every PROGRESS_INTERVAL scanned cells."""

    __slots__ = ("scanned", "_next", "_total")

    def __init__(self, total: int):
        self.scanned = 0
        self._next = PROGRESS_INTERVAL
        self._total = total

    def advance(self, cells: int, found: int) -> None:
        self.scanned += cells
        if self.scanned >= self._next:
            print(
                f"progress: {self.scanned}/{self._total} cells, {found} solutions",
                file=sys.stderr,
            )
            while self._next <= self.scanned:
                self._next += PROGRESS_INTERVAL


def _gains_or_partial(s: Solution, budget: int | None):
    try:
        return compute_gains(s, budget=budget)
    except FactorBudgetExceeded:
        # The solution itself is exact; only radical-dependent fields are
        # unavailable, and they are reported as such rather than dropped.
        return compute_gains_partial(s)


def _canonical(item: tuple[Solution, GainReport]):
    return item[0].canonical_key()


def _quality_order(item: tuple[Solution, GainReport]):
    q = item[1].q
    # Unknown quality (budget-exceeded partial reports) sorts after every
    # known quality; canonical order breaks remaining ties via stability.
    if q is None:
        return (1, Decimal(0))
    return (0, -q)


def _sort_fixed(items: list) -> None:
    items.sort(key=_canonical)


def _sort_hunt(items: list) -> None:
    items.sort(key=_canonical)
    items.sort(key=_quality_order)


def enumerate_fixed_k(
    box: SearchBox,
    *,
    cell_ceiling: int = DEFAULT_CELL_CEILING,
    budget: int | None = None,
) -> SearchResult:
    """All solutions with every parameter inside the box, k iterated.

    For each (n, A, B, x, k) the only possible y satisfies
    y^n = (A*x^n + k) / B, so B must divide the sum and the candidate
    y = nth_root_floor of the quotient is verified by exact powering.
    No float ever decides membership.
    """
    b = _normalized(box, FIXED_K)
    total = cell_count(b)
    if total > cell_ceiling:
        raise BoxTooLarge(total, cell_ceiling)
    t0 = perf_counter()
    n_lo, n_hi = b.n_range
    x_lo, x_hi = b.x_range
    y_lo, y_hi = b.y_range
    a_lo, a_hi = b.A_range
    b_lo, b_hi = b.B_range
    k_lo, k_hi = b.k_range
    k_width = k_hi - k_lo + 1
    out: list[tuple[Solution, GainReport]] = []
    progress = _Progress(total)
    for n in range(n_lo, n_hi + 1):
        xpow = {x: x ** n for x in range(x_lo, x_hi + 1)}
        for A in range(a_lo, a_hi + 1):
            for B in range(b_lo, b_hi + 1):
                for x in range(x_lo, x_hi + 1):
                    ax = A * x
                    axn = A * xpow[x]
                    for k in range(k_lo, k_hi + 1):
                        total_term = axn + k
                        if total_term % B:
                            continue
                        quotient = total_term // B
                        y = nth_root_floor(quotient, n)
                        if y < 2 or y < y_lo or y > y_hi:
                            continue
                        if y ** n != quotient:
                            continue
                        if gcd(ax, B * y, k) != 1:
                            continue
                        s = validate_solution(n, x, y, A, B, k)
                        out.append((s, _gains_or_partial(s, budget)))
                    progress.advance(k_width, len(out))
    _sort_fixed(out)
    return SearchResult(tuple(out), total, perf_counter() - t0)


def hunt_derived_k(
    box: SearchBox,
    *,
    cell_ceiling: int = DEFAULT_CELL_CEILING,
    budget: int | None = None,
) -> SearchResult:
    """All solutions with k derived as B*y^n - A*x^n, ranked by quality.

    Tuples with k < 1 are skipped (the dominant-term requirement), the
    coprimality gate is exact, and an optional q_threshold keeps only
    solutions with q >= threshold.  Output is sorted by descending q with
    canonical order breaking ties.
    """
    b = _normalized(box, DERIVED_K)
    total = cell_count(b)
    if total > cell_ceiling:
        raise BoxTooLarge(total, cell_ceiling)
    t0 = perf_counter()
    n_lo, n_hi = b.n_range
    x_lo, x_hi = b.x_range
    y_lo, y_hi = b.y_range
    a_lo, a_hi = b.A_range
    b_lo, b_hi = b.B_range
    threshold = b.q_threshold
    xs = range(x_lo, x_hi + 1)
    x_width = x_hi - x_lo + 1
    out: list[tuple[Solution, GainReport]] = []
    progress = _Progress(total)
    for n in range(n_lo, n_hi + 1):
        xpow = [x ** n for x in xs]
        ypow = {y: y ** n for y in range(y_lo, y_hi + 1)}
        for A in range(a_lo, a_hi + 1):
            ax_list = [A * x for x in xs]
            axn_list = [A * p for p in xpow]
            for B in range(b_lo, b_hi + 1):
                for y in range(y_lo, y_hi + 1):
                    byn = B * ypow[y]
                    by = B * y
                    for i in range(x_width):
                        k = byn - axn_list[i]
                        if k < 1:
                            continue
                        if gcd(ax_list[i], by, k) != 1:
                            continue
                        s = validate_solution(n, x_lo + i, y, A, B, k)
                        report = _gains_or_partial(s, budget)
                        if threshold is not None and report.q is not None:
                            if report.q < threshold:
                                continue
                        out.append((s, report))
                    progress.advance(x_width, len(out))
    _sort_hunt(out)
    return SearchResult(tuple(out), total, perf_counter() - t0)


def brute_force_oracle(box: SearchBox, *, budget: int | None = None) -> SearchResult:
    """Reference search: plain nested loops, exact checks, no shortcuts.

    Matches the mode-appropriate search's output contract exactly (same
    filters, same ordering).  In fixed_k mode it loops over y as well
    instead of deriving it, so cells_scanned counts its own six-axis scan.
    Only intended for tests; the cell ceiling is a hard 10^7.
    """
    b = _normalized(box, box.mode)
    total = cell_count(b)
    if total > ORACLE_CELL_CEILING:
        raise BoxTooLarge(total, ORACLE_CELL_CEILING)
    t0 = perf_counter()
    n_lo, n_hi = b.n_range
    x_lo, x_hi = b.x_range
    y_lo, y_hi = b.y_range
    a_lo, a_hi = b.A_range
    b_lo, b_hi = b.B_range
    out: list[tuple[Solution, GainReport]] = []
    scanned = 0
    if b.mode == FIXED_K:
        k_lo, k_hi = b.k_range
        for n in range(n_lo, n_hi + 1):
            for A in range(a_lo, a_hi + 1):
                for B in range(b_lo, b_hi + 1):
                    for x in range(x_lo, x_hi + 1):
                        for k in range(k_lo, k_hi + 1):
                            scanned += 1
                            left = A * x ** n + k
                            for y in range(y_lo, y_hi + 1):
                                if B * y ** n == left and gcd(A * x, B * y, k) == 1:
                                    s = validate_solution(n, x, y, A, B, k)
                                    out.append((s, _gains_or_partial(s, budget)))
        _sort_fixed(out)
        scanned *= y_hi - y_lo + 1
    else:
        threshold = b.q_threshold
        for n in range(n_lo, n_hi + 1):
            for A in range(a_lo, a_hi + 1):
                for B in range(b_lo, b_hi + 1):
                    for x in range(x_lo, x_hi + 1):
                        for y in range(y_lo, y_hi + 1):
                            scanned += 1
                            k = B * y ** n - A * x ** n
                            if k < 1:
                                continue
                            if gcd(A * x, B * y, k) != 1:
                                continue
                            s = validate_solution(n, x, y, A, B, k)
                            report = _gains_or_partial(s, budget)
                            if threshold is not None and report.q is not None:
                                if report.q < threshold:
                                    continue
                            out.append((s, report))
        _sort_hunt(out)
    return SearchResult(tuple(out), scanned, perf_counter() - t0)


def split_box(box: SearchBox, parts: int, axis: str | None = None) -> tuple[SearchBox, ...]:
    """Partition the box into disjoint sub-boxes along one iterated axis.

    Splitting a non-iterated axis would duplicate scan work across parts,
    so only the mode's iterated axes are allowed.  Returns at most
    ``parts`` boxes (fewer when the axis is narrower than that).
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    allowed = iterated_axes(box.mode)
    if axis is None:
        axis = max(allowed, key=lambda a: _axis_width(box, a))
    if axis not in allowed:
        raise ValueError(f"axis {axis!r} is not iterated in mode {box.mode!r}")
    rng = getattr(box, f"{axis}_range")
    lo, hi = rng
    width = hi - lo + 1
    parts = min(parts, width)
    base, extra = divmod(width, parts)
    boxes = []
    cursor = lo
    for i in range(parts):
        size = base + (1 if i < extra else 0)
        sub = (cursor, cursor + size - 1)
        boxes.append(replace(box, **{f"{axis}_range": sub}))
        cursor += size
    return tuple(boxes)


def merge_results(results, mode: str) -> SearchResult:
    """Deterministic union of disjoint sub-box results.

    Ordering matches a single-box run of the given mode exactly; cell
    counts and durations add.
    """
    merged: list[tuple[Solution, GainReport]] = []
    cells = 0
    duration = 0.0
    for r in results:
        merged.extend(r.solutions)
        cells += r.cells_scanned
        duration += r.duration
    if mode == FIXED_K:
        _sort_fixed(merged)
    elif mode == DERIVED_K:
        _sort_hunt(merged)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return SearchResult(tuple(merged), cells, duration)
