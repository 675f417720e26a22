"""Solution validation, gain and quality computation, and bound formulas.

A solution of B*y^n = A*x^n + k with gcd(A*x, B*y, k) = 1 gets three
dimensionless measures:

    G_a = ln(max(A*x^n, B*y^n)) / ln(x*y*A*B*k)   approximation gain
    G_p = ln(x*y*A*B*k) / ln(rad(x*y*A*B*k))      power gain
    q   = G_a * G_p                               ABC-quality of the triple

plus the structural lower bound on G_a, the conjectural upper bounds on
G_p at quality caps 2 (strong) and 1.5 (ultra), the direct lower bound on
q, and the q > n/2 bound for the k = 1, A = B = 1 case.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache

from .bigmath import CTX, gcd3, ipow, ln_cached
from .factor import radical_of_product

NON_TRIVIAL = "non_trivial"
TRIVIAL_X = "trivial_x"

RANGE_VIOLATION = "range-violation"
IDENTITY_VIOLATION = "identity-violation"
COPRIMALITY_VIOLATION = "coprimality-violation"

_TWO = Decimal(2)


@dataclass(frozen=True, slots=True)
class Solution:
    """A verified tuple with B*y^n = A*x^n + k and gcd(A*x, B*y, k) = 1.

    Construct through validate_solution; the invariants are not re-checked
    here.  x = 1 is admitted (the coefficient A can then absorb all of
    y^n's size) but is classified trivial_x and tracked separately.
    """

    n: int
    x: int
    y: int
    A: int
    B: int
    k: int

    @property
    def trivial_x(self) -> bool:
        return self.x == 1

    @property
    def triviality(self) -> str:
        return TRIVIAL_X if self.x == 1 else NON_TRIVIAL

    def canonical_key(self) -> tuple[int, int, int, int, int, int]:
        return (self.n, self.k, self.A, self.B, self.x, self.y)


@dataclass(frozen=True, slots=True)
class Violation:
    """One failed solution invariant.

    kind is one of the *_VIOLATION constants; residual is the exact value
    of B*y^n - A*x^n - k and is set only for identity violations.
    """

    kind: str
    detail: str
    residual: int | None = None


@dataclass(frozen=True, slots=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> tuple[str, ...]:
        return tuple(v.kind for v in self.violations)


class SolutionError(ValueError):
    """Raised by validate_solution; carries the full ValidationReport."""

    def __init__(self, report: ValidationReport):
        lines = "; ".join(v.detail for v in report.violations)
        super().__init__(f"invalid solution: {lines}")
        self.report = report


@dataclass(frozen=True, slots=True)
class QMax:
    """A quality cap q < value, labeled strong (2), ultra (1.5), or custom."""

    value: Decimal
    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.value, Decimal):
            raise TypeError("QMax.value must be a Decimal")
        if self.value <= 0:
            raise ValueError("QMax.value must be positive")


QMAX_STRONG = QMax(Decimal(2), "strong")
QMAX_ULTRA = QMax(Decimal("1.5"), "ultra")


def custom_qmax(value) -> QMax:
    """A user-supplied quality cap (any positive number)."""
    return QMax(Decimal(str(value)), "custom")


def _as_qmax(q_max) -> QMax:
    if isinstance(q_max, QMax):
        return q_max
    return custom_qmax(q_max)


@dataclass(frozen=True, slots=True)
class GainReport:
    """All computed quantities for one solution.

    C is the dominant term B*y^n, P the parameter product x*y*A*B*k, R the
    radical of P.  R, G_p and q are None only when the factorization budget
    was exhausted and the caller asked for a partial report.
    """

    C: int
    P: int
    R: int | None
    G_a: Decimal
    G_p: Decimal | None
    q: Decimal | None
    ga_min: Decimal
    q_min: Decimal
    gp_max_strong: Decimal
    gp_max_ultra: Decimal
    gp_max_custom: Decimal | None
    k1_q_bound: Decimal
    triviality: str


def _require_int(name: str, v, minimum: int, violations: list[Violation]) -> None:
    if v < minimum:
        violations.append(
            Violation(RANGE_VIOLATION, f"{name} = {v} violates {name} >= {minimum}")
        )


def check_solution(n: int, x: int, y: int, A: int, B: int, k: int) -> ValidationReport:
    """Check every solution invariant; an empty report means valid.

    All violations are collected, not just the first: range bounds, the
    exact identity (with its integer residual), and triple coprimality.
    """
    for name, v in (("n", n), ("x", x), ("y", y), ("A", A), ("B", B), ("k", k)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise TypeError(f"{name} must be an integer, got {type(v).__name__}")
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")

    violations: list[Violation] = []
    _require_int("n", n, 2, violations)
    _require_int("x", x, 1, violations)
    _require_int("y", y, 2, violations)
    _require_int("A", A, 1, violations)
    _require_int("B", B, 1, violations)
    _require_int("k", k, 1, violations)

    # 0**0 never arises here: n = 0 is already a range violation above.
    if n >= 1:
        residual = B * ipow(y, n) - A * ipow(x, n) - k
        if residual != 0:
            violations.append(
                Violation(
                    IDENTITY_VIOLATION,
                    f"B*y^n - A*x^n - k = {residual}, expected 0",
                    residual=residual,
                )
            )
    g = gcd3(A * x, B * y, k)
    if g != 1:
        violations.append(
            Violation(
                COPRIMALITY_VIOLATION,
                f"gcd(A*x, B*y, k) = {g}, expected 1",
            )
        )
    return ValidationReport(tuple(violations))


def validate_solution(n: int, x: int, y: int, A: int, B: int, k: int) -> Solution:
    """Return a Solution if every invariant holds, else raise SolutionError."""
    report = check_solution(n, x, y, A, B, k)
    if not report.ok:
        raise SolutionError(report)
    return Solution(n=n, x=x, y=y, A=A, B=B, k=k)


def _require_bound_params(n: int, A: int, B: int, y: int) -> None:
    if n < 2:
        raise ValueError("bound formulas require n >= 2")
    if y < 2:
        raise ValueError("bound formulas require y >= 2")
    if A < 1 or B < 1:
        raise ValueError("bound formulas require A >= 1 and B >= 1")


def ga_lower_bound(n: int, A: int, B: int, y: int) -> Decimal:
    """Structural lower bound on G_a.

    Equals 1 / ((n+2)/n + (n-1) ln(AB) / (n (n ln y + ln B))); for
    A = B = 1 it collapses to n/(n+2) exactly.
    """
    _require_bound_params(n, A, B, y)
    with localcontext(CTX):
        if A == 1 and B == 1:
            return Decimal(n) / Decimal(n + 2)
        ln_ab = ln_cached(A * B)
        ln_byn = Decimal(n) * ln_cached(y) + ln_cached(B)
        denom = Decimal(n + 2) / Decimal(n) + (Decimal(n - 1) * ln_ab) / (Decimal(n) * ln_byn)
        return Decimal(1) / denom


def gp_upper_bound(n: int, A: int, B: int, y: int, q_max) -> Decimal:
    """Upper bound on G_p under the quality cap q < q_max.

    Equals q_max / ga_lower_bound(n, A, B, y); for A = B = 1 it is
    q_max*(n+2)/n, computed exactly at working precision.
    """
    _require_bound_params(n, A, B, y)
    cap = _as_qmax(q_max)
    with localcontext(CTX):
        if A == 1 and B == 1:
            return (cap.value * Decimal(n + 2)) / Decimal(n)
        return cap.value / ga_lower_bound(n, A, B, y)


def q_lower_bound(n: int, A: int, B: int, y: int) -> Decimal:
    """Lower bound on the quality q of any solution with these parameters.

    Equals n / (n + 2 + (n-1) ln(AB) / ln(B y^n)), which is algebraically
    the same expression as ga_lower_bound; for A = B = 1 it is n/(n+2).
    """
    _require_bound_params(n, A, B, y)
    with localcontext(CTX):
        if A == 1 and B == 1:
            return Decimal(n) / Decimal(n + 2)
        ln_ab = ln_cached(A * B)
        ln_byn = Decimal(n) * ln_cached(y) + ln_cached(B)
        return Decimal(n) / (Decimal(n + 2) + (Decimal(n - 1) * ln_ab) / ln_byn)


def k1_quality_bound(n: int) -> Decimal:
    """Strict lower bound n/2 on q for solutions of y^n = x^n + 1, x,y >= 2."""
    if n < 2:
        raise ValueError("k1_quality_bound requires n >= 2")
    with localcontext(CTX):
        return Decimal(n) / _TWO


def max_admissible_exponent(q_max) -> int:
    """Largest n with n/2 < q_max, i.e. not excluded by the q > n/2 bound.

    q_max <= 1 would exclude even n = 2 and is rejected as out of model.
    """
    cap = _as_qmax(q_max)
    if cap.value <= 1:
        raise ValueError("max_admissible_exponent requires q_max > 1")
    with localcontext(CTX):
        doubled = _TWO * cap.value
    floor = int(doubled)
    return floor - 1 if doubled == floor else floor


@lru_cache(maxsize=None)
def _bounds_cached(n: int, A: int, B: int, y: int) -> tuple[Decimal, Decimal, Decimal, Decimal]:
    return (
        ga_lower_bound(n, A, B, y),
        q_lower_bound(n, A, B, y),
        gp_upper_bound(n, A, B, y, QMAX_STRONG),
        gp_upper_bound(n, A, B, y, QMAX_ULTRA),
    )


def _build_report(s: Solution, R: int | None, q_max_custom: QMax | None) -> GainReport:
    C = s.B * ipow(s.y, s.n)
    P = s.x * s.y * s.A * s.B * s.k
    if P == 1:
        # Unreachable for a valid Solution (y >= 2), but the ratio would be
        # 0/0 and must never be silently produced.
        raise ValueError("degenerate denominator: x*y*A*B*k = 1")
    with localcontext(CTX):
        ln_c = ln_cached(C)
        ln_p = ln_cached(P)
        g_a = ln_c / ln_p
        if R is None:
            g_p = None
            q = None
        else:
            ln_r = ln_cached(R)
            g_p = ln_p / ln_r
            q = ln_c / ln_r
    ga_min, q_min, gp_strong, gp_ultra = _bounds_cached(s.n, s.A, s.B, s.y)
    gp_custom = (
        gp_upper_bound(s.n, s.A, s.B, s.y, q_max_custom)
        if q_max_custom is not None
        else None
    )
    return GainReport(
        C=C,
        P=P,
        R=R,
        G_a=g_a,
        G_p=g_p,
        q=q,
        ga_min=ga_min,
        q_min=q_min,
        gp_max_strong=gp_strong,
        gp_max_ultra=gp_ultra,
        gp_max_custom=gp_custom,
        k1_q_bound=k1_quality_bound(s.n),
        triviality=s.triviality,
    )


def compute_gains(
    s: Solution,
    *,
    budget: int | None = None,
    q_max_custom: QMax | None = None,
) -> GainReport:
    """Full GainReport for a valid Solution.

    G_a, G_p and q are computed independently from the three logarithms, so
    the q = G_a*G_p identity stays a genuine cross-check downstream.
    Raises FactorBudgetExceeded if the radical cannot be completed.
    """
    R = radical_of_product((s.x, s.y, s.A, s.B, s.k), budget=budget)
    return _build_report(s, R, q_max_custom)


def compute_gains_partial(s: Solution, *, q_max_custom: QMax | None = None) -> GainReport:
    """GainReport with R, G_p and q marked unavailable.

    Used when the factorization budget was exhausted for this solution;
    G_a and all bound fields are still exact.
    """
    return _build_report(s, None, q_max_custom)
