"""Numerical theta evaluation and exact theta-null q-expansions.

The basic object is theta with characteristic (p, q):

    theta_(p,q)(z, tau) = sum_n e((1/2)(n+p)^2 tau + (n+p)(z+q)),

with e(x) = exp(2 pi i x), and the degree-N family

    theta_k(z, tau) = theta_(1/2 - k/N, N/2)(N z, N tau),

indexed by k mod N (integers or half-integers).  Numeric sums are
truncated with an explicit Gaussian tail bound; the exact q-expansions
of the null values theta_k(0, tau) are produced as Puiseux series.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .series import PuiseuxSeries

TWO_PI_I = 2j * math.pi

MAX_RADIUS = 4096


def e(x) -> complex:
    """The character e(x) = exp(2 pi i x)."""
    return cmath.exp(TWO_PI_I * x)


def tail_radius(tol: float, im_tau: float) -> int:
    """Summation cutoff for the defining series at a given tolerance.

    Gaussian tail: terms at distance u from the peak have magnitude
    <= C exp(-pi Im(tau) u^2), so a radius ~ sqrt(ln(1/tol)/(pi Im tau))
    suffices; a fixed guard band of 6 absorbs the constant C for the
    z-ranges used here.
    """
    if im_tau <= 0:
        raise ValueError("Im tau must be positive")
    r = math.ceil(math.sqrt(max(0.0, math.log(1.0 / tol)) / (math.pi * im_tau))) + 6
    if r > MAX_RADIUS:
        raise ValueError("tolerance unreachable at this Im tau; raise tol or Im tau")
    return r


def _theta_sum(p: float, q: float, z: complex, tau: complex, tol: float) -> complex:
    """Direct sum for theta_(p,q)(z, tau) with a proven < tol tail.

    The summand magnitude is exp(-pi y (m + b/y)^2) * exp(pi b^2 / y)
    with m = n + p, y = Im tau, b = Im z, so we center the window on the
    peak m = -b/y and widen the radius until the geometric-majorant tail
    bound 2 C exp(-pi y R^2)/(1 - exp(-2 pi y R)) drops below tol.
    """
    y = tau.imag
    if y <= 0:
        raise ValueError("Im tau must be positive")
    b = z.imag
    radius = tail_radius(tol, y)
    peak = -b / y
    amp = math.exp(math.pi * b * b / y)
    while True:
        decay = math.exp(-math.pi * y * radius * radius)
        denom = 1.0 - math.exp(-2.0 * math.pi * y * radius)
        if 2.0 * amp * decay / denom < tol:
            break
        if radius >= MAX_RADIUS:
            raise ValueError("tail bound unreachable at this (tol, Im tau, Im z)")
        radius += 4
    lo = math.floor(peak - p - radius)
    hi = math.ceil(peak - p + radius)
    acc = 0j
    for n in range(lo, hi + 1):
        m = n + p
        acc += cmath.exp(TWO_PI_I * (0.5 * m * m * tau + m * (z + q)))
    return acc


@dataclass(frozen=True)
class Characteristic:
    """The (p, q) pair of a theta characteristic."""

    p: Fraction
    q: Fraction

    def __init__(self, p, q):
        object.__setattr__(self, "p", Fraction(p))
        object.__setattr__(self, "q", Fraction(q))


@dataclass(frozen=True)
class ThetaContext:
    """Evaluation context: level N, modulus tau, target absolute error.

    The derived n_radius is the summation cutoff for the inner sum at
    N*tau (the tau actually used by the degree-N family); evaluations at
    z with large |Im z| widen the window further as needed.
    """

    N: int
    tau: complex
    tol: float = 1e-10
    n_radius: int = field(init=False)

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.tau.imag <= 0:
            raise ValueError("Im tau must be positive")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        object.__setattr__(self, "n_radius", tail_radius(self.tol, self.N * self.tau.imag))

    def with_tau(self, tau: complex) -> "ThetaContext":
        return ThetaContext(self.N, tau, self.tol)


def theta_pq_eval(ch: Characteristic, z: complex, ctx: ThetaContext) -> complex:
    """theta with characteristic (p, q) at (z, ctx.tau), within ctx.tol."""
    return _theta_sum(float(ch.p), float(ch.q), z, ctx.tau, ctx.tol)


def theta_N_eval(k, z: complex, ctx: ThetaContext) -> complex:
    """theta_k of the degree-N family at (z, ctx.tau); k may be half-integral."""
    N = ctx.N
    p = 0.5 - float(k) / N
    return _theta_sum(p, N / 2.0, N * z, N * ctx.tau, ctx.tol)


def theta_half_eval(N: int, k, ctx: ThetaContext) -> complex:
    """Half-period value s_k = theta_k(1/(2N), tau); N must be even."""
    if N % 2:
        raise ValueError("half-period values are defined for even N")
    if ctx.N != N:
        ctx = ThetaContext(N, ctx.tau, ctx.tol)
    return theta_N_eval(k, 1.0 / (2 * N), ctx)


_JACOBI_CHARS = (
    (Fraction(0), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(0)),
    (Fraction(0), Fraction(0)),
)


def jacobi_theta_eval(i: int, z: complex, ctx: ThetaContext) -> complex:
    """Jacobi's basic theta functions, indices 0..3."""
    if not 0 <= i <= 3:
        raise ValueError("Jacobi theta index must be 0..3")
    p, q = _JACOBI_CHARS[i]
    return _theta_sum(float(p), float(q), z, ctx.tau, ctx.tol)


def theta_null_series(N: int, k: int, order: int) -> PuiseuxSeries:
    """Exact q-expansion of the theta-null value a_k = theta_k(0, tau).

    Ramification 8N; exponent numerators are (2Nn + N - 2k)^2.  For even
    N the coefficients are the integers (-1)^(N/2 - k); for odd N the
    global scalar i^N is dropped so that coefficients stay rational, and
    the term signs are (-1)^(n+k).  The series is known modulo q^order.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if order < 1:
        raise ValueError("order must be >= 1")
    ram = 8 * N
    trunc = ram * order
    terms: dict[int, Fraction] = {}
    bound = (isqrt(trunc) + abs(N - 2 * k)) // (2 * N) + 2
    for n in range(-bound, bound + 1):
        num = (2 * N * n + N - 2 * k) ** 2
        if num >= trunc:
            continue
        if N % 2 == 0:
            c = Fraction(-1 if (N // 2 - k) % 2 else 1)
        else:
            c = Fraction(-1 if (n + k) % 2 else 1)
        terms[num] = terms.get(num, Fraction(0)) + c
    return PuiseuxSeries(ram, terms, trunc)


def theta_null_numeric(N: int, k: int, ctx: ThetaContext) -> complex:
    """Numeric a_k = theta_k(0, tau), keeping the true global scalar."""
    return theta_N_eval(k, 0.0, ctx)


def theta_zero_points(N: int, k: int, tau: complex, count: int = 5) -> list[complex]:
    """Representative zeros of theta_k from its known zero lattice.

    Odd N: m/N + (k/N + n) tau; even N: 1/(2N) + m/N + (k/N + n) tau.
    Small (m, n) are chosen so the quasi-periodicity factors stay O(1).
    """
    shifts = [(0, 0), (1, 0), (2, 0), (0, -1), (1, 1), (3, 0), (2, -1)]
    base = 0.0 if N % 2 else 1.0 / (2 * N)
    out = []
    for m, n in shifts[:count]:
        out.append(base + m / N + (k / N + n) * tau)
    return out


@dataclass(frozen=True)
class TransformReport:
    """k-independence test of the two modular coordinate changes."""

    N: int
    z: complex
    ratios: tuple          # r_k from tau -> -1/tau
    ratios_shift: tuple    # r'_k from tau -> tau + 1
    max_dev: float
    max_dev_shift: float
    passed: bool


def transform_check(z: complex, ctx: ThetaContext, rtol: float = 1e-8) -> TransformReport:
    """Check that the tau -> -1/tau and tau -> tau+1 ratios are k-free.

    r_k  = theta_k(z/tau, -1/tau) / [e(z/2) sqrt(tau/N) sum_j zeta^(-jk) theta_j(z, tau)]
    r'_k = theta_k(z, tau+1) / [e(-k(N-k)/(2N)) theta_k(z, tau)]

    The two proportionality constants are only determined up to a
    k-independent factor, so the report tests constancy in k, not a
    specific value; sqrt is the principal branch.
    """
    N = ctx.N
    tau = ctx.tau
    ctx_inv = ctx.with_tau(-1.0 / tau)
    ctx_shift = ctx.with_tau(tau + 1.0)
    th = [theta_N_eval(j, z, ctx) for j in range(N)]
    zeta = e(Fraction(1, N))
    root = cmath.sqrt(tau / N)
    ratios = []
    ratios_shift = []
    for k in range(N):
        lhs = theta_N_eval(k, z / tau, ctx_inv)
        rhs = e(z / 2.0) * root * sum(zeta ** ((-j * k) % N) * th[j] for j in range(N))
        ratios.append(lhs / rhs)
        lhs2 = theta_N_eval(k, z, ctx_shift)
        rhs2 = e(Fraction(-k * (N - k), 2 * N)) * th[k]
        ratios_shift.append(lhs2 / rhs2)
    dev = max(abs(r - ratios[0]) for r in ratios) / abs(ratios[0])
    dev2 = max(abs(r - ratios_shift[0]) for r in ratios_shift) / abs(ratios_shift[0])
    return TransformReport(
        N=N,
        z=z,
        ratios=tuple(ratios),
        ratios_shift=tuple(ratios_shift),
        max_dev=dev,
        max_dev_shift=dev2,
        passed=dev < rtol and dev2 < rtol,
    )
