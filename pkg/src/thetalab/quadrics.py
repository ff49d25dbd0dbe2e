"""Quadratic forms cutting out the degree-N elliptic normal curve.

The generators come in three families: the odd-N three-term forms, the
even-N null-coefficient forms (graded pieces V_0 and V_1), and the
even-N half-period forms with s-coefficients.  The remaining graded
pieces are produced by the index shift X_i -> X_(i+1), which moves the
grading by 2; correctness of the shifted system is certified by the
vanishing and rank checks rather than assumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from random import Random

import numpy as np

from .cyclotomic import CyclotomicNumber
from .series import PuiseuxSeries
from .theta import ThetaContext, theta_N_eval, theta_half_eval, theta_null_series


def _to_complex(c) -> complex:
    if isinstance(c, CyclotomicNumber):
        return c.complex_value()
    if isinstance(c, PuiseuxSeries):
        raise TypeError("series coefficients have no canonical numeric value here")
    return complex(c)


def _scalar_zero(c) -> bool:
    if isinstance(c, (CyclotomicNumber, PuiseuxSeries)):
        return c.is_zero()
    return c == 0


class QuadraticForm:
    """sum over unordered pairs {i, j} of c_(ij) X_i X_j on P^(N-1)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: dict):
        self.N = N
        norm: dict = {}
        for (i, j), c in coeffs.items():
            if _scalar_zero(c):
                continue
            key = (i % N, j % N)
            if key[0] > key[1]:
                key = (key[1], key[0])
            if key in norm:
                norm[key] = norm[key] + c
                if _scalar_zero(norm[key]):
                    del norm[key]
            else:
                norm[key] = c
        self.coeffs = norm

    def graded_class(self) -> int | None:
        """k with i+j = k (mod N) on every monomial, or None if mixed."""
        ks = {(i + j) % self.N for i, j in self.coeffs}
        return ks.pop() if len(ks) == 1 else None

    def shift(self, s: int) -> "QuadraticForm":
        """The translated form under X_i -> X_(i+s)."""
        return QuadraticForm(self.N, {(i + s, j + s): c for (i, j), c in self.coeffs.items()})

    def evaluate(self, values):
        """Q(x) for a length-N coordinate vector (numeric or series)."""
        acc = None
        for (i, j), c in self.coeffs.items():
            t = c * values[i] * values[j]
            acc = t if acc is None else acc + t
        if acc is None:
            return values[0] * values[0] * 0  # typed zero for the empty form
        return acc

    def complex_row(self, monomials) -> list[complex]:
        return [_to_complex(self.coeffs.get(m, 0)) for m in monomials]

    def max_coeff_abs(self) -> float:
        return max(abs(_to_complex(c)) for c in self.coeffs.values())

    def to_json(self) -> str:
        def enc(c):
            if isinstance(c, CyclotomicNumber):
                return [f"{x.numerator}/{x.denominator}" for x in c.coeffs]
            if isinstance(c, (int, Fraction)):
                f = Fraction(c)
                return f"{f.numerator}/{f.denominator}"
            if isinstance(c, PuiseuxSeries):
                return json.loads(c.to_json())
            return [c.real, c.imag]

        cls = self.graded_class()
        obj = {
            "N": self.N,
            "class": cls,
            "terms": [[i, j, enc(c)] for (i, j), c in sorted(self.coeffs.items())],
        }
        return json.dumps(obj, sort_keys=True)

    def __repr__(self):
        return f"QuadraticForm(N={self.N}, {len(self.coeffs)} monomials, class={self.graded_class()})"


def monomial_basis(N: int) -> list[tuple[int, int]]:
    """All unordered index pairs, the N(N+1)/2 degree-2 monomials."""
    return [(i, j) for i in range(N) for j in range(i, N)]


def forms_proportional(f: QuadraticForm, g: QuadraticForm, tol: float | None = None) -> bool:
    """Equality as projective forms (same class up to a global scalar)."""
    if f.N != g.N or set(f.coeffs) != set(g.coeffs):
        return False
    if not f.coeffs:
        return True
    key0 = next(iter(f.coeffs))
    a, b = f.coeffs[key0], g.coeffs[key0]
    for key, c in f.coeffs.items():
        lhs = c * b
        rhs = g.coeffs[key] * a
        if tol is None:
            diff = lhs - rhs
            if not _scalar_zero(diff):
                return False
        else:
            if abs(_to_complex(lhs) - _to_complex(rhs)) > tol * max(
                1.0, abs(_to_complex(lhs))
            ):
                return False
    return True


def _dedupe(forms: list[QuadraticForm], tol: float | None) -> list[QuadraticForm]:
    kept: list[QuadraticForm] = []
    for f in forms:
        if not any(forms_proportional(f, g, tol) for g in kept):
            kept.append(f)
    return kept


# ---------------------------------------------------------------------------
# theta-null data


@dataclass(frozen=True)
class NullData:
    """Theta-null vector a_k (and optionally the half-period vector s_k).

    Scalars are exact Puiseux series (source "series") or complex values
    at a fixed tau (source "numeric").  For odd N the exact series use
    the normalized convention with the global scalar i^N dropped; all
    generated forms are quadratic in the nulls, so the convention only
    rescales whole forms.
    """

    N: int
    a: tuple
    s: tuple | None
    source: str
    tau: complex | None = None

    def __post_init__(self):
        N = self.N
        if len(self.a) != N:
            raise ValueError("need one null value per residue class")
        if self.source == "series":
            for k in range(1, N):
                want = self.a[(N - k) % N] if N % 2 == 0 else -self.a[(N - k) % N]
                if not (self.a[k] - want).is_zero():
                    raise ValueError("null symmetry a_k = (-1)^N a_(N-k) violated")
            if N % 2 and not self.a[0].is_zero():
                raise ValueError("a_0 must vanish for odd N")

    @staticmethod
    def numeric(ctx: ThetaContext, include_s: bool = True) -> "NullData":
        N = ctx.N
        a = tuple(theta_N_eval(k, 0.0, ctx) for k in range(N))
        s = None
        if include_s and N % 2 == 0:
            s = tuple(theta_half_eval(N, k, ctx) for k in range(N))
        return NullData(N=N, a=a, s=s, source="numeric", tau=ctx.tau)

    @staticmethod
    def exact(N: int, order: int) -> "NullData":
        a = tuple(theta_null_series(N, k, order) for k in range(N))
        return NullData(N=N, a=a, s=None, source="series")


# ---------------------------------------------------------------------------
# generators


def gen_odd_basis(nd: NullData) -> list[QuadraticForm]:
    """Full odd-N system: the (N-3)/2 three-term forms

        a_(j+1) a_(N-j) X_0^2
          - a_((N-1)/2-j) a_((N+1)/2+j) X_((N+1)/2) X_((N-1)/2)
          + a_((N-1)/2) a_((N+1)/2) X_((N-1)/2-j) X_((N+1)/2+j)

    for j = 1..(N-3)/2, followed by their index shifts, N(N-3)/2 forms
    in total after duplicate elimination."""
    N = nd.N
    if N % 2 == 0:
        raise ValueError("odd-N generator called with even N")
    if N < 5:
        raise ValueError("need N >= 5")
    a = nd.a
    lo, hi = (N - 1) // 2, (N + 1) // 2
    base = []
    for j in range(1, (N - 3) // 2 + 1):
        coeffs = {
            (0, 0): a[(j + 1) % N] * a[(N - j) % N],
            (hi, lo): -(a[(lo - j) % N] * a[(hi + j) % N]),
            ((lo - j) % N, (hi + j) % N): a[lo] * a[hi],
        }
        base.append(QuadraticForm(N, coeffs))
    tol = None if nd.source == "series" else 1e-9
    # s = 0 comes first, so the returned list starts with the base forms
    return _dedupe([f.shift(s) for s in range(N) for f in base], tol)


def _even_v0_form(nd: NullData, j: int) -> QuadraticForm:
    N, a, h = nd.N, nd.a, nd.N // 2
    return QuadraticForm(
        N,
        {
            (0, 0): a[j % N] * a[j % N],
            (h, h): a[(h + j) % N] * a[(h + j) % N],
            (j % N, (N - j) % N): -(a[0] * a[0]),
            ((h + j) % N, (h - j) % N): -(a[h] * a[h]),
        },
    )


def _even_v1_form(nd: NullData, j: int) -> QuadraticForm:
    N, a, h = nd.N, nd.a, nd.N // 2
    return QuadraticForm(
        N,
        {
            (0, 1): a[j % N] * a[(j + 1) % N],
            (h, h + 1): a[(h + j) % N] * a[(h + j + 1) % N],
            ((j + 1) % N, (N - j) % N): -(a[0] * a[1]),
            ((h + j + 1) % N, (h - j) % N): -(a[h] * a[(h + 1) % N]),
        },
    )


@dataclass(frozen=True)
class EvenBasis:
    V0: list
    V1: list
    full: list


def gen_even_basis(nd: NullData) -> EvenBasis:
    """Even-N graded bases from the null coefficients.

    V_0:  a_j^2 X_0^2 + a_(h+j)^2 X_h^2 = a_0^2 X_j X_(N-j) + a_h^2 X_(h+j) X_(h-j),
          j = 1..h-1 (h = N/2);
    V_1:  the X_0 X_1 analogue, j = 1..h-2; `full` adds every index
    shift, N(N-3)/2 forms after duplicate elimination."""
    N = nd.N
    if N % 2:
        raise ValueError("even-N generator called with odd N")
    if N < 4:
        raise ValueError("need N >= 4")
    h = N // 2
    v0 = [_even_v0_form(nd, j) for j in range(1, h)]
    v1 = [_even_v1_form(nd, j) for j in range(1, h - 1)]
    tol = None if nd.source == "series" else 1e-9
    full = _dedupe([f.shift(s) for s in range(N) for f in v0 + v1], tol)
    return EvenBasis(V0=v0, V1=v1, full=full)


@dataclass(frozen=True)
class SBasis:
    V0: list
    V1: list


def gen_even_s_basis(nd: NullData) -> SBasis:
    """Half-period coefficient bases for even N.

    V_0:  s_j s_(N-j) X_0^2 + s_(h-j) s_(h+j) X_h^2 - s_h^2 X_(h-j) X_(h+j),
          j = 1..h-1;
    V_1:  s_(j+1) s_(N-j) X_0 X_1 + s_(h-j) s_(h+j+1) X_h X_(h+1)
          - s_h s_(h+1) X_(h-j) X_(h+j+1), j = 1..h-2."""
    N = nd.N
    if N % 2:
        raise ValueError("half-period generator called with odd N")
    if nd.s is None:
        raise ValueError("no half-period values present in NullData")
    s = nd.s
    h = N // 2
    v0 = []
    for j in range(1, h):
        v0.append(
            QuadraticForm(
                N,
                {
                    (0, 0): s[j % N] * s[(N - j) % N],
                    (h, h): s[(h - j) % N] * s[(h + j) % N],
                    ((h - j) % N, (h + j) % N): -(s[h] * s[h]),
                },
            )
        )
    v1 = []
    for j in range(1, h - 1):
        v1.append(
            QuadraticForm(
                N,
                {
                    (0, 1): s[(j + 1) % N] * s[(N - j) % N],
                    (h, h + 1): s[(h - j) % N] * s[(h + j + 1) % N],
                    ((h - j) % N, (h + j + 1) % N): -(s[h] * s[(h + 1) % N]),
                },
            )
        )
    return SBasis(V0=v0, V1=v1)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class OnCurveReport:
    N: int
    samples: int
    n_forms: int
    max_residual: float
    passed: bool


def verify_on_curve(
    forms: list[QuadraticForm],
    ctx: ThetaContext,
    samples: int = 25,
    seed: int = 0,
    rtol: float = 1e-8,
) -> OnCurveReport:
    """Evaluate every form at sampled immersion points.

    Residuals are normalized by (max coefficient magnitude) times
    (max coordinate magnitude)^2 so the check is scale-free."""
    N, tau = ctx.N, ctx.tau
    rng = Random(seed)
    worst = 0.0
    for _ in range(samples):
        z = 0.05 + 0.9 * rng.random() + (0.05 + 0.9 * rng.random()) * tau
        x = [theta_N_eval(k, z, ctx) for k in range(N)]
        scale2 = max(abs(c) for c in x) ** 2
        for f in forms:
            if not f.coeffs:
                continue
            resid = abs(f.evaluate(x)) / (f.max_coeff_abs() * scale2)
            worst = max(worst, resid)
    return OnCurveReport(
        N=N, samples=samples, n_forms=len(forms), max_residual=worst, passed=worst < rtol
    )


def rank_check(forms: list[QuadraticForm], N: int, threshold: float = 1e-7) -> int:
    """Numeric rank of the forms' coefficient matrix.

    Rows are forms, columns the N(N+1)/2 monomials; singular values
    below threshold * (largest singular value) count as zero."""
    if not forms:
        return 0
    mons = monomial_basis(N)
    mat = np.array([f.complex_row(mons) for f in forms], dtype=complex)
    # scale rows to unit max to keep the pivot threshold meaningful
    norms = np.max(np.abs(mat), axis=1)
    norms[norms == 0] = 1.0
    mat = mat / norms[:, None]
    sv = np.linalg.svd(mat, compute_uv=False)
    if sv.size == 0 or sv[0] == 0:
        return 0
    return int(np.sum(sv > threshold * sv[0]))


def substitute_nulls(form: QuadraticForm, nd: NullData):
    """Q with X_i replaced by the null values a_i (series or numeric)."""
    return form.evaluate(nd.a)
