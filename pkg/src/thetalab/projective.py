"""Projective points and matrices, and the finite matrix groups acting
on the theta coordinates.

Two scalar backends share one interface: exact cyclotomic entries for
group-relation checks (brittle under rounding) and complex entries for
immersion checks (inherently numeric).  Equality always means equality
of projective classes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from random import Random

import numpy as np

from .cyclotomic import CyclotomicNumber, zeta
from .theta import ThetaContext, theta_N_eval


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, CyclotomicNumber))


def _xzero(x) -> bool:
    if isinstance(x, CyclotomicNumber):
        return x.is_zero()
    return x == 0


# ---------------------------------------------------------------------------
# projective points


class ProjectivePoint:
    """A point of P^(N-1): coordinates modulo a global nonzero scalar."""

    __slots__ = ("coords", "exact")

    def __init__(self, coords):
        coords = tuple(coords)
        if not coords:
            raise ValueError("empty coordinate vector")
        self.exact = all(_is_exact(c) for c in coords)
        if self.exact and all(_xzero(c) for c in coords):
            raise ValueError("all-zero coordinate vector")
        self.coords = coords

    def __len__(self):
        return len(self.coords)

    def canonical(self) -> "ProjectivePoint":
        """Scale by the first nonzero (exact) or max-modulus (numeric) coord."""
        if self.exact:
            pivot = next(c for c in self.coords if not _xzero(c))
            if isinstance(pivot, CyclotomicNumber):
                inv = pivot.inverse()
            else:
                inv = Fraction(1) / Fraction(pivot)
            return ProjectivePoint(tuple(inv * c if not _xzero(c) else c * 0 for c in self.coords))
        i = max(range(len(self.coords)), key=lambda j: abs(self.coords[j]))
        pivot = self.coords[i]
        if pivot == 0:
            raise ValueError("all-zero numeric vector")
        return ProjectivePoint(tuple(c / pivot for c in self.coords))

    def proj_eq(self, other: "ProjectivePoint", rtol: float = 1e-9) -> bool:
        if len(self) != len(other):
            return False
        if self.exact and other.exact:
            return proj_resid_exact(self.coords, other.coords)
        return proj_residual(self.coords, other.coords) < rtol

    def __repr__(self):
        return f"ProjectivePoint({self.coords!r})"


def proj_residual(u, v) -> float:
    """Relative deviation of two numeric vectors as projective points."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    i = int(np.argmax(np.abs(u)))
    if u[i] == 0:
        return float("inf")
    c = v[i] / u[i]
    scale = max(float(np.max(np.abs(v))), 1e-300)
    return float(np.max(np.abs(v - c * u))) / scale


def proj_resid_exact(u, v) -> bool:
    """Exact projective equality via cross-multiplication."""
    pivot = None
    for i, x in enumerate(u):
        if not _xzero(x):
            pivot = i
            break
    if pivot is None or _xzero(v[pivot]):
        return False
    a, b = u[pivot], v[pivot]
    for x, y in zip(u, v):
        if not _xzero(x * b - y * a):
            return False
    return True


# ---------------------------------------------------------------------------
# projective matrices


class ProjectiveMatrix:
    """A class in PGL_N: an N x N matrix modulo nonzero scalars."""

    __slots__ = ("rows", "n", "exact")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows
        self.n = n
        self.exact = all(_is_exact(c) for r in rows for c in r)

    @staticmethod
    def identity(n: int, exact: bool = True) -> "ProjectiveMatrix":
        one = Fraction(1) if exact else 1.0 + 0j
        zero = Fraction(0) if exact else 0j
        return ProjectiveMatrix(
            [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    def __matmul__(self, other):
        if isinstance(other, ProjectiveMatrix):
            if self.n != other.n:
                raise ValueError("size mismatch")
            cols = list(zip(*other.rows))
            return ProjectiveMatrix(
                [
                    [_dot(row, col) for col in cols]
                    for row in self.rows
                ]
            )
        if isinstance(other, ProjectivePoint):
            return ProjectivePoint([_dot(row, other.coords) for row in self.rows])
        raise TypeError(f"cannot multiply ProjectiveMatrix by {type(other).__name__}")

    def power(self, k: int) -> "ProjectiveMatrix":
        if k < 0:
            return self.inverse().power(-k)
        acc = ProjectiveMatrix.identity(self.n, self.exact)
        base = self
        while k:
            if k & 1:
                acc = acc @ base
            k >>= 1
            if k:
                base = base @ base
        return acc

    def inverse(self) -> "ProjectiveMatrix":
        if not self.exact:
            return ProjectiveMatrix(np.linalg.inv(np.array(self.rows, dtype=complex)))
        return _gauss_jordan_inverse(self.rows)

    def transpose(self) -> "ProjectiveMatrix":
        return ProjectiveMatrix(tuple(zip(*self.rows)))

    def proj_eq(self, other: "ProjectiveMatrix", rtol: float = 1e-9) -> bool:
        """Equality as classes in PGL."""
        if self.n != other.n:
            return False
        if self.exact and other.exact:
            flat_a = [c for r in self.rows for c in r]
            flat_b = [c for r in other.rows for c in r]
            return proj_resid_exact(flat_a, flat_b)
        a = np.array(self.rows, dtype=complex).ravel()
        b = np.array(other.rows, dtype=complex).ravel()
        return proj_residual(a, b) < rtol

    def complex_array(self) -> np.ndarray:
        def conv(c):
            if isinstance(c, CyclotomicNumber):
                return c.complex_value()
            return complex(c)

        return np.array([[conv(c) for c in row] for row in self.rows], dtype=complex)

    def to_json(self) -> str:
        def enc(c):
            if isinstance(c, CyclotomicNumber) and c.is_rational():
                c = c.rational_value()
            if isinstance(c, CyclotomicNumber):
                return [f"{x.numerator}/{x.denominator}" for x in c.coeffs]
            if isinstance(c, (int, Fraction)):
                f = Fraction(c)
                return f"{f.numerator}/{f.denominator}"
            return [c.real, c.imag]

        return json.dumps([[enc(c) for c in row] for row in self.rows], sort_keys=True)

    def __repr__(self):
        kind = "exact" if self.exact else "numeric"
        return f"ProjectiveMatrix({self.n}x{self.n}, {kind})"


def _dot(row, col):
    acc = None
    for x, y in zip(row, col):
        if _xzero(x) or _xzero(y):
            continue
        t = x * y
        acc = t if acc is None else acc + t
    if acc is None:
        for x in row:
            return x * 0
    return acc


def _gauss_jordan_inverse(rows) -> ProjectiveMatrix:
    n = len(rows)
    a = [list(r) for r in rows]
    b = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not _xzero(a[r][col])), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        p = a[col][col]
        pinv = p.inverse() if isinstance(p, CyclotomicNumber) else Fraction(1) / Fraction(p)
        a[col] = [pinv * x for x in a[col]]
        b[col] = [pinv * x for x in b[col]]
        for r in range(n):
            if r == col or _xzero(a[r][col]):
                continue
            f = a[r][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            b[r] = [x - f * y for x, y in zip(b[r], b[col])]
    return ProjectiveMatrix(b)


# ---------------------------------------------------------------------------
# SL_2(Z) words


def sl2_mul(m1, m2):
    a, b, c, d = m1
    e_, f, g, h = m2
    return (a * e_ + b * g, a * f + b * h, c * e_ + d * g, c * f + d * h)


def sl2_inv(m):
    a, b, c, d = m
    if a * d - b * c != 1:
        raise ValueError("not in SL_2(Z)")
    return (d, -b, -c, a)


SL2_A = (0, -1, 1, 0)
SL2_B = (1, 1, 0, 1)


@dataclass(frozen=True)
class SL2Word:
    """A word in the generators A = (0,-1;1,0) and B = (1,1;0,1)."""

    letters: tuple  # pairs (symbol, exponent), symbol in {"A", "B"}

    def evaluate_int(self):
        m = (1, 0, 0, 1)
        for sym, k in self.letters:
            g = SL2_A if sym == "A" else SL2_B
            if k < 0:
                g = sl2_inv(g)
                k = -k
            for _ in range(k):
                m = sl2_mul(m, g)
        if m[0] * m[3] - m[1] * m[2] != 1:
            raise AssertionError("word does not evaluate into SL_2(Z)")
        return m

    def evaluate_proj(self, A0: ProjectiveMatrix, B0: ProjectiveMatrix) -> ProjectiveMatrix:
        acc = ProjectiveMatrix.identity(A0.n, A0.exact)
        for sym, k in self.letters:
            g = A0 if sym == "A" else B0
            acc = acc @ g.power(k)
        return acc


# ---------------------------------------------------------------------------
# canonical matrices and the projective representation


@dataclass(frozen=True)
class CanonicalMatrices:
    M_S: ProjectiveMatrix
    M_T: ProjectiveMatrix
    M_inv: ProjectiveMatrix


def _check_primitive(z: CyclotomicNumber, n: int):
    p = z
    for k in range(1, n):
        if p == 1:
            raise ValueError(f"root of unity is not primitive of order {n}")
        p = p * z
    if not p == 1:
        raise ValueError(f"root of unity does not have order {n}")


def build_canonical_matrices(N: int, zeta_n: CyclotomicNumber | None = None) -> CanonicalMatrices:
    """The translation matrices M_S (cyclic shift), M_T = diag(zeta^i),
    and the inversion M_inv: X_k -> X_(-k)."""
    if zeta_n is None:
        zeta_n = zeta(N)
    _check_primitive(zeta_n, N)
    one, zero = Fraction(1), Fraction(0)
    ms = [[one if i == (j + 1) % N else zero for j in range(N)] for i in range(N)]
    mt = [[zeta_n**i if i == j else zero for j in range(N)] for i in range(N)]
    mi = [[one if i == (-j) % N else zero for j in range(N)] for i in range(N)]
    return CanonicalMatrices(ProjectiveMatrix(ms), ProjectiveMatrix(mt), ProjectiveMatrix(mi))


@dataclass(frozen=True)
class RepGenerators:
    A0: ProjectiveMatrix
    B0: ProjectiveMatrix


def build_rep_generators(N: int, zeta_2n: CyclotomicNumber | None = None) -> RepGenerators:
    """A0 = [zeta^(ij)], B0 = Diag(zt^(i(N-i))) over Q(zeta_2N), zt^2 = zeta."""
    if N % 2:
        raise ValueError("the projective representation generators need even N")
    if zeta_2n is None:
        zeta_2n = zeta(2 * N)
    _check_primitive(zeta_2n, 2 * N)
    zeta_n = zeta_2n * zeta_2n
    a0 = [[zeta_n ** ((i * j) % N) for j in range(N)] for i in range(N)]
    zero = Fraction(0)
    b0 = [
        [zeta_2n ** ((i * (N - i)) % (2 * N)) if i == j else zero for j in range(N)]
        for i in range(N)
    ]
    return RepGenerators(ProjectiveMatrix(a0), ProjectiveMatrix(b0))


def kernel_word(N: int) -> SL2Word:
    """Word mapping to (1+N, 0; 0, 1+N) modulo 2N, hence into the kernel.

    Built from (1,N;0,1)(1,0;N-1,1)(1,N;0,1)(1,0;1,1) using
    (1,N;0,1) = B^N and (1,0;1,1) = A^(-1) B^(-1) A.
    """
    return SL2Word(
        (
            ("B", N),
            ("A", -1), ("B", -(N - 1)), ("A", 1),
            ("B", N),
            ("A", -1), ("B", -1), ("A", 1),
        )
    )


@dataclass(frozen=True)
class PresentationReport:
    N: int
    checks: dict
    passed: bool
    notes: tuple


def verify_presentation(N: int) -> PresentationReport:
    """Exact check of the defining relations and the kernel word.

    Verifies, over Q(zeta_2N) and as projective classes:
    (A0 B0)^3 = A0^2, A0^4 = I, and that the word representing
    (1+N, 0; 0, 1+N) mod 2N maps to the identity.  The integer-matrix
    congruence behind the kernel word is asserted alongside.
    """
    gens = build_rep_generators(N)
    A0, B0 = gens.A0, gens.B0
    ident = ProjectiveMatrix.identity(N)
    checks = {}
    ab = A0 @ B0
    checks["braid"] = (ab @ ab @ ab).proj_eq(A0 @ A0)
    checks["order4"] = A0.power(4).proj_eq(ident)
    word = kernel_word(N)
    m = word.evaluate_int()
    twoN = 2 * N
    target_ok = all(
        (x - y) % twoN == 0
        for x, y in zip(m, (1 + N, 0, 0, 1 + N))
    )
    checks["kernel_word_congruence"] = target_ok
    checks["kernel_word"] = word.evaluate_proj(A0, B0).proj_eq(ident)
    notes = (
        "order-2N generator B0 has an infinite-order lift; the order-4 relation "
        "belongs to A0",
    )
    return PresentationReport(N=N, checks=checks, passed=all(checks.values()), notes=notes)


def conjugation_table_check(N: int) -> dict:
    """Exact conjugation relations of the generators on M_S, M_T, M_inv.

    A0: S -> T^(-1), T -> S, inv -> inv.  B0 commutes with M_T and sends
    M_S to M_S M_T (its action is only pinned down modulo the
    translation subgroup; this is the variant consistent with the
    tau -> tau+1 coordinate change).
    """
    can = build_canonical_matrices(N, zeta(2 * N) ** 2)
    gens = build_rep_generators(N)
    A0, B0 = gens.A0, gens.B0
    MS, MT, MI = can.M_S, can.M_T, can.M_inv
    A0i, B0i = A0.inverse(), B0.inverse()
    return {
        "A0_S": (A0i @ MS @ A0).proj_eq(MT.inverse()),
        "A0_T": (A0i @ MT @ A0).proj_eq(MS),
        "A0_inv": (A0i @ MI @ A0).proj_eq(MI),
        "B0_T": (B0i @ MT @ B0).proj_eq(MT),
        "B0_S": (B0i @ MS @ B0).proj_eq(MS @ MT),
        "B0_order_2N": B0.power(2 * N).proj_eq(ProjectiveMatrix.identity(N))
        and not any(B0.power(k).proj_eq(ProjectiveMatrix.identity(N)) for k in range(1, 2 * N)),
    }


# ---------------------------------------------------------------------------
# the induced representation on the fixed space of M_inv


@dataclass(frozen=True)
class RhoBar:
    """Restriction of the representation to the hyperplane-fixed space H.

    `Abar`, `Bbar` act on the coordinates Xbar_0 = X_0,
    Xbar_j = X_j + X_(N-j), Xbar_(N/2) = X_(N/2); `Abar_null`,
    `Bbar_null` are the same classes written in the null-value
    coordinates (a_0 : ... : a_(N/2)), i.e. conjugated by
    diag(1, 2, ..., 2, 1)."""

    Abar: ProjectiveMatrix
    Bbar: ProjectiveMatrix
    Abar_null: ProjectiveMatrix
    Bbar_null: ProjectiveMatrix


def _compress_expand(N: int):
    h = N // 2
    zero, one, half = Fraction(0), Fraction(1), Fraction(1, 2)
    compress = [[zero] * N for _ in range(h + 1)]
    compress[0][0] = one
    compress[h][h] = one
    for j in range(1, h):
        compress[j][j] = one
        compress[j][N - j] = one
    expand = [[zero] * (h + 1) for _ in range(N)]
    expand[0][0] = one
    expand[h][h] = one
    for j in range(1, h):
        expand[j][j] = half
        expand[N - j][j] = half
    return compress, expand


def restrict_to_fixed_space(mat: ProjectiveMatrix, N: int) -> ProjectiveMatrix:
    """Compress an H-stable N x N class to its (N/2+1) x (N/2+1) action."""
    compress, expand = _compress_expand(N)
    # rectangular products, done by hand since ProjectiveMatrix is square-only
    me = [[_dot(row, col) for col in zip(*expand)] for row in mat.rows]
    cme = [[_dot(row, col) for col in zip(*me)] for row in compress]
    return ProjectiveMatrix(cme)


def build_rho_bar(N: int) -> RhoBar:
    if N % 2:
        raise ValueError("the fixed-space representation needs even N")
    gens = build_rep_generators(N)
    h = N // 2
    abar = restrict_to_fixed_space(gens.A0, N)
    bbar = restrict_to_fixed_space(gens.B0, N)
    d = [Fraction(1)] + [Fraction(2)] * (h - 1) + [Fraction(1)]

    def conj(m: ProjectiveMatrix) -> ProjectiveMatrix:
        return ProjectiveMatrix(
            [[m.rows[i][j] * d[j] / d[i] for j in range(h + 1)] for i in range(h + 1)]
        )

    return RhoBar(Abar=abar, Bbar=bbar, Abar_null=conj(abar), Bbar_null=conj(bbar))


def rho_bar_image(N: int, word: SL2Word, null_coords: bool = False) -> ProjectiveMatrix:
    """The fixed-space image of an SL_2(Z) word."""
    rb = build_rho_bar(N)
    a = rb.Abar_null if null_coords else rb.Abar
    b = rb.Bbar_null if null_coords else rb.Bbar
    return word.evaluate_proj(a, b)


# ---------------------------------------------------------------------------
# the theta immersion


def immersion_point(z: complex, ctx: ThetaContext) -> ProjectivePoint:
    """(theta_0(z) : ... : theta_(N-1)(z)), canonically normalized."""
    coords = [theta_N_eval(k, z, ctx) for k in range(ctx.N)]
    if max(abs(c) for c in coords) < ctx.tol:
        raise ValueError("numerically degenerate context: all coordinates below tol")
    return ProjectivePoint(coords).canonical()


@dataclass(frozen=True)
class TranslationReport:
    N: int
    samples: int
    max_resid_S: float
    max_resid_T: float
    matched_T_power: int
    passed: bool


def translation_check(
    ctx: ThetaContext, samples: int = 20, seed: int = 0, rtol: float = 1e-8
) -> TranslationReport:
    """Equivariance of the immersion under the two torsion translations.

    Translation by tau/N acts as M_S.  Translation by 1/N acts by a
    power of the diagonal M_T; which power is measured, not assumed (the
    matrix itself acts on coordinate functions, its inverse on points),
    and the matched exponent is reported.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    N, tau = ctx.N, ctx.tau
    rng = Random(seed)
    can = build_canonical_matrices(N)
    ms = can.M_S.complex_array()
    mt = can.M_T.complex_array()
    mt_inv = can.M_T.inverse().complex_array()
    worst_s = 0.0
    worst_t = {1: 0.0, -1: 0.0}
    for _ in range(samples):
        u = 0.05 + 0.9 * rng.random()
        v = 0.05 + 0.9 * rng.random()
        z = u + v * tau
        base = np.array([theta_N_eval(k, z, ctx) for k in range(N)])
        ts = np.array([theta_N_eval(k, z + tau / N, ctx) for k in range(N)])
        tt = np.array([theta_N_eval(k, z + 1.0 / N, ctx) for k in range(N)])
        worst_s = max(worst_s, proj_residual(ms @ base, ts))
        worst_t[1] = max(worst_t[1], proj_residual(mt @ base, tt))
        worst_t[-1] = max(worst_t[-1], proj_residual(mt_inv @ base, tt))
    power = min(worst_t, key=worst_t.get)
    return TranslationReport(
        N=N,
        samples=samples,
        max_resid_S=worst_s,
        max_resid_T=worst_t[power],
        matched_T_power=power,
        passed=worst_s < rtol and worst_t[power] < rtol,
    )


def rho_theta_candidates(N: int, kind: str) -> dict:
    """The coset of candidates for a modular coordinate change.

    kind "A" is the tau -> -1/tau family built on A0 = [zeta^(ij)];
    kind "B" the tau -> tau+1 family built on the diagonal B0.  The
    candidates are only pinned down modulo the four half-period
    translations, and the observed matrix may be the inverse class
    (point action versus function action), so inverses are included.
    """
    can = build_canonical_matrices(N, zeta(2 * N) ** 2)
    gens = build_rep_generators(N)
    base = gens.A0 if kind == "A" else gens.B0
    h = N // 2
    msh = can.M_S.power(h)
    mth = can.M_T.power(h)
    out = {}
    for name, t in (
        ("", ProjectiveMatrix.identity(N)),
        ("*MS^h", msh),
        ("*MT^h", mth),
        ("*MS^h*MT^h", msh @ mth),
    ):
        for inv, tag in ((False, ""), (True, "^-1")):
            m = base.inverse() if inv else base
            lbl = ("A0" if kind == "A" else "B0") + tag + name
            out[lbl] = m @ t
    return out


@dataclass(frozen=True)
class RhoThetaReport:
    N: int
    kind: str
    matched: str | None
    residual: float
    passed: bool


def rho_theta_match(
    ctx: ThetaContext, kind: str, samples: int = 5, seed: int = 0, rtol: float = 1e-8
) -> RhoThetaReport:
    """Identify the numeric modular coordinate change within the coset.

    Samples z, evaluates the immersion at the transformed modulus, and
    reports which candidate class (if any) matches on every sample."""
    N, tau = ctx.N, ctx.tau
    rng = Random(seed)
    if kind == "A":
        ctx2 = ctx.with_tau(-1.0 / tau)
    elif kind == "B":
        ctx2 = ctx.with_tau(tau + 1.0)
    else:
        raise ValueError("kind must be 'A' or 'B'")
    zs = [0.05 + 0.9 * rng.random() + (0.05 + 0.9 * rng.random()) * tau for _ in range(samples)]
    pairs = []
    for z in zs:
        base = np.array([theta_N_eval(k, z, ctx) for k in range(N)])
        img = np.array(
            [theta_N_eval(k, z / tau if kind == "A" else z, ctx2) for k in range(N)]
        )
        pairs.append((base, img))
    best_name, best_resid = None, float("inf")
    for name, cand in rho_theta_candidates(N, kind).items():
        c = cand.complex_array()
        resid = max(proj_residual(c @ b, i) for b, i in pairs)
        if resid < best_resid:
            best_name, best_resid = name, resid
    return RhoThetaReport(
        N=N, kind=kind, matched=best_name if best_resid < rtol else None,
        residual=best_resid, passed=best_resid < rtol,
    )
