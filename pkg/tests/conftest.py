"""Shared independent oracles for the test suite.

These deliberately re-derive values by the most direct method available
(raw summation at a generous fixed radius, brute-force products) so the
library code paths are checked against something that does not share
their implementation."""

import cmath


def direct_theta_pq(p, q, z, tau, radius=60):
    """Raw lattice sum for theta_(p,q)(z, tau), no tail analysis."""
    return sum(
        cmath.exp(2j * cmath.pi * (0.5 * (n + p) ** 2 * tau + (n + p) * (z + q)))
        for n in range(-radius, radius + 1)
    )


def direct_theta_N(N, k, z, tau, radius=60):
    """Raw sum for the degree-N family via its defining characteristic."""
    return direct_theta_pq(0.5 - k / N, N / 2.0, N * z, N * tau, radius)


def jacobi_transform_vars(w, x, y, z):
    """The linear substitution (w', x', y', z') used by the quartic
    theta identities: half-sums with alternating signs."""
    wp = 0.5 * (w + x + y + z)
    xp = 0.5 * (w + x - y - z)
    yp = 0.5 * (w - x + y - z)
    zp = 0.5 * (w - x - y + z)
    return wp, xp, yp, zp
