"""Zernike radial polynomials R_n^m with exact integer coefficients.

Coefficients are built with exact integer binomials and converted to float
once; evaluation is Horner in t = r**2 on the even/odd-compressed form.
An independent Jacobi three-term-recurrence evaluator serves as oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Beyond this degree the direct expansion conditioning degrades and image
# work never needs it.
N_MAX = 60


def validate_index(n: int, m: int) -> None:
    """Raise ValueError naming the violated constraint for a bad (n, m)."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got n={n}")
    if n > N_MAX:
        raise ValueError(f"degree cap exceeded: n={n} > {N_MAX}")
    if abs(m) > n:
        raise ValueError(f"azimuthal bound |m| <= n violated: n={n}, m={m}")
    if (n - m) % 2 != 0:
        raise ValueError(f"parity violated: n={n} and m={m} must have the same parity")


@dataclass(frozen=True)
class RadialIndex:
    """A valid (n, m) pair: |m| <= n and n = m (mod 2)."""

    n: int
    m: int

    def __post_init__(self) -> None:
        validate_index(self.n, self.m)


@dataclass(frozen=True)
class RadialPolynomial:
    """Exact integer coefficients c_k of R_n^m, exponents n - 2k, k = 0..(n-|m|)/2."""

    index: RadialIndex
    coeffs: tuple[int, ...]

    @property
    def exponents(self) -> tuple[int, ...]:
        n = self.index.n
        return tuple(n - 2 * k for k in range(len(self.coeffs)))


@lru_cache(maxsize=None)
def build_radial(index: RadialIndex) -> RadialPolynomial:
    """Construct R_n^m from the explicit binomial formula.

    c_k = (-1)^k C(n-k, k) C(n-2k, (n-|m|)/2 - k).  The sum of the signed
    coefficients is exactly 1, so R_n^m(1) = 1 at the integer level, and
    m and -m yield identical polynomials.
    """
    n, m = index.n, abs(index.m)
    q = (n - m) // 2
    coeffs = tuple(
        (-1) ** k * math.comb(n - k, k) * math.comb(n - 2 * k, q - k)
        for k in range(q + 1)
    )
    return RadialPolynomial(index=RadialIndex(n, m), coeffs=coeffs)


_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a, b):
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _comp_horner(coeffs: tuple[int, ...], t: np.ndarray) -> np.ndarray:
    """Compensated Horner: twice-working-precision result.

    The signed binomial coefficients cancel massively near t = 1 (condition
    number ~1e13 at n = 40), so plain double Horner cannot meet the oracle
    tolerance; tracking the exact rounding residue of every step restores it.
    """
    acc = np.full_like(t, float(coeffs[0]))
    err = np.zeros_like(t)
    for c in coeffs[1:]:
        p, pe = _two_prod(acc, t)
        acc, se = _two_sum(p, float(c))
        err = err * t + (pe + se)
    return acc + err


def radial_eval(poly: RadialPolynomial, r):
    """Evaluate R_n^m at r in [-1, 1] (scalar or ndarray) by Horner in t = r**2."""
    r = np.asarray(r, dtype=float)
    if np.any(np.abs(r) > 1):
        raise ValueError("radius out of domain: |r| <= 1 required")
    t = r * r
    acc = _comp_horner(poly.coeffs, t)
    m = abs(poly.index.m)
    val = acc * r**m if m else acc
    return val if val.ndim else float(val)


def radial_eval_jacobi(index: RadialIndex, r):
    """Independent oracle: (-1)^s r^|m| P_s^(|m|,0)(1 - 2 r**2), s = (n-|m|)/2.

    Uses the standard three-term Jacobi recurrence; disagreement with
    radial_eval beyond tolerance is a build-failing event.
    """
    r = np.asarray(r, dtype=float)
    if np.any((r < 0) | (r > 1)):
        raise ValueError("radius out of domain: 0 <= r <= 1 required")
    n, m = index.n, abs(index.m)
    s = (n - m) // 2
    a = m
    x = 1.0 - 2.0 * r * r
    p_prev = np.ones_like(x)
    if s == 0:
        p = p_prev
    else:
        p = 0.5 * a + 0.5 * (a + 2) * x
        for k in range(2, s + 1):
            c1 = 2 * k * (k + a) * (2 * k + a - 2)
            c2 = 2 * k + a - 1
            c3 = (2 * k + a) * (2 * k + a - 2)
            c4 = 2 * (k + a - 1) * (k - 1) * (2 * k + a)
            p, p_prev = (c2 * (c3 * x + a * a) * p - c4 * p_prev) / c1, p
    val = (-1) ** s * r**m * p if m else (-1) ** s * p
    return val if val.ndim else float(val)


def recurrence_coefficients(n: int, m: int) -> tuple[float, float]:
    """Coefficients (a_n^m, b_n^m) of r R_n^m = a R_{n+1}^{m+1} + b R_{n-1}^{m+1}."""
    return (n + m + 2) / (2 * (n + 1)), (n - m) / (2 * (n + 1))


def recurrence_residual(index: RadialIndex, r: float) -> float:
    """Residual of the degree-mixing identity; exact up to rounding.

    At n = m the lower term vanishes (b = 0) and (n-1, m+1) is skipped.
    """
    n, m = index.n, abs(index.m)
    if n < 1:
        raise ValueError("recurrence requires n >= 1")
    a, b = recurrence_coefficients(n, m)
    rhs = a * radial_eval(build_radial(RadialIndex(n + 1, m + 1)), r)
    if n > m:
        rhs += b * radial_eval(build_radial(RadialIndex(n - 1, m + 1)), r)
    return abs(r * radial_eval(build_radial(index), r) - rhs)


def ode_residual(index: RadialIndex, r: float, h: float) -> float:
    """Finite-difference residual of the defining radial ODE.

    Central differences of step h for both derivatives; r must stay in
    [h, 1-h] to avoid the 1/r terms at the origin and the endpoint.
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    if not (h <= r <= 1 - h):
        raise ValueError(f"radius {r} too close to 0 or 1 for step {h}")
    n, m = index.n, abs(index.m)
    poly = build_radial(index)
    f0 = radial_eval(poly, r)
    fp = radial_eval(poly, r + h)
    fm = radial_eval(poly, r - h)
    d1 = (fp - fm) / (2 * h)
    d2 = (fp - 2 * f0 + fm) / (h * h)
    return abs(
        (1 - r * r) * d2 - (3 * r - 1 / r) * d1 + (n * (n + 2) - m * m / (r * r)) * f0
    )
