"""Weighted norm families on coefficient fields and continuity-bound checks.

Two families: the l2 norms ||f||_p with weight (u+v+1)^(2p), and the
l1-weighted norms ||f||_{1,q} with weight (u+v+1)^q.  Every boundedness
inequality the operator algebra satisfies is re-evaluated numerically on
concrete fields and flagged in a NormReport.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import math

import numpy as np

from .algebra import Generator, apply_generator, apply_p
from .transform import CoeffField, build_quadrature, synthesize_on

# (u+v+1)^16 at bandwidth 12 is still comfortably inside double range;
# higher weights add no test power.
P_MAX = 8

# Slack for comparing provably-true inequalities under rounding.
_EPS = 1e-12


def _degree_weights(f: CoeffField) -> np.ndarray:
    uu, vv = np.indices(f.values.shape)
    return (uu + vv + 1).astype(float)


def norm_p(f: CoeffField, p: int) -> float:
    """sqrt(sum |f_{u,v}|^2 (u+v+1)^(2p)); p = 0 is the plain l2 norm."""
    if not 0 <= p <= P_MAX:
        raise ValueError(f"norm index p must be in 0..{P_MAX}")
    w = _degree_weights(f) ** p
    return float(np.sqrt(np.sum(np.abs(f.values * w) ** 2)))


def norm_1q(f: CoeffField, q: int) -> float:
    """sum |f_{u,v}| (u+v+1)^q; q = 0 is the l1 norm of the coefficients."""
    if not 0 <= q <= P_MAX:
        raise ValueError(f"norm index q must be in 0..{P_MAX}")
    return float(np.sum(np.abs(f.values) * _degree_weights(f) ** q))


@dataclass(frozen=True)
class BoundCheck:
    name: str
    lhs: float
    rhs: float

    @property
    def passed(self) -> bool:
        return self.lhs <= self.rhs + _EPS * max(1.0, self.rhs)


@dataclass(frozen=True)
class NormReport:
    p_norms: tuple[float, ...]
    q_norms: tuple[float, ...]
    checks: tuple[BoundCheck, ...] = field(default_factory=tuple)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def continuity_report(f: CoeffField, index_max: int = 3) -> NormReport:
    """Evaluate the continuity and pointwise bounds on one field.

    Checks, for p, r = 0..index_max:
      ||Uf||_p <= ||f||_{p+1} and the same for V, A+, A-, B+, B-;
      ||Pf||_{1,r} <= (2^r + 1) ||f||_{1,r};
      max |f(r, phi)| over a fixed quadrature grid <= ||f||_{1,1} / sqrt(pi).
    """
    checks: list[BoundCheck] = []
    diagonal_and_ladders = (
        Generator.U, Generator.V,
        Generator.A_PLUS, Generator.A_MINUS,
        Generator.B_PLUS, Generator.B_MINUS,
    )
    for g in diagonal_and_ladders:
        gf = apply_generator(g, f)
        for p in range(index_max + 1):
            checks.append(
                BoundCheck(f"||{g.value} f||_{p} <= ||f||_{p + 1}",
                           norm_p(gf, p), norm_p(f, p + 1))
            )
    pf = apply_p(f)
    for r in range(index_max + 1):
        checks.append(
            BoundCheck(f"||P f||_(1,{r}) <= (2^{r}+1) ||f||_(1,{r})",
                       norm_1q(pf, r), (2**r + 1) * norm_1q(f, r))
        )
    grid = build_quadrature(f.bandwidth + 2)
    peak = float(np.max(np.abs(synthesize_on(f, grid).values)))
    checks.append(
        BoundCheck("max |f(r,phi)| <= ||f||_(1,1) / sqrt(pi)",
                   peak, norm_1q(f, 1) / math.sqrt(math.pi))
    )
    return NormReport(
        p_norms=tuple(norm_p(f, p) for p in range(index_max + 1)),
        q_norms=tuple(norm_1q(f, q) for q in range(index_max + 1)),
        checks=tuple(checks),
    )


def resolvent_field(f: CoeffField, sign: int) -> CoeffField:
    """g_{u,v} = f_{u,v} / (u +/- i); the algebraic inverse of (U +/- i)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    uu, _ = np.indices(f.values.shape)
    return CoeffField(f.bandwidth, f.values / (uu + sign * 1j))
