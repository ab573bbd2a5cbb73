"""Disk quadrature and the forward/inverse W-Zernike transform.

The radial rule is Gauss-Legendre in t = r**2, so every retained mode
product is a polynomial the rule integrates exactly; the angular rule is
the uniform trapezoid, which annihilates every aliased harmonic for
M > 2N.  Orthonormality and Parseval therefore hold to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .basis import modes_upto, w_bound, w_eval_grid
from .radial import RadialIndex, build_radial, radial_eval

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CoeffField:
    """Finitely supported coefficients f_{u,v}, dense over u+v <= bandwidth.

    values[u, v] holds f_{u,v}; entries with u+v > bandwidth must be zero.
    """

    bandwidth: int
    values: np.ndarray

    def __post_init__(self) -> None:
        n = self.bandwidth
        if n < 0:
            raise ValueError("bandwidth must be non-negative")
        vals = np.asarray(self.values, dtype=complex)
        if vals.shape != (n + 1, n + 1):
            raise ValueError(f"values shape {vals.shape} != ({n + 1}, {n + 1})")
        uu, vv = np.indices(vals.shape)
        if np.any(vals[uu + vv > n] != 0):
            raise ValueError("nonzero coefficient beyond the stated bandwidth")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @classmethod
    def zeros(cls, bandwidth: int) -> "CoeffField":
        return cls(bandwidth, np.zeros((bandwidth + 1, bandwidth + 1), dtype=complex))

    @classmethod
    def basis(cls, u: int, v: int, bandwidth: int | None = None) -> "CoeffField":
        n = u + v if bandwidth is None else bandwidth
        vals = np.zeros((n + 1, n + 1), dtype=complex)
        vals[u, v] = 1.0
        return cls(n, vals)

    @classmethod
    def from_modes(cls, entries: dict[tuple[int, int], complex],
                   bandwidth: int | None = None) -> "CoeffField":
        n = max((u + v for u, v in entries), default=0)
        if bandwidth is not None:
            if bandwidth < n:
                raise ValueError("entry beyond requested bandwidth")
            n = bandwidth
        vals = np.zeros((n + 1, n + 1), dtype=complex)
        for (u, v), c in entries.items():
            vals[u, v] = c
        return cls(n, vals)

    def get(self, u: int, v: int) -> complex:
        if u + v > self.bandwidth:
            return 0j
        return complex(self.values[u, v])

    def iter_modes(self):
        """Yield (u, v, f_{u,v}) ascending in u+v, then u."""
        for mode in modes_upto(self.bandwidth):
            yield mode.u, mode.v, complex(self.values[mode.u, mode.v])

    def with_bandwidth(self, bandwidth: int) -> "CoeffField":
        """Pad (or shrink, if the tail is zero) to a new bandwidth."""
        if bandwidth == self.bandwidth:
            return self
        k = min(bandwidth, self.bandwidth) + 1
        if bandwidth < self.bandwidth:
            uu, vv = np.indices(self.values.shape)
            if np.any(self.values[uu + vv > bandwidth] != 0):
                raise ValueError("shrinking would drop nonzero coefficients")
        vals = np.zeros((bandwidth + 1, bandwidth + 1), dtype=complex)
        vals[:k, :k] = self.values[:k, :k]
        return CoeffField(bandwidth, vals)

    def trimmed(self) -> "CoeffField":
        """Smallest bandwidth holding all nonzero coefficients."""
        uu, vv = np.nonzero(self.values)
        n = int((uu + vv).max()) if uu.size else 0
        return self.with_bandwidth(n)

    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2)))

    def conj_transpose(self) -> "CoeffField":
        """The field with f_{u,v} -> conj(f_{v,u})."""
        return CoeffField(self.bandwidth, np.conj(self.values.T))

    def __add__(self, other: "CoeffField") -> "CoeffField":
        n = max(self.bandwidth, other.bandwidth)
        a = self.with_bandwidth(n)
        b = other.with_bandwidth(n)
        return CoeffField(n, a.values + b.values)

    def __sub__(self, other: "CoeffField") -> "CoeffField":
        return self + (-1.0) * other

    def __mul__(self, scalar: complex) -> "CoeffField":
        return CoeffField(self.bandwidth, self.values * scalar)

    __rmul__ = __mul__


def max_abs_diff(a: CoeffField, b: CoeffField) -> float:
    return float(np.max(np.abs((a - b).values)))


@dataclass(frozen=True)
class DiskQuadrature:
    """Gauss-Legendre radial rule in t = r**2 plus a uniform angular grid.

    Exact for every product of retained modes with u+v <= bandwidth; the
    radial weights sum to 1/2, the value of the integral of r dr.
    """

    bandwidth: int
    r: np.ndarray
    w: np.ndarray
    phi: np.ndarray

    @property
    def n_radial(self) -> int:
        return len(self.r)

    @property
    def n_angular(self) -> int:
        return len(self.phi)

    @property
    def angular_weight(self) -> float:
        return TWO_PI / self.n_angular


def build_quadrature(bandwidth: int) -> DiskQuadrature:
    """N+1 radial nodes mapped via r = sqrt(t); M = max(4, 2N+2) angles."""
    if bandwidth < 0:
        raise ValueError("bandwidth must be non-negative")
    x, wt = np.polynomial.legendre.leggauss(bandwidth + 1)
    t = (x + 1.0) / 2.0
    r = np.sqrt(t)
    w = wt / 4.0  # leggauss weights sum to 2; integral of r dr is 1/2
    m = max(4, 2 * bandwidth + 2)
    phi = TWO_PI * np.arange(m) / m
    for arr in (r, w, phi):
        arr.flags.writeable = False
    return DiskQuadrature(bandwidth=bandwidth, r=r, w=w, phi=phi)


@dataclass(frozen=True)
class PolarSamples:
    """Function values on a quadrature grid, shape (n_radial, n_angular)."""

    quadrature: DiskQuadrature
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values)
        expected = (self.quadrature.n_radial, self.quadrature.n_angular)
        if vals.shape != expected:
            raise ValueError(f"sample shape {vals.shape} != quadrature grid {expected}")


def _basis_on(q: DiskQuadrature, bandwidth: int) -> np.ndarray:
    """Stacked W_{u,v} values on a quadrature grid, mode order as modes_upto."""
    modes = modes_upto(bandwidth)
    out = np.empty((len(modes), q.n_radial, q.n_angular), dtype=complex)
    for i, mode in enumerate(modes):
        out[i] = w_eval_grid(mode, q.r, q.phi)
    return out


@lru_cache(maxsize=None)
def _basis_cached(q_bandwidth: int, bandwidth: int) -> np.ndarray:
    return _basis_on(build_quadrature(q_bandwidth), bandwidth)


def analyze(samples: PolarSamples, q: DiskQuadrature, bandwidth: int) -> CoeffField:
    """Project samples onto the modes with u+v <= bandwidth.

    f_{u,v} = sum_jk w_j (2 pi / M) conj(W_{u,v}(r_j, phi_k)) s_{jk}; exact
    for sample sets generated from a field of compatible bandwidth.
    """
    if samples.quadrature is not q and (
        samples.quadrature.n_radial != q.n_radial
        or samples.quadrature.n_angular != q.n_angular
    ):
        raise ValueError("samples were taken on a different quadrature grid")
    if bandwidth > q.bandwidth:
        raise ValueError(
            f"bandwidth {bandwidth} exceeds quadrature exactness {q.bandwidth}"
        )
    basis = _basis_cached(q.bandwidth, bandwidth)
    weighted = samples.values * q.w[:, None] * q.angular_weight
    coeffs = np.tensordot(np.conj(basis), weighted, axes=([1, 2], [0, 1]))
    vals = np.zeros((bandwidth + 1, bandwidth + 1), dtype=complex)
    for i, mode in enumerate(modes_upto(bandwidth)):
        vals[mode.u, mode.v] = coeffs[i]
    return CoeffField(bandwidth, vals)


def synthesize_on(coeffs: CoeffField, q: DiskQuadrature) -> PolarSamples:
    """Evaluate the truncated expansion on a quadrature grid."""
    basis = _basis_cached(q.bandwidth, coeffs.bandwidth)
    flat = np.array([c for _, _, c in coeffs.iter_modes()])
    return PolarSamples(q, np.tensordot(flat, basis, axes=(0, 0)))


def synthesize(coeffs: CoeffField, points) -> np.ndarray:
    """Sum f_{u,v} W_{u,v} at arbitrary disk points (list of DiskPoint)."""
    r = np.array([p.r for p in points])
    phi = np.array([p.phi for p in points])
    return synthesize_rphi(coeffs, r, phi)


def synthesize_rphi(coeffs: CoeffField, r: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Pointwise synthesis on paired (r, phi) arrays of equal shape."""
    r, phi = np.broadcast_arrays(np.asarray(r, float), np.asarray(phi, float))
    out = np.zeros(r.shape, dtype=complex)
    for mode in modes_upto(coeffs.bandwidth):
        c = coeffs.values[mode.u, mode.v]
        if c == 0:
            continue
        m = mode.u - mode.v
        rad = radial_eval(build_radial(RadialIndex(mode.degree, m)), r)
        out = out + c * w_bound(mode) * rad * np.exp(1j * m * phi)
    return out


def inner_product(a: PolarSamples, b: PolarSamples, q: DiskQuadrature) -> complex:
    """Quadrature approximation of the disk inner product <a, b>."""
    if a.values.shape != b.values.shape:
        raise ValueError("sample shapes differ")
    if a.values.shape != (q.n_radial, q.n_angular):
        raise ValueError("samples do not match the quadrature grid")
    return complex(
        np.sum(np.conj(a.values) * b.values * q.w[:, None]) * q.angular_weight
    )


def parseval_gap(coeffs: CoeffField, q: DiskQuadrature) -> float:
    """|quadrature norm^2 of the synthesized samples - sum |f_{u,v}|^2|."""
    if coeffs.bandwidth > q.bandwidth:
        raise ValueError("quadrature not exact for this bandwidth")
    s = synthesize_on(coeffs, q)
    return abs(inner_product(s, s, q).real - coeffs.l2_norm() ** 2)


@dataclass(frozen=True)
class RasterImage:
    """Grayscale raster with non-negative float intensities."""

    width: int
    height: int
    pixels: np.ndarray  # shape (height, width)
    maxval: int = 255

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("image must be at least 1x1")
        px = np.asarray(self.pixels, dtype=float)
        if px.shape != (self.height, self.width):
            raise ValueError(f"pixel shape {px.shape} != ({self.height}, {self.width})")
        if not np.all(np.isfinite(px)) or np.any(px < 0):
            raise ValueError("intensities must be finite and non-negative")
        object.__setattr__(self, "pixels", px)


def _bilinear(img: RasterImage, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Bilinear interpolation of pixel centers at (i + 1/2, j + 1/2)."""
    px = img.pixels
    gx = np.clip(x - 0.5, 0.0, img.width - 1.0)
    gy = np.clip(y - 0.5, 0.0, img.height - 1.0)
    x0 = np.clip(np.floor(gx).astype(int), 0, img.width - 2) if img.width > 1 else np.zeros_like(gx, dtype=int)
    y0 = np.clip(np.floor(gy).astype(int), 0, img.height - 2) if img.height > 1 else np.zeros_like(gy, dtype=int)
    x1 = np.minimum(x0 + 1, img.width - 1)
    y1 = np.minimum(y0 + 1, img.height - 1)
    fx = gx - x0
    fy = gy - y0
    return (
        px[y0, x0] * (1 - fx) * (1 - fy)
        + px[y0, x1] * fx * (1 - fy)
        + px[y1, x0] * (1 - fx) * fy
        + px[y1, x1] * fx * fy
    )


def raster_to_polar(img: RasterImage, q: DiskQuadrature) -> PolarSamples:
    """Sample the largest inscribed disk at the quadrature nodes."""
    cx, cy = img.width / 2.0, img.height / 2.0
    radius = min(img.width, img.height) / 2.0
    rr = np.multiply.outer(q.r, np.cos(q.phi)) * radius + cx
    yy = np.multiply.outer(q.r, np.sin(q.phi)) * radius + cy
    return PolarSamples(q, _bilinear(img, rr, yy))


def polar_to_raster(coeffs: CoeffField, width: int, height: int,
                    maxval: int = 255, normalize: bool = True) -> RasterImage:
    """Render |synthesize| on the inscribed disk; outside pixels are 0.

    Output is max-normalized to [0, maxval] by default since operator
    application rescales magnitudes unpredictably.
    """
    if width < 1 or height < 1:
        raise ValueError("raster size must be at least 1x1")
    cx, cy = width / 2.0, height / 2.0
    radius = min(width, height) / 2.0
    x = (np.arange(width) + 0.5 - cx) / radius
    y = (np.arange(height) + 0.5 - cy) / radius
    xx, yy = np.meshgrid(x, y)
    rr = np.hypot(xx, yy)
    inside = rr <= 1.0
    out = np.zeros((height, width))
    if inside.any():
        vals = synthesize_rphi(coeffs, rr[inside], np.arctan2(yy, xx)[inside])
        out[inside] = np.abs(vals)
    if normalize:
        peak = out.max()
        if peak > 0:
            out *= maxval / peak
    return RasterImage(width=width, height=height, pixels=out, maxval=maxval)


def disk_mask(width: int, height: int) -> np.ndarray:
    """Boolean mask of pixel centers inside the inscribed disk."""
    cx, cy = width / 2.0, height / 2.0
    radius = min(width, height) / 2.0
    x = (np.arange(width) + 0.5 - cx) / radius
    y = (np.arange(height) + 0.5 - cy) / radius
    xx, yy = np.meshgrid(x, y)
    return np.hypot(xx, yy) <= 1.0
