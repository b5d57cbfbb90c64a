"""Interface reconstruction and boundary-derivative extrapolation.

Two families of stencil operations live here:

* WENO interface reconstruction (5th-order nonlinear, 7th-order with
  ideal weights).  Data are treated as sliding cell averages of the
  target function, so the conservative difference of reconstructed
  interface values recovers the derivative at design order.
* One-sided extrapolation of a function and its derivatives to a
  boundary point outside the sample range, either by a single
  interpolating polynomial (Lagrange) or by a weighted combination of
  nested sub-stencil polynomials whose weights collapse onto the
  smoothest sub-stencil near a discontinuity.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

__all__ = [
    "ReconstructionConfig",
    "weno_reconstruct_left",
    "weno_reconstruct_right",
    "reconstruct_left_batch",
    "lagrange_boundary_derivatives",
    "weno_boundary_derivatives",
    "extrapolation_matrix",
]

# Left-biased reconstruction at x_{j+1/2} from cell data; derived from the
# primitive-polynomial construction, exact on polynomial averages.
_C5_FULL = np.array([1, -13, 47, 27, -3], dtype=float) / 60.0
_C7_FULL = np.array([-3, 25, -101, 319, 214, -38, 4], dtype=float) / 420.0
_C5_CAND = (
    np.array([2, -7, 11], dtype=float) / 6.0,
    np.array([-1, 5, 2], dtype=float) / 6.0,
    np.array([2, 5, -1], dtype=float) / 6.0,
)
_D5_IDEAL = np.array([0.1, 0.6, 0.3])


@dataclass(frozen=True)
class ReconstructionConfig:
    """Spatial-order and weighting choices for the interface reconstruction."""

    order: int = 5
    weight_mode: str = "nonlinear"  # "nonlinear" | "ideal"
    epsilon: float = 1e-6

    def __post_init__(self):
        if self.order not in (5, 7):
            raise ValueError(f"order must be 5 or 7, got {self.order}")
        if self.weight_mode not in ("nonlinear", "ideal"):
            raise ValueError(f"unknown weight_mode {self.weight_mode!r}")
        if self.order == 7 and self.weight_mode != "ideal":
            raise ValueError("7th-order reconstruction supports ideal weights only")

    @property
    def stencil_width(self) -> int:
        return self.order

    @property
    def n_ghost(self) -> int:
        # half-width of the interface stencil
        return (self.order + 1) // 2


def _smoothness5(v):
    """Jiang-Shu indicators for the three 3-cell candidates; v[..., 0:5]."""
    b0 = (
        13.0 / 12.0 * (v[..., 0] - 2.0 * v[..., 1] + v[..., 2]) ** 2
        + 0.25 * (v[..., 0] - 4.0 * v[..., 1] + 3.0 * v[..., 2]) ** 2
    )
    b1 = (
        13.0 / 12.0 * (v[..., 1] - 2.0 * v[..., 2] + v[..., 3]) ** 2
        + 0.25 * (v[..., 1] - v[..., 3]) ** 2
    )
    b2 = (
        13.0 / 12.0 * (v[..., 2] - 2.0 * v[..., 3] + v[..., 4]) ** 2
        + 0.25 * (3.0 * v[..., 2] - 4.0 * v[..., 3] + v[..., 4]) ** 2
    )
    return b0, b1, b2


def reconstruct_left_batch(v: np.ndarray, cfg: ReconstructionConfig) -> np.ndarray:
    """Left-biased interface value for each window along the last axis.

    ``v[..., :]`` holds the ``cfg.order`` stencil values centered on the
    cell left of the interface.
    """
    if v.shape[-1] != cfg.order:
        raise ValueError(f"stencil length {v.shape[-1]} != order {cfg.order}")
    if cfg.order == 7:
        return v @ _C7_FULL
    if cfg.weight_mode == "ideal":
        return v @ _C5_FULL
    b0, b1, b2 = _smoothness5(v)
    eps = cfg.epsilon
    a0 = _D5_IDEAL[0] / (eps + b0) ** 2
    a1 = _D5_IDEAL[1] / (eps + b1) ** 2
    a2 = _D5_IDEAL[2] / (eps + b2) ** 2
    asum = a0 + a1 + a2
    p0 = v[..., 0:3] @ _C5_CAND[0]
    p1 = v[..., 1:4] @ _C5_CAND[1]
    p2 = v[..., 2:5] @ _C5_CAND[2]
    return (a0 * p0 + a1 * p1 + a2 * p2) / asum


def weno_reconstruct_left(stencil, cfg: ReconstructionConfig = None) -> float:
    """Interface value biased from the left, for a single stencil."""
    cfg = cfg or ReconstructionConfig()
    v = np.asarray(stencil, dtype=float)
    return float(reconstruct_left_batch(v, cfg))


def weno_reconstruct_right(stencil, cfg: ReconstructionConfig = None) -> float:
    """Mirror image of the left-biased reconstruction (reversed stencil)."""
    cfg = cfg or ReconstructionConfig()
    v = np.asarray(stencil, dtype=float)
    return float(reconstruct_left_batch(v[..., ::-1], cfg))


# ---------------------------------------------------------------------------
# boundary extrapolation
# ---------------------------------------------------------------------------


def _exact_inverse(mat):
    """Gauss-Jordan inverse over Fractions; mat is a list of lists."""
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _exact_vandermonde_inverse(nodes):
    V = [[x**p for p in range(len(nodes))] for x in nodes]
    return _exact_inverse(V)


@lru_cache(maxsize=32)
def extrapolation_matrix(k_points: int, xi0: float) -> np.ndarray:
    """Matrix D with D[k, i] = d^k l_i / dxi^k at xi = 0.

    Nodes sit at xi_i = xi0 + i (sample spacing scaled to 1, boundary at
    xi = 0).  Applying D to sample values gives the derivatives of the
    interpolating polynomial at the boundary; divide row k by dx**k for
    physical derivatives.  Built with exact rational arithmetic so the
    rows carry no inversion noise.
    """
    xi0 = Fraction(xi0)
    nodes = [xi0 + i for i in range(k_points)]
    Vinv = _exact_vandermonde_inverse(nodes)
    D = np.array(
        [[float(factorial(k) * Vinv[k][i]) for i in range(k_points)] for k in range(k_points)]
    )
    D.setflags(write=False)
    return D


def lagrange_boundary_derivatives(values, x_b: float, dx: float, x0: float = None):
    """Derivatives at x_b of the polynomial through K equispaced samples.

    Samples sit at x0 + i*dx (x0 defaults to x_b + dx/2, the cell-centered
    layout next to a boundary).  Output k approximates the k-th spatial
    derivative with formal order K-k.  For multi-component input of shape
    (K, M) the extrapolation acts on each column.
    """
    v = np.asarray(values, dtype=float)
    K = v.shape[0]
    if x0 is None:
        x0 = x_b + 0.5 * dx
    xi0 = (x0 - x_b) / dx
    D = extrapolation_matrix(K, float(xi0))
    scale = dx ** (-np.arange(K, dtype=float))
    out = D @ v
    return out * (scale[:, None] if out.ndim == 2 else scale)


def _poly_der(coeffs, l):
    """l-th derivative of a power-basis coefficient list (Fractions)."""
    for _ in range(l):
        coeffs = [coeffs[p] * p for p in range(1, len(coeffs))]
    return coeffs


def _poly_cell_integral(ca, cb):
    """Integral over (-1/2, 1/2) of the product of two coefficient lists."""
    total = Fraction(0)
    for i, a in enumerate(ca):
        for j, b in enumerate(cb):
            p = i + j
            if p % 2 == 0:  # odd powers integrate to zero on the symmetric cell
                total += a * b * 2 / ((p + 1) * 2 ** (p + 1))
    return total


@lru_cache(maxsize=32)
def _weno_extrap_tables(k_points: int, xi0: float):
    """Per-sub-stencil derivative rows and smoothness quadratic forms.

    Sub-stencil m uses samples 0..m.  Returns (derivs, quads): derivs[m]
    is (k_points, m+1) mapping data to d^k q_m/dxi^k at xi=0; quads[m] is
    the (m+1, m+1) form giving the indicator integral over the unit cell
    centered on the boundary, sum_{l=1..m} int_{-1/2}^{1/2} (q_m^(l))^2.
    """
    xi0 = Fraction(xi0)
    nodes = [xi0 + i for i in range(k_points)]
    derivs, quads = [], []
    for m in range(k_points):
        npts = m + 1
        Vinv = _exact_vandermonde_inverse(nodes[:npts])
        basis = [[Vinv[p][i] for p in range(npts)] for i in range(npts)]  # coeffs of l_i
        D = np.zeros((k_points, npts))
        for k in range(npts):
            for i in range(npts):
                D[k, i] = float(factorial(k) * Vinv[k][i])
        derivs.append(D)
        Q = np.zeros((npts, npts))
        for l in range(1, npts):
            dcoef = [_poly_der(basis[i], l) for i in range(npts)]
            for i in range(npts):
                for j in range(i, npts):
                    val = float(_poly_cell_integral(dcoef[i], dcoef[j]))
                    Q[i, j] += val
                    if j != i:
                        Q[j, i] += val
        quads.append(Q)
    for D in derivs:
        D.setflags(write=False)
    for Q in quads:
        Q.setflags(write=False)
    return tuple(derivs), tuple(quads)


def weno_boundary_derivatives(
    values, x_b: float, dx: float, x0: float = None, epsilon: float = 1e-6
):
    """Extrapolated derivatives with sub-stencil weighting.

    Builds the nested interpolants on samples {0}, {0,1}, ..., {0..K-1},
    weights them by smoothness indicators measured on a dx-wide cell
    centered at the boundary, and combines their derivatives.  Smooth
    data reproduce the Lagrange result to one order lower; near a jump
    the weights collapse onto the widest smooth sub-stencil.
    """
    v = np.asarray(values, dtype=float)
    squeeze = v.ndim == 1
    if squeeze:
        v = v[:, None]
    K = v.shape[0]
    if x0 is None:
        x0 = x_b + 0.5 * dx
    xi0 = (x0 - x_b) / dx
    derivs, quads = _weno_extrap_tables(K, float(xi0))

    # ideal weights favor the widest stencil; the graded dx powers keep
    # narrow stencils negligible on smooth data at any k
    d = np.array([dx ** (K - 1 - m) for m in range(K)])
    d[K - 1] = 1.0 - d[:-1].sum()

    out = np.zeros((K, v.shape[1]))
    for c in range(v.shape[1]):
        col = v[:, c]
        beta = np.empty(K)
        beta[0] = dx * dx
        for m in range(1, K):
            seg = col[: m + 1]
            beta[m] = seg @ quads[m] @ seg
        alpha = d / (epsilon + beta) ** 2
        w = alpha / alpha.sum()
        acc = np.zeros(K)
        for m in range(K):
            acc += w[m] * (derivs[m] @ col[: m + 1])
        out[:, c] = acc
    out *= dx ** (-np.arange(K, dtype=float))[:, None]
    return out[:, 0] if squeeze else out
