"""Benchmark problem definitions.

Each problem bundles the flux with everything the solver and the
boundary machinery need: Jacobian, Hessian action, eigensystem, wave
speed bound, prescribed-quantity boundary rows with analytic time
derivatives, and (where available) the exact solution.
"""

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Tuple

import numpy as np

from .errors import HyperbolicityError

__all__ = [
    "GAMMA",
    "BoundaryRow",
    "ProblemDefinition",
    "Problem2D",
    "EulerState",
    "make_linear_advection",
    "make_burgers",
    "make_euler_smooth",
    "make_blast_wave",
    "make_euler2d_vortex",
    "euler_flux",
    "euler_jacobian",
    "euler_hessian_action",
    "euler_eigensystem",
    "euler_primitive_to_conservative",
    "euler_conservative_to_primitive",
    "PROBLEM_NAMES",
]

GAMMA = 1.4


@dataclass(frozen=True)
class BoundaryRow:
    """One prescribed relation q(U) = g(t) at a boundary.

    ``q_grad`` is dq/dU.  The time derivatives g1..g3 are analytic; the
    intermediate-data boundary mode needs them up to third order, the
    stage-consistent mode only needs g1.
    """

    name: str
    q: Callable
    q_grad: Callable
    g: Callable
    g1: Callable
    g2: Callable = None
    g3: Callable = None

    def residual(self, U, t: float) -> float:
        return self.q(U) - self.g(t)


@dataclass(frozen=True)
class ProblemDefinition:
    name: str
    m: int
    domain: Tuple[float, float]
    flux: Callable  # (M, ...) -> (M, ...)
    jacobian: Callable  # (M,) -> (M, M)
    hessian_action: Callable  # (U, V) -> (M,)  second derivative of F along V
    eigensystem: Callable  # (M, P) -> (lam (P,M), L (P,M,M), R (P,M,M))
    max_wavespeed: Callable  # (M, ...) -> (...)
    left_rows: Tuple[BoundaryRow, ...] = ()
    right_rows: Tuple[BoundaryRow, ...] = ()
    exact: Callable = None  # (t, x) -> (M, P)
    initial: Callable = None  # x -> (M, P); defaults to exact at t=0
    smooth: bool = True  # polynomial extrapolation at boundaries
    taylor_depth: Optional[int] = None  # override for the ghost-fill depth
    time_validity: float = math.inf

    def rows(self, side: str) -> Tuple[BoundaryRow, ...]:
        return self.left_rows if side == "left" else self.right_rows

    def initial_values(self, x):
        if self.initial is not None:
            return self.initial(x)
        if self.exact is None:
            raise ValueError(f"problem {self.name} has neither initial nor exact data")
        return self.exact(0.0, x)


@dataclass(frozen=True)
class Problem2D:
    """Dimension-by-dimension problem: per-axis fluxes plus edge data.

    ``edge_rows`` maps edge name (left/right/bottom/top) to prescribed
    rows whose data g(t, s) vary along the tangential coordinate s.
    ``exact_gradient`` returns (dU/dx, dU/dy) of the exact solution and
    feeds the tangential terms of the edge treatment.
    """

    name: str
    m: int
    domain: Tuple[Tuple[float, float], Tuple[float, float]]
    flux_x: Callable
    flux_y: Callable
    jacobian_x: Callable
    jacobian_y: Callable
    hessian_action_x: Callable
    hessian_action_y: Callable
    eigensystem_x: Callable
    eigensystem_y: Callable
    max_wavespeed_x: Callable
    max_wavespeed_y: Callable
    edge_rows: dict
    exact: Callable  # (t, x, y) -> (M, P)
    exact_gradient: Callable  # (t, x, y) -> (dUdx (M,P), dUdy (M,P))
    smooth: bool = True
    taylor_depth: Optional[int] = None


# ---------------------------------------------------------------------------
# scalar problems
# ---------------------------------------------------------------------------


def _scalar_problem(name, f, fp, fpp, domain, **kwargs):
    def flux(U):
        return f(U)

    def jacobian(U):
        return np.array([[fp(U[0])]])

    def hessian_action(U, V):
        return np.array([fpp(U[0]) * V[0] * V[0]])

    def eigensystem(U):
        P = U.shape[1]
        lam = fp(U[0])[:, None]
        eye = np.ones((P, 1, 1))
        return lam, eye, eye.copy()

    def max_wavespeed(U):
        return np.abs(fp(U[0]))

    return ProblemDefinition(
        name=name,
        m=1,
        domain=domain,
        flux=flux,
        jacobian=jacobian,
        hessian_action=hessian_action,
        eigensystem=eigensystem,
        max_wavespeed=max_wavespeed,
        **kwargs,
    )


def make_linear_advection(variant: str = "smooth") -> ProblemDefinition:
    """u_t + u_x = 0 on [-1, 1] with inflow data at x = -1 only."""
    pi = math.pi
    if variant == "smooth":

        def g(t):
            return 0.25 - 0.5 * math.sin(pi * (1.0 + t))

        def g1(t):
            return -0.5 * pi * math.cos(pi * (1.0 + t))

        def g2(t):
            return 0.5 * pi * pi * math.sin(pi * (1.0 + t))

        def g3(t):
            return 0.5 * pi**3 * math.cos(pi * (1.0 + t))

        def exact(t, x):
            return np.atleast_2d(0.25 + 0.5 * np.sin(pi * (np.asarray(x) - t)))

    elif variant == "step":

        def g(t):
            return 0.25 if t <= 1.0 else -1.0

        def g1(t):
            return 0.0

        g2 = g3 = g1

        def exact(t, x):
            x = np.asarray(x, dtype=float)
            u = 0.25 + 0.5 * np.sin(pi * (x - t))
            u = np.where(x < t - 1.0, 0.25, u)
            u = np.where(x < t - 2.0, -1.0, u)
            return np.atleast_2d(u)

    else:
        raise ValueError(f"unknown advection variant {variant!r}")

    row = BoundaryRow(
        name="u",
        q=lambda U: U[0],
        q_grad=lambda U: np.array([1.0]),
        g=g,
        g1=g1,
        g2=g2,
        g3=g3,
    )
    return _scalar_problem(
        f"advect-{variant}",
        f=lambda u: u,
        fp=lambda u: np.ones_like(u),
        fpp=lambda u: 0.0,
        domain=(-1.0, 1.0),
        left_rows=(row,),
        right_rows=(),
        exact=exact,
    )


def make_burgers() -> ProblemDefinition:
    """Burgers flux on [-1/2, 3/2]; data from the compressive ramp solution.

    The closed-form solution is valid for t < 1 only (the ramp steepens
    into a shock at t = 1); evaluation beyond that raises.
    """

    def exact(t, x):
        if t >= 1.0:
            raise ValueError(f"exact ramp solution is only valid for t < 1, got t={t}")
        x = np.asarray(x, dtype=float)
        u = np.where(x < t, 1.0, np.where(x >= 2.0 - t, -1.0, (1.0 - x) / (1.0 - t)))
        return np.atleast_2d(u)

    def g_left(t):
        return 1.0

    def zero(t):
        return 0.0

    # right boundary sits on the ramp until t = 1/2, then inside u = -1
    def g_right(t):
        return -0.5 / (1.0 - t) if t < 0.5 else -1.0

    def g1_right(t):
        return -0.5 / (1.0 - t) ** 2 if t < 0.5 else 0.0

    def g2_right(t):
        return -1.0 / (1.0 - t) ** 3 if t < 0.5 else 0.0

    def g3_right(t):
        return -3.0 / (1.0 - t) ** 4 if t < 0.5 else 0.0

    left = BoundaryRow(
        "u", lambda U: U[0], lambda U: np.array([1.0]), g_left, zero, zero, zero
    )
    right = BoundaryRow(
        "u", lambda U: U[0], lambda U: np.array([1.0]), g_right, g1_right, g2_right, g3_right
    )
    return _scalar_problem(
        "burgers",
        f=lambda u: 0.5 * u * u,
        fp=lambda u: u,
        fpp=lambda u: 1.0,
        domain=(-0.5, 1.5),
        left_rows=(left,),
        right_rows=(right,),
        exact=exact,
        time_validity=1.0,
    )


# ---------------------------------------------------------------------------
# 1D Euler
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EulerState:
    """Conservative gas state (density, momentum, total energy)."""

    rho: float
    momentum: float
    energy: float

    def __post_init__(self):
        if not self.rho > 0.0:
            raise HyperbolicityError(f"nonpositive density {self.rho}")
        if not self.p > 0.0:
            raise HyperbolicityError(f"nonpositive pressure {self.p}")

    @property
    def u(self) -> float:
        return self.momentum / self.rho

    @property
    def p(self) -> float:
        return (GAMMA - 1.0) * (self.energy - 0.5 * self.momentum**2 / self.rho)

    def as_array(self) -> np.ndarray:
        return np.array([self.rho, self.momentum, self.energy])


def euler_primitive_to_conservative(rho, u, p):
    rho = np.asarray(rho, dtype=float)
    u = np.asarray(u, dtype=float)
    p = np.asarray(p, dtype=float)
    E = p / (GAMMA - 1.0) + 0.5 * rho * u * u
    return np.stack([rho, rho * u, E])


def euler_conservative_to_primitive(U):
    rho = U[0]
    u = U[1] / rho
    p = (GAMMA - 1.0) * (U[2] - 0.5 * U[1] * u)
    return rho, u, p


def _check_positive(rho, p):
    bad = ~((rho > 0.0) & (p > 0.0))
    if np.any(bad):
        loc = int(np.argmax(np.atleast_1d(bad)))
        raise HyperbolicityError(
            f"nonpositive density/pressure at flat index {loc} "
            f"(rho={np.atleast_1d(rho).flat[loc]:.3e}, p={np.atleast_1d(p).flat[loc]:.3e})",
            location=loc,
        )


def euler_flux(U):
    rho, u, p = euler_conservative_to_primitive(U)
    return np.stack([U[1], U[1] * u + p, (U[2] + p) * u])


def euler_jacobian(U):
    rho, u, p = euler_conservative_to_primitive(U)
    g = GAMMA
    E = U[2]
    return np.array(
        [
            [0.0, 1.0, 0.0],
            [0.5 * (g - 3.0) * u * u, (3.0 - g) * u, g - 1.0],
            [(g - 1.0) * u**3 - g * u * E / rho, g * E / rho - 1.5 * (g - 1.0) * u * u, g * u],
        ]
    )


def euler_hessian_action(U, V):
    """Second derivative of the flux along V: F_UU(U) . V . V."""
    rho = U[0]
    u = U[1] / rho
    E = U[2]
    wm = V[1] - u * V[0]
    we = V[2] - (E / rho) * V[0]
    g = GAMMA
    out0 = 0.0
    out1 = (3.0 - g) / rho * wm * wm
    out2 = 2.0 * g / rho * wm * we - 3.0 * (g - 1.0) * u / rho * wm * wm
    return np.array([out0, out1, out2])


def euler_eigensystem(U):
    """Vectorized eigensystem of the flux Jacobian; U has shape (3, P)."""
    rho = U[0]
    u = U[1] / rho
    p = (GAMMA - 1.0) * (U[2] - 0.5 * U[1] * u)
    _check_positive(rho, p)
    c = np.sqrt(GAMMA * p / rho)
    H = (U[2] + p) / rho
    P = rho.shape[0]
    lam = np.stack([u - c, u, u + c], axis=-1)

    R = np.empty((P, 3, 3))
    R[:, 0, 0] = 1.0
    R[:, 1, 0] = u - c
    R[:, 2, 0] = H - u * c
    R[:, 0, 1] = 1.0
    R[:, 1, 1] = u
    R[:, 2, 1] = 0.5 * u * u
    R[:, 0, 2] = 1.0
    R[:, 1, 2] = u + c
    R[:, 2, 2] = H + u * c

    b1 = (GAMMA - 1.0) / (c * c)
    b2 = 0.5 * b1 * u * u
    L = np.empty((P, 3, 3))
    L[:, 0, 0] = 0.5 * (b2 + u / c)
    L[:, 0, 1] = -0.5 * (b1 * u + 1.0 / c)
    L[:, 0, 2] = 0.5 * b1
    L[:, 1, 0] = 1.0 - b2
    L[:, 1, 1] = b1 * u
    L[:, 1, 2] = -b1
    L[:, 2, 0] = 0.5 * (b2 - u / c)
    L[:, 2, 1] = -0.5 * (b1 * u - 1.0 / c)
    L[:, 2, 2] = 0.5 * b1
    return lam, L, R


def euler_max_wavespeed(U):
    rho = U[0]
    u = U[1] / rho
    p = (GAMMA - 1.0) * (U[2] - 0.5 * U[1] * u)
    _check_positive(rho, p)
    return np.abs(u) + np.sqrt(GAMMA * p / rho)


def _euler_rows(which, g_rho=None, g1_rho=None, g2_rho=None, g3_rho=None, u_value=1.0):
    """Build prescribed rows for the 1D Euler tests (rho and/or u)."""
    rows = []
    if "rho" in which:
        rows.append(
            BoundaryRow(
                "rho",
                q=lambda U: U[0],
                q_grad=lambda U: np.array([1.0, 0.0, 0.0]),
                g=g_rho,
                g1=g1_rho,
                g2=g2_rho,
                g3=g3_rho,
            )
        )
    if "u" in which:
        zero = lambda t: 0.0
        rows.append(
            BoundaryRow(
                "u",
                q=lambda U: U[1] / U[0],
                q_grad=lambda U: np.array([-U[1] / U[0] ** 2, 1.0 / U[0], 0.0]),
                g=lambda t: u_value,
                g1=zero,
                g2=zero,
                g3=zero,
            )
        )
    return tuple(rows)


def make_euler_smooth() -> ProblemDefinition:
    """Traveling density wave (u = 1, p = 2) on [-pi, pi].

    Two quantities (rho, u) are prescribed on the left where two
    characteristics enter; one (rho) on the right.
    """

    def exact(t, x):
        x = np.asarray(x, dtype=float)
        rho = 1.0 + 0.2 * np.sin(x - t)
        return euler_primitive_to_conservative(rho, np.ones_like(x), 2.0 * np.ones_like(x))

    g_rho = lambda t: 1.0 + 0.2 * math.sin(t)
    g1_rho = lambda t: 0.2 * math.cos(t)
    g2_rho = lambda t: -0.2 * math.sin(t)
    g3_rho = lambda t: -0.2 * math.cos(t)

    return ProblemDefinition(
        name="euler-smooth",
        m=3,
        domain=(-math.pi, math.pi),
        flux=euler_flux,
        jacobian=euler_jacobian,
        hessian_action=euler_hessian_action,
        eigensystem=euler_eigensystem,
        max_wavespeed=euler_max_wavespeed,
        left_rows=_euler_rows(("rho", "u"), g_rho, g1_rho, g2_rho, g3_rho),
        right_rows=_euler_rows(("rho",), g_rho, g1_rho, g2_rho, g3_rho),
        exact=exact,
    )


def make_blast_wave() -> ProblemDefinition:
    """Interacting blast waves in [0, 1] between solid walls (u = 0).

    No exact solution; runs in the nonsmooth mode (sub-stencil-weighted
    extrapolation, ghost fill truncated to second-order Taylor depth).
    """

    def initial(x):
        x = np.asarray(x, dtype=float)
        p = np.where(x < 0.1, 1e3, np.where(x < 0.9, 1e-2, 1e2))
        return euler_primitive_to_conservative(np.ones_like(x), np.zeros_like(x), p)

    wall = _euler_rows(("u",), u_value=0.0)
    return ProblemDefinition(
        name="blast",
        m=3,
        domain=(0.0, 1.0),
        flux=euler_flux,
        jacobian=euler_jacobian,
        hessian_action=euler_hessian_action,
        eigensystem=euler_eigensystem,
        max_wavespeed=euler_max_wavespeed,
        left_rows=wall,
        right_rows=wall,
        initial=initial,
        smooth=False,
        taylor_depth=3,
    )


# ---------------------------------------------------------------------------
# 2D Euler and the convected vortex
# ---------------------------------------------------------------------------

_SWAP = (0, 2, 1, 3)  # exchange the two momentum components


def euler2d_flux_x(U):
    rho = U[0]
    u = U[1] / rho
    v = U[2] / rho
    p = (GAMMA - 1.0) * (U[3] - 0.5 * (U[1] * u + U[2] * v))
    return np.stack([U[1], U[1] * u + p, U[2] * u, (U[3] + p) * u])


def euler2d_flux_y(U):
    return euler2d_flux_x(U[list(_SWAP)])[list(_SWAP)]


def euler2d_jacobian_x(U):
    rho = U[0]
    u = U[1] / rho
    v = U[2] / rho
    E = U[3]
    g = GAMMA
    q2 = u * u + v * v
    p = (g - 1.0) * (E - 0.5 * rho * q2)
    H = (E + p) / rho
    J = np.array(
        [
            [0.0, 1.0, 0.0, 0.0],
            [0.5 * (g - 1.0) * q2 - u * u, (3.0 - g) * u, -(g - 1.0) * v, g - 1.0],
            [-u * v, v, u, 0.0],
            [u * (0.5 * (g - 1.0) * q2 - H), H - (g - 1.0) * u * u, -(g - 1.0) * u * v, g * u],
        ]
    )
    return J


def euler2d_jacobian_y(U):
    Pm = np.eye(4)[list(_SWAP)]
    return Pm @ euler2d_jacobian_x(U[list(_SWAP)]) @ Pm


def euler2d_hessian_action_x(U, V, W=None):
    """F_UU(U) . V . W for the x-flux (W defaults to V)."""
    if W is None:
        W = V
    rho = U[0]
    u = U[1] / rho
    v = U[2] / rho
    E = U[3]
    g = GAMMA
    wmV = V[1] - u * V[0]
    wnV = V[2] - v * V[0]
    weV = V[3] - (E / rho) * V[0]
    wmW = W[1] - u * W[0]
    wnW = W[2] - v * W[0]
    weW = W[3] - (E / rho) * W[0]
    out0 = 0.0
    out1 = ((3.0 - g) * wmV * wmW - (g - 1.0) * wnV * wnW) / rho
    out2 = (wmV * wnW + wnV * wmW) / rho
    out3 = (
        g / rho * (wmV * weW + weV * wmW)
        - (g - 1.0) * u / rho * (3.0 * wmV * wmW + wnV * wnW)
        - (g - 1.0) * v / rho * (wmV * wnW + wnV * wmW)
    )
    return np.array([out0, out1, out2, out3])


def euler2d_hessian_action_y(U, V, W=None):
    if W is None:
        W = V
    s = list(_SWAP)
    return euler2d_hessian_action_x(U[s], V[s], W[s])[s]


def euler2d_eigensystem_x(U):
    """Eigensystem of the x-flux Jacobian; U has shape (4, P)."""
    rho = U[0]
    u = U[1] / rho
    v = U[2] / rho
    p = (GAMMA - 1.0) * (U[3] - 0.5 * (U[1] * u + U[2] * v))
    _check_positive(rho, p)
    c = np.sqrt(GAMMA * p / rho)
    H = (U[3] + p) / rho
    P = rho.shape[0]
    q2h = 0.5 * (u * u + v * v)
    lam = np.stack([u - c, u, u, u + c], axis=-1)

    R = np.zeros((P, 4, 4))
    R[:, 0, 0] = 1.0
    R[:, 1, 0] = u - c
    R[:, 2, 0] = v
    R[:, 3, 0] = H - u * c
    R[:, 0, 1] = 1.0
    R[:, 1, 1] = u
    R[:, 2, 1] = v
    R[:, 3, 1] = q2h
    R[:, 2, 2] = 1.0
    R[:, 3, 2] = v
    R[:, 0, 3] = 1.0
    R[:, 1, 3] = u + c
    R[:, 2, 3] = v
    R[:, 3, 3] = H + u * c

    b1 = (GAMMA - 1.0) / (c * c)
    b2 = b1 * q2h
    L = np.zeros((P, 4, 4))
    L[:, 0, 0] = 0.5 * (b2 + u / c)
    L[:, 0, 1] = -0.5 * (b1 * u + 1.0 / c)
    L[:, 0, 2] = -0.5 * b1 * v
    L[:, 0, 3] = 0.5 * b1
    L[:, 1, 0] = 1.0 - b2
    L[:, 1, 1] = b1 * u
    L[:, 1, 2] = b1 * v
    L[:, 1, 3] = -b1
    L[:, 2, 0] = -v
    L[:, 2, 2] = 1.0
    L[:, 3, 0] = 0.5 * (b2 - u / c)
    L[:, 3, 1] = -0.5 * (b1 * u - 1.0 / c)
    L[:, 3, 2] = -0.5 * b1 * v
    L[:, 3, 3] = 0.5 * b1
    return lam, L, R


def euler2d_eigensystem_y(U):
    s = list(_SWAP)
    lam, Lx, Rx = euler2d_eigensystem_x(U[s])
    return lam, Lx[:, :, s], Rx[:, s, :]


def euler2d_max_wavespeed_x(U):
    rho = U[0]
    u = U[1] / rho
    v = U[2] / rho
    p = (GAMMA - 1.0) * (U[3] - 0.5 * (U[1] * u + U[2] * v))
    _check_positive(rho, p)
    return np.abs(u) + np.sqrt(GAMMA * p / rho)


def euler2d_max_wavespeed_y(U):
    return euler2d_max_wavespeed_x(U[list(_SWAP)])


def _vortex_primitive(eps, xb, yb):
    """Primitive state and its spatial gradients at offsets from the center.

    Returns (rho, u, v, p) and the tuple of their x- and y-derivatives.
    The temperature carries the whole thermodynamic perturbation; entropy
    stays uniform, so rho = T^(1/(g-1)) and p = T^(g/(g-1)).
    """
    g = GAMMA
    c1 = eps / (2.0 * math.pi)
    c2 = (g - 1.0) * eps * eps / (8.0 * g * math.pi * math.pi)
    r2 = xb * xb + yb * yb
    phi = np.exp(0.5 * (1.0 - r2))
    phi2 = np.exp(1.0 - r2)

    u = 1.0 - c1 * yb * phi
    v = 1.0 + c1 * xb * phi
    T = 1.0 - c2 * phi2
    rho = T ** (1.0 / (g - 1.0))
    p = T ** (g / (g - 1.0))

    ux = c1 * xb * yb * phi
    uy = -c1 * phi * (1.0 - yb * yb)
    vx = c1 * phi * (1.0 - xb * xb)
    vy = -c1 * xb * yb * phi
    Tx = 2.0 * c2 * xb * phi2
    Ty = 2.0 * c2 * yb * phi2
    drho_dT = (1.0 / (g - 1.0)) * T ** ((2.0 - g) / (g - 1.0))
    dp_dT = (g / (g - 1.0)) * T ** (1.0 / (g - 1.0))
    rhox, rhoy = drho_dT * Tx, drho_dT * Ty
    px, py = dp_dT * Tx, dp_dT * Ty
    return (rho, u, v, p), ((rhox, ux, vx, px), (rhoy, uy, vy, py))


def _vortex_conservative(prim):
    rho, u, v, p = prim
    E = p / (GAMMA - 1.0) + 0.5 * rho * (u * u + v * v)
    return np.stack([np.broadcast_to(rho, np.shape(u)), rho * u, rho * v, E])


def _vortex_conservative_gradient(prim, grad):
    rho, u, v, p = prim
    rhox, ux, vx, px = grad
    dE = px / (GAMMA - 1.0) + 0.5 * rhox * (u * u + v * v) + rho * (u * ux + v * vx)
    return np.stack([rhox, rhox * u + rho * ux, rhox * v + rho * vx, dE])


def make_euler2d_vortex(eps: float = 1.0) -> Problem2D:
    """Isentropic vortex convected diagonally through [-0.5, 1]^2.

    The exact solution is pure translation of the initial state with the
    mean velocity (1, 1).  Boundary data are read off the exact solution:
    three rows (rho, u, v) on the inflow edges, one row (rho) on the
    outflow edges.
    """

    def exact(t, x, y):
        prim, _ = _vortex_primitive(eps, np.asarray(x) - t, np.asarray(y) - t)
        return _vortex_conservative(prim)

    def exact_gradient(t, x, y):
        prim, (gx, gy) = _vortex_primitive(eps, np.asarray(x) - t, np.asarray(y) - t)
        return (
            _vortex_conservative_gradient(prim, gx),
            _vortex_conservative_gradient(prim, gy),
        )

    def _prim_at(t, x, y):
        prim, (gx, gy) = _vortex_primitive(eps, np.asarray(x) - t, np.asarray(y) - t)
        # time derivative of a translated profile: d/dt = -(d/dx + d/dy)
        gt = tuple(-(a + b) for a, b in zip(gx, gy))
        return prim, gt

    def _row(idx, name):
        grads = {
            0: lambda U: np.array([1.0, 0.0, 0.0, 0.0]),
            1: lambda U: np.array([-U[1] / U[0] ** 2, 1.0 / U[0], 0.0, 0.0]),
            2: lambda U: np.array([-U[2] / U[0] ** 2, 0.0, 1.0 / U[0], 0.0]),
        }
        qs = {
            0: lambda U: U[0],
            1: lambda U: U[1] / U[0],
            2: lambda U: U[2] / U[0],
        }

        def make(edge_coord):
            # edge_coord(s) -> (x, y) point on the edge at tangential position s
            def g(t, s):
                x, y = edge_coord(s)
                prim, _ = _prim_at(t, x, y)
                return prim[idx]

            def g1(t, s):
                x, y = edge_coord(s)
                _, gt = _prim_at(t, x, y)
                return gt[idx]

            return g, g1

        return name, qs[idx], grads[idx], make

    (a, b) = (-0.5, 1.0)
    edges = {
        "left": lambda s: (a, s),
        "right": lambda s: (b, s),
        "bottom": lambda s: (s, a),
        "top": lambda s: (s, b),
    }
    inflow_idx = (0, 1, 2)  # rho, u, v
    outflow_idx = (0,)  # rho
    edge_rows = {}
    for edge, coord in edges.items():
        idxs = inflow_idx if edge in ("left", "bottom") else outflow_idx
        rows = []
        for idx in idxs:
            name, qf, qg, make = _row(idx, ("rho", "u", "v")[idx])
            gfun, g1fun = make(coord)
            rows.append(
                BoundaryRow(name=name, q=qf, q_grad=qg, g=gfun, g1=g1fun)
            )
        edge_rows[edge] = tuple(rows)

    return Problem2D(
        name="vortex2d",
        m=4,
        domain=((a, b), (a, b)),
        flux_x=euler2d_flux_x,
        flux_y=euler2d_flux_y,
        jacobian_x=euler2d_jacobian_x,
        jacobian_y=euler2d_jacobian_y,
        hessian_action_x=euler2d_hessian_action_x,
        hessian_action_y=euler2d_hessian_action_y,
        eigensystem_x=euler2d_eigensystem_x,
        eigensystem_y=euler2d_eigensystem_y,
        max_wavespeed_x=euler2d_max_wavespeed_x,
        max_wavespeed_y=euler2d_max_wavespeed_y,
        edge_rows=edge_rows,
        exact=exact,
        exact_gradient=exact_gradient,
    )


PROBLEM_NAMES = ("advect-smooth", "advect-step", "burgers", "euler-smooth", "blast", "vortex2d")


def make_problem(name: str, **kwargs):
    """Build a benchmark problem by its CLI name."""
    if name == "advect-smooth":
        return make_linear_advection("smooth")
    if name == "advect-step":
        return make_linear_advection("step")
    if name == "burgers":
        return make_burgers()
    if name == "euler-smooth":
        return make_euler_smooth()
    if name == "blast":
        return make_blast_wave()
    if name == "vortex2d":
        return make_euler2d_vortex(**kwargs)
    raise ValueError(f"unknown problem {name!r}; expected one of {PROBLEM_NAMES}")
