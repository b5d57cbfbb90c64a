"""Strong-stability-preserving Runge-Kutta schemes in Shu-Osher form.

Each scheme is stored as the pair of lower-triangular coefficient arrays
(alpha, beta) of the convex-combination representation

    U{i} = sum_k  alpha[i,k] * U{k} + dt * beta[i,k] * Op(U{k}),

where Op is the upwind operator for beta > 0 and the downwind operator
for beta < 0.  Four built-in schemes are provided; the two "starred"
variants contain negative beta entries and trade them for a larger SSP
coefficient.
"""

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "RKTableau",
    "builtin_tableau",
    "validate_tableau",
    "shu_osher_to_butcher",
    "order_condition_residuals",
    "SCHEME_NAMES",
]


@dataclass(frozen=True)
class RKTableau:
    """An s-stage explicit RK scheme in Shu-Osher form.

    ``alpha`` and ``beta`` are dense (s, s) arrays; row i-1 holds the
    coefficients producing stage i from stages 0..i-1.  Entries outside
    the lower triangle are zero.
    """

    name: str
    stages: int
    alpha: np.ndarray
    beta: np.ndarray
    ssp_coefficient: float
    order: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alpha", np.asarray(self.alpha, dtype=float))
        object.__setattr__(self, "beta", np.asarray(self.beta, dtype=float))
        self.alpha.setflags(write=False)
        self.beta.setflags(write=False)

    @property
    def has_downwind_stages(self) -> bool:
        return bool((self.beta < 0).any())


def _rows_to_array(rows) -> np.ndarray:
    s = len(rows)
    out = np.zeros((s, s))
    for i, row in enumerate(rows):
        out[i, : len(row)] = row
    return out


def _make(name, alpha_rows, beta_rows, ssp_coefficient, order) -> RKTableau:
    return RKTableau(
        name=name,
        stages=len(alpha_rows),
        alpha=_rows_to_array(alpha_rows),
        beta=_rows_to_array(beta_rows),
        ssp_coefficient=ssp_coefficient,
        order=order,
    )


_SSP33 = _make(
    "ssp33",
    alpha_rows=[
        (1.0,),
        (3.0 / 4.0, 1.0 / 4.0),
        (1.0 / 3.0, 0.0, 2.0 / 3.0),
    ],
    beta_rows=[
        (1.0,),
        (0.0, 1.0 / 4.0),
        (0.0, 0.0, 2.0 / 3.0),
    ],
    ssp_coefficient=1.0,
    order=3,
)

_SSP33S = _make(
    "ssp33s",
    alpha_rows=[
        (1.0,),
        (0.410802706918667, 0.589197293081333),
        (0.123062611901395, 0.251481201947289, 0.625456186151316),
    ],
    beta_rows=[
        (0.767591879243998,),
        (-0.315328821802221, 0.452263057441777),
        (-0.041647109531262, 0.0, 0.480095089312672),
    ],
    ssp_coefficient=1.3027756,
    order=3,
)

_SSP54 = _make(
    "ssp54",
    alpha_rows=[
        (1.0,),
        (0.444370493651235, 0.555629506348765),
        (0.620101851488403, 0.0, 0.379898148511597),
        (0.178079954393132, 0.0, 0.0, 0.821920045606868),
        (0.0, 0.0, 0.517231671970585, 0.096059710526147, 0.386708617503269),
    ],
    beta_rows=[
        (0.391752226571890,),
        (0.0, 0.368410593050371),
        (0.0, 0.0, 0.251891774271694),
        (0.0, 0.0, 0.0, 0.544974750228521),
        (0.0, 0.0, 0.0, 0.063692468666290, 0.226007483236906),
    ],
    ssp_coefficient=1.5081800,
    order=4,
)

_SSP54S = _make(
    "ssp54s",
    alpha_rows=[
        (1.0,),
        (0.210186660827794, 0.789813339172206),
        (0.331062996240662, 0.202036516631465, 0.466900487127873),
        (0.0, 0.0, 0.0, 1.0),
        (0.097315407775058, 0.435703937692290, 0.0, 0.0, 0.466980654532652),
    ],
    beta_rows=[
        (0.416596471458169,),
        (-0.103478898431154, 0.388840157514713),
        (-0.162988621767813, 0.0, 0.229864007043460),
        (0.0, 0.0, 0.0, 0.492319055945867),
        (-0.047910229684804, 0.202097732052527, 0.0, 0.0, 0.229903474984498),
    ],
    ssp_coefficient=2.0312031,
    order=4,
)

_BUILTINS = {
    "ssp33": _SSP33,
    "ssp33s": _SSP33S,
    "ssp54": _SSP54,
    "ssp54s": _SSP54S,
    # display-style aliases
    "SSP(3,3)": _SSP33,
    "SSP*(3,3)": _SSP33S,
    "SSP(5,4)": _SSP54,
    "SSP*(5,4)": _SSP54S,
}

SCHEME_NAMES = ("ssp33", "ssp33s", "ssp54", "ssp54s")


def builtin_tableau(name: str) -> RKTableau:
    """Return one of the four built-in schemes by name.

    Accepts the short identifiers ``ssp33``, ``ssp33s``, ``ssp54``,
    ``ssp54s`` or the display forms ``SSP(3,3)``, ``SSP*(3,3)``, ...
    """
    try:
        return _BUILTINS[name]
    except KeyError:
        raise ValueError(
            f"unknown scheme {name!r}; expected one of {SCHEME_NAMES}"
        ) from None


def shu_osher_to_butcher(t: RKTableau):
    """Convert to Butcher arrays (A, b, c) by forward substitution.

    The downwind/upwind distinction is irrelevant for the order
    conditions (both operators discretize the same right-hand side), so
    the conversion treats every beta entry uniformly.
    """
    s = t.stages
    A = np.zeros((s + 1, s))  # row i = coefficients of stage i (stage 0 = U^n)
    for i in range(1, s + 1):
        for k in range(i):
            A[i, :] += t.alpha[i - 1, k] * A[k, :]
            A[i, k] += t.beta[i - 1, k]
    b = A[s, :]
    c = A[1:s, :].sum(axis=1)
    return A[1:s, :], b, np.concatenate([[0.0], c])


def order_condition_residuals(t: RKTableau, order: int) -> dict:
    """Residuals of the classical order conditions up to ``order`` (<= 4)."""
    Ain, b, c = shu_osher_to_butcher(t)
    s = t.stages
    A = np.zeros((s, s))
    A[1:, :] = Ain
    res = {}
    if order >= 1:
        res["sum_b"] = abs(b.sum() - 1.0)
    if order >= 2:
        res["b.c"] = abs(b @ c - 1.0 / 2.0)
    if order >= 3:
        res["b.c2"] = abs(b @ c**2 - 1.0 / 3.0)
        res["b.Ac"] = abs(b @ (A @ c) - 1.0 / 6.0)
    if order >= 4:
        res["b.c3"] = abs(b @ c**3 - 1.0 / 4.0)
        res["b.cAc"] = abs(b @ (c * (A @ c)) - 1.0 / 8.0)
        res["b.Ac2"] = abs(b @ (A @ c**2) - 1.0 / 12.0)
        res["b.AAc"] = abs(b @ (A @ (A @ c)) - 1.0 / 24.0)
    return res


def validate_tableau(t: RKTableau, row_sum_tol: float = 1e-12) -> list:
    """Check the structural constraints of the Shu-Osher form.

    Returns a list of human-readable violation strings (empty when the
    tableau is well formed).  Checked: lower-triangular shape, all
    alpha >= 0, alpha == 0 implies beta == 0, and unit row sums of
    alpha.
    """
    violations = []
    s = t.stages
    if t.alpha.shape != (s, s) or t.beta.shape != (s, s):
        violations.append(f"coefficient arrays must be ({s}, {s})")
        return violations
    for arr, label in ((t.alpha, "alpha"), (t.beta, "beta")):
        upper = np.triu(arr, k=1) if arr.shape[0] == s else arr
        # row i-1 may use columns 0..i-1 only
        for i in range(s):
            if np.any(arr[i, i + 1 :] != 0.0):
                violations.append(f"{label} row {i} has entries beyond column {i}")
                break
    if np.any(t.alpha < 0.0):
        violations.append("negative alpha entry")
    bad = (t.alpha == 0.0) & (t.beta != 0.0)
    if np.any(np.tril(bad)):
        violations.append("beta nonzero where alpha is zero")
    for i in range(s):
        rs = t.alpha[i, : i + 1].sum()
        if abs(rs - 1.0) > row_sum_tol:
            violations.append(f"alpha row {i} sums to {rs!r}, expected 1")
    if t.ssp_coefficient <= 0.0:
        violations.append("ssp_coefficient must be positive")
    return violations
