"""Cell-centered 1D grid with ghost layers and multi-component fields.

The domain [a, b] is covered by ``n_interior`` points placed at cell
centers, x_j = a + (j + 1/2) dx, so the physical boundaries fall half a
cell outside the first and last points.  ``n_ghost`` extra points are
carried on each side for stencil operations.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["Grid1D", "FieldArray", "build_grid", "fill_periodic_ghosts"]


@dataclass(frozen=True)
class Grid1D:
    a: float
    b: float
    n_interior: int
    n_ghost: int

    @property
    def dx(self) -> float:
        return (self.b - self.a) / self.n_interior

    @property
    def n_total(self) -> int:
        return self.n_interior + 2 * self.n_ghost

    def x(self, j):
        """Coordinate of point j (j = -n_ghost .. n_interior-1+n_ghost).

        Computed directly from (a, dx, j); coordinates are never
        accumulated, so adjacent spacings are exact at any resolution.
        """
        return self.a + (np.asarray(j) + 0.5) * self.dx

    @property
    def x_interior(self) -> np.ndarray:
        return self.x(np.arange(self.n_interior))

    @property
    def x_all(self) -> np.ndarray:
        return self.x(np.arange(-self.n_ghost, self.n_interior + self.n_ghost))


def build_grid(a: float, b: float, n_interior: int, n_ghost: int) -> Grid1D:
    """Construct a cell-centered grid; validates the layout preconditions."""
    if b <= a:
        raise ValueError(f"need b > a, got [{a}, {b}]")
    if n_ghost < 3:
        raise ValueError(f"need n_ghost >= 3, got {n_ghost}")
    if n_interior < 2 * n_ghost:
        raise ValueError(
            f"need n_interior >= 2*n_ghost, got {n_interior} < {2 * n_ghost}"
        )
    return Grid1D(float(a), float(b), int(n_interior), int(n_ghost))


class FieldArray:
    """M-component point values on a Grid1D, including ghost layers.

    ``values`` has shape (m_components, n_total); the interior slice is
    ``values[:, G:G+N]`` with G = grid.n_ghost, N = grid.n_interior.
    """

    __slots__ = ("grid", "values")

    def __init__(self, grid: Grid1D, m_components: int, values: np.ndarray = None):
        self.grid = grid
        if values is None:
            values = np.zeros((m_components, grid.n_total))
        else:
            values = np.asarray(values, dtype=float)
            if values.shape != (m_components, grid.n_total):
                raise ValueError(
                    f"values shape {values.shape} != ({m_components}, {grid.n_total})"
                )
        self.values = values

    @property
    def m_components(self) -> int:
        return self.values.shape[0]

    @property
    def interior(self) -> np.ndarray:
        G = self.grid.n_ghost
        return self.values[:, G : G + self.grid.n_interior]

    @interior.setter
    def interior(self, data):
        G = self.grid.n_ghost
        self.values[:, G : G + self.grid.n_interior] = data

    def copy(self) -> "FieldArray":
        return FieldArray(self.grid, self.m_components, self.values.copy())

    @classmethod
    def from_interior(cls, grid: Grid1D, interior: np.ndarray) -> "FieldArray":
        interior = np.atleast_2d(np.asarray(interior, dtype=float))
        f = cls(grid, interior.shape[0])
        f.interior = interior
        return f

    @classmethod
    def from_function(cls, grid: Grid1D, m: int, func) -> "FieldArray":
        """Sample func(x) -> (m, len(x)) on the interior points."""
        f = cls(grid, m)
        f.interior = np.atleast_2d(func(grid.x_interior))
        return f


def fill_periodic_ghosts(f: FieldArray) -> FieldArray:
    """Copy ghost values periodically from the opposite interior end.

    Test-only boundary mode; lets conservation checks run without any
    boundary machinery.  Interior values are untouched.
    """
    G = f.grid.n_ghost
    interior = f.interior
    f.values[:, :G] = interior[:, -G:]
    f.values[:, -G:] = interior[:, :G]
    return f
