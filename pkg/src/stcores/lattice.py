"""Signed lattice grids and the monotonic-path bijections, including gamma.

Three grids share one path mechanism. Paths run from the bottom-left corner to
the top-right corner of an R x C cell grid, one step right (R) or up (U) at a
time, and are stored as strings over {R, U}. The column-height profile of a
path, together with the grid's sign border, determines the trapped cells,
whose values decode a partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterator

from .bar_partitions import BarPartition, is_tbar_core
from .core_quotient import BarTower, bar_decompose, bar_reconstruct, decompose, reconstruct, StraightTower
from .encodings import zeta, zeta_inverse
from .partitions import (
    Partition,
    conjugate,
    diagonal_hooks,
    from_diagonal_hooks,
    from_first_column_hooks,
    is_self_conjugate,
    is_t_core,
)

Path = str


@dataclass(frozen=True)
class SignedGrid:
    """A rows x cols matrix of signed integers with a monotone sign border.

    values[r][c] uses matrix indexing, row 0 at the top. For the coprime
    parameters used here no entry is zero, and signs split along a monotonic
    path: every column has its negatives at the bottom, every row at the
    right.
    """

    rows: int
    cols: int
    values: tuple[tuple[int, ...], ...]

    def border_heights(self) -> tuple[int, ...]:
        """Per column, the number of negative cells (measured from the bottom)."""
        return tuple(
            sum(1 for r in range(self.rows) if self.values[r][c] < 0)
            for c in range(self.cols)
        )


def anderson_grid(s: int, t: int) -> SignedGrid:
    """The s x t grid with st - s - t at the top left.

    A right step subtracts s, a down step subtracts t: cell (r, c) holds
    st - s - t - c*s - r*t.

    Raises:
        ValueError: unless s, t > 1 are coprime.
    """
    if s <= 1 or t <= 1:
        raise ValueError("s and t must exceed 1")
    if gcd(s, t) != 1:
        raise ValueError("s and t must be coprime")
    base = s * t - s - t
    values = tuple(
        tuple(base - c * s - r * t for c in range(t)) for r in range(s)
    )
    return SignedGrid(rows=s, cols=t, values=values)


def dh_grid(s: int, t: int) -> SignedGrid:
    """The floor(s/2) x floor(t/2) diagonal-hooks grid.

    Cell (i, j), 1-indexed, holds st - s(2j-1) - t(2i-1); all entries are odd
    and their absolute values are pairwise distinct.

    Raises:
        ValueError: unless s, t > 1 are odd and coprime.
    """
    if s <= 1 or t <= 1 or s % 2 == 0 or t % 2 == 0:
        raise ValueError("s and t must be odd and exceed 1")
    if gcd(s, t) != 1:
        raise ValueError("s and t must be coprime")
    values = tuple(
        tuple(s * t - s * (2 * j - 1) - t * (2 * i - 1) for j in range(1, t // 2 + 1))
        for i in range(1, s // 2 + 1)
    )
    return SignedGrid(rows=s // 2, cols=t // 2, values=values)


def yinyang_grid(s: int, t: int) -> SignedGrid:
    """The (s-1)/2 x (t-1)/2 Yin-Yang grid for odd coprime s < t.

    Cell (i, j), 1-indexed, holds t((s+1)/2 - i) - s*j, so a right step
    subtracts s and a down step subtracts t. Corners: top left t(s-1)/2 - s,
    bottom left t - s, and on the negative side the absolute values are
    (t-s)/2 (top right) and s(t-1)/2 - t (bottom right).

    Raises:
        ValueError: unless 1 < s < t are odd and coprime.
    """
    if s <= 1 or t <= s or s % 2 == 0 or t % 2 == 0:
        raise ValueError("need odd 1 < s < t")
    if gcd(s, t) != 1:
        raise ValueError("s and t must be coprime")
    values = tuple(
        tuple(t * ((s + 1) // 2 - i) - s * j for j in range(1, (t - 1) // 2 + 1))
        for i in range(1, (s - 1) // 2 + 1)
    )
    return SignedGrid(rows=(s - 1) // 2, cols=(t - 1) // 2, values=values)


def path_heights(path: Path, rows: int, cols: int) -> tuple[int, ...]:
    """Column-height profile of a monotonic path.

    heights[c] is the level (0 = bottom) at which the path crosses column c.

    Raises:
        ValueError: on malformed step strings or wrong step counts.
    """
    heights = []
    y = 0
    for step in path:
        if step == "R":
            heights.append(y)
        elif step == "U":
            y += 1
        else:
            raise ValueError(f"path steps must be R or U, got {step!r}")
    if len(heights) != cols or y != rows:
        raise ValueError(f"path does not fit a {rows} x {cols} grid")
    return tuple(heights)


def heights_to_path(heights: tuple[int, ...], rows: int) -> Path:
    """Inverse of :func:`path_heights` for a non-decreasing profile."""
    steps = []
    y = 0
    for h in heights:
        if h < y or h > rows:
            raise ValueError("heights must be non-decreasing and within the grid")
        steps.append("U" * (h - y))
        steps.append("R")
        y = h
    steps.append("U" * (rows - y))
    return "".join(steps)


def enumerate_paths(rows: int, cols: int) -> Iterator[Path]:
    """All monotonic paths of an R x C grid, exactly once, in a fixed order."""
    if rows < 0 or cols < 0:
        raise ValueError("rows and cols must be nonnegative")
    total = rows + cols
    for up_slots in combinations(range(total), rows):
        slots = set(up_slots)
        yield "".join("U" if i in slots else "R" for i in range(total))


def _trapped_values(grid: SignedGrid, path: Path) -> tuple[list[int], list[int]]:
    """Values between the path and the sign border, split by side.

    Returns (above, below): above holds the positive values trapped where the
    path rises over the border, below the negative values where it dips under.
    """
    heights = path_heights(path, grid.rows, grid.cols)
    border = grid.border_heights()
    above: list[int] = []
    below: list[int] = []
    for c in range(grid.cols):
        hp, hb = heights[c], border[c]
        for y in range(hb, hp):
            above.append(grid.values[grid.rows - 1 - y][c])
        for y in range(hp, hb):
            below.append(grid.values[grid.rows - 1 - y][c])
    return above, below


def anderson_path_to_core(path: Path, s: int, t: int) -> Partition:
    """The (s,t)-core whose first-column hooks are the path's trapped values.

    The path must stay weakly above the sign border.

    Raises:
        ValueError: if the path dips below the border.
    """
    grid = anderson_grid(s, t)
    above, below = _trapped_values(grid, path)
    if below:
        raise ValueError("path traps negative values")
    return from_first_column_hooks(above)


def dh_path_to_selfconj(path: Path, s: int, t: int) -> Partition:
    """The self-conjugate (s,t)-core with the path's trapped |values| as diagonal hooks.

    Every monotonic path is valid; trapped cells may lie on either side of the
    border.
    """
    grid = dh_grid(s, t)
    above, below = _trapped_values(grid, path)
    return from_diagonal_hooks([abs(v) for v in above + below])


def yy_path_to_barcore(path: Path, s: int, t: int) -> BarPartition:
    """The (s-bar, t-bar)-core whose parts are the path's trapped |values|."""
    grid = yinyang_grid(s, t)
    above, below = _trapped_values(grid, path)
    return tuple(sorted((abs(v) for v in above + below), reverse=True))


def _path_from_marked(grid: SignedGrid, marked: set[int]) -> Path:
    """Recover the path trapping exactly the cells whose |value| is marked.

    Works because the grids used here never repeat an absolute value: per
    column, marked cells adjacent to the border raise or lower the path by
    their count.

    Raises:
        ValueError: if no monotonic path traps exactly the marked set.
    """
    border = grid.border_heights()
    heights = []
    for c in range(grid.cols):
        hb = border[c]
        up = sum(
            1 for y in range(hb, grid.rows) if abs(grid.values[grid.rows - 1 - y][c]) in marked
        )
        down = sum(
            1 for y in range(0, hb) if abs(grid.values[grid.rows - 1 - y][c]) in marked
        )
        if up and down:
            raise ValueError("marked values straddle the border in one column")
        heights.append(hb + up - down)
    for c in range(grid.cols - 1):
        if heights[c] > heights[c + 1]:
            raise ValueError("marked values do not trace a monotonic path")
    return heights_to_path(tuple(heights), grid.rows)


def selfconj_to_dh_path(p: Partition, s: int, t: int) -> Path:
    """The unique path whose trapped values give the self-conjugate core ``p``.

    Raises:
        ValueError: unless ``p`` is a self-conjugate (s,t)-core.
    """
    if not is_self_conjugate(p):
        raise ValueError("input is not self-conjugate")
    if not (is_t_core(p, s) and is_t_core(p, t)):
        raise ValueError("input is not an (s,t)-core")
    path = _path_from_marked(dh_grid(s, t), set(diagonal_hooks(p)))
    if dh_path_to_selfconj(path, s, t) != p:
        raise ValueError("diagonal hooks do not fit the grid")
    return path


def barcore_to_yy_path(b: BarPartition, s: int, t: int) -> Path:
    """The unique path whose trapped values give the bar-core ``b``.

    Raises:
        ValueError: unless ``b`` is an (s-bar, t-bar)-core.
    """
    if not (is_tbar_core(b, s) and is_tbar_core(b, t)):
        raise ValueError("input is not an (s-bar, t-bar)-core")
    path = _path_from_marked(yinyang_grid(s, t), set(b))
    if yy_path_to_barcore(path, s, t) != b:
        raise ValueError("parts do not fit the grid")
    return path


def gamma(p: Partition, s: int, t: int) -> BarPartition:
    """Coprime-parameter bijection from self-conjugate (s,t)-cores to bar-cores.

    Reads the core's diagonal-hooks path, unchanged, in the Yin-Yang grid of
    the same shape.

    Raises:
        ValueError: unless s, t are odd, coprime, > 1 and ``p`` is a
            self-conjugate (s,t)-core.
    """
    s, t = sorted((s, t))
    if s % 2 == 0 or t % 2 == 0 or s <= 1 or gcd(s, t) != 1:
        raise ValueError("s and t must be odd, coprime, and exceed 1")
    path = selfconj_to_dh_path(p, s, t)
    return yy_path_to_barcore(path, s, t)


def gamma_inverse(b: BarPartition, s: int, t: int) -> Partition:
    """Inverse of :func:`gamma`: read the bar-core's path in the other grid."""
    s, t = sorted((s, t))
    if s % 2 == 0 or t % 2 == 0 or s <= 1 or gcd(s, t) != 1:
        raise ValueError("s and t must be odd, coprime, and exceed 1")
    path = barcore_to_yy_path(b, s, t)
    return dh_path_to_selfconj(path, s, t)


def big_gamma(p: Partition, s: int, t: int) -> BarPartition:
    """Bijection from self-conjugate (s,t)-cores to (s-bar, t-bar)-cores, odd g > 1.

    Builds the bar tower directly: the g-core maps through zeta, the first
    (g-1)/2 quotient components shift up one slot, and the middle (self
    conjugate) component crosses to component 0 through gamma at the reduced
    parameters.

    Raises:
        ValueError: unless s, t, gcd(s,t) are odd, gcd(s,t) > 1, and ``p`` is
            a self-conjugate (s,t)-core.
    """
    g = gcd(s, t)
    if s % 2 == 0 or t % 2 == 0 or g % 2 == 0 or g <= 1:
        raise ValueError("s, t, and gcd(s,t) must be odd with gcd(s,t) > 1")
    if not is_self_conjugate(p):
        raise ValueError("input is not self-conjugate")
    if not (is_t_core(p, s) and is_t_core(p, t)):
        raise ValueError("input is not an (s,t)-core")
    sp, tp = s // g, t // g
    tower = decompose(p, g)
    bar_core = zeta(tower.core, g)
    middle = tower.quotient[(g - 1) // 2]
    if sp == 1 or tp == 1:
        if middle != ():
            raise ValueError("middle component must be empty when s' or t' is 1")
        lam0: BarPartition = ()
    else:
        lam0 = gamma(middle, sp, tp)
    components = (lam0,) + tower.quotient[: (g - 1) // 2]
    return bar_reconstruct(BarTower(g=g, core=bar_core, quotient=components))


def big_gamma_inverse(b: BarPartition, s: int, t: int) -> Partition:
    """Inverse of :func:`big_gamma`.

    Raises:
        ValueError: unless s, t, gcd(s,t) are odd, gcd(s,t) > 1, and ``b`` is
            an (s-bar, t-bar)-core.
    """
    g = gcd(s, t)
    if s % 2 == 0 or t % 2 == 0 or g % 2 == 0 or g <= 1:
        raise ValueError("s, t, and gcd(s,t) must be odd with gcd(s,t) > 1")
    if not (is_tbar_core(b, s) and is_tbar_core(b, t)):
        raise ValueError("input is not an (s-bar, t-bar)-core")
    sp, tp = s // g, t // g
    tower = bar_decompose(b, g)
    core = zeta_inverse(tower.core, g)
    if sp == 1 or tp == 1:
        if tower.quotient[0] != ():
            raise ValueError("component 0 must be empty when s' or t' is 1")
        middle: Partition = ()
    else:
        middle = gamma_inverse(tower.quotient[0], sp, tp)
    half = list(tower.quotient[1:])
    quotient = half + [middle] + [conjugate(q) for q in reversed(half)]
    return reconstruct(StraightTower(g=g, core=core, quotient=tuple(quotient)))


def enumerate_st_cores_by_paths(s: int, t: int) -> Iterator[Partition]:
    """All (s,t)-cores for coprime s, t, one per valid Anderson path."""
    grid = anderson_grid(s, t)
    border = grid.border_heights()
    for path in enumerate_paths(grid.rows, grid.cols):
        heights = path_heights(path, grid.rows, grid.cols)
        if all(hp >= hb for hp, hb in zip(heights, border)):
            yield anderson_path_to_core(path, s, t)


def enumerate_selfconj_by_dh(s: int, t: int) -> Iterator[Partition]:
    """All self-conjugate (s,t)-cores for odd coprime s, t, one per path."""
    grid = dh_grid(s, t)
    for path in enumerate_paths(grid.rows, grid.cols):
        yield dh_path_to_selfconj(path, s, t)


def enumerate_barcores_by_yy(s: int, t: int) -> Iterator[BarPartition]:
    """All (s-bar, t-bar)-cores for odd coprime s < t, one per path."""
    grid = yinyang_grid(s, t)
    for path in enumerate_paths(grid.rows, grid.cols):
        yield yy_path_to_barcore(path, s, t)