"""Grid-hashing cover algorithms.

Three optimization levels over the same sqrt(2)-grid idea:

* ``fast_cover``       -- place the grid-disk of every nonempty cell.
* ``fast_cover_plus``  -- before placing, test whether an already-placed
  E/W/N/S neighbor grid-disk covers the point (threshold-gated so most
  points skip the distance checks entirely).
* ``fast_cover_pp``    -- additionally track a bounding box of the points
  assigned to each grid-disk and merge adjacent disks whose combined box
  has diagonal at most 2 into a single disk.
"""

from __future__ import annotations

import math

import numpy as np

from .geom import (
    BBox,
    Cover,
    GridKey,
    INV_SQRT2,
    Point,
    SQRT2,
    bbox_union_diagonal_sq,
    grid_disk_center,
)

# disk-table: placed grid-disk -> bounding box of its assigned points
DiskTable = dict[GridKey, BBox]

_DIRS = ("E", "W", "N", "S")

# gate offsets relative to the cell's lower-left corner: a neighbor disk
# can only reach points past these lines (far side / near side)
_GATE_FAR = 1.5 * SQRT2 - 1.0
_GATE_NEAR = 1.0 - 0.5 * SQRT2

# neighbor scan order for coalescing: row-major over the 3x3 block
_NEIGHBORS_8 = (
    (-1, -1), (-1, 0), (-1, 1),
    (0, -1), (0, 1),
    (1, -1), (1, 0), (1, 1),
)


def _as_array(points) -> np.ndarray:
    arr = np.asarray(points, dtype=np.float64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    return arr.reshape(-1, 2)


def _point_list(points) -> list:
    if isinstance(points, np.ndarray):
        return points.reshape(-1, 2).tolist() if points.size else []
    return list(points)


def neighbor_threshold_check(p: Point, k: GridKey, direction: str) -> bool:
    """True iff p lies outside the inner square of its cell on the given
    side, i.e. the neighbor grid-disk in that direction could possibly
    cover p. False means provably not covered, no distance check needed.
    """
    i, j = k
    if direction == "E":
        return p[0] >= SQRT2 * (i + 1.5) - 1.0
    if direction == "W":
        return p[0] <= SQRT2 * (i - 0.5) + 1.0
    if direction == "N":
        return p[1] >= SQRT2 * (j + 1.5) - 1.0
    if direction == "S":
        return p[1] <= SQRT2 * (j - 0.5) + 1.0
    raise ValueError(f"unknown direction: {direction!r}")


def fast_cover(points) -> Cover:
    """One grid-disk per distinct nonempty cell, in first-occurrence
    order of the input. Expected O(n) time, O(s) extra space."""
    arr = _as_array(points)
    if arr.shape[0] == 0:
        return []
    cells = np.floor(arr / SQRT2).astype(np.int64)
    # pack (i, j) into one int64 so the uniqueness pass runs on a flat
    # array; injective while |j| < 2^31, i.e. |y| < 2^31 * sqrt(2)
    keys = (cells[:, 0] << 32) ^ (cells[:, 1] & 0xFFFFFFFF)
    _, first = np.unique(keys, return_index=True)
    first.sort()
    centers = cells[first] * SQRT2 + INV_SQRT2
    return [tuple(c) for c in centers.tolist()]


def fast_cover_plus(points) -> Cover:
    """Single pass; a point whose own cell-disk is absent is first tested
    against the E, W, N, S neighbor disks (in that order) before a new
    grid-disk is placed."""
    placed: set[GridKey] = set()
    centers: Cover = []
    floor = math.floor
    for x, y in _point_list(points):
        i = floor(x / SQRT2)
        j = floor(y / SQRT2)
        if (i, j) in placed:
            continue
        if x >= SQRT2 * (i + 1.5) - 1.0 and (i + 1, j) in placed:
            dx = x - (SQRT2 * (i + 1) + INV_SQRT2)
            dy = y - (SQRT2 * j + INV_SQRT2)
            if dx * dx + dy * dy <= 1.0:
                continue
        if x <= SQRT2 * (i - 0.5) + 1.0 and (i - 1, j) in placed:
            dx = x - (SQRT2 * (i - 1) + INV_SQRT2)
            dy = y - (SQRT2 * j + INV_SQRT2)
            if dx * dx + dy * dy <= 1.0:
                continue
        if y >= SQRT2 * (j + 1.5) - 1.0 and (i, j + 1) in placed:
            dx = x - (SQRT2 * i + INV_SQRT2)
            dy = y - (SQRT2 * (j + 1) + INV_SQRT2)
            if dx * dx + dy * dy <= 1.0:
                continue
        if y <= SQRT2 * (j - 0.5) + 1.0 and (i, j - 1) in placed:
            dx = x - (SQRT2 * i + INV_SQRT2)
            dy = y - (SQRT2 * (j - 1) + INV_SQRT2)
            if dx * dx + dy * dy <= 1.0:
                continue
        placed.add((i, j))
        centers.append((SQRT2 * i + INV_SQRT2, SQRT2 * j + INV_SQRT2))
    return centers


def build_disk_table(points) -> DiskTable:
    """fast_cover_plus pass that also maintains, per placed grid-disk,
    the bounding box of every point assigned to it (a neighbor-cover hit
    extends that neighbor's box)."""
    arr = _as_array(points)
    n = arr.shape[0]
    table: DiskTable = {}
    if n == 0:
        return table
    cells = np.floor(arr / SQRT2).astype(np.int64)
    # vectorized threshold gates; the loop below stays sequential but
    # only pays for dict lookups and the rare distance check
    gx = cells[:, 0] * SQRT2
    gy = cells[:, 1] * SQRT2
    east = (arr[:, 0] >= gx + _GATE_FAR).tolist()
    west = (arr[:, 0] <= gx + _GATE_NEAR).tolist()
    north = (arr[:, 1] >= gy + _GATE_FAR).tolist()
    south = (arr[:, 1] <= gy + _GATE_NEAR).tolist()
    xs = arr[:, 0].tolist()
    ys = arr[:, 1].tolist()
    ii = cells[:, 0].tolist()
    jj = cells[:, 1].tolist()
    keys = list(zip(ii, jj))
    get = table.get
    for x, y, i, j, key, e, w, nb, s in zip(
            xs, ys, ii, jj, keys, east, west, north, south):
        box = get(key)
        if box is not None:
            if x < box.xmin:
                box.xmin = x
            elif x > box.xmax:
                box.xmax = x
            if y < box.ymin:
                box.ymin = y
            elif y > box.ymax:
                box.ymax = y
            continue
        if e:
            box = get((i + 1, j))
            if box is not None:
                dx = x - (SQRT2 * (i + 1) + INV_SQRT2)
                dy = y - (SQRT2 * j + INV_SQRT2)
                if dx * dx + dy * dy <= 1.0:
                    box.add((x, y))
                    continue
        if w:
            box = get((i - 1, j))
            if box is not None:
                dx = x - (SQRT2 * (i - 1) + INV_SQRT2)
                dy = y - (SQRT2 * j + INV_SQRT2)
                if dx * dx + dy * dy <= 1.0:
                    box.add((x, y))
                    continue
        if nb:
            box = get((i, j + 1))
            if box is not None:
                dx = x - (SQRT2 * i + INV_SQRT2)
                dy = y - (SQRT2 * (j + 1) + INV_SQRT2)
                if dx * dx + dy * dy <= 1.0:
                    box.add((x, y))
                    continue
        if s:
            box = get((i, j - 1))
            if box is not None:
                dx = x - (SQRT2 * i + INV_SQRT2)
                dy = y - (SQRT2 * (j - 1) + INV_SQRT2)
                if dx * dx + dy * dy <= 1.0:
                    box.add((x, y))
                    continue
        table[key] = BBox(x, y, x, y)
    return table


def coalesce_pass(table: DiskTable) -> Cover:
    """Merge adjacent grid-disks whose combined point bounding box has
    diagonal <= 2 into a single disk at the box center.

    Keys are visited in (i, j) order; the 8 neighbors of a key are
    scanned in row-major order and the first eligible partner wins.
    Merged disks are terminal: they never take part in a later merge.
    Merged centers come first in the output, then the surviving
    grid-disk centers, both in key order.
    """
    merged: Cover = []
    get = table.get
    for key in sorted(table):
        box = get(key)
        if box is None:
            continue
        i, j = key
        xmin = box.xmin
        ymin = box.ymin
        xmax = box.xmax
        ymax = box.ymax
        for di, dj in _NEIGHBORS_8:
            other_key = (i + di, j + dj)
            other = get(other_key)
            if other is None:
                continue
            # inline union-diagonal test (hot path over every neighbor)
            ux0 = xmin if xmin < other.xmin else other.xmin
            uy0 = ymin if ymin < other.ymin else other.ymin
            ux1 = xmax if xmax > other.xmax else other.xmax
            uy1 = ymax if ymax > other.ymax else other.ymax
            dx = ux1 - ux0
            dy = uy1 - uy0
            if dx * dx + dy * dy <= 4.0:
                del table[key]
                del table[other_key]
                merged.append(((ux0 + ux1) / 2.0, (uy0 + uy1) / 2.0))
                break
    merged.extend(grid_disk_center(k) for k in sorted(table))
    return merged


def fast_cover_pp(points) -> Cover:
    """fast_cover_plus with per-disk bounding boxes, followed by one
    coalescing pass over the placed disks."""
    return coalesce_pass(build_disk_table(points))


# Worst-case input: seven points inside one unit disk that straddle a
# grid corner so that each lands in a different cell. A single disk
# covers them; the grid algorithm places seven.
_CORNER_SEVEN: tuple[Point, ...] = (
    (0.6, 0.70710678),    # own cell (0, 0)
    (-0.01, 0.70710678),  # west cell
    (1.4243, 0.70710678),  # east cell
    (0.6, 1.4243),        # north cell
    (0.6, -0.01),         # south cell
    (-0.01, 1.4243),      # northwest cell
    (-0.01, -0.01),       # southwest cell
)


def worst_case_pointset(copies: int = 1, spacing: float = 3.0) -> list[Point]:
    """``copies`` translated copies of the 7-point worst case, each
    shifted right by ``spacing`` relative to the previous one.

    With grid-aligned spacing (a multiple of sqrt(2), at least
    3*sqrt(2)) every copy reproduces the 7-cell pattern exactly.
    """
    out: list[Point] = []
    for k in range(copies):
        dx = spacing * k
        out.extend((x + dx, y) for x, y in _CORNER_SEVEN)
    return out
