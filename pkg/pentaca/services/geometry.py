# pentaca\services\geometry.py
"""
The pentagrid in the Poincaré disk, built by reflecting a right-angled
regular pentagon in its sides. Points are complex numbers; this patch is the
oracle the combinatorial coordinates are checked against.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from ..errors import PatchError

logger = logging.getLogger(__name__)

DEDUP_TOL = 1e-6
VERTEX_TOL = 1e-7
MAX_RADIUS = 8
LINE_TOL = 1e-12


class DiskPoint(NamedTuple):
    x: float
    y: float

    @classmethod
    def of(cls, z: complex) -> "DiskPoint":
        return cls(float(z.real), float(z.imag))


@dataclass
class GeoTile:
    id: int
    center: complex
    # counter-clockwise; side j joins vertex j to vertex j+1
    vertices: np.ndarray
    side_neighbors: List[Optional[int]] = field(default_factory=lambda: [None] * 5)
    vertex_neighbors: List[Optional[int]] = field(default_factory=lambda: [None] * 5)

    @property
    def points(self) -> List[DiskPoint]:
        return [DiskPoint.of(v) for v in self.vertices]


@dataclass
class Patch:
    tiles: List[GeoTile]
    radius: int
    # number of reflections separating each tile from tile 0
    generation: List[int] = field(default_factory=list)


def _tangent_angle(p: complex, q: complex) -> float:
    """Direction at p of the geodesic from p to q."""
    return float(np.angle((q - p) / (1 - np.conj(p) * q)))


def vertex_angle(vertices: np.ndarray, k: int) -> float:
    p = vertices[k]
    a = _tangent_angle(p, vertices[k - 1])
    b = _tangent_angle(p, vertices[(k + 1) % len(vertices)])
    d = abs(a - b) % (2 * math.pi)
    return min(d, 2 * math.pi - d)


def _regular_vertices(r: float) -> np.ndarray:
    # side 0 faces the negative x-axis
    k = np.arange(5)
    return r * np.exp(1j * (4 * math.pi / 5 + 2 * math.pi * k / 5))


@lru_cache
def circumradius(tol: float = 1e-15) -> float:
    """Euclidean circumradius making the pentagon's angles right, by bisection."""
    lo, hi = 1e-6, 1.0 - 1e-9
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if vertex_angle(_regular_vertices(mid), 0) > math.pi / 2:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def central_pentagon() -> GeoTile:
    return GeoTile(id=0, center=0j, vertices=_regular_vertices(circumradius()))


def is_counter_clockwise(vertices: np.ndarray) -> bool:
    x, y = vertices.real, vertices.imag
    return float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)) > 0


def _geodesic_circle(p: complex, q: complex) -> Optional[Tuple[complex, float]]:
    """Centre and squared radius of the circle orthogonal to the unit circle through p and q; None for a diameter."""
    det = p.real * q.imag - p.imag * q.real
    if abs(det) < LINE_TOL:
        return None
    rp = (abs(p) ** 2 + 1) / 2
    rq = (abs(q) ** 2 + 1) / 2
    cx = (rp * q.imag - rq * p.imag) / det
    cy = (p.real * rq - q.real * rp) / det
    c = complex(cx, cy)
    return c, abs(c) ** 2 - 1


def geodesic_mirror(p: complex, q: complex) -> Callable:
    """Hyperbolic reflection in the line through p and q (works on arrays)."""
    circle = _geodesic_circle(p, q)
    if circle is None:
        ref = p if abs(p) >= abs(q) else q
        u = ref / abs(ref)
        return lambda z: u * u * np.conj(z)
    c, rho2 = circle
    return lambda z: c + rho2 / np.conj(z - c)


def geodesic_points(p: complex, q: complex, segments: int = 16) -> List[complex]:
    """Points along the geodesic from p to q, both ends included."""
    circle = _geodesic_circle(p, q)
    if circle is None:
        return [p + (q - p) * t / segments for t in range(segments + 1)]
    c, rho2 = circle
    rho = math.sqrt(rho2)
    a0 = math.atan2((p - c).imag, (p - c).real)
    a1 = math.atan2((q - c).imag, (q - c).real)
    da = (a1 - a0 + math.pi) % (2 * math.pi) - math.pi
    return [c + rho * complex(math.cos(a0 + da * t / segments), math.sin(a0 + da * t / segments)) for t in range(segments + 1)]


def reflect(tile: GeoTile, side_index: int) -> GeoTile:
    """Mirror image of the tile across its side `side_index` (1..5); that side keeps its index."""
    if not 1 <= side_index <= 5:
        raise ValueError(f"side index must be in 1..5, got {side_index}")
    j = side_index - 1
    v = tile.vertices
    mirror = geodesic_mirror(complex(v[j]), complex(v[(j + 1) % 5]))
    order = [(2 * j + 1 - k) % 5 for k in range(5)]
    return GeoTile(id=-1, center=complex(mirror(tile.center)), vertices=np.asarray(mirror(v[order]), dtype=complex))


class _PointIndex:
    """Grid hash for nearest-point lookups within a tolerance."""

    def __init__(self, tol: float):
        self.tol = tol
        self._cells: Dict[Tuple[int, int], List[Tuple[complex, int]]] = {}

    def _key(self, z: complex) -> Tuple[int, int]:
        return math.floor(z.real / self.tol), math.floor(z.imag / self.tol)

    def find(self, z: complex) -> Optional[int]:
        kx, ky = self._key(z)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for w, payload in self._cells.get((kx + dx, ky + dy), ()):
                    if abs(z - w) < self.tol:
                        return payload
        return None

    def add(self, z: complex, payload: int) -> None:
        self._cells.setdefault(self._key(z), []).append((z, payload))


def _same_vertices(a: np.ndarray, b: np.ndarray) -> bool:
    gaps = np.abs(a[:, None] - b[None, :]).min(axis=0)
    return bool(gaps.max() < DEDUP_TOL)


def _link(tiles: List[GeoTile]) -> None:
    index = _PointIndex(VERTEX_TOL)
    members: List[List[int]] = []
    clusters: List[List[int]] = []
    for tile in tiles:
        ids = []
        for z in tile.vertices:
            z = complex(z)
            cid = index.find(z)
            if cid is None:
                cid = len(members)
                index.add(z, cid)
                members.append([])
            members[cid].append(tile.id)
            ids.append(cid)
        clusters.append(ids)

    for tile in tiles:
        cl = clusters[tile.id]
        for j in range(5):
            shared = set(members[cl[j]]) & set(members[cl[(j + 1) % 5]])
            shared.discard(tile.id)
            if len(shared) > 1:
                raise PatchError(f"side {j} of tile {tile.id} shared by tiles {sorted(shared)}")
            tile.side_neighbors[j] = shared.pop() if shared else None
    for tile in tiles:
        cl = clusters[tile.id]
        for j in range(5):
            around = members[cl[j]]
            before, after = tile.side_neighbors[j - 1], tile.side_neighbors[j]
            if len(around) != 4 or before is None or after is None:
                continue
            rest = [t for t in around if t not in (tile.id, before, after)]
            if len(rest) == 1:
                tile.vertex_neighbors[j] = rest[0]


def build_patch(radius: int) -> Patch:
    """All tiles within `radius` reflections of the central tile, linked by shared vertices."""
    if not 0 <= radius <= MAX_RADIUS:
        raise ValueError(f"radius must be in 0..{MAX_RADIUS}, got {radius}")
    tiles = [central_pentagon()]
    generation = [0]
    centers = _PointIndex(DEDUP_TOL)
    centers.add(0j, 0)
    frontier = [0]
    for g in range(1, radius + 1):
        grown = []
        for tid in frontier:
            for side in range(1, 6):
                cand = reflect(tiles[tid], side)
                hit = centers.find(cand.center)
                if hit is not None:
                    if not _same_vertices(tiles[hit].vertices, cand.vertices):
                        raise PatchError(f"tiles {hit} and a reflection of {tid} share a centre but not their vertices")
                    continue
                cand.id = len(tiles)
                tiles.append(cand)
                generation.append(g)
                centers.add(cand.center, cand.id)
                grown.append(cand.id)
        frontier = grown
    _link(tiles)
    logger.info("built patch of radius %d with %d tiles", radius, len(tiles))
    return Patch(tiles=tiles, radius=radius, generation=generation)


@lru_cache
def cached_patch(radius: int) -> Patch:
    return build_patch(radius)


def dump_patch(patch: Patch) -> str:
    """One line per tile: `id cx cy v1x v1y ... v5x v5y`, 12 decimals."""
    lines = []
    for tile in patch.tiles:
        nums = [tile.center.real, tile.center.imag]
        for z in tile.vertices:
            nums += [z.real, z.imag]
        lines.append(" ".join([str(tile.id)] + [f"{x:.12f}" for x in nums]))
    return "\n".join(lines) + "\n"
