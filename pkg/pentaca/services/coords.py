# pentaca\services\coords.py
"""
Sector coordinates ν(σ) on the pentagrid.

Each of the five sectors around 0(0) is spanned by the same Fibonacci tree,
numbered breadth-first with sons taken counter-clockwise. A tile's side 1 is
the side it shares with its father; sides 2..5 follow counter-clockwise and
vertex 6 sits between sides 5 and 1, vertex 7 between sides 1 and 2, and so
on up to vertex 10 between sides 4 and 5.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Literal, Optional, Sequence, Tuple

from ..errors import BoundaryError, CoordinateError, CorrespondenceError
from ..schemas import CENTER, TileCoord, checked_coord
from .geometry import Patch

logger = logging.getLogger(__name__)

NodeKind = Literal["black", "white"]
NeighborMap = Tuple[TileCoord, ...]

# sides carrying the sons, in counter-clockwise order
_SON_SIDES: Dict[str, Tuple[int, ...]] = {"white": (2, 3, 4), "black": (3, 4)}
_SON_KINDS: Dict[str, Tuple[str, ...]] = {"white": ("black", "white", "white"), "black": ("black", "white")}

# deep enough for any window the engine builds; guards against runaway indices
MAX_TREE_LEVEL = 24


class FibonacciTree:
    """Breadth-first numbering of one sector tree, grown level by level on demand."""

    def __init__(self) -> None:
        # index 0 unused; node 1 is the white root
        self._kind: List[Optional[str]] = [None, "white"]
        self._father: List[int] = [0, 0]
        self._father_side: List[int] = [0, 0]
        self._level: List[int] = [0, 0]
        self._sons: List[Tuple[int, ...]] = [(), ()]
        self._starts: List[int] = [1, 2]

    @property
    def built_levels(self) -> int:
        return len(self._starts) - 1

    def _grow(self) -> None:
        level = self.built_levels - 1
        start, stop = self._starts[level], self._starts[level + 1]
        for nu in range(start, stop):
            kind = self._kind[nu]
            sons = []
            for side, son_kind in zip(_SON_SIDES[kind], _SON_KINDS[kind]):
                self._kind.append(son_kind)
                self._father.append(nu)
                self._father_side.append(side)
                self._level.append(level + 1)
                self._sons.append(())
                sons.append(len(self._kind) - 1)
            self._sons[nu] = tuple(sons)
        self._starts.append(len(self._kind))

    def ensure_level(self, level: int) -> None:
        if level > MAX_TREE_LEVEL:
            raise CoordinateError(f"tree level {level} beyond the supported depth {MAX_TREE_LEVEL}")
        while self.built_levels <= level:
            self._grow()

    def ensure_index(self, nu: int) -> None:
        if nu < 1:
            raise CoordinateError(f"tree index must be positive, got {nu}")
        while nu >= self._starts[-1]:
            self.ensure_level(self.built_levels)

    def kind(self, nu: int) -> str:
        self.ensure_index(nu)
        return self._kind[nu]

    def father(self, nu: int) -> int:
        self.ensure_index(nu)
        return self._father[nu]

    def father_side(self, nu: int) -> int:
        self.ensure_index(nu)
        return self._father_side[nu]

    def level(self, nu: int) -> int:
        self.ensure_index(nu)
        return self._level[nu]

    def sons(self, nu: int) -> Tuple[int, ...]:
        self.ensure_level(self.level(nu) + 1)
        return self._sons[nu]

    def black_son(self, nu: int) -> int:
        return self.sons(nu)[0]

    def level_bounds(self, level: int) -> Tuple[int, int]:
        """First index and one-past-last index of a level."""
        self.ensure_level(level)
        return self._starts[level], self._starts[level + 1]

    def level_sizes(self, n: int) -> List[int]:
        self.ensure_level(n)
        return [self._starts[k + 1] - self._starts[k] for k in range(n + 1)]


@lru_cache
def get_tree() -> FibonacciTree:
    return FibonacciTree()


def tree_level_sizes(n: int) -> List[int]:
    if n < 0:
        raise ValueError("n must be >= 0")
    return get_tree().level_sizes(n)


def coord_kind(c: TileCoord) -> NodeKind:
    if c == CENTER:
        raise CoordinateError("the central tile is not a tree node")
    checked_coord(c.sector, c.index)
    return get_tree().kind(c.index)


def reorient(nm: Sequence[TileCoord], shift: int) -> NeighborMap:
    """Relabel so that canonical side 1+shift becomes local side 1."""
    shift %= 5
    if shift == 0:
        return tuple(nm)
    return tuple(nm[(k + shift) % 5] for k in range(5)) + tuple(nm[5 + (k + shift) % 5] for k in range(5))


class Navigator:
    """
    Neighbour resolution by tree arithmetic alone.

    The foreign side 5 of any tile is the black son of the next tile on the
    same level (counter-clockwise, wrapping across sectors); the foreign side 2
    of a black tile is the tile preceding its father on the father's level.
    Vertex neighbours follow by walking one step round the shared vertex.
    """

    def __init__(self, tree: Optional[FibonacciTree] = None):
        self.tree = tree or get_tree()
        self._sides: Dict[TileCoord, NeighborMap] = {}
        self._neighbors: Dict[TileCoord, NeighborMap] = {}

    def level(self, c: TileCoord) -> int:
        """0 for the central tile, 1 for the sector heads, and so on."""
        if c.sector == 0:
            return 0
        return self.tree.level(c.index) + 1

    def kind(self, c: TileCoord) -> str:
        return coord_kind(c)

    def father(self, c: TileCoord) -> Optional[TileCoord]:
        if c == CENTER:
            return None
        if c.index == 1:
            return CENTER
        return TileCoord(c.sector, self.tree.father(c.index))

    def sons(self, c: TileCoord) -> List[TileCoord]:
        if c == CENTER:
            return [TileCoord(s, 1) for s in range(1, 6)]
        return [TileCoord(c.sector, nu) for nu in self.tree.sons(c.index)]

    def _next_in_level(self, c: TileCoord) -> TileCoord:
        start, stop = self.tree.level_bounds(self.tree.level(c.index))
        if c.index + 1 < stop:
            return TileCoord(c.sector, c.index + 1)
        return TileCoord(c.sector % 5 + 1, start)

    def _prev_in_level(self, c: TileCoord) -> TileCoord:
        start, stop = self.tree.level_bounds(self.tree.level(c.index))
        if c.index > start:
            return TileCoord(c.sector, c.index - 1)
        return TileCoord((c.sector - 2) % 5 + 1, stop - 1)

    def sides(self, c: TileCoord) -> NeighborMap:
        cached = self._sides.get(c)
        if cached is not None:
            return cached
        if c == CENTER:
            result = tuple(TileCoord(s, 1) for s in range(1, 6))
        else:
            checked_coord(c.sector, c.index)
            nxt = self._next_in_level(c)
            side5 = TileCoord(nxt.sector, self.tree.black_son(nxt.index))
            sons = self.sons(c)
            father = self.father(c)
            if self.tree.kind(c.index) == "white":
                result = (father, sons[0], sons[1], sons[2], side5)
            else:
                result = (father, self._prev_in_level(father), sons[0], sons[1], side5)
        self._sides[c] = result
        return result

    def position(self, c: TileCoord, n: TileCoord) -> int:
        """Side index (1..5) of n as seen from c."""
        try:
            return self.sides(c).index(n) + 1
        except ValueError:
            raise CoordinateError(f"{n} is not a side neighbour of {c}") from None

    def neighbors(self, c: TileCoord) -> NeighborMap:
        """Canonical 10-neighbour map, positions 1..10 at indices 0..9."""
        cached = self._neighbors.get(c)
        if cached is not None:
            return cached
        sides = self.sides(c)
        vertices = []
        for t in range(5):
            # vertex 6+t lies between sides t and t+1 (side 0 meaning side 5)
            across = sides[t - 1]
            p = self.position(across, c)
            vertices.append(self.sides(across)[(p - 2) % 5])
        result = sides + tuple(vertices)
        self._neighbors[c] = result
        return result

    def oriented(self, c: TileCoord, shift: int) -> NeighborMap:
        return reorient(self.neighbors(c), shift)

    def cells_up_to(self, level: int) -> Iterator[TileCoord]:
        """Every tile of level <= level, central tile first, level by level."""
        yield CENTER
        for lv in range(level):
            start, stop = self.tree.level_bounds(lv)
            for sector in range(1, 6):
                for nu in range(start, stop):
                    yield TileCoord(sector, nu)

    def ball(self, cells, radius: int = 1) -> set:
        """Cells within `radius` neighbour steps of any of `cells`."""
        seen = set(cells)
        frontier = set(cells)
        for _ in range(radius):
            grown = set()
            for c in frontier:
                grown.update(self.neighbors(c))
            frontier = grown - seen
            seen |= frontier
        return seen


@lru_cache
def get_navigator() -> Navigator:
    return Navigator()


@dataclass
class Correspondence:
    """Bijection between sector coordinates and geometric tile ids of a patch."""

    depth: int
    coord_to_geo: Dict[TileCoord, int] = field(default_factory=dict)
    geo_to_coord: Dict[int, TileCoord] = field(default_factory=dict)
    # geometric side index (0..4) carrying local side 1
    father_side: Dict[TileCoord, int] = field(default_factory=dict)

    def _add(self, c: TileCoord, geo_id: int, side: int) -> None:
        if geo_id in self.geo_to_coord:
            raise CorrespondenceError(f"tile {geo_id} claimed by both {self.geo_to_coord[geo_id]} and {c}")
        self.coord_to_geo[c] = geo_id
        self.geo_to_coord[geo_id] = c
        self.father_side[c] = side


def build_correspondence(patch: Patch, depth: int, navigator: Optional[Navigator] = None) -> Correspondence:
    """
    Map coordinates up to sector-tree level `depth` onto patch tiles.

    The central tile's side 1 is geometric side 0; every other tile's sons are
    matched to the geometric sides counter-clockwise after its father side.
    """
    nav = navigator or get_navigator()
    corr = Correspondence(depth=depth)
    corr._add(CENTER, 0, 0)
    frontier = [CENTER]
    for _ in range(depth + 1):
        grown = []
        for c in frontier:
            geo = patch.tiles[corr.coord_to_geo[c]]
            j0 = corr.father_side[c]
            if c == CENTER:
                son_sides = [1, 2, 3, 4, 5]
            else:
                son_sides = list(_SON_SIDES[nav.kind(c)])
            for son, local in zip(nav.sons(c), son_sides):
                son_geo = geo.side_neighbors[(j0 + local - 1) % 5]
                if son_geo is None:
                    raise CorrespondenceError(f"patch radius {patch.radius} too small to place {son}")
                back = patch.tiles[son_geo].side_neighbors
                if geo.id not in back:
                    raise CorrespondenceError(f"adjacency of tiles {geo.id} and {son_geo} is not symmetric")
                corr._add(son, son_geo, back.index(geo.id))
                grown.append(son)
        frontier = grown
    logger.debug("mapped %d tiles up to depth %d", len(corr.coord_to_geo), depth)
    return corr


def neighbors(c: TileCoord, patch: Patch, mapping: Correspondence) -> NeighborMap:
    """The 10 neighbours of c read off the geometry, in canonical orientation."""
    if c not in mapping.coord_to_geo:
        raise BoundaryError(f"{c} is not mapped onto the patch")
    geo = patch.tiles[mapping.coord_to_geo[c]]
    j0 = mapping.father_side[c]
    ids = [geo.side_neighbors[(j0 + k) % 5] for k in range(5)]
    ids += [geo.vertex_neighbors[(j0 + t) % 5] for t in range(5)]
    result = []
    for geo_id in ids:
        if geo_id is None or geo_id not in mapping.geo_to_coord:
            raise BoundaryError(f"{c} has a neighbour outside the mapped patch")
        result.append(mapping.geo_to_coord[geo_id])
    return tuple(result)
