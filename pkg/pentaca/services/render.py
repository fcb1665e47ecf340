# pentaca\services\render.py
"""
SVG views of configurations in the Poincaré disk. Every pentagon edge is a
geodesic arc flattened into short segments; black cells take the style's
black fill and every other tile the white fill.
"""
import logging
import xml.etree.ElementTree as ET
from typing import Iterable, List, Optional

from ..config import get_settings
from ..errors import BoundaryError
from ..schemas import RenderStyle, Scenario
from .coords import Correspondence, build_correspondence, get_navigator
from .engine import Configuration, simulate
from .geometry import MAX_RADIUS, GeoTile, Patch, cached_patch, geodesic_points
from .rules import RuleTable

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
MIN_RADIUS = 2


def _fmt(x: float) -> str:
    # -0.000000 and 0.000000 must print alike
    return f"{x + 0.0:.6f}".replace("-0.000000", "0.000000")


def tile_path(tile: GeoTile, segments: int) -> str:
    """Closed path along the five geodesic sides; y grows upwards in the disk."""
    v = tile.vertices
    pts = []
    for j in range(5):
        pts.extend(geodesic_points(complex(v[j]), complex(v[(j + 1) % 5]), segments)[:-1])
    return "M " + " L ".join(f"{_fmt(z.real)} {_fmt(-z.imag)}" for z in pts) + " Z"


def radius_for(configurations: Iterable[Configuration]) -> int:
    """Smallest patch radius showing every black cell with a ring around it."""
    nav = get_navigator()
    deepest = max((nav.level(c) for cfg in configurations for c in cfg), default=0)
    return min(MAX_RADIUS, max(MIN_RADIUS, deepest + 1))


def mapped_patch(radius: int) -> "tuple[Patch, Correspondence]":
    patch = cached_patch(radius)
    return patch, build_correspondence(patch, radius - 1)


def render_frame(
    cfg: Configuration,
    patch: Patch,
    correspondence: Correspondence,
    style: Optional[RenderStyle] = None,
    segments: Optional[int] = None,
) -> str:
    style = style or RenderStyle()
    segments = segments or get_settings().render_segments
    unplaced = [c for c in cfg if c not in correspondence.coord_to_geo]
    if unplaced:
        raise BoundaryError(f"{len(unplaced)} black cells lie outside the rendered patch, e.g. {min(unplaced)}")
    black = {correspondence.coord_to_geo[c] for c in cfg}

    root = ET.Element(
        "svg",
        {"xmlns": SVG_NS, "viewBox": "-1 -1 2 2", "width": "800", "height": "800"},
    )
    ET.SubElement(
        root,
        "circle",
        {"cx": "0", "cy": "0", "r": "1", "fill": "none", "stroke": style.stroke, "stroke-width": _fmt(style.stroke_width)},
    )
    tiles = ET.SubElement(root, "g", {"stroke": style.stroke, "stroke-width": _fmt(style.stroke_width)})
    for tile in patch.tiles:
        attrs = {
            "d": tile_path(tile, segments),
            "fill": style.black_fill if tile.id in black else style.white_fill,
        }
        coord = correspondence.geo_to_coord.get(tile.id)
        if coord is not None:
            attrs["data-cell"] = str(coord)
        ET.SubElement(tiles, "path", attrs)

    if style.labels:
        labels = ET.SubElement(root, "g", {"font-size": "0.02", "text-anchor": "middle", "font-family": "sans-serif"})
        for geo_id, coord in sorted(correspondence.geo_to_coord.items()):
            z = patch.tiles[geo_id].center
            text = ET.SubElement(labels, "text", {"x": _fmt(z.real), "y": _fmt(-z.imag)})
            text.text = str(coord)

    return ET.tostring(root, encoding="unicode") + "\n"


def render_configuration(
    cfg: Configuration,
    patch: Optional[Patch] = None,
    style: Optional[RenderStyle] = None,
    correspondence: Optional[Correspondence] = None,
) -> str:
    if patch is None:
        patch, correspondence = mapped_patch(radius_for([cfg]))
    elif correspondence is None:
        correspondence = build_correspondence(patch, patch.radius - 1)
    return render_frame(cfg, patch, correspondence, style)


def render_run(
    scenario: Scenario,
    table: RuleTable,
    steps: Optional[int] = None,
    style: Optional[RenderStyle] = None,
) -> List[str]:
    """One document per configuration met before each of the `steps` steps."""
    steps = scenario.steps if steps is None else steps
    if steps <= 0:
        return []
    frames = simulate(scenario, table, steps - 1).configurations
    patch, correspondence = mapped_patch(radius_for(frames))
    logger.debug("rendering %d frames of %s on a patch of radius %d", len(frames), scenario.name, patch.radius)
    return [render_frame(cfg, patch, correspondence, style) for cfg in frames]
