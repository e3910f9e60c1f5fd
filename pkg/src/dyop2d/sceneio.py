"""Scene file ingestion and export.

A scene file is a flat JSON document:

    {
      "objects": [{"name": "Obj1", "vertices": [[0, 0], [1, 0], [0, 1]]}, ...],
      "separation": 1.0,
      "axis": "x"
    }

Every object needs exactly three vertices and a unique name; vertices
are normalized to counter-clockwise order on load, and the export
writes the normalized order back, so a round trip is identity.
"""

from __future__ import annotations

import json
import math

from .benchmark import Scene
from .dyop import MovementAxis
from .errors import SceneFormatError
from .geometry import Point2, Triangle


def _parse_vertex(raw: object, where: str) -> Point2:
    if (
        not isinstance(raw, (list, tuple))
        or len(raw) != 2
        or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in raw)
        or not all(math.isfinite(c) for c in raw)
    ):
        raise SceneFormatError(f"{where}: vertex must be a pair of finite numbers, got {raw!r}")
    return Point2(float(raw[0]), float(raw[1]))


def scene_from_dict(doc: object) -> Scene:
    if not isinstance(doc, dict):
        raise SceneFormatError("scene document must be a JSON object")
    raw_objects = doc.get("objects")
    if not isinstance(raw_objects, list) or not raw_objects:
        raise SceneFormatError("scene needs a non-empty 'objects' list")

    triangles = []
    names = set()
    for k, raw in enumerate(raw_objects):
        where = f"objects[{k}]"
        if not isinstance(raw, dict):
            raise SceneFormatError(f"{where}: must be an object")
        name = raw.get("name")
        if not isinstance(name, str) or not name:
            raise SceneFormatError(f"{where}: needs a non-empty string name")
        if name in names:
            raise SceneFormatError(f"duplicate object name: {name}")
        names.add(name)
        verts = raw.get("vertices")
        if not isinstance(verts, list) or len(verts) != 3:
            raise SceneFormatError(f"{where}: needs exactly 3 vertices")
        points = [_parse_vertex(v, where) for v in verts]
        triangles.append(Triangle(points[0], points[1], points[2], name))

    separation = doc.get("separation")
    if (
        not isinstance(separation, (int, float))
        or isinstance(separation, bool)
        or not math.isfinite(separation)
        or separation <= 0
    ):
        raise SceneFormatError(f"separation must be a positive number, got {separation!r}")

    axis = doc.get("axis")
    if axis not in ("x", "y"):
        raise SceneFormatError(f"axis must be 'x' or 'y', got {axis!r}")

    try:
        return Scene(tuple(triangles), float(separation), MovementAxis(axis))
    except ValueError as exc:
        raise SceneFormatError(str(exc)) from exc


def scene_to_dict(scene: Scene) -> dict:
    return {
        "objects": [
            {
                "name": t.name,
                "vertices": [[v.x, v.y] for v in t.vertices],
            }
            for t in scene.objects
        ],
        "separation": scene.separation,
        "axis": scene.axis.value,
    }


def load_scene(path: str) -> Scene:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SceneFormatError(f"cannot read scene file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SceneFormatError(f"scene file {path} is not valid JSON: {exc}") from exc
    return scene_from_dict(doc)


def write_scene(scene: Scene, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(scene_to_dict(scene), fh, indent=2)
        fh.write("\n")
