import pytest

from dyop2d.benchmark import default_scene
from dyop2d.errors import SceneFormatError
from dyop2d.sceneio import (
    load_scene,
    scene_from_dict,
    scene_to_dict,
    write_scene,
)


def valid_doc():
    return {
        "objects": [
            {"name": "A", "vertices": [[0, 0], [1, 0], [0, 1]]},
            {"name": "B", "vertices": [[0, 0], [2, 0], [1, 1.5]]},
        ],
        "separation": 1.0,
        "axis": "x",
    }


def test_scene_from_dict_parses():
    scene = scene_from_dict(valid_doc())
    assert [t.name for t in scene.objects] == ["A", "B"]
    assert scene.separation == 1.0
    assert scene.axis.value == "x"


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("objects"),
        lambda d: d.__setitem__("objects", []),
        lambda d: d["objects"][0].pop("name"),
        lambda d: d["objects"][0].__setitem__("name", ""),
        lambda d: d["objects"][1].__setitem__("name", "A"),
        lambda d: d["objects"][0].__setitem__("vertices", [[0, 0], [1, 0]]),
        lambda d: d["objects"][0]["vertices"].__setitem__(0, [0]),
        lambda d: d["objects"][0]["vertices"].__setitem__(0, ["x", 0]),
        lambda d: d.__setitem__("separation", 0),
        lambda d: d.__setitem__("separation", "wide"),
        lambda d: d.__setitem__("axis", "z"),
        lambda d: d.pop("axis"),
    ],
)
def test_scene_from_dict_rejects_malformed(mutate):
    doc = valid_doc()
    mutate(doc)
    with pytest.raises(SceneFormatError):
        scene_from_dict(doc)


def test_scene_from_dict_rejects_non_object():
    with pytest.raises(SceneFormatError):
        scene_from_dict([1, 2, 3])


def test_default_scene_round_trip(tmp_path):
    scene = default_scene()
    path = tmp_path / "scene.json"
    write_scene(scene, str(path))
    assert load_scene(str(path)) == scene


def test_scene_dict_round_trip():
    scene = scene_from_dict(valid_doc())
    assert scene_from_dict(scene_to_dict(scene)) == scene


def test_load_scene_missing_file(tmp_path):
    with pytest.raises(SceneFormatError):
        load_scene(str(tmp_path / "missing.json"))


def test_load_scene_invalid_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(SceneFormatError):
        load_scene(str(path))
