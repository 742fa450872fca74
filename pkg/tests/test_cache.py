import json

from heckecount.cache import CACHE_SCHEMA, Cache, default_cache_dir


def test_round_trip(tmp_path):
    c = Cache(tmp_path)
    payload = {"a": [1, 2, 3], "b": "x"}
    c.store("group", "A2", payload)
    assert c.load("group", "A2") == payload


def test_miss(tmp_path):
    c = Cache(tmp_path)
    assert c.load("group", "A2") is None


def test_corruption_detected(tmp_path):
    c = Cache(tmp_path)
    c.store("group", "A2", {"x": 1})
    path = c._path("group", "A2")
    entry = json.loads(path.read_text())
    entry["payload"]["x"] = 2  # tamper without updating the hash
    path.write_text(json.dumps(entry))
    assert c.load("group", "A2") is None


def test_stale_version_ignored(tmp_path):
    c = Cache(tmp_path)
    c.store("group", "A2", {"x": 1})
    path = c._path("group", "A2")
    entry = json.loads(path.read_text())
    entry["schema"] = CACHE_SCHEMA + 1
    path.write_text(json.dumps(entry))
    assert c.load("group", "A2") is None


def test_garbage_file_ignored(tmp_path):
    c = Cache(tmp_path)
    c._path("group", "A2").parent.mkdir(parents=True, exist_ok=True)
    c._path("group", "A2").write_text("not json at all{{{")
    assert c.load("group", "A2") is None


def test_disabled_cache(tmp_path):
    c = Cache(tmp_path, enabled=False)
    c.store("group", "A2", {"x": 1})
    assert c.load("group", "A2") is None
    assert not list(tmp_path.glob("*.json"))


def test_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("HECKECOUNT_CACHE_DIR", str(tmp_path / "custom"))
    assert default_cache_dir() == tmp_path / "custom"
