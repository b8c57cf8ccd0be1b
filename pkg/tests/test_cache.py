import json
import threading

from hypothesis import given, settings, strategies as st

from comin.cache import MISS, SCHEMA_VERSION, ResultCache, default_cache_dir

payloads = st.recursive(
    st.none() | st.booleans() | st.text(max_size=8) | st.integers().map(str),
    lambda inner: st.lists(inner, max_size=4) | st.dictionaries(st.text(max_size=5), inner, max_size=4),
    max_leaves=12,
)


@settings(max_examples=50, deadline=None)
@given(payloads)
def test_roundtrip(tmp_path_factory, payload):
    c = ResultCache(tmp_path_factory.mktemp("c"))
    first = c.get_or_compute("Gr(2,4)", "probe", {"k": 1}, lambda: payload)
    assert c.last_status == "miss"
    second = c.get_or_compute("Gr(2,4)", "probe", {"k": 1}, lambda: "unused")
    assert c.last_status == "hit"
    assert first == second == json.loads(json.dumps(payload))


def test_checksum_and_schema_invalidation(tmp_path, caplog):
    c = ResultCache(tmp_path)
    key = c.key("E6", "delta", {"i": 3})
    c.store(key, {"delta": "7"})
    path = c.path_for(key)
    entry = json.loads(path.read_text())
    entry["payload"]["delta"] = "8"
    path.write_text(json.dumps(entry))
    assert c.load(key) is MISS
    assert "checksum" in caplog.text
    path.write_text("{not json")
    assert c.load(key) is MISS
    c.store(key, {"delta": "7"})
    entry = json.loads(path.read_text())
    entry["schema_version"] = SCHEMA_VERSION + 1
    path.write_text(json.dumps(entry))
    assert c.load(key) is MISS
    assert c.get_or_compute("E6", "delta", {"i": 3}, lambda: {"delta": "7"}) == {"delta": "7"}
    assert c.load(key) == {"delta": "7"}


def test_disabled_cache_writes_nothing(tmp_path):
    c = ResultCache(tmp_path / "x", enabled=False)
    assert c.get_or_compute("E6", "k", {}, lambda: [1]) == [1]
    assert not (tmp_path / "x").exists()


def test_env_default(monkeypatch, tmp_path):
    monkeypatch.setenv("COMIN_CACHE_DIR", str(tmp_path))
    assert default_cache_dir() == tmp_path
    monkeypatch.delenv("COMIN_CACHE_DIR")
    assert default_cache_dir().name == "comin"


def test_concurrent_writers(tmp_path):
    c = ResultCache(tmp_path)
    key = c.key("E7", "probe", {})

    def write(k):
        for _ in range(20):
            c.store(key, {"v": str(k % 2 and 1)})

    threads = [threading.Thread(target=write, args=(k,)) for k in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert c.load(key) in ({"v": "1"}, {"v": "0"})
    assert not list(tmp_path.glob(".tmp-*"))
