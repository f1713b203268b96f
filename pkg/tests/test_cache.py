"""Identity-keyed construction cache."""
from engine import cache


def _make_counted():
    calls = []

    @cache.memoize_by_identity
    def build(x):
        calls.append(x)
        return [x]

    return build, calls


def test_same_argument_hits(fresh_cache):
    build, calls = _make_counted()
    arg = ("B2",)
    assert build(arg) is build(arg)
    assert len(calls) == 1


def test_equal_but_distinct_arguments_miss(fresh_cache):
    build, calls = _make_counted()
    build(["x"])
    build(["x"])
    assert len(calls) == 2


def test_least_recently_used_entry_is_evicted(fresh_cache, monkeypatch):
    monkeypatch.setattr(cache, "MAX_ENTRIES", 2)
    build, calls = _make_counted()
    a, b, c = ("a",), ("b",), ("c",)
    build(a)
    build(b)
    build(a)
    build(c)
    assert cache.size() == 2
    build(a)
    assert calls == [a, b, c]
    build(b)
    assert calls == [a, b, c, b]
