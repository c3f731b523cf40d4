"""
Tests for the matrix cache and the suite runner.
"""

import json

import pytest

from src.core import ResultCache, SuiteRunner
from src.diagram import bubble
from src.incarnation import MEMO, IncarnationParams, VerificationEntry, incarnate, relation_jobs
from src.linalg import LinearMap


class TestResultCache:
    """Test suite for ResultCache."""

    def test_put_then_get(self, temp_dir, params3):
        """Test that a stored matrix comes back equal, with its words."""
        cache = ResultCache(temp_dir / "cache")
        value = incarnate(bubble("V"), params3)
        key = ("cupV ; capV", params3, "")
        assert cache.get(key) is None
        cache.put(key, value)
        again = cache.get(key)
        assert again == value
        assert again.domain == params3.word("")
        assert (cache.hits, cache.misses) == (1, 1)

    def test_key_includes_parameters(self, temp_dir):
        """Test that N, epsilon and the D offset all change the digest."""
        base = IncarnationParams(3, 1)
        keys = [
            ("idS", base, ""),
            ("idS", IncarnationParams(3, -1), ""),
            ("idS", base.with_offset(1), ""),
            ("idS", base, "V"),
        ]
        assert len({ResultCache.digest(k) for k in keys}) == 4

    def test_unreadable_entry_is_a_miss(self, temp_dir, params2):
        """Test that a corrupt file is ignored."""
        cache = ResultCache(temp_dir)
        key = ("idV", params2, "")
        cache.path_for(key).write_text("{not json", encoding="utf-8")
        assert cache.get(key) is None
        assert cache.misses == 1

    def test_stale_entry_is_a_miss(self, temp_dir, params2):
        """Test that an entry whose stored text differs is not returned."""
        cache = ResultCache(temp_dir)
        key = ("idV", params2, "")
        cache.put(key, LinearMap.identity(2).with_words(params2.word("V"), params2.word("V")))
        path = cache.path_for(key)
        data = json.loads(path.read_text(encoding="utf-8"))
        data["key"] = "idS"
        path.write_text(json.dumps(data), encoding="utf-8")
        assert cache.get(key) is None


class TestSuiteRunner:
    """Test suite for SuiteRunner."""

    def test_serial_run(self, params2):
        """Test an in-process run of the plain suite."""
        report = SuiteRunner(jobs=1).run(relation_jobs(params2))
        assert report.passed
        assert report.entries
        assert MEMO.store is None

    def test_merge_order(self, params2):
        """Test that extra entries are merged into the fixed order."""
        extra = [
            VerificationEntry("aaa", 1, 1, "first", "pass"),
            VerificationEntry("zzz", 9, -1, "last", "fail"),
        ]
        report = SuiteRunner().run(relation_jobs(params2)[:2], extra)
        assert report.entries[0].relation == "aaa"
        assert report.entries[-1].relation == "zzz"
        assert not report.passed

    def test_cache_is_used(self, temp_dir, params2):
        """Test that a second run reads matrices from the disk cache."""
        jobs = relation_jobs(params2)[:3]
        MEMO.clear()
        SuiteRunner(cache_dir=temp_dir).run(jobs)
        assert list(temp_dir.glob("*.json"))
        MEMO.clear()
        runner = SuiteRunner(cache_dir=temp_dir)
        runner.run(jobs)
        assert runner.cache.hits > 0

    def test_pool_dispatch(self, params2, mocker):
        """Test that several jobs with jobs > 1 go through the pool."""
        jobs = relation_jobs(params2)[:2]
        runner = SuiteRunner(jobs=2)
        done = [VerificationEntry("b", 2, 1, "x", "pass"), VerificationEntry("a", 2, 1, "y", "pass")]
        pool = mocker.patch.object(runner, "_run_pool", mocker.AsyncMock(return_value=done))
        report = runner.run(jobs)
        pool.assert_awaited_once()
        assert [e.relation for e in report.entries] == ["a", "b"]

    @pytest.mark.asyncio
    async def test_run_async(self, params3):
        """Test the coroutine form inside a running event loop."""
        report = await SuiteRunner().run_async(relation_jobs(params3)[:4])
        assert report.passed
        assert len(report.entries) == 4
