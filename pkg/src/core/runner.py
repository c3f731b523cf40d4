"""Dispatches independent verification jobs in process or on a worker pool."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence

from src.core.cache import ResultCache
from src.incarnation import MEMO, CheckJob, VerificationEntry, VerificationReport, check_job


def _init_worker(cache_dir: Optional[str]) -> None:
    MEMO.attach(ResultCache(Path(cache_dir)) if cache_dir else None)


def _entry_key(entry: VerificationEntry) -> tuple:
    return (entry.N, -entry.epsilon, entry.relation, entry.instance)


class SuiteRunner:
    """
    Runs CheckJobs and merges the entries in a fixed order.

    With jobs == 1 everything happens in this process; otherwise the jobs go to a
    ProcessPoolExecutor through the event loop.
    """

    def __init__(self, jobs: int = 1, cache_dir: Optional[Path] = None) -> None:
        self.logger: logging.Logger = logging.getLogger(self.__class__.__name__)
        self.jobs: int = max(1, jobs)
        self.cache_dir: Optional[Path] = cache_dir
        self.cache: Optional[ResultCache] = ResultCache(cache_dir) if cache_dir else None

    def _run_serial(self, jobs: Sequence[CheckJob]) -> List[VerificationEntry]:
        MEMO.attach(self.cache)
        try:
            return [check_job(job) for job in jobs]
        finally:
            MEMO.attach(None)

    async def _run_pool(self, jobs: Sequence[CheckJob]) -> List[VerificationEntry]:
        loop = asyncio.get_running_loop()
        initargs = (str(self.cache_dir) if self.cache_dir else None,)
        with ProcessPoolExecutor(
            max_workers=self.jobs, initializer=_init_worker, initargs=initargs
        ) as pool:
            futures = [loop.run_in_executor(pool, check_job, job) for job in jobs]
            return list(await asyncio.gather(*futures))

    async def run_async(
        self, jobs: Sequence[CheckJob], extra: Sequence[VerificationEntry] = ()
    ) -> VerificationReport:
        """
        Run the jobs and merge their entries with already computed ones.

        Args:
            jobs: Independent relation checks.
            extra: Entries computed outside the pool, merged into the same order.
        """
        if self.jobs == 1 or len(jobs) <= 1:
            entries = self._run_serial(jobs)
        else:
            self.logger.info(f"Dispatching {len(jobs)} checks to {self.jobs} workers")
            entries = await self._run_pool(jobs)
        entries.extend(extra)
        report = VerificationReport(sorted(entries, key=_entry_key))
        failures = len(report.failures)
        if failures:
            self.logger.info(f"{failures} of {len(entries)} checks failed")
        else:
            self.logger.info(f"All {len(entries)} checks passed")
        if self.cache is not None:
            self.logger.debug(f"Cache hits {self.cache.hits}, misses {self.cache.misses}")
        return report

    def run(
        self, jobs: Sequence[CheckJob], extra: Sequence[VerificationEntry] = ()
    ) -> VerificationReport:
        """Run the jobs to completion from synchronous code."""
        return asyncio.run(self.run_async(jobs, extra))
