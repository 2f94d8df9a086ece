from __future__ import annotations

import asyncio
import logging
from collections.abc import Sequence

from ..config import RunConfig
from ..errors import ConfigError
from .cases import Case, CaseRecord
from .suites import build_suite

logger = logging.getLogger(__name__)


async def run_cases(cases: Sequence[Case], config: RunConfig) -> list[CaseRecord]:
    """Run cases on worker threads, at most ``config.jobs`` at a time.

    Every lower module is pure, so execution order has no effect on values.
    The result is sorted by ``case_id`` whatever order the cases finished in.

    Args:
        cases: Cases to run; identifiers must be unique.
        config: Effective run configuration.

    Returns:
        One record per case, ordered by ``case_id``.

    Raises:
        ConfigError: If two cases share an identifier.
    """
    ids = [c.case_id for c in cases]
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise ConfigError(f"duplicate case ids: {', '.join(dupes)}")

    gate = asyncio.Semaphore(max(1, config.jobs))

    async def _one(case: Case) -> CaseRecord:
        async with gate:
            return await asyncio.to_thread(case.run, config)

    tasks = [asyncio.create_task(_one(c)) for c in cases]
    # Case.run never raises; anything here is a harness bug and should surface
    records = await asyncio.gather(*tasks)
    return sorted(records, key=lambda r: r.case_id)


def run_suite(name: str, config: RunConfig) -> list[CaseRecord]:
    """Build and run the named suite.

    Raises:
        ConfigError: If the suite is unknown.
    """
    cases = build_suite(name, config)
    logger.info(f"suite {name}: {len(cases)} cases, jobs={config.jobs}")
    records = asyncio.run(run_cases(cases, config))
    failed = sum(not r.passed for r in records)
    logger.info(f"suite {name}: {len(records) - failed} passed, {failed} failed")
    return records
