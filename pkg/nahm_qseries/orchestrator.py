from __future__ import annotations

import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .catalog.expr import Identity
from .catalog.verify import VerifyReport, verify
from .config import EngineConfig

logger = logging.getLogger(__name__)


class VerificationRunner:
    def __init__(self, config: EngineConfig | None = None) -> None:
        self.config = config or EngineConfig()
        self._cache: dict[tuple[str, Fraction], VerifyReport] = {}

    def _get_cached(self, identity: Identity, order: Fraction) -> VerifyReport | None:
        return self._cache.get((identity.id, order))

    def _set_cached(self, identity: Identity, order: Fraction, report: VerifyReport) -> None:
        self._cache[(identity.id, order)] = report

    async def verify_identity(
        self,
        identity: Identity,
        order: Fraction,
        semaphore: asyncio.Semaphore,
        executor: Executor | None,
    ) -> VerifyReport:
        cached = self._get_cached(identity, order)
        if cached is not None:
            return cached

        async with semaphore:
            if executor is None:
                report = verify(identity, order)
            else:
                loop = asyncio.get_running_loop()
                report = await loop.run_in_executor(executor, verify, identity, order)

        self._set_cached(identity, order, report)
        return report

    async def verify_many(self, identities: Sequence[Identity], order: Fraction) -> list[VerifyReport]:
        unique: dict[str, Identity] = {}
        for identity in identities:
            unique.setdefault(identity.id, identity)

        workers = max(1, self.config.max_workers)
        semaphore = asyncio.Semaphore(workers)
        executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 and len(unique) > 1 else None
        try:
            reports = await asyncio.gather(
                *[self.verify_identity(identity, order, semaphore, executor) for identity in unique.values()]
            )
        finally:
            if executor is not None:
                executor.shutdown(wait=True)

        failed = sum(1 for report in reports if not report.ok)
        logger.debug("verified %d identities at order %s, %d not equal", len(reports), order, failed)
        return sorted(reports, key=lambda report: report.identity_id)

    def run(self, identities: Sequence[Identity], order: Fraction) -> list[VerifyReport]:
        return asyncio.run(self.verify_many(identities, order))
