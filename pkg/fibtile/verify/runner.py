import json
import logging
import os
import queue
import threading
import time
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from fibtile.verify.status import Status
from fibtile.verify.suites import SUITE_MAP, SUITES, Suite

VERIFY_DEFAULTS = {
    "max_n": None,
    "jobs": 1,
    "config": None,
    "seed_env": "FIBTILE_SEED",
}


@dataclass(frozen=True)
class SuiteResult:
    name: str
    max_n: int
    status: Status
    seconds: float

    def to_json(self):
        out = {"suite": self.name, "maxN": self.max_n}
        out.update(self.status.to_json())
        out["seconds"] = round(self.seconds, 3)
        return out


def load_config_from_file(path) -> Dict[str, int]:
    """Per-suite size limits from `{"suites": [{"name": ..., "max_n": ...}]}`."""
    logger = logging.getLogger("verify")
    with open(path, "r") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ValueError(f"{path} must hold a JSON object")

    limits = {}
    for entry in data.get("suites", []):
        name = entry.get("name")
        if name not in SUITE_MAP:
            logger.warning(f"ignoring unknown suite {name!r} in {path}")
            continue
        max_n = entry.get("max_n")
        if not isinstance(max_n, int) or isinstance(max_n, bool) or max_n < 0:
            raise ValueError(f"suite {name} in {path} needs a nonnegative integer max_n, got {max_n!r}")
        limits[name] = max_n
    return limits


class VerifyRunner(object):
    def __init__(
        self,
        suites: Sequence[Suite] = SUITES,
        limits: Optional[Dict[str, int]] = None,
        max_n: Optional[int] = VERIFY_DEFAULTS["max_n"],
        jobs: int = VERIFY_DEFAULTS["jobs"],
    ):
        if jobs < 1:
            raise ValueError(f"jobs must be positive, got {jobs}")
        self.suites = list(suites)
        self.limits = dict(limits or {})
        self.max_n = max_n
        self.jobs = jobs
        self.logger = logging.getLogger(f"[{self.__class__.__name__} jobs: {jobs}]")

    def limit_for(self, suite: Suite) -> int:
        limit = self.limits.get(suite.name, suite.default_max_n)
        if self.max_n is not None:
            limit = min(limit, self.max_n)
        return limit

    def run(self) -> List[SuiteResult]:
        seed = os.environ.get(VERIFY_DEFAULTS["seed_env"])
        if seed is not None:
            self.logger.info(f"{VERIFY_DEFAULTS['seed_env']}={seed} is reserved; every suite is deterministic")

        pending = queue.Queue()
        done = queue.Queue()
        for suite in self.suites:
            pending.put(suite)

        threads = [threading.Thread(target=self._worker, args=(pending, done)) for _ in range(min(self.jobs, len(self.suites)))]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()

        results = []
        while not done.empty():
            results.append(done.get())
        # scheduling decides completion order, the report does not depend on it
        return sorted(results, key=lambda r: r.name)

    def _worker(self, pending: queue.Queue, done: queue.Queue):
        while True:
            try:
                suite = pending.get_nowait()
            except queue.Empty:
                return
            limit = self.limit_for(suite)
            self.logger.info(f"running {suite.name} up to n={limit}")
            start = time.time()
            status = suite.run(limit)
            elapsed = time.time() - start
            self.logger.info(f"{suite.name}: {status.code().value} in {elapsed:.2f}s")
            done.put(SuiteResult(suite.name, limit, status, elapsed))


def format_report(results: Sequence[SuiteResult]) -> str:
    width = max((len(r.name) for r in results), default=5)
    lines = []
    for r in results:
        lines.append(f"{r.name:<{width}}  n<={r.max_n:<3}  {r.status.code().value:<7}  {r.status.message()}")
    passed = sum(1 for r in results if r.status.ok())
    lines.append(f"{passed}/{len(results)} suites passed")
    return "\n".join(lines)
