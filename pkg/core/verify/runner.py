# core/verify/runner.py
"""
Run verification suites, optionally fanned out to a process pool, and
assemble a deterministic report.
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Tuple

from core.exceptions import VerificationFailure
from core.inout.verify_config import VerifyConfig
from core.verify._worker import evaluate_case
from core.verify.base import Case
from core.verify.registry import SuiteFactory

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    """
    Outcome of one suite.

    Attributes:
        failures: (case, counterexamples) for every failing case, smallest first.
        errors: crash messages from cases that raised.
    """
    suite: str
    cases_run: int = 0
    failures: List[Tuple[Case, List[str]]] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.errors


@dataclass
class VerifyReport:
    seed: int
    max_vertices: int
    suites: List[SuiteReport]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def render(self) -> str:
        lines = [f"seed: {self.seed}", f"max vertices: {self.max_vertices}"]
        for s in self.suites:
            if s.passed:
                lines.append(f"[PASS] {s.suite}: {s.cases_run} cases")
                continue
            lines.append(f"[FAIL] {s.suite}: {len(s.failures)} failing, "
                         f"{len(s.errors)} crashed, of {s.cases_run} cases")
            if s.failures:
                case, found = s.failures[0]
                lines.append(f"  minimal counterexample (block {case.label or '<empty>'}):")
                lines.extend(f"    {msg}" for msg in found[:5])
            for err in s.errors[:3]:
                lines.append(f"  error: {err.splitlines()[0]}")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"

    def raise_for_failure(self) -> None:
        for s in self.suites:
            if s.failures:
                raise VerificationFailure(s.suite, s.failures[0][1])
            if s.errors:
                raise VerificationFailure(s.suite, s.errors[:1])


def run_verification(config: VerifyConfig) -> VerifyReport:
    names = SuiteFactory.expand(list(config.suites))
    tasks: List[Tuple[VerifyConfig, Case]] = []
    for name in names:
        cases = SuiteFactory.create(name, config).cases()
        logger.info("suite %s: %d cases", name, len(cases))
        tasks.extend((config, case) for case in cases)

    started = time.perf_counter()
    if config.workers > 0:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            outcomes = list(executor.map(evaluate_case, tasks, chunksize=8))
    else:
        outcomes = [evaluate_case(task) for task in tasks]
    logger.info("verified %d cases in %.2fs", len(tasks), time.perf_counter() - started)

    reports = {name: SuiteReport(name) for name in names}
    for entry, error in sorted(outcomes, key=lambda o: o[0]['case']):
        case: Case = entry['case']
        report = reports[case.suite]
        report.cases_run += 1
        if error:
            report.errors.append(error)
        elif entry['counterexamples']:
            report.failures.append((case, entry['counterexamples']))
    return VerifyReport(config.seed, config.max_vertices, [reports[n] for n in names])
