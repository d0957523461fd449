# core/verify/_worker.py
from __future__ import annotations

import traceback
from typing import Any, Dict, Tuple

from core.inout.verify_config import VerifyConfig
from core.verify.base import Case


def evaluate_case(args: Tuple[VerifyConfig, Case]) -> Tuple[Dict[str, Any], str]:
    """Run one case in a worker process; failures and crashes come back as data."""
    config, case = args
    entry: Dict[str, Any] = {'case': case, 'counterexamples': []}
    try:
        # import here so worker processes load the registry themselves
        from core.verify.registry import SuiteFactory
        suite = SuiteFactory.create(case.suite, config)
        entry['counterexamples'] = suite.check(case)
        return entry, ""
    except Exception as e:
        return entry, f"{case.suite} [{case.label}]: {type(e).__name__}: {e}\n{traceback.format_exc(limit=3)}"
