# core/verify/registry.py
"""
Suite registry for arcalg.
Discovers built-in core.verify.suites modules and third-party suites via entry points.
"""
import importlib
import logging
import pkgutil
from importlib.metadata import entry_points
from typing import Dict, List, Type

from core.exceptions import ArcAlgebraError
from core.inout.verify_config import VerifyConfig
from core.verify.base import VerificationSuite

logger = logging.getLogger(__name__)

ENTRY_POINT_GROUP = "arcalg.suites"


class SuiteFactory:
    """
    Factory for creating verification suites by name.
    Auto-registers built-in suites and discovers third-party ones.
    """
    _registry: Dict[str, Type[VerificationSuite]] = {}
    _loaded: bool = False

    @classmethod
    def load_plugins(cls) -> None:
        if cls._loaded:
            return
        cls._loaded = True

        # 1) Import every module in core.verify.suites so they register themselves
        import core.verify.suites as _builtin_pkg
        for _, module_name, _ in pkgutil.iter_modules(_builtin_pkg.__path__):
            importlib.import_module(f"core.verify.suites.{module_name}")

        # 2) Third-party suites
        for ep in entry_points(group=ENTRY_POINT_GROUP):
            try:
                suite_cls = ep.load()
            except Exception as e:
                logger.warning("could not load suite plugin %s: %s", ep.name, e)
                continue
            if isinstance(suite_cls, type) and issubclass(suite_cls, VerificationSuite) and suite_cls.suite_name:
                cls._registry[suite_cls.suite_name.lower()] = suite_cls

    @classmethod
    def register(cls, suite_cls: Type[VerificationSuite]) -> None:
        """The class must define a unique `suite_name` attribute."""
        if not issubclass(suite_cls, VerificationSuite):
            raise ArcAlgebraError(f"Cannot register non-suite class: {suite_cls}")
        name = getattr(suite_cls, "suite_name", None)
        if not isinstance(name, str) or not name:
            raise ArcAlgebraError(f"Suite class {suite_cls} lacks a valid `suite_name` attribute.")
        cls._registry[name.lower()] = suite_cls

    @classmethod
    def names(cls) -> List[str]:
        cls.load_plugins()
        return sorted(cls._registry)

    @classmethod
    def create(cls, name: str, config: VerifyConfig) -> VerificationSuite:
        cls.load_plugins()
        suite_cls = cls._registry.get(name.lower())
        if suite_cls is None:
            raise ArcAlgebraError(f"Unknown verification suite: '{name}' (known: {', '.join(cls.names())})")
        return suite_cls(config)

    @classmethod
    def expand(cls, names: List[str]) -> List[str]:
        """Resolve 'all' and check every name."""
        known = cls.names()
        if any(n.lower() == "all" for n in names):
            return known
        for n in names:
            if n.lower() not in known:
                raise ArcAlgebraError(f"Unknown verification suite: '{n}' (known: {', '.join(known)})")
        return [n.lower() for n in names]
