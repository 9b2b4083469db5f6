"""Session-wide limits for exhaustive sweeps."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ResourceGuardError

DEFAULT_MAX_SUBSPACES = 10**7


@dataclass(frozen=True)
class EnumerationGuard:
    max_subspaces: int = DEFAULT_MAX_SUBSPACES
    force: bool = False

    def check(self, estimated: int) -> None:
        if not self.force and estimated > self.max_subspaces:
            raise ResourceGuardError(estimated, self.max_subspaces)


def guard_from_env() -> EnumerationGuard:
    """Default guard, with the budget taken from LEIBKIT_MAX_ENUM when set."""
    raw = os.environ.get("LEIBKIT_MAX_ENUM")
    return EnumerationGuard(int(raw)) if raw else EnumerationGuard()


_current = guard_from_env()
_workers = int(os.environ.get("LEIBKIT_WORKERS", "1"))


def get_guard() -> EnumerationGuard:
    return _current


def set_guard(guard: EnumerationGuard) -> None:
    global _current
    _current = guard


def get_workers() -> int:
    return _workers


def set_workers(n: int) -> None:
    global _workers
    if n < 1:
        raise ValueError("worker count must be positive")
    _workers = n
