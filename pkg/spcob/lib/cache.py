"""Process-wide memo table for pure algebra constructors.

Entries are never evicted. A CLI process runs one command and exits; long-lived callers
that sweep many parameter sets call clear() between them.
"""

import threading
from collections.abc import Callable, Hashable
from functools import wraps
from typing import Any, TypeVar

F = TypeVar("F", bound=Callable[..., Any])

_MISSING = object()

# values are immutable algebra objects, shared across worker threads
_cache: dict[Hashable, Any] = {}
_lock = threading.Lock()


def get(key: Hashable) -> Any:
    with _lock:
        return _cache.get(key, _MISSING)


def set(key: Hashable, value: Any) -> None:
    with _lock:
        _cache.setdefault(key, value)


def clear() -> None:
    with _lock:
        _cache.clear()


def memoize(fn: F) -> F:
    prefix = f"{fn.__module__}.{fn.__qualname__}"

    @wraps(fn)
    def wrapper(*args: Hashable) -> Any:
        key = (prefix, args)
        result = get(key)
        if result is not _MISSING:
            return result
        result = fn(*args)
        set(key, result)
        return get(key)

    return wrapper  # type: ignore[return-value]
