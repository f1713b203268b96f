import functools
import logging
import threading
from collections import OrderedDict
from collections.abc import Callable
from typing import TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")

MAX_ENTRIES = 4096

_lock = threading.RLock()
# key -> (inputs kept alive so their ids stay unique, result), least recently used first
_table: OrderedDict[tuple, tuple[tuple, object]] = OrderedDict()


def memoize_by_identity(fn: Callable[..., T]) -> Callable[..., T]:
    """Cache fn on the identity of its positional arguments.

    Engine values are immutable, so identity is a sound key. The inputs are
    held alongside the result so an id can never be recycled for another value;
    an evicted entry releases both together.
    """

    @functools.wraps(fn)
    def wrapper(*args):
        key = (fn.__qualname__, *(id(a) for a in args))
        with _lock:
            hit = _table.get(key)
            if hit is not None:
                _table.move_to_end(key)
                return hit[1]
        result = fn(*args)
        with _lock:
            hit = _table.setdefault(key, (args, result))
            while len(_table) > MAX_ENTRIES:
                _table.popitem(last=False)
        return hit[1]

    return wrapper


def size() -> int:
    with _lock:
        return len(_table)


def clear() -> None:
    with _lock:
        _table.clear()
    logger.debug("construction cache cleared")
