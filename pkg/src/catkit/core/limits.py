"""Global guard on the size of constructed categories."""
from contextlib import contextmanager

from catkit.errors import ResourceLimitError

DEFAULT_MAX_MORPHISMS = 4000
_limit = [DEFAULT_MAX_MORPHISMS]


def max_morphisms():
    return _limit[0]


def set_max_morphisms(n):
    if n < 1:
        raise ValueError("morphism limit must be positive")
    _limit[0] = int(n)


@contextmanager
def morphism_limit(n):
    old = _limit[0]
    set_max_morphisms(n)
    try:
        yield
    finally:
        _limit[0] = old


def check_size(count, what):
    if count > _limit[0]:
        raise ResourceLimitError(
            f"{what} would have {count} morphisms (limit {_limit[0]})")
