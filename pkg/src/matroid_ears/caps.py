"""Resource caps for enumeration-heavy operations.

Defaults can be overridden per call or through the environment variables
``MATROID_EARS_MAX_FACES``, ``MATROID_EARS_MAX_FLATS`` and
``MATROID_EARS_MAX_BASES``.
"""

import os

DEFAULT_MAX_FACES = 10**8
DEFAULT_MAX_FLATS = 5_000_000
DEFAULT_MAX_BASES = 200
DEFAULT_MAX_SUBSETS = 1 << 22


class CapExceeded(RuntimeError):
    """An enumeration would exceed a configured resource cap."""

    def __init__(self, cap: str, limit: int):
        super().__init__(f"{cap} cap of {limit} exceeded")
        self.cap = cap
        self.limit = limit


def _env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def max_faces(override: int | None = None) -> int:
    return override if override is not None else _env("MATROID_EARS_MAX_FACES", DEFAULT_MAX_FACES)


def max_flats(override: int | None = None) -> int:
    return override if override is not None else _env("MATROID_EARS_MAX_FLATS", DEFAULT_MAX_FLATS)


def max_bases(override: int | None = None) -> int:
    return override if override is not None else _env("MATROID_EARS_MAX_BASES", DEFAULT_MAX_BASES)


def max_subsets(override: int | None = None) -> int:
    return override if override is not None else _env("MATROID_EARS_MAX_SUBSETS", DEFAULT_MAX_SUBSETS)
