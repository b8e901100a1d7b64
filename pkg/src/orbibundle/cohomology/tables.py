"""Cohomology tables for the building-block groups in degrees 0..3.

A coefficient pattern is ``"Z"`` (trivial), ``"F2"`` (trivial mod 2) or a
tuple of signs giving ``Z^u``.  Sign order: involutions then free generators
for free products, ``(u_z, u_c)`` for ``ZxZ2``, ``(u,)`` for ``Z``.
"""
from __future__ import annotations

from ..linalg import AbelianGroup
from .resolutions import BlockTag

MAX_DEGREE = 3


def _z(n: int = 1) -> AbelianGroup:
    return AbelianGroup(n)


def _f2(n: int) -> AbelianGroup:
    return AbelianGroup.elementary(2, n)


def _signs(tag: BlockTag, pattern) -> tuple[int, ...] | None:
    if pattern == "Z":
        return None
    if pattern == "F2":
        return None
    signs = tuple(pattern)
    expected = {
        "FreeProductOfZ2": tag.involutions,
        "Free": tag.free_rank,
        "SurfaceWithBoundary": tag.involutions + tag.free_rank,
        "ZxZ2": 2,
        "Z": 1,
    }[tag.kind]
    if len(signs) != expected or any(s not in (1, -1) for s in signs):
        raise ValueError(f"pattern {pattern!r} does not fit {tag}")
    return signs


def known_cohomology(tag: BlockTag, pattern, degree: int) -> AbelianGroup:
    """Table value of ``H^degree(block; pattern)``."""
    if not 0 <= degree <= MAX_DEGREE:
        raise ValueError("tables cover degrees 0..3")
    if tag.kind not in ("FreeProductOfZ2", "Free", "SurfaceWithBoundary", "ZxZ2", "Z"):
        raise ValueError(f"unknown block {tag}")
    if pattern not in ("Z", "F2") and not isinstance(pattern, tuple):
        raise ValueError(f"unknown coefficient pattern {pattern!r}")
    signs = _signs(tag, pattern)

    if tag.kind == "Z":
        tag = BlockTag("Free", 0, 1)
    if tag.kind == "ZxZ2":
        return _z_times_z2(pattern, signs, degree)

    k, n = tag.involutions, tag.free_rank
    if signs is None:
        signs = (1,) * (k + n)
    inv, free = signs[:k], signs[k:]
    if pattern == "F2":
        return _f2([1, k + n, k, k][degree])
    twisted = any(s == -1 for s in signs)
    if degree == 0:
        return AbelianGroup() if twisted else _z()
    if degree == 1:
        if not twisted:
            return _z(n)
        m = sum(1 for s in inv if s == -1)
        return AbelianGroup(m + n - 1, (2,))
    plus = sum(1 for s in inv if s == 1)
    minus = k - plus
    return _f2(plus if degree == 2 else minus)


def _z_times_z2(pattern, signs, degree: int) -> AbelianGroup:
    if pattern == "F2":
        return _f2([1, 2, 2, 2][degree])
    uz, uc = signs if signs is not None else (1, 1)
    if uc == -1:
        return [AbelianGroup(), _f2(1), _f2(1), _f2(1)][degree]
    if degree == 0:
        return _z() if uz == 1 else AbelianGroup()
    if degree == 1:
        return _z() if uz == 1 else _f2(1)
    return _f2(1)


BLOCK_TAGS = {
    "Z": BlockTag("Z"),
    "Z/2": BlockTag("FreeProductOfZ2", 1, 0),
    "ZxZ2": BlockTag("ZxZ2"),
    "D": BlockTag("FreeProductOfZ2", 2, 0),
}
