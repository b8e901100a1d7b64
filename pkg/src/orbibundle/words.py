"""Words in free groups.

A word is a tuple of nonzero integers: ``+(i+1)`` is generator ``i`` and
``-(i+1)`` its inverse.
"""
from __future__ import annotations

Word = tuple[int, ...]


def letter(i: int, exp: int = 1) -> Word:
    return (i + 1,) if exp > 0 else (-(i + 1),)


def free_reduce(w) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w) -> Word:
    return tuple(-x for x in reversed(w))


def multiply(*ws) -> Word:
    out: list[int] = []
    for w in ws:
        out.extend(w)
    return free_reduce(out)


def cyclic_reduce(w) -> Word:
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def cyclic_canonical(w) -> Word:
    """Least representative among cyclic permutations of ``w`` and its inverse."""
    w = cyclic_reduce(w)
    if not w:
        return w
    cands = []
    for v in (w, inverse(w)):
        for i in range(len(v)):
            cands.append(v[i:] + v[:i])
    return min(cands)


def exponent_sums(w, ngens: int) -> list[int]:
    v = [0] * ngens
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def occurrences(w, i: int) -> int:
    return sum(1 for x in w if abs(x) == i + 1)


def substitute(w, images: dict[int, Word]) -> Word:
    """Replace generator ``i`` by ``images[i]`` (inverse letters by the inverse)."""
    out: list[int] = []
    for x in w:
        i = abs(x) - 1
        if i in images:
            out.extend(images[i] if x > 0 else inverse(images[i]))
        else:
            out.append(x)
    return free_reduce(out)


def to_str(w, labels) -> str:
    if not w:
        return "1"
    return " ".join(labels[abs(x) - 1] + ("" if x > 0 else "^-1") for x in w)


def substitute_many(w, images) -> Word:
    """Replace every generator ``i`` by ``images[i]``."""
    out: list[int] = []
    for x in w:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)
