"""Truncated threads of the face-substitution inverse limit.

A point of the inverse limit is a compatible sequence of faces, each the
image of the next under one substitution round.  At interior-of-face
resolution a depth-n truncation is a base face plus a chain of child
positions, so the shift maps become address bookkeeping: the right shift
drops the deepest level, the left shift prepends one.  Boundary points,
whose faces are glued along the complex, are out of scope here; the CW
complex carries those identifications.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import TilespaceError
from .dataset import load_dataset

CHILDREN_PER_RULE = 6


class ThreadError(TilespaceError):
    """Malformed thread, insufficient depth, or inconsistent extension."""


def _has_tile(d, tid) -> bool:
    return any(t.id == tid for t in d.tiles)


@dataclass(frozen=True)
class Thread:
    """A depth-n address path: base face at level n, positions (p_n, ..., p_1).

    addresses[0] applies to the base face; the face at level i-1 is child
    p_i of the face at level i under that face's rule.
    """

    base_face: int
    addresses: tuple = ()

    def __post_init__(self):
        if not isinstance(self.base_face, int) or self.base_face < 1:
            raise ThreadError(f"base face {self.base_face!r} is not a tile id")
        addresses = tuple(self.addresses)
        for p in addresses:
            if not isinstance(p, int) or not 1 <= p <= CHILDREN_PER_RULE:
                raise ThreadError(
                    f"address {p!r} is not a child position in "
                    f"1..{CHILDREN_PER_RULE}")
        object.__setattr__(self, "addresses", addresses)

    @property
    def depth(self) -> int:
        return len(self.addresses)


def realize(t: Thread, d=None) -> tuple:
    """Face ids (x_0, ..., x_n) along the thread, deepest level last."""
    if d is None:
        d = load_dataset()
    if not _has_tile(d, t.base_face):
        raise ThreadError(f"base face {t.base_face} is not in the dataset")
    down = [t.base_face]
    for p in t.addresses:
        down.append(d.rule(down[-1]).children[p - 1])
    return tuple(reversed(down))


def shift_right(t: Thread, d=None) -> Thread:
    """Drop the deepest level; the child at the first address becomes base."""
    if t.depth < 1:
        raise ThreadError(
            "cannot shift a depth-0 thread right: no shallower level exists")
    if d is None:
        d = load_dataset()
    if not _has_tile(d, t.base_face):
        raise ThreadError(f"base face {t.base_face} is not in the dataset")
    new_base = d.rule(t.base_face).children[t.addresses[0] - 1]
    return Thread(base_face=new_base, addresses=t.addresses[1:])


def shift_left(t: Thread, new_base: int, extension: int, d=None) -> Thread:
    """Prepend one level: `new_base` must have the old base as child `extension`."""
    if d is None:
        d = load_dataset()
    if not 1 <= extension <= CHILDREN_PER_RULE:
        raise ThreadError(
            f"extension {extension!r} is not a child position in "
            f"1..{CHILDREN_PER_RULE}")
    if not _has_tile(d, new_base):
        raise ThreadError(f"base face {new_base} is not in the dataset")
    child = d.rule(new_base).children[extension - 1]
    if child != t.base_face:
        raise ThreadError(
            f"invalid extension: child {extension} of face {new_base} is "
            f"{child}, not the old base {t.base_face}")
    return Thread(base_face=new_base, addresses=(extension,) + t.addresses)


def enumerate_threads(depth: int, base_face=None, d=None):
    """Yield every valid thread of the given depth, deterministically ordered.

    All 6^depth address chains are valid for every base, so the count is
    36 * 6^depth when no base face is fixed.
    """
    if depth < 0:
        raise ThreadError("depth must be nonnegative")
    if d is None:
        d = load_dataset()
    if base_face is None:
        bases = sorted(t.id for t in d.tiles)
    else:
        if not _has_tile(d, base_face):
            raise ThreadError(f"base face {base_face} is not in the dataset")
        bases = [base_face]

    def chains(k):
        if k == 0:
            yield ()
            return
        for head in range(1, CHILDREN_PER_RULE + 1):
            for rest in chains(k - 1):
                yield (head,) + rest

    for base in bases:
        for addr in chains(depth):
            yield Thread(base_face=base, addresses=addr)


def random_thread(depth: int, seed: int = 0, d=None) -> Thread:
    """A pseudo-random thread; fixed seed gives a fixed thread."""
    if depth < 0:
        raise ThreadError("depth must be nonnegative")
    if d is None:
        d = load_dataset()
    rng = random.Random(seed)
    base = rng.choice(sorted(t.id for t in d.tiles))
    addr = tuple(rng.randint(1, CHILDREN_PER_RULE) for _ in range(depth))
    return Thread(base_face=base, addresses=addr)
