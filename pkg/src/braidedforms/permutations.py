"""Permutations, reduced words, and shuffle sets.

Permutations act on {1..j} and are stored in one-line notation.  Products
compose as functions: (s*t)(i) = s(t(i)).  Shuffle sets follow the braided
multinomial convention: for a partition pi = (j_1,...,j_r) of j the lower set
consists of the permutations that are increasing on each consecutive block,
and the upper set is its set of inverses.
"""

from __future__ import annotations

from itertools import combinations
from math import factorial
from typing import Iterator

from .errors import ShapeError


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ShapeError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @staticmethod
    def identity(j: int) -> "Permutation":
        return Permutation(range(1, j + 1))

    @staticmethod
    def transposition(j: int, a: int) -> "Permutation":
        """The adjacent transposition t_a = (a, a+1) in S_j."""
        images = list(range(1, j + 1))
        images[a - 1], images[a] = images[a], images[a - 1]
        return Permutation(images)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise ShapeError("permutation size mismatch")
        return Permutation(self.images[other.images[i] - 1] for i in range(self.size))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, v in enumerate(self.images):
            images[v - 1] = i + 1
        return Permutation(images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"

    def length(self) -> int:
        """Number of inversions = length of any reduced word."""
        count = 0
        images = self.images
        for a in range(len(images)):
            for b in range(a + 1, len(images)):
                if images[a] > images[b]:
                    count += 1
        return count

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def reduced_expression(self) -> tuple[int, ...]:
        """Canonical reduced word (bubble sort): right-multiply away the
        leftmost descent.  Product t_{a_1} ... t_{a_l} (leftmost applied last)
        equals the permutation."""
        word = []
        images = list(self.images)
        while True:
            for a in range(len(images) - 1):
                if images[a] > images[a + 1]:
                    images[a], images[a + 1] = images[a + 1], images[a]
                    word.append(a + 1)
                    break
            else:
                break
        # sigma = sigma' * t_a collects a last-to-first
        return tuple(reversed(word))

    def reduced_expression_left(self) -> tuple[int, ...]:
        """A second reduced word: strip left descents (a-positions of
        sigma^{-1}); generally differs from reduced_expression."""
        word = []
        inv = list(self.inverse().images)
        while True:
            for a in range(len(inv) - 1):
                if inv[a] > inv[a + 1]:
                    inv[a], inv[a + 1] = inv[a + 1], inv[a]
                    word.append(a + 1)
                    break
            else:
                break
        return tuple(word)


def word_to_permutation(j: int, word) -> Permutation:
    p = Permutation.identity(j)
    for a in word:
        p = p * Permutation.transposition(j, a)
    return p


def all_permutations(j: int) -> Iterator[Permutation]:
    from itertools import permutations as _perms

    for images in _perms(range(1, j + 1)):
        yield Permutation(images)


class Partition:
    """An N_0-partition (composition, zero parts allowed) of its total."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts) or len(parts) == 0:
            raise ShapeError(f"invalid partition {parts}")
        self.parts = parts

    @property
    def total(self) -> int:
        return sum(self.parts)

    def blocks(self):
        """Consecutive index blocks B_k inside {1..total}."""
        out = []
        start = 1
        for p in self.parts:
            out.append(tuple(range(start, start + p)))
            start += p
        return out

    def multinomial_count(self) -> int:
        num = factorial(self.total)
        for p in self.parts:
            num //= factorial(p)
        return num

    def __repr__(self):
        return f"Partition{self.parts}"


def shuffle_set(pi: Partition, side: str) -> list[Permutation]:
    """Shuffles for the partition pi of j.

    side="lower": permutations increasing on each consecutive block (the
    inverse shuffle set); side="upper": their inverses (order-preserving onto
    each block).  Generated combinatorially, sorted by one-line notation.
    """
    j = pi.total
    lower = []

    def assign(block_idx, remaining, images):
        if block_idx == len(pi.parts):
            lower.append(Permutation(images))
            return
        size = pi.parts[block_idx]
        start = sum(pi.parts[:block_idx])
        for chosen in combinations(remaining, size):
            nxt = list(images)
            for offset, value in enumerate(sorted(chosen)):
                nxt[start + offset] = value
            assign(block_idx + 1, [v for v in remaining if v not in chosen], nxt)

    assign(0, list(range(1, j + 1)), [0] * j)
    if side == "lower":
        result = lower
    elif side == "upper":
        result = [p.inverse() for p in lower]
    else:
        raise ValueError(f"side must be lower or upper, got {side!r}")
    return sorted(result, key=lambda p: p.images)


def length(p: Permutation) -> int:
    return p.length()


def reduced_expression(p: Permutation):
    return p.reduced_expression()
