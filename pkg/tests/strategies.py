# ABOUTME: Shared hypothesis strategies and seeded generators for partitions, multipartitions
# ABOUTME: and multicharges used across the akcores test modules.

import random
from collections.abc import Iterator

from hypothesis import strategies as st

from akcores.partitions import Multicharge, Multipartition, Partition, enumerate_multipartitions


@st.composite
def partitions(draw: st.DrawFn, max_size: int = 10) -> Partition:
    parts = draw(st.lists(st.integers(min_value=1, max_value=max_size), max_size=max_size))
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def multipartitions(draw: st.DrawFn, level: int, max_size: int = 6) -> Multipartition:
    return Multipartition(tuple(draw(partitions(max_size)) for _ in range(level)))


def charges(level: int, lo: int = -6, hi: int = 6) -> st.SearchStrategy[Multicharge]:
    return st.tuples(*(st.integers(min_value=lo, max_value=hi) for _ in range(level)))


def random_charge(rng: random.Random, level: int, lo: int = -6, hi: int = 6) -> Multicharge:
    return tuple(rng.randint(lo, hi) for _ in range(level))


def random_charge_in_a_bar(rng: random.Random, level: int, e: int) -> Multicharge:
    """A multicharge with 0 <= s_j - s_i <= e for i < j."""
    start = rng.randint(-6, 6)
    offsets = sorted(rng.randint(0, e) for _ in range(level - 1))
    return (start, *(start + offset for offset in offsets))


def all_multipartitions(max_n: int, level: int) -> Iterator[Multipartition]:
    for n in range(max_n + 1):
        yield from enumerate_multipartitions(n, level)
