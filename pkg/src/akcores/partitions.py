# ABOUTME: Partitions, multipartitions, nodes and residues, rim hook removal, and exhaustive
# ABOUTME: enumeration of l-partitions together with their nested-array JSON format.

import itertools
import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from akcores.exceptions import DomainError, ParseError

type Multicharge = tuple[int, ...]


def check_e(e: int) -> None:
    """Reject moduli outside the finite range e >= 2."""
    if e < 2:
        msg = f"e must be an integer >= 2, got {e}"
        raise DomainError(msg)


@dataclass(frozen=True, slots=True)
class Partition:
    """A weakly decreasing tuple of positive integers, stored without trailing zeros."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for k, part in enumerate(self.parts):
            if part <= 0:
                msg = f"Partition parts must be positive, got {list(self.parts)}"
                raise DomainError(msg)
            if k > 0 and part > self.parts[k - 1]:
                msg = f"Partition parts must be weakly decreasing, got {list(self.parts)}"
                raise DomainError(msg)

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        """Build a partition from any sequence, dropping zero parts."""
        return cls(tuple(part for part in parts if part != 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, row: int) -> int:
        """Length of the given 1-based row, zero below the last part."""
        return self.parts[row - 1] if row <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for part in self.parts if part >= col) for col in range(1, self.parts[0] + 1)))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "∅"


@dataclass(frozen=True, slots=True)
class Multipartition:
    """An l-tuple of partitions, l >= 1."""

    components: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if not self.components:
            msg = "A multipartition needs at least one component"
            raise DomainError(msg)

    @classmethod
    def of(cls, *components: Sequence[int]) -> "Multipartition":
        """Multipartition.of([3, 2], [], [1]) builds ((3,2), ∅, (1))."""
        return cls(tuple(Partition.of(c) for c in components))

    @classmethod
    def empty(cls, level: int) -> "Multipartition":
        return cls(tuple(Partition() for _ in range(level)))

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)

    def component(self, c: int) -> Partition:
        """The 1-based component c."""
        return self.components[c - 1]

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.components) + ")"


class Node(NamedTuple):
    row: int
    col: int
    component: int


@dataclass(frozen=True, slots=True)
class ResidueVector:
    """Number of nodes of each residue 0..e-1."""

    e: int
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i % self.e]

    @property
    def total(self) -> int:
        return sum(self.counts)


def check_level(mp: Multipartition, s: Multicharge) -> None:
    if len(s) != mp.level:
        msg = f"Multicharge {list(s)} has length {len(s)} but the multipartition has {mp.level} components"
        raise DomainError(msg)


def residue(node: Node, s: Multicharge, e: int) -> int:
    """Residue (col - row + s_c) mod e, always in 0..e-1."""
    check_e(e)
    if not 1 <= node.component <= len(s):
        msg = f"Node component {node.component} is outside 1..{len(s)}"
        raise DomainError(msg)
    return (node.col - node.row + s[node.component - 1]) % e


def nodes(mp: Multipartition) -> Iterator[Node]:
    for c, p in enumerate(mp.components, start=1):
        for row, length in enumerate(p.parts, start=1):
            for col in range(1, length + 1):
                yield Node(row, col, c)


def in_diagram(mp: Multipartition, node: Node) -> bool:
    if not 1 <= node.component <= mp.level or node.row < 1:
        return False
    return 1 <= node.col <= mp.component(node.component).part(node.row)


def residue_content(mp: Multipartition, s: Multicharge, e: int) -> ResidueVector:
    check_e(e)
    check_level(mp, s)
    counts = [0] * e
    for node in nodes(mp):
        counts[residue(node, s, e)] += 1
    return ResidueVector(e, tuple(counts))


def addable_nodes(mp: Multipartition) -> list[Node]:
    """Positions outside the diagram whose addition still gives a multipartition."""
    result = []
    for c, p in enumerate(mp.components, start=1):
        for row in range(1, p.length + 2):
            if row == 1 or p.part(row - 1) > p.part(row):
                result.append(Node(row, p.part(row) + 1, c))
    return result


def removable_nodes(mp: Multipartition) -> list[Node]:
    result = []
    for c, p in enumerate(mp.components, start=1):
        for row in range(1, p.length + 1):
            if p.part(row) > p.part(row + 1):
                result.append(Node(row, p.part(row), c))
    return result


def addable_removable(mp: Multipartition, s: Multicharge, e: int, i: int) -> tuple[list[Node], list[Node]]:
    """Addable and removable nodes of residue i, in component/row order."""
    check_e(e)
    check_level(mp, s)
    addable = [node for node in addable_nodes(mp) if residue(node, s, e) == i % e]
    removable = [node for node in removable_nodes(mp) if residue(node, s, e) == i % e]
    return addable, removable


def m_stat(mp: Multipartition, s: Multicharge, e: int, i: int) -> int:
    """M_i^s: number of addable minus number of removable i-nodes."""
    addable, removable = addable_removable(mp, s, e, i)
    return len(addable) - len(removable)


def add_node(mp: Multipartition, node: Node) -> Multipartition:
    components = list(mp.components)
    p = components[node.component - 1]
    parts = [*p.parts, 0]
    parts[node.row - 1] += 1
    components[node.component - 1] = Partition.of(parts)
    return Multipartition(tuple(components))


def remove_node(mp: Multipartition, node: Node) -> Multipartition:
    components = list(mp.components)
    p = components[node.component - 1]
    parts = list(p.parts)
    parts[node.row - 1] -= 1
    components[node.component - 1] = Partition.of(parts)
    return Multipartition(tuple(components))


def hook_length(p: Partition, row: int, col: int) -> int:
    """Arm + leg + 1 of the cell (row, col), both 1-based."""
    return p.part(row) - col + p.conjugate().part(col) - row + 1


def remove_rim_hook(p: Partition, e: int, start_row: int) -> Partition | None:
    """Strip the rim e-hook whose head is the last cell of start_row, or None if there is none."""
    check_e(e)
    if not 1 <= start_row <= p.length:
        return None
    conjugate = p.conjugate()
    for col in range(1, p.part(start_row) + 1):
        if p.part(start_row) - col + conjugate.part(col) - start_row + 1 != e:
            continue
        foot_row = conjugate.part(col)
        parts = list(p.parts)
        for row in range(start_row, foot_row):
            parts[row - 1] = p.part(row + 1) - 1
        parts[foot_row - 1] = col - 1
        return Partition.of(parts)
    return None


def rim_hook_rows(p: Partition, e: int) -> list[int]:
    """Rows heading a removable rim e-hook."""
    return [row for row in range(1, p.length + 1) if remove_rim_hook(p, e, row) is not None]


def e_core_by_hooks(p: Partition, e: int) -> tuple[Partition, int]:
    """Strip rim e-hooks until none is left. Returns (e-core, e-weight)."""
    check_e(e)
    weight = 0
    while True:
        rows = rim_hook_rows(p, e)
        if not rows:
            return p, weight
        stripped = remove_rim_hook(p, e, rows[0])
        assert stripped is not None
        p = stripped
        weight += 1


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first, *rest)


def _check_rank(n: int) -> None:
    if n < 0:
        msg = f"Rank must be nonnegative, got {n}"
        raise DomainError(msg)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1,...,1)."""
    _check_rank(n)
    for parts in _partitions(n, n):
        yield Partition(parts)


def _compositions(n: int, level: int) -> Iterator[tuple[int, ...]]:
    if level == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, level - 1):
            yield (first, *rest)


def enumerate_multipartitions(n: int, level: int) -> Iterator[Multipartition]:
    """
    Every l-partition of n exactly once.

    Component ranks run through the compositions of n in decreasing lexicographic order
    ((n,0,...,0) first); within a composition the components follow the order of
    enumerate_partitions, the first component varying slowest.
    """
    _check_rank(n)
    if level < 1:
        msg = f"Level must be positive, got {level}"
        raise DomainError(msg)
    for ranks in _compositions(n, level):
        for components in itertools.product(*(list(enumerate_partitions(k)) for k in ranks)):
            yield Multipartition(components)


def permute(mp: Multipartition, sigma: Sequence[int]) -> Multipartition:
    """(λ^{σ(1)}, ..., λ^{σ(l)}) for a 1-based permutation σ."""
    return Multipartition(tuple(mp.component(k) for k in sigma))


def _parse_parts(data: object, text: str) -> Partition:
    if not isinstance(data, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in data):
        msg = f"Expected a list of integers, got {text!r}"
        raise ParseError(msg)
    return Partition(tuple(data))


def parse_partition(text: str) -> Partition:
    """Read "[5,4,2,1,1]"; the empty partition is "[]"."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        msg = f"Invalid partition {text!r}: {e}"
        raise ParseError(msg) from e
    return _parse_parts(data, text)


def parse_multipartition(text: str) -> Multipartition:
    """Read "[[3],[1]]"; the empty 2-partition is "[[],[]]"."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        msg = f"Invalid multipartition {text!r}: {e}"
        raise ParseError(msg) from e
    if not isinstance(data, list) or not data:
        msg = f"Expected a non-empty list of partitions, got {text!r}"
        raise ParseError(msg)
    return Multipartition(tuple(_parse_parts(component, text) for component in data))


def multipartition_to_data(mp: Multipartition) -> list[list[int]]:
    return [list(c.parts) for c in mp.components]


def multipartition_to_json(mp: Multipartition) -> str:
    return json.dumps(multipartition_to_data(mp), separators=(",", ":"))
