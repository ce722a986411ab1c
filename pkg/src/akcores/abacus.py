# ABOUTME: Charged bead abaci: beta-number encoding of partitions, runner decomposition,
# ABOUTME: bead sliding to the e-core, containment and (e,s)-completeness of l-abaci.

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from akcores.exceptions import DomainError
from akcores.partitions import Multicharge, Multipartition, Partition, check_e, check_level


@dataclass(frozen=True, slots=True)
class Abacus:
    """
    The abacus L_charge(shape).

    Bead positions are shape_j - j + charge for j >= 1, the zero tail included, so every
    position below `floor` carries a bead and only finitely many beads sit at or above it.
    """

    charge: int
    shape: Partition

    @property
    def floor(self) -> int:
        return self.charge - self.shape.length

    @property
    def beta_numbers(self) -> tuple[int, ...]:
        return tuple(part - j + self.charge for j, part in enumerate(self.shape.parts, start=1))


@dataclass(frozen=True, slots=True)
class MultiAbacus:
    """(L_{s_1}(λ^1), ..., L_{s_l}(λ^l)); runner 1 is drawn at the bottom."""

    runners: tuple[Abacus, ...]

    @classmethod
    def of(cls, mp: Multipartition, s: Multicharge) -> "MultiAbacus":
        check_level(mp, s)
        return cls(tuple(Abacus(charge, p) for p, charge in zip(mp.components, s, strict=True)))

    @property
    def level(self) -> int:
        return len(self.runners)

    @property
    def charge(self) -> Multicharge:
        return tuple(a.charge for a in self.runners)

    @property
    def multipartition(self) -> Multipartition:
        return Multipartition(tuple(a.shape for a in self.runners))

    def runner(self, c: int) -> Abacus:
        """The 1-based runner c."""
        return self.runners[c - 1]

    def replace(self, c: int, a: Abacus) -> "MultiAbacus":
        runners = list(self.runners)
        runners[c - 1] = a
        return MultiAbacus(tuple(runners))


def from_partition(p: Partition, s: int) -> Abacus:
    return Abacus(s, p)


def to_partition(a: Abacus) -> tuple[Partition, int]:
    return a.shape, a.charge


def from_beads(positions: Iterable[int], floor: int) -> Abacus:
    """Decode a bead set given as: every position below floor, plus `positions` at or above it."""
    upper = sorted({x for x in positions if x >= floor}, reverse=True)
    charge = floor + len(upper)
    return Abacus(charge, Partition.of([bead + j - charge for j, bead in enumerate(upper, start=1)]))


def beads_from(a: Abacus, floor: int) -> set[int]:
    """Bead positions at or above floor."""
    tail = range(floor, a.floor)
    return {x for x in a.beta_numbers if x >= floor} | set(tail)


def beads(a: Abacus, lo: int, hi: int) -> frozenset[int]:
    """Occupied positions in the window [lo, hi]."""
    return frozenset(x for x in beads_from(a, min(lo, a.floor)) if lo <= x <= hi)


def has_bead(a: Abacus, x: int) -> bool:
    return x < a.floor or x in a.beta_numbers


def add_bead(a: Abacus, x: int) -> Abacus:
    if has_bead(a, x):
        msg = f"Position {x} of L_{a.charge}{a.shape} already carries a bead"
        raise DomainError(msg)
    floor = min(x, a.floor)
    return from_beads(beads_from(a, floor) | {x}, floor)


def remove_bead(a: Abacus, x: int) -> Abacus:
    if not has_bead(a, x):
        msg = f"Position {x} of L_{a.charge}{a.shape} is empty"
        raise DomainError(msg)
    floor = min(x, a.floor)
    return from_beads(beads_from(a, floor) - {x}, floor)


def shift(a: Abacus, k: int) -> Abacus:
    return Abacus(a.charge + k, a.shape)


def runner_decomposition(a: Abacus, e: int) -> list[Abacus]:
    """Split into e runners: bead k = q*e + r (floor division) becomes bead q of runner r."""
    check_e(e)
    floor = (a.floor // e) * e
    positions = beads_from(a, floor)
    return [from_beads(((k - r) // e for k in positions if k % e == r), floor // e) for r in range(e)]


def recompose(runners: Sequence[Abacus], e: int) -> Abacus:
    """Interleave runners back into one abacus; bead q of runner r goes to q*e + r."""
    if len(runners) != e:
        msg = f"Expected {e} runners, got {len(runners)}"
        raise DomainError(msg)
    floor = min(a.floor for a in runners)
    positions = {q * e + r for r, a in enumerate(runners) for q in beads_from(a, floor)}
    return from_beads(positions, floor * e)


def quotient(a: Abacus, e: int) -> list[Partition]:
    """The e-quotient: the shapes left on runners 0..e-1."""
    return [runner.shape for runner in runner_decomposition(a, e)]


def slide_to_core(a: Abacus, e: int) -> tuple[Abacus, int]:
    """Slide every bead down its runner as far as it goes. Returns (abacus of the e-core, e-weight)."""
    runners = runner_decomposition(a, e)
    weight = sum(runner.shape.size for runner in runners)
    packed = [Abacus(runner.charge, Partition()) for runner in runners]
    return recompose(packed, e), weight


def subset(a: Abacus, b: Abacus) -> bool:
    """L ⊂ L': every bead of a is a bead of b."""
    floor = min(a.floor, b.floor)
    return beads_from(a, floor) <= beads_from(b, floor)


def is_complete(ma: MultiAbacus, e: int) -> bool:
    """L_{s_1} ⊂ L_{s_2} ⊂ ... ⊂ L_{s_l} ⊂ L_{s_1 + e}."""
    check_e(e)
    chain = [*ma.runners, shift(ma.runners[0], e)]
    return all(subset(lower, upper) for lower, upper in itertools.pairwise(chain))


def render(ma: MultiAbacus, lo: int, hi: int) -> str:
    """Rows of o/. from position lo to hi, top runner first, with | just left of position 0."""
    rows = []
    for c in range(ma.level, 0, -1):
        runner = ma.runner(c)
        cells = []
        for x in range(lo, hi + 1):
            if x == 0:
                cells.append("|")
            cells.append("o" if has_bead(runner, x) else ".")
        rows.append(f"{c} {''.join(cells)}")
    return "\n".join(rows)
