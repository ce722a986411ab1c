# ABOUTME: Elementary operations on l-abaci, the core of an l-partition (by bead moves and through
# ABOUTME: the Uglov map), block equivalence, block decomposition and the weight-1 block structure.

import functools
import logging
import random
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import StrEnum

from akcores.abacus import MultiAbacus, add_bead, beads_from, has_bead, remove_bead, slide_to_core
from akcores.exceptions import DomainError, IllegalMoveError, InvariantError
from akcores.partitions import (
    Multicharge,
    Multipartition,
    check_e,
    check_level,
    e_core_by_hooks,
    enumerate_multipartitions,
    multipartition_to_data,
    permute,
    residue_content,
)
from akcores.uglov import in_a, in_a_bar, normalize, tau_abacus, tau_inverse_abacus

logger = logging.getLogger(__name__)


class MoveKind(StrEnum):
    UP = "up"
    WRAP = "wrap"


@dataclass(frozen=True, slots=True)
class ElementaryMove:
    """
    UP: the bead at `position` on `runner` (1..l-1) slides to the same position on runner + 1.
    WRAP: the bead at `position` on the top runner slides to position - e on runner 1.
    """

    kind: MoveKind
    runner: int
    position: int

    @classmethod
    def up(cls, runner: int, position: int) -> "ElementaryMove":
        return cls(MoveKind.UP, runner, position)

    @classmethod
    def wrap(cls, level: int, position: int) -> "ElementaryMove":
        return cls(MoveKind.WRAP, level, position)

    def __str__(self) -> str:
        if self.kind is MoveKind.UP:
            return f"UP({self.runner}, {self.position})"
        return f"WRAP({self.position})"


@dataclass(frozen=True, slots=True)
class CoreDescriptor:
    """
    The core (μ, v) of an l-partition and the number of elementary operations that reach it.

    `sigma` is the normalizing permutation of the input multicharge; the core is expressed in
    the permuted component order, so sigma relates it back to the caller's components.
    """

    core: Multipartition
    charge: Multicharge
    weight: int
    sigma: tuple[int, ...] = field(default=(), compare=False)


@dataclass(frozen=True, slots=True)
class BlockKey:
    """Residue content of the members, tagged with e and the normalized charge."""

    e: int
    charge: Multicharge
    counts: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Block:
    key: BlockKey
    members: tuple[Multipartition, ...]
    core: CoreDescriptor

    @property
    def weight(self) -> int:
        return self.core.weight


@dataclass(frozen=True, slots=True)
class WeightOneFamily:
    """Weight-1 multipartitions one inverse elementary operation away from cores of charge `shifted_charge`."""

    kind: MoveKind
    runner: int
    shifted_charge: Multicharge
    size: int
    rank: int


def _sweep_key(move: ElementaryMove) -> tuple[int, int]:
    return move.runner, move.position


def legal_moves(ma: MultiAbacus, e: int) -> list[ElementaryMove]:
    """Every legal elementary operation, lowest runner first, then lowest position."""
    check_e(e)
    level = ma.level
    moves = []
    for i in range(1, level):
        lower, upper = ma.runner(i), ma.runner(i + 1)
        floor = min(lower.floor, upper.floor)
        moves.extend(ElementaryMove.up(i, x) for x in beads_from(lower, floor) if not has_bead(upper, x))
    top, bottom = ma.runner(level), ma.runner(1)
    floor = min(top.floor, bottom.floor + e)
    moves.extend(ElementaryMove.wrap(level, x) for x in beads_from(top, floor) if not has_bead(bottom, x - e))
    return sorted(moves, key=_sweep_key)


def _check_move(ma: MultiAbacus, move: ElementaryMove) -> None:
    if move.kind is MoveKind.UP and not 1 <= move.runner < ma.level:
        msg = f"{move} needs a runner in 1..{ma.level - 1}"
        raise IllegalMoveError(msg)
    if move.kind is MoveKind.WRAP and move.runner != ma.level:
        msg = f"{move} must start on the top runner {ma.level}"
        raise IllegalMoveError(msg)


def apply_move(ma: MultiAbacus, move: ElementaryMove, e: int) -> MultiAbacus:
    check_e(e)
    _check_move(ma, move)
    x = move.position
    if move.kind is MoveKind.UP:
        i = move.runner
        if not has_bead(ma.runner(i), x) or has_bead(ma.runner(i + 1), x):
            msg = f"{move} is not legal: runner {i} must hold a bead at {x} and runner {i + 1} must not"
            raise IllegalMoveError(msg)
        ma = ma.replace(i, remove_bead(ma.runner(i), x))
        return ma.replace(i + 1, add_bead(ma.runner(i + 1), x))
    level = ma.level
    if not has_bead(ma.runner(level), x) or has_bead(ma.runner(1), x - e):
        msg = f"{move} is not legal: runner {level} must hold a bead at {x} and runner 1 none at {x - e}"
        raise IllegalMoveError(msg)
    ma = ma.replace(level, remove_bead(ma.runner(level), x))
    return ma.replace(1, add_bead(ma.runner(1), x - e))


def inverse_moves(ma: MultiAbacus, e: int) -> list[ElementaryMove]:
    """Moves m such that m is legal on apply_inverse_move(ma, m) and leads back to ma."""
    check_e(e)
    level = ma.level
    moves = []
    for i in range(1, level):
        lower, upper = ma.runner(i), ma.runner(i + 1)
        floor = min(lower.floor, upper.floor)
        moves.extend(ElementaryMove.up(i, x) for x in beads_from(upper, floor) if not has_bead(lower, x))
    top, bottom = ma.runner(level), ma.runner(1)
    floor = min(bottom.floor, top.floor - e)
    moves.extend(ElementaryMove.wrap(level, y + e) for y in beads_from(bottom, floor) if not has_bead(top, y + e))
    return sorted(moves, key=_sweep_key)


def apply_inverse_move(ma: MultiAbacus, move: ElementaryMove, e: int) -> MultiAbacus:
    """Undo `move`: runner i + 1 at x back to runner i at x, or runner 1 at x - e back to the top runner at x."""
    check_e(e)
    _check_move(ma, move)
    x = move.position
    if move.kind is MoveKind.UP:
        i = move.runner
        if not has_bead(ma.runner(i + 1), x) or has_bead(ma.runner(i), x):
            msg = f"Inverse of {move} is not legal on this abacus"
            raise IllegalMoveError(msg)
        ma = ma.replace(i + 1, remove_bead(ma.runner(i + 1), x))
        return ma.replace(i, add_bead(ma.runner(i), x))
    level = ma.level
    if not has_bead(ma.runner(1), x - e) or has_bead(ma.runner(level), x):
        msg = f"Inverse of {move} is not legal on this abacus"
        raise IllegalMoveError(msg)
    ma = ma.replace(1, remove_bead(ma.runner(1), x - e))
    return ma.replace(level, add_bead(ma.runner(level), x))


def _normalized_abacus(mp: Multipartition, s: Multicharge, e: int) -> tuple[MultiAbacus, tuple[int, ...]]:
    check_level(mp, s)
    normalized = normalize(s, e)
    return MultiAbacus.of(permute(mp, normalized.sigma), normalized.charge), normalized.sigma


def core_by_ops(
    mp: Multipartition, s: Multicharge, e: int, rng: random.Random | None = None
) -> CoreDescriptor:
    """
    Normalize the charge, then apply elementary operations until none is legal.

    Without `rng` the first move of the sweep order is always taken; with it a random legal
    move is chosen at each step. The result does not depend on the order.
    """
    ma, sigma = _normalized_abacus(mp, s, e)
    weight = 0
    while moves := legal_moves(ma, e):
        move = rng.choice(moves) if rng is not None else moves[0]
        ma = apply_move(ma, move, e)
        weight += 1
    logger.debug("Core of %s at %s reached after %d elementary operations", mp, s, weight)
    return CoreDescriptor(ma.multipartition, ma.charge, weight, sigma)


def core_by_tau(mp: Multipartition, s: Multicharge, e: int) -> CoreDescriptor:
    """Normalize, map through τ, slide the image to its e-core and map back."""
    ma, sigma = _normalized_abacus(mp, s, e)
    core, weight = slide_to_core(tau_abacus(ma, e), e)
    result = tau_inverse_abacus(core, ma.level, e)
    return CoreDescriptor(result.multipartition, result.charge, weight, sigma)


def multicore(mp: Multipartition, e: int) -> Multipartition:
    """The componentwise e-core."""
    return Multipartition(tuple(e_core_by_hooks(p, e)[0] for p in mp.components))


def hook_removal_moves(ma: MultiAbacus, runner: int, position: int, e: int) -> list[ElementaryMove]:
    """
    l elementary operations moving the bead at `position` of `runner` to position - e of the same runner.

    The positions x on runners runner..l followed by x - e on runners 1..runner form a chain in
    which every elementary operation advances a bead by one step. Beads are pushed forward
    starting with the one nearest the end of the chain.
    """
    check_e(e)
    level = ma.level
    if not has_bead(ma.runner(runner), position) or has_bead(ma.runner(runner), position - e):
        msg = f"Runner {runner} needs a bead at {position} and a gap at {position - e}"
        raise DomainError(msg)

    def slot(k: int) -> tuple[int, int]:
        c = runner + k
        return (c, position) if c <= level else (c - level, position - e)

    occupied = [k for k in range(level) if has_bead(ma.runner(slot(k)[0]), slot(k)[1])]
    moves = []
    target = level
    for k in reversed(occupied):
        for step in range(k, target):
            c, x = slot(step)
            moves.append(ElementaryMove.wrap(level, x) if c == level else ElementaryMove.up(c, x))
        target = k
    return moves


def same_block(mp1: Multipartition, mp2: Multipartition, s: Multicharge, e: int) -> bool:
    """Equal rank and equal residue content."""
    return mp1.size == mp2.size and residue_content(mp1, s, e) == residue_content(mp2, s, e)


def block_key(mp: Multipartition, s: Multicharge, e: int) -> BlockKey:
    return BlockKey(e, normalize(s, e).charge, residue_content(mp, s, e).counts)


def _chunks(n_items: int, workers: int) -> int:
    return max(1, n_items // (4 * workers))


def decompose_blocks(n: int, level: int, e: int, s: Multicharge, workers: int | None = None) -> list[Block]:
    """
    Group the l-partitions of n into blocks, in order of first appearance in the enumeration.

    With `workers` the cores are computed in a process pool; grouping is a pure reduction
    over the enumeration order, so the output does not depend on the worker count.
    """
    check_e(e)
    if len(s) != level:
        msg = f"Multicharge {list(s)} has length {len(s)}, expected {level}"
        raise DomainError(msg)
    if workers is not None and workers < 1:
        msg = f"Worker count must be positive, got {workers}"
        raise DomainError(msg)
    members = list(enumerate_multipartitions(n, level))
    compute = functools.partial(core_by_ops, s=s, e=e)
    if workers:
        logger.debug("Computing %d cores with %d workers", len(members), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cores = list(pool.map(compute, members, chunksize=_chunks(len(members), workers)))
    else:
        cores = [compute(mp) for mp in members]

    grouped: dict[BlockKey, list[tuple[Multipartition, CoreDescriptor]]] = {}
    for mp, core in zip(members, cores, strict=True):
        grouped.setdefault(block_key(mp, s, e), []).append((mp, core))

    blocks = []
    for key, items in grouped.items():
        distinct = {core for _, core in items}
        if len(distinct) != 1:
            msg = f"Block {key} has members with {len(distinct)} different cores"
            raise InvariantError(msg)
        blocks.append(Block(key, tuple(mp for mp, _ in items), items[0][1]))
    logger.debug("%d l-partitions of %d split into %d blocks", len(members), n, len(blocks))
    return blocks


def _inverse_frontier(start: MultiAbacus, steps: int, e: int) -> Iterator[MultiAbacus]:
    frontier = {start}
    for _ in range(steps):
        frontier = {apply_inverse_move(ma, m, e) for ma in frontier for m in inverse_moves(ma, e)}
    return iter(frontier)


def block_from_core(core: CoreDescriptor, v: Multicharge, weight: int, e: int) -> list[Multipartition]:
    """
    The l-partitions of charge v whose core is `core`: every way of undoing `weight` elementary
    operations on the core abacus that lands on charge v.
    """
    if len(v) != core.core.level:
        msg = f"Multicharge {list(v)} does not match the core's {core.core.level} components"
        raise DomainError(msg)
    start = MultiAbacus.of(core.core, core.charge)
    found = {ma.multipartition for ma in _inverse_frontier(start, weight, e) if ma.charge == tuple(v)}
    return sorted(found, key=multipartition_to_data)


def weight_one_structure(core: CoreDescriptor, v: Multicharge, e: int) -> list[WeightOneFamily]:
    """
    Families of weight-1 l-partitions of charge v, each obtained from a core of charge
    `shifted_charge` by one inverse elementary operation.

    Only families whose shifted charge lies in Ā^l_e exist. Ranks are predicted from the rank
    of `core`; sizes count the members of one block.
    """
    check_e(e)
    if not in_a(v, e):
        v = normalize(v, e).charge
    level = len(v)
    base = core.core.size
    if level == 1:
        return [WeightOneFamily(MoveKind.WRAP, 1, tuple(v), e, base + e)]

    families = []
    for i in range(1, level):
        shifted = list(v)
        shifted[i - 1] -= 1
        shifted[i] += 1
        if in_a_bar(tuple(shifted), e):
            gap = v[i] - v[i - 1]
            families.append(WeightOneFamily(MoveKind.UP, i, tuple(shifted), gap + 2, base + gap + 1))
    shifted = list(v)
    shifted[0] += 1
    shifted[-1] -= 1
    if in_a_bar(tuple(shifted), e):
        gap = v[0] - v[-1] + e
        families.append(WeightOneFamily(MoveKind.WRAP, level, tuple(shifted), gap + 2, base + gap + 1))
    return families
