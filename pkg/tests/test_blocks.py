# ABOUTME: Tests for elementary operations, cores of l-partitions by bead moves and through the
# ABOUTME: Uglov map, block equivalence, block decomposition and the weight-1 block structure.

import random

import pytest

from akcores.abacus import MultiAbacus, add_bead, beads_from, has_bead, remove_bead
from akcores.blocks import (
    CoreDescriptor,
    ElementaryMove,
    MoveKind,
    WeightOneFamily,
    apply_inverse_move,
    apply_move,
    block_from_core,
    block_key,
    core_by_ops,
    core_by_tau,
    decompose_blocks,
    hook_removal_moves,
    inverse_moves,
    legal_moves,
    multicore,
    same_block,
    weight_one_structure,
)
from akcores.exceptions import DomainError, IllegalMoveError
from akcores.partitions import (
    Multicharge,
    Multipartition,
    e_core_by_hooks,
    enumerate_multipartitions,
    multipartition_to_data,
    permute,
    rim_hook_rows,
)
from akcores.uglov import in_a_bar, is_core, is_reduced_core, normalize, tau, tau_abacus
from akcores.weights import block_weight
from tests.strategies import all_multipartitions, random_charge

EIGHT_STEP_EXAMPLE = Multipartition.of([3, 2], [1, 1], [2, 2, 1])
EIGHT_STEP_CORE = CoreDescriptor(Multipartition.of([1], [], []), (0, 2, 2), 8)


def _abacus(mp: Multipartition, s: Multicharge) -> MultiAbacus:
    return MultiAbacus.of(mp, s)


def test_move_str() -> None:
    """Test the printed form of elementary operations."""
    assert str(ElementaryMove.up(1, 2)) == "UP(1, 2)"
    assert str(ElementaryMove.wrap(3, 5)) == "WRAP(5)"
    assert ElementaryMove.wrap(3, 5).kind is MoveKind.WRAP


def test_legal_moves_of_a_weight_one_abacus() -> None:
    """Test that ((3),(1)) at (0,1), e=4 has a single legal operation."""
    assert legal_moves(_abacus(Multipartition.of([3], [1]), (0, 1)), 4) == [ElementaryMove.up(1, 2)]


def test_complete_abacus_has_no_legal_moves() -> None:
    """Test that a reduced core admits no operation."""
    assert legal_moves(_abacus(Multipartition.of([1, 1], [3, 1, 1]), (0, 1)), 3) == []


def test_one_runner_moves_are_rim_hook_removals() -> None:
    """Test that with one component only WRAP moves exist, one per removable rim e-hook."""
    for e in (2, 3, 4):
        for mp in all_multipartitions(8, 1):
            moves = legal_moves(_abacus(mp, (0,)), e)
            assert all(move.kind is MoveKind.WRAP for move in moves)
            assert len(moves) == len(rim_hook_rows(mp.component(1), e))


def test_apply_up_move() -> None:
    """Test UP(1,2) on ((3),(1)) at (0,1), e=4."""
    moved = apply_move(_abacus(Multipartition.of([3], [1]), (0, 1)), ElementaryMove.up(1, 2), 4)
    assert moved.multipartition == Multipartition.of([], [1, 1])
    assert moved.charge == (-1, 2)
    assert moved.multipartition.size == 2


@pytest.mark.parametrize(
    "move",
    [
        ElementaryMove.up(1, -2),
        ElementaryMove.up(2, 0),
        ElementaryMove(MoveKind.WRAP, 1, 1),
        ElementaryMove.wrap(2, 1),
    ],
)
def test_illegal_moves_are_rejected(move: ElementaryMove) -> None:
    """Test that moves breaking the bead conditions or naming the wrong runner raise."""
    with pytest.raises(IllegalMoveError):
        apply_move(_abacus(Multipartition.of([3], [1]), (0, 1)), move, 4)


def _moves_on_small_abaci() -> list[tuple[MultiAbacus, ElementaryMove, int]]:
    rng = random.Random(31)
    cases = []
    for level, e in [(2, 3), (2, 4), (3, 3)]:
        for _ in range(3):
            s = random_charge(rng, level, -3, 3)
            for mp in all_multipartitions(5 if level == 2 else 4, level):
                ma = _abacus(mp, s)
                cases.extend((ma, move, e) for move in legal_moves(ma, e))
    return cases


def test_inverse_move_restores_the_abacus() -> None:
    """Test that undoing a legal operation gives back the abacus and is listed among the inverse moves."""
    for ma, move, e in _moves_on_small_abaci():
        moved = apply_move(ma, move, e)
        assert move in inverse_moves(moved, e)
        assert apply_inverse_move(moved, move, e) == ma


def test_inverse_move_must_be_legal() -> None:
    """Test that an inverse move needs a bead to take back."""
    with pytest.raises(IllegalMoveError):
        apply_inverse_move(_abacus(Multipartition.of([3], [1]), (0, 1)), ElementaryMove.up(1, 2), 4)


def test_moves_change_rank_as_predicted() -> None:
    """Test that UP drops the rank to n - s_{i+1} + s_i - 1 and WRAP to n - (s_1 - s_l + e + 1)."""
    for ma, move, e in _moves_on_small_abaci():
        n, s = ma.multipartition.size, ma.charge
        moved = apply_move(ma, move, e)
        if move.kind is MoveKind.UP:
            i = move.runner
            expected = n - s[i] + s[i - 1] - 1
        else:
            expected = n - (s[0] - s[-1] + e + 1)
        assert moved.multipartition.size == expected
        assert sum(moved.charge) == sum(s)


def test_each_move_lowers_one_bead_of_the_interleaved_abacus() -> None:
    """Test that an operation moves exactly one bead of the τ abacus down by e."""
    for ma, move, e in _moves_on_small_abaci():
        before = tau_abacus(ma, e)
        after = tau_abacus(apply_move(ma, move, e), e)
        floor = min(before.floor, after.floor) - e
        removed = beads_from(before, floor) - beads_from(after, floor)
        added = beads_from(after, floor) - beads_from(before, floor)
        assert len(removed) == 1
        assert added == {removed.pop() - e}


@pytest.mark.parametrize(
    ("mp", "s", "e", "expected"),
    [
        (EIGHT_STEP_EXAMPLE, (0, 1, 3), 4, EIGHT_STEP_CORE),
        (Multipartition.of([1], [4, 2], [3, 2]), (0, 1, 3), 4, EIGHT_STEP_CORE),
        (Multipartition.of([4], []), (0, 1), 4, CoreDescriptor(Multipartition.empty(2), (0, 1), 2)),
        (Multipartition.of([3], [1]), (0, 1), 4, CoreDescriptor(Multipartition.of([], [1, 1]), (-1, 2), 1)),
        (Multipartition.of([2, 1], [1]), (0, 1), 4, CoreDescriptor(Multipartition.of([2, 1], [1]), (0, 1), 0)),
    ],
)
def test_core(mp: Multipartition, s: Multicharge, e: int, expected: CoreDescriptor) -> None:
    """Test cores reached by bead moves and through the Uglov map."""
    assert core_by_ops(mp, s, e) == expected
    assert core_by_tau(mp, s, e) == expected


def test_core_reports_the_normalizing_permutation() -> None:
    """Test that the core of ((3,1,1),(1,1)) at (10,0) is itself, in swapped component order."""
    core = core_by_ops(Multipartition.of([3, 1, 1], [1, 1]), (10, 0), 3)
    assert core.sigma == (2, 1)
    assert core.core == Multipartition.of([1, 1], [3, 1, 1])
    assert core.charge == (0, 1)
    assert core.weight == 0


def _random_cases() -> list[tuple[Multipartition, Multicharge, int]]:
    rng = random.Random(37)
    cases = []
    for level, e in [(1, 3), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]:
        members = list(all_multipartitions(8, level))
        for _ in range(50):
            s = random_charge(rng, level)
            cases.extend((mp, s, e) for mp in members)
    return cases


@pytest.mark.slow
def test_both_core_routes_agree() -> None:
    """Test that bead moves and the Uglov map find the same core and weight."""
    for mp, s, e in _random_cases():
        assert core_by_ops(mp, s, e) == core_by_tau(mp, s, e)


@pytest.mark.slow
def test_core_properties() -> None:
    """Test that cores are reduced, charged in the closure of A, and account for the weight."""
    for mp, s, e in _random_cases():
        core = core_by_ops(mp, s, e)
        normalized = normalize(s, e)
        assert is_reduced_core(core.core, core.charge, e)
        assert in_a_bar(core.charge, e)
        assert sum(core.charge) == sum(normalized.charge)
        assert core.weight == block_weight(mp, s, e)
        image, _ = tau(permute(mp, normalized.sigma), normalized.charge, e)
        core_image, _ = tau(core.core, core.charge, e)
        assert image.size - core_image.size == e * core.weight


@pytest.mark.slow
def test_core_does_not_depend_on_move_order() -> None:
    """Test that random choices of legal operations always end at the same core."""
    instances: list[tuple[Multipartition, Multicharge, int]] = [(EIGHT_STEP_EXAMPLE, (0, 1, 3), 4)]
    for s, e, max_n in [((0, 2), 3, 6), ((1, 0), 4, 6), ((0, 1, 3), 4, 5)]:
        instances.extend((mp, s, e) for mp in all_multipartitions(max_n, len(s)))
    for mp, s, e in instances:
        expected = core_by_ops(mp, s, e)
        for seed in range(20):
            assert core_by_ops(mp, s, e, random.Random(seed)) == expected


def test_cores_are_their_own_core() -> None:
    """Test that an (e,s)-core has weight 0 and is returned unchanged."""
    for mp in enumerate_multipartitions(4, 3):
        if is_core(mp, (0, 1, 3), 4):
            assert core_by_ops(mp, (0, 1, 3), 4) == CoreDescriptor(mp, (0, 1, 3), 0)


def test_hook_removal_by_elementary_moves() -> None:
    """Test that l operations slide one bead down its own runner, removing one rim e-hook."""
    checked = 0
    for s, e in [((0, 1), 3), ((0, 1, 3), 4)]:
        for mp in all_multipartitions(6 if len(s) == 2 else 5, len(s)):
            ma = _abacus(mp, s)
            for c in range(1, ma.level + 1):
                runner = ma.runner(c)
                for x in sorted(beads_from(runner, runner.floor)):
                    if has_bead(runner, x - e):
                        continue
                    moves = hook_removal_moves(ma, c, x, e)
                    assert len(moves) == ma.level
                    result = ma
                    for move in moves:
                        result = apply_move(result, move, e)
                    assert result == ma.replace(c, add_bead(remove_bead(runner, x), x - e))
                    hook_weight = e_core_by_hooks(mp.component(c), e)[1]
                    assert e_core_by_hooks(result.multipartition.component(c), e)[1] == hook_weight - 1
                    assert block_weight(result.multipartition, s, e) == block_weight(mp, s, e) - ma.level
                    checked += 1
    assert checked > 0


def test_hook_removal_needs_a_free_slot() -> None:
    """Test that a bead with another bead e below it cannot be slid."""
    ma = _abacus(Multipartition.of([3], [1]), (0, 1))
    with pytest.raises(DomainError):
        hook_removal_moves(ma, 1, -2, 4)
    with pytest.raises(DomainError):
        hook_removal_moves(ma, 1, 1, 4)


def test_multicore() -> None:
    """Test the componentwise e-core."""
    assert multicore(Multipartition.of([5, 4, 2, 1, 1], []), 3) == Multipartition.of([3, 1], [])


def test_cores_are_multicores_but_not_conversely() -> None:
    """Test that every (e,s)-core is a multicore and that ((3),(1)) is a multicore but no core."""
    for mp in enumerate_multipartitions(4, 2):
        if is_core(mp, (0, 1), 4):
            assert multicore(mp, 4) == mp
    weight_one = Multipartition.of([3], [1])
    assert multicore(weight_one, 4) == weight_one
    assert not is_core(weight_one, (0, 1), 4)


@pytest.mark.parametrize(
    ("mp1", "mp2", "s", "e", "expected"),
    [
        (EIGHT_STEP_EXAMPLE, Multipartition.of([1], [4, 2], [3, 2]), (0, 1, 3), 4, True),
        (EIGHT_STEP_EXAMPLE, EIGHT_STEP_EXAMPLE, (0, 1, 3), 4, True),
        (Multipartition.of([3], [1]), Multipartition.of([4], []), (0, 1), 4, False),
        (Multipartition.of([2, 2], []), Multipartition.of([1, 1], [1, 1]), (0, 1), 4, True),
    ],
)
def test_same_block(mp1: Multipartition, mp2: Multipartition, s: Multicharge, e: int, expected: bool) -> None:
    """Test block equivalence through residue content."""
    assert same_block(mp1, mp2, s, e) is expected


@pytest.mark.slow
def test_blocks_are_exactly_the_classes_of_equal_cores() -> None:
    """Test that equal residue content and equal core define the same partition of l-partitions."""
    rng = random.Random(43)
    for e in (2, 3, 4):
        for _ in range(20):
            s = random_charge(rng, 2)
            for n in range(8):
                by_key: dict[object, set[Multipartition]] = {}
                by_core: dict[object, set[Multipartition]] = {}
                for mp in enumerate_multipartitions(n, 2):
                    by_key.setdefault(block_key(mp, s, e), set()).add(mp)
                    by_core.setdefault(core_by_ops(mp, s, e), set()).add(mp)
                key_classes = {frozenset(members) for members in by_key.values()}
                assert key_classes == {frozenset(members) for members in by_core.values()}
                for members in by_key.values():
                    first = next(iter(members))
                    assert all(same_block(first, other, s, e) for other in members)


def test_decompose_two_components_of_rank_four() -> None:
    """Test the block decomposition of the 2-partitions of 4 at s = (0,1), e = 4."""
    blocks = decompose_blocks(4, 2, 4, (0, 1))
    assert sorted((len(b.members), b.weight) for b in blocks) == [(1, 0), (1, 0), (1, 0), (3, 1), (3, 1), (11, 2)]
    assert blocks[0].members[0] == Multipartition.of([4], [])
    assert blocks[0].core == CoreDescriptor(Multipartition.empty(2), (0, 1), 2)

    weight_zero = {b.members[0] for b in blocks if b.weight == 0}
    assert weight_zero == {
        Multipartition.of([2, 1], [1]),
        Multipartition.of([2], [1, 1]),
        Multipartition.of([1], [2, 1]),
    }
    weight_one = {(b.core.core, b.core.charge): set(b.members) for b in blocks if b.weight == 1}
    assert weight_one == {
        (Multipartition.of([], [1, 1]), (-1, 2)): {
            Multipartition.of([3], [1]),
            Multipartition.of([2], [2]),
            Multipartition.of([], [2, 2]),
        },
        (Multipartition.of([2], []), (-1, 2)): {
            Multipartition.of([2, 2], []),
            Multipartition.of([1, 1], [1, 1]),
            Multipartition.of([1], [1, 1, 1]),
        },
    }


def test_decompose_rank_zero() -> None:
    """Test that the empty l-partition forms one block of weight 0."""
    blocks = decompose_blocks(0, 3, 4, (0, 1, 3))
    assert len(blocks) == 1
    assert blocks[0].members == (Multipartition.empty(3),)
    assert blocks[0].weight == 0


def test_decompose_three_components_of_rank_four() -> None:
    """Test the seven cores and three weight-1 blocks of the 3-partitions of 4 at s = (0,1,3), e = 4."""
    blocks = decompose_blocks(4, 3, 4, (0, 1, 3))
    assert sum(len(b.members) for b in blocks) == 51
    cores = {b.members[0] for b in blocks if b.weight == 0}
    assert len(cores) == 7
    assert all(len(b.members) == 1 for b in blocks if b.weight == 0)
    assert {
        Multipartition.of([], [1], [1, 1, 1]),
        Multipartition.of([1], [2, 1], []),
        Multipartition.of([2], [1, 1], []),
        Multipartition.of([], [2], [1, 1]),
        Multipartition.of([1, 1], [], [2]),
        Multipartition.of([1], [], [2, 1]),
    } <= cores

    weight_one = [b for b in blocks if b.weight == 1]
    assert [len(b.members) for b in weight_one] == [3, 3, 3]
    assert {(b.core.core, b.core.charge) for b in weight_one} == {
        (Multipartition.of([1], [], [1]), (-1, 2, 3)),
        (Multipartition.of([], [1, 1], []), (-1, 2, 3)),
        (Multipartition.of([1], [1], []), (1, 1, 2)),
    }
    assert all(sum(b.core.charge) == 4 for b in blocks)


def test_decompose_rejects_mismatched_charge() -> None:
    """Test that the multicharge needs one entry per component."""
    with pytest.raises(DomainError):
        decompose_blocks(3, 2, 4, (0, 1, 2))


def test_decompose_with_workers_gives_the_same_blocks() -> None:
    """Test that computing cores in a process pool does not change the output."""
    assert decompose_blocks(5, 2, 3, (0, 2), workers=2) == decompose_blocks(5, 2, 3, (0, 2))


@pytest.mark.parametrize(("n", "s"), [(4, (0, 1)), (5, (0, 2)), (4, (0, 1, 3))])
def test_block_from_core_rebuilds_each_block(n: int, s: Multicharge) -> None:
    """Test that undoing `weight` operations from a core recovers exactly its block."""
    e = 4 if len(s) == 3 or n == 4 else 3
    for block in decompose_blocks(n, len(s), e, s):
        rebuilt = block_from_core(block.core, s, block.weight, e)
        assert rebuilt == sorted(block.members, key=multipartition_to_data)


def test_block_from_core_rejects_mismatched_charge() -> None:
    """Test that v must have one entry per core component."""
    with pytest.raises(DomainError):
        block_from_core(CoreDescriptor(Multipartition.empty(2), (0, 1), 0), (0, 1, 2), 1, 4)


def test_weight_one_structure_for_two_components() -> None:
    """Test that at v = (0,1), e = 4 only the adjacent family exists, with blocks of size 3."""
    core = CoreDescriptor(Multipartition.of([], [1, 1]), (-1, 2), 0)
    assert weight_one_structure(core, (0, 1), 4) == [WeightOneFamily(MoveKind.UP, 1, (-1, 2), 3, 4)]


def test_weight_one_structure_for_three_components() -> None:
    """Test the adjacent and wrap families at v = (0,1,3), e = 4."""
    core = CoreDescriptor(Multipartition.of([1], [1], []), (1, 1, 2), 0)
    families = weight_one_structure(core, (0, 1, 3), 4)
    assert [(f.kind, f.runner, f.shifted_charge, f.size) for f in families] == [
        (MoveKind.UP, 1, (-1, 2, 3), 3),
        (MoveKind.UP, 2, (0, 0, 4), 4),
        (MoveKind.WRAP, 3, (1, 1, 2), 3),
    ]
    assert families[2].rank == 4


def test_weight_one_structure_for_one_component() -> None:
    """Test that one component gives a single family of e members."""
    core = CoreDescriptor(Multipartition.empty(1), (2,), 0)
    assert weight_one_structure(core, (2,), 3) == [WeightOneFamily(MoveKind.WRAP, 1, (2,), 3, 3)]


@pytest.mark.slow
@pytest.mark.parametrize(
    ("e", "s"),
    [
        (3, (0, 1)),
        (3, (0, 2)),
        (3, (0, 1, 2)),
        (3, (0, 0, 1)),
        (4, (0, 1)),
        (4, (0, 2)),
        (4, (0, 1, 3)),
        (4, (0, 2, 3)),
    ],
)
def test_weight_one_blocks_match_the_predicted_families(e: int, s: Multicharge) -> None:
    """Test that every weight-1 block sits in a family with its core's charge, size and rank."""
    for n in range(1, 9):
        for block in decompose_blocks(n, len(s), e, s):
            if block.weight != 1:
                continue
            families = weight_one_structure(block.core, s, e)
            matching = [f for f in families if f.shifted_charge == block.core.charge]
            assert matching
            assert any(f.size == len(block.members) and f.rank == n for f in matching)


@pytest.mark.parametrize("workers", [0, -1])
def test_decompose_rejects_nonpositive_workers(workers: int) -> None:
    """Test that the worker count must be positive when given."""
    with pytest.raises(DomainError, match="Worker count must be positive"):
        decompose_blocks(2, 2, 3, (0, 1), workers=workers)


def test_decompose_rejects_negative_rank() -> None:
    """Test that a negative rank is a domain error."""
    with pytest.raises(DomainError, match="Rank must be nonnegative"):
        decompose_blocks(-1, 2, 3, (0, 1))
