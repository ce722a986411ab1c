# ABOUTME: Multicharge normalization, the (reduced) (e,s)-core predicates, and the Uglov map
# ABOUTME: interleaving an l-abacus into a single abacus, together with its inverse.

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from akcores.abacus import Abacus, MultiAbacus, is_complete, recompose, runner_decomposition
from akcores.exceptions import DomainError
from akcores.partitions import Multicharge, Multipartition, Partition, check_e, check_level, permute


@dataclass(frozen=True, slots=True)
class NormalizedCharge:
    """
    sigma: the 1-based permutation stably sorting the residues of s.
    residues: s mod e, in the original order.
    charge: the sorted residues (residues[sigma(1)], ..., residues[sigma(l)]); lies in A^l_e.
    """

    sigma: tuple[int, ...]
    residues: Multicharge
    charge: Multicharge


def normalize(s: Multicharge, e: int) -> NormalizedCharge:
    check_e(e)
    residues = tuple(x % e for x in s)
    sigma = tuple(sorted(range(1, len(s) + 1), key=lambda k: residues[k - 1]))
    return NormalizedCharge(sigma, residues, permute_charge(residues, sigma))


def permute_charge(s: Multicharge, sigma: Sequence[int]) -> Multicharge:
    return tuple(s[k - 1] for k in sigma)


def in_a_bar(s: Multicharge, e: int) -> bool:
    """0 <= s_j - s_i <= e for all i < j."""
    return all(0 <= sj - si <= e for si, sj in itertools.combinations(s, 2))


def in_a(s: Multicharge, e: int) -> bool:
    """0 <= s_j - s_i < e for all i < j."""
    return all(0 <= sj - si < e for si, sj in itertools.combinations(s, 2))


def is_reduced_core(mp: Multipartition, s: Multicharge, e: int) -> bool:
    return is_complete(MultiAbacus.of(mp, s), e)


def is_core(mp: Multipartition, s: Multicharge, e: int) -> bool:
    check_level(mp, s)
    normalized = normalize(s, e)
    return is_reduced_core(permute(mp, normalized.sigma), normalized.charge, e)


def _betas(p: Partition, charge: int, count: int) -> list[int]:
    return [p.part(j) - j + charge for j in range(1, count + 1)]


def _betas_contained(p: Partition, sp: int, q: Partition, sq: int) -> bool:
    # Past `depth`, beta_j(p) = sp - j falls below every gap of q's beta numbers.
    depth = max(p.length, sp - sq + q.length)
    reach = depth + max(0, sq - sp) + q.length
    targets = set(_betas(q, sq, reach))
    return all(b in targets for b in _betas(p, sp, depth))


def is_core_beta(mp: Multipartition, s: Multicharge, e: int) -> bool:
    """The same predicate as is_core, read directly off the beta numbers of consecutive components."""
    check_level(mp, s)
    normalized = normalize(s, e)
    components = permute(mp, normalized.sigma).components
    charge = normalized.charge
    level = len(components)
    for c in range(level - 1):
        if not _betas_contained(components[c], charge[c], components[c + 1], charge[c + 1]):
            return False
    return _betas_contained(components[-1], charge[-1], components[0], charge[0] + e)


def tau_abacus(ma: MultiAbacus, e: int) -> Abacus:
    """Bead k = q*e + r of runner c lands on (l - c)*e + q*e*l + r."""
    level = ma.level
    split = [runner_decomposition(a, e) for a in ma.runners]
    interleaved = [split[level - 1 - t // e][t % e] for t in range(e * level)]
    return recompose(interleaved, e * level)


def tau(mp: Multipartition, s: Multicharge, e: int) -> tuple[Partition, int]:
    """The Uglov map: returns the image partition and its charge (always the sum of s)."""
    image = tau_abacus(MultiAbacus.of(mp, s), e)
    return image.shape, image.charge


def tau_inverse_abacus(a: Abacus, level: int, e: int) -> MultiAbacus:
    check_e(e)
    if level < 1:
        msg = f"Level must be positive, got {level}"
        raise DomainError(msg)
    split = runner_decomposition(a, e * level)
    return MultiAbacus(
        tuple(recompose([split[(level - c) * e + r] for r in range(e)], e) for c in range(1, level + 1))
    )


def tau_inverse(p: Partition, total_charge: int, level: int, e: int) -> tuple[Multipartition, Multicharge]:
    ma = tau_inverse_abacus(Abacus(total_charge, p), level, e)
    return ma.multipartition, ma.charge
