# ABOUTME: Fayers block weights (closed formula and node-peeling recursion) and the affine
# ABOUTME: weight bookkeeping behind them: alpha^{e,s}, Delta_s, the invariant form and norms.

from dataclasses import dataclass
from fractions import Fraction

from akcores.exceptions import DomainError, InvariantError
from akcores.partitions import (
    Multicharge,
    Multipartition,
    Node,
    check_e,
    check_level,
    m_stat,
    removable_nodes,
    remove_node,
    residue,
    residue_content,
)


@dataclass(frozen=True, slots=True)
class AffineWeightVector:
    """sum_i lambda_coeffs[i] * Λ_i + delta_coeff * δ."""

    e: int
    lambda_coeffs: tuple[int, ...]
    delta_coeff: Fraction = Fraction(0)

    def __add__(self, other: "AffineWeightVector") -> "AffineWeightVector":
        _check_same_e(self, other)
        coeffs = tuple(a + b for a, b in zip(self.lambda_coeffs, other.lambda_coeffs, strict=True))
        return AffineWeightVector(self.e, coeffs, self.delta_coeff + other.delta_coeff)

    def __neg__(self) -> "AffineWeightVector":
        return AffineWeightVector(self.e, tuple(-a for a in self.lambda_coeffs), -self.delta_coeff)

    def __sub__(self, other: "AffineWeightVector") -> "AffineWeightVector":
        return self + (-other)

    def __mul__(self, k: int) -> "AffineWeightVector":
        return AffineWeightVector(self.e, tuple(k * a for a in self.lambda_coeffs), k * self.delta_coeff)

    __rmul__ = __mul__


def _check_same_e(u: AffineWeightVector, v: AffineWeightVector) -> None:
    if u.e != v.e:
        msg = f"Cannot combine weights for e={u.e} and e={v.e}"
        raise DomainError(msg)


def zero_weight(e: int) -> AffineWeightVector:
    return AffineWeightVector(e, (0,) * e)


def fundamental_weight(i: int, e: int) -> AffineWeightVector:
    """Λ_{i mod e}."""
    check_e(e)
    coeffs = [0] * e
    coeffs[i % e] = 1
    return AffineWeightVector(e, tuple(coeffs))


def null_root(e: int) -> AffineWeightVector:
    """δ."""
    check_e(e)
    return AffineWeightVector(e, (0,) * e, Fraction(1))


def simple_root(i: int, e: int) -> AffineWeightVector:
    """α_i = -Λ_{i-1} + 2Λ_i - Λ_{i+1}, plus δ when i = 0."""
    check_e(e)
    coeffs = [0] * e
    coeffs[i % e] += 2
    coeffs[(i - 1) % e] -= 1
    coeffs[(i + 1) % e] -= 1
    return AffineWeightVector(e, tuple(coeffs), Fraction(1 if i % e == 0 else 0))


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        msg = f"{what} should be an integer, got {value}"
        raise InvariantError(msg)
    return value.numerator


def block_weight(mp: Multipartition, s: Multicharge, e: int) -> int:
    """p_{(e,s)} = sum_i c_{s_i} - 1/2 sum_{i in Z/e} (c_i - c_{i-1})^2."""
    content = residue_content(mp, s, e)
    linear = sum(content[charge] for charge in s)
    squares = sum((content[i] - content[i - 1]) ** 2 for i in range(e))
    return linear - _integral(Fraction(squares, 2), "Half the sum of squared residue differences")


def _peel_order(node: Node) -> tuple[int, int, int]:
    return node.component, node.row, node.col


def block_weight_recursive(mp: Multipartition, s: Multicharge, e: int) -> int:
    """
    p(λ) = p(μ) + M_i(μ) - 1 where μ is λ minus its first removable node, which has residue i.

    The recursion is unrolled: nodes are peeled one at a time down to the empty l-partition.
    """
    check_e(e)
    check_level(mp, s)
    residues = tuple(x % e for x in s)
    weight = 0
    while mp.size:
        node = min(removable_nodes(mp), key=_peel_order)
        mp = remove_node(mp, node)
        weight += m_stat(mp, residues, e, residue(node, residues, e)) - 1
    return weight


def delta_shift(s: Multicharge, e: int) -> int:
    """Δ_s = 1/2 sum_i ((s_i^2/e - s_i) - (s_i'^2/e - s_i')) with s_i' = s_i mod e."""
    check_e(e)
    total = Fraction(0)
    for x in s:
        r = x % e
        total += (Fraction(x * x, e) - x) - (Fraction(r * r, e) - r)
    return _integral(total / 2, f"Δ_s for s={list(s)}")


def alpha_weight(mp: Multipartition, s: Multicharge, e: int) -> AffineWeightVector:
    """α^{e,s}(λ) = -Δ_s δ + Λ_{s_1} + ... + Λ_{s_l} - sum_i c_i α_i."""
    content = residue_content(mp, s, e)
    weight = -delta_shift(s, e) * null_root(e)
    for charge in s:
        weight += fundamental_weight(charge, e)
    for i in range(e):
        weight -= content[i] * simple_root(i, e)
    return weight


def _gram(i: int, j: int, e: int) -> Fraction:
    # (Λ_i, Λ_j); with (δ, Λ_i) = 1 and (δ, δ) = 0 this gives (Λ_i, α_j) = δ_ij.
    return min(i, j) - Fraction(i * j, e)


def pairing(u: AffineWeightVector, v: AffineWeightVector) -> Fraction:
    _check_same_e(u, v)
    e = u.e
    total = Fraction(0)
    for i, a in enumerate(u.lambda_coeffs):
        for j, b in enumerate(v.lambda_coeffs):
            if a and b:
                total += a * b * _gram(i, j, e)
    return total + u.delta_coeff * sum(v.lambda_coeffs) + v.delta_coeff * sum(u.lambda_coeffs)


def norm(mp: Multipartition, s: Multicharge, e: int) -> Fraction:
    """‖λ‖^{(e,s)} = (α^{e,s}(λ), α^{e,s}(λ)) / 2."""
    weight = alpha_weight(mp, s, e)
    return pairing(weight, weight) / 2


def norm_of_empty(s: Multicharge, e: int) -> Fraction:
    """‖∅‖^{(e,s)} = -Δ_s l + ‖Λ_s‖, without building the empty multipartition."""
    lambda_s = zero_weight(e)
    for charge in s:
        lambda_s += fundamental_weight(charge, e)
    return -delta_shift(s, e) * len(s) + pairing(lambda_s, lambda_s) / 2
