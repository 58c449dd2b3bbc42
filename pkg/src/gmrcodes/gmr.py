"""Arithmetic in the group matrix ring M_k(GF(2))G and the block matrix map.

An element is ``v = sum_i A_i g_i`` with ``A_i`` a k x k binary matrix attached
to listing position ``i``.  :func:`sigma_tau` sends ``v`` to the kn x kn
matrix whose (i, j) block is ``A_{g_i^{-1} g_j}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gf2 import BinaryMatrix, is_invertible
from .groups import FiniteGroup


@dataclass(frozen=True, eq=False)
class GroupMatrixRingElement:
    group: FiniteGroup
    k: int
    coeffs: tuple[BinaryMatrix, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.group.order:
            raise ValueError(f"expected {self.group.order} coefficients, got {len(coeffs)}")
        for c in coeffs:
            if c.shape != (self.k, self.k):
                raise ValueError(f"coefficient of shape {c.shape}, expected {(self.k, self.k)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_stack(cls, group: FiniteGroup, stack: np.ndarray) -> GroupMatrixRingElement:
        """Build from an (n, k, k) 0/1 array."""
        stack = np.asarray(stack, dtype=np.uint8)
        return cls(group, stack.shape[1], tuple(BinaryMatrix.from_array(s) for s in stack))

    @classmethod
    def zero(cls, group: FiniteGroup, k: int) -> GroupMatrixRingElement:
        return cls.from_stack(group, np.zeros((group.order, k, k), dtype=np.uint8))

    @classmethod
    def one(cls, group: FiniteGroup, k: int) -> GroupMatrixRingElement:
        return cls.monomial(group, k, 0)

    @classmethod
    def monomial(cls, group: FiniteGroup, k: int, position: int,
                 matrix: BinaryMatrix | None = None) -> GroupMatrixRingElement:
        """The element ``M g`` with ``M`` (default I_k) at one listing position."""
        stack = np.zeros((group.order, k, k), dtype=np.uint8)
        stack[position] = np.eye(k, dtype=np.uint8) if matrix is None else matrix.to_array()
        return cls.from_stack(group, stack)

    @classmethod
    def random(cls, group: FiniteGroup, k: int, rng: np.random.Generator) -> GroupMatrixRingElement:
        return cls.from_stack(group, rng.integers(0, 2, size=(group.order, k, k), dtype=np.uint8))

    def stack(self) -> np.ndarray:
        return np.stack([c.to_array() for c in self.coeffs]) if self.coeffs else np.zeros((0, self.k, self.k), np.uint8)

    def __add__(self, other: GroupMatrixRingElement) -> GroupMatrixRingElement:
        return gmr_add(self, other)

    def __mul__(self, other: GroupMatrixRingElement) -> GroupMatrixRingElement:
        return gmr_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupMatrixRingElement):
            return NotImplemented
        return (self.group is other.group or self.group.name == other.group.name) \
            and self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.group.name, self.k, self.coeffs))

    def to_dict(self) -> dict:
        return {"group": self.group.name, "k": self.k, "coeffs": [c.to_hex() for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict, group: FiniteGroup | None = None) -> GroupMatrixRingElement:
        from .groups import group_by_name

        g = group if group is not None else group_by_name(data["group"])
        k = int(data["k"])
        return cls(g, k, tuple(BinaryMatrix.from_hex(rows, k) for rows in data["coeffs"]))


def _check_compatible(v: GroupMatrixRingElement, w: GroupMatrixRingElement) -> None:
    if v.k != w.k:
        raise ValueError(f"block size mismatch: {v.k} vs {w.k}")
    if v.group is not w.group and (v.group.name != w.group.name
                                   or not np.array_equal(v.group.mul, w.group.mul)):
        raise ValueError(f"group mismatch: {v.group.name} vs {w.group.name}")


def gmr_add(v: GroupMatrixRingElement, w: GroupMatrixRingElement) -> GroupMatrixRingElement:
    _check_compatible(v, w)
    return GroupMatrixRingElement(v.group, v.k, tuple(a + b for a, b in zip(v.coeffs, w.coeffs)))


def gmr_mul(v: GroupMatrixRingElement, w: GroupMatrixRingElement) -> GroupMatrixRingElement:
    """Product ``v * w``; the coefficient of g_t sums A_i B_j over g_i g_j = g_t."""
    _check_compatible(v, w)
    a = v.stack().astype(np.int64)
    b = w.stack().astype(np.int64)
    prods = np.einsum("iab,jbc->ijac", a, b)
    out = np.zeros_like(a)
    np.add.at(out, v.group.mul, prods)
    return GroupMatrixRingElement.from_stack(v.group, out & 1)


def involution(v: GroupMatrixRingElement) -> GroupMatrixRingElement:
    """``v* = sum A_g^T g^{-1}``.

    The coefficients are transposed as well, so that tau(v*) = tau(v)^T for
    every block size; for k = 1 this is the plain ``sum a_g g^{-1}``.
    """
    coeffs = [None] * v.group.order
    for p, c in enumerate(v.coeffs):
        coeffs[int(v.group.inv[p])] = c.T
    return GroupMatrixRingElement(v.group, v.k, tuple(coeffs))


def sigma_tau(v: GroupMatrixRingElement) -> BinaryMatrix:
    """The flat kn x kn matrix with block (i, j) equal to A_{g_i^{-1} g_j}.

    Viewed as an n x n grid of k x k blocks this is the block matrix over
    M_k(GF(2)); flattened it is the binary matrix generating B_k(v).
    """
    n, k = v.group.order, v.k
    q = v.group.mul[v.group.inv]
    blocks = v.stack()[q]  # (n, n, k, k)
    return BinaryMatrix.from_array(blocks.transpose(0, 2, 1, 3).reshape(n * k, n * k))


def from_sigma_tau(matrix: BinaryMatrix, group: FiniteGroup, k: int) -> GroupMatrixRingElement:
    """Recover ``v`` from its image; the first block row lists A_{g_j} in order."""
    n = group.order
    if matrix.shape != (n * k, n * k):
        raise ValueError(f"expected a {n * k}x{n * k} matrix, got {matrix.shape}")
    top = matrix.to_array()[:k].reshape(k, n, k).transpose(1, 0, 2)
    return GroupMatrixRingElement.from_stack(group, top)


def block(matrix: BinaryMatrix, i: int, j: int, k: int) -> BinaryMatrix:
    """Block (i, j) of a matrix viewed as a grid of k x k blocks."""
    return BinaryMatrix.from_array(matrix.to_array()[i * k:(i + 1) * k, j * k:(j + 1) * k])


def is_unit(v: GroupMatrixRingElement) -> bool:
    return is_invertible(sigma_tau(v))


def is_unitary_unit(v: GroupMatrixRingElement) -> bool:
    """True iff ``v v* = 1``; in characteristic 2 this is ``tau tau^T = I``."""
    return gmr_mul(v, involution(v)) == GroupMatrixRingElement.one(v.group, v.k)


def left_translate(v: GroupMatrixRingElement, position: int) -> GroupMatrixRingElement:
    """``h v`` for the group element h at ``position``."""
    return gmr_mul(GroupMatrixRingElement.monomial(v.group, v.k, position), v)


def random_unitary_unit(group: FiniteGroup, k: int, rng: np.random.Generator,
                        seeds: Sequence[GroupMatrixRingElement] = (), factors: int = 4
                        ) -> GroupMatrixRingElement:
    """Product of random unitary units.

    Factors are drawn from monomials ``P g`` (P a permutation matrix) and the
    optional ``seeds``, each of which must itself be a unitary unit.
    """
    out = GroupMatrixRingElement.one(group, k)
    for _ in range(factors):
        if seeds and rng.random() < 0.5:
            f = seeds[int(rng.integers(len(seeds)))]
        else:
            perm = np.eye(k, dtype=np.uint8)[rng.permutation(k)]
            f = GroupMatrixRingElement.monomial(group, k, int(rng.integers(group.order)),
                                                BinaryMatrix.from_array(perm))
        out = gmr_mul(out, f) if rng.random() < 0.5 else gmr_mul(f, out)
    return out
