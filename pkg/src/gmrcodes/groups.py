"""Finite groups as explicit multiplication tables over a fixed element listing.

Positions are 0-based: position ``p`` is the listing element ``g_{p+1}``, so
``coeffs[p]`` of a group matrix ring element is the matrix written
``A_{p+1}`` in the usual 1-based notation.  Position 0 is always the identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    name: str
    mul: np.ndarray
    labels: tuple[str, ...]
    inv: np.ndarray = field(init=False)

    def __post_init__(self):
        mul = np.array(self.mul, dtype=np.int64)
        mul.flags.writeable = False
        object.__setattr__(self, "mul", mul)
        inv = np.full(mul.shape[0], -1, dtype=np.int64)
        for i in range(mul.shape[0]):
            hit = np.flatnonzero(mul[i] == 0)
            if hit.size:
                inv[i] = hit[0]
        inv.flags.writeable = False
        object.__setattr__(self, "inv", inv)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    def position(self, label: str) -> int:
        return self.labels.index(label)

    def product(self, i: int, j: int) -> int:
        return int(self.mul[i, j])

    def left_quotient_table(self) -> np.ndarray:
        """Table ``q[i, j]`` = position of ``g_i^{-1} g_j``."""
        return self.mul[self.inv][:, :]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def _power_label(e: int) -> str:
    return "1" if e == 0 else ("x" if e == 1 else f"x^{e}")


def cyclic_group(n: int) -> FiniteGroup:
    """C_n listed as 1, x, x^2, ..., x^{n-1}."""
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    i = np.arange(n)
    mul = (i[:, None] + i[None, :]) % n
    return FiniteGroup(f"C{n}", mul, tuple(_power_label(e) for e in range(n)))


def dihedral_group(m: int) -> FiniteGroup:
    """Dihedral group of order 2m listed as x^i y^j (position i + m*j).

    Relations: x^m = y^2 = 1 and y x = x^{-1} y.
    """
    if m < 1:
        raise ValueError("dihedral parameter m must be >= 1")
    n = 2 * m
    # (x^a y^b)(x^c y^d) = x^(a + (-1)^b c) y^(b + d)
    mul = np.empty((n, n), dtype=np.int64)
    for p in range(n):
        a, b = p % m, p // m
        for q in range(n):
            c, d = q % m, q // m
            e = (a + (c if b == 0 else -c)) % m
            mul[p, q] = e + m * ((b + d) % 2)
    labels = []
    for p in range(n):
        a, b = p % m, p // m
        base = _power_label(a)
        if b == 0:
            labels.append(base)
        else:
            labels.append("y" if a == 0 else f"{base} y")
    return FiniteGroup(f"D{n}", mul, tuple(labels))


def cyclic_split_group(r: int, s: int) -> FiniteGroup:
    """C_{rs} listed so that position i + r*j is x^{s*i + j} (0 <= i < r, 0 <= j < s)."""
    if r < 1 or s < 1:
        raise ValueError("cyclic split parameters must be >= 1")
    n = r * s
    exps = np.array([s * (p % r) + p // r for p in range(n)], dtype=np.int64)
    where = np.empty(n, dtype=np.int64)
    where[exps] = np.arange(n)
    mul = where[(exps[:, None] + exps[None, :]) % n]
    return FiniteGroup(f"C{r}_{s}", mul, tuple(_power_label(int(e)) for e in exps))


def validate_group(g: FiniteGroup) -> str | None:
    """Return ``None`` for a valid group table, else a description of the first violation."""
    mul = g.mul
    n = g.order
    if mul.shape != (n, n):
        return "multiplication table is not square"
    if n == 0:
        return "empty group"
    if mul.min() < 0 or mul.max() >= n:
        return "table entry out of range"
    full = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(mul[i]), full):
            return f"row {i} is not a permutation (not a Latin square)"
        if not np.array_equal(np.sort(mul[:, i]), full):
            return f"column {i} is not a permutation (not a Latin square)"
    if not (np.array_equal(mul[0], full) and np.array_equal(mul[:, 0], full)):
        return "position 0 is not the identity"
    for i in range(n):
        if g.inv[i] < 0 or mul[i, g.inv[i]] != 0 or mul[g.inv[i], i] != 0:
            return f"inverse table wrong at position {i}"
    if n <= 64:
        left = mul[mul]  # left[i, j, k] = (g_i g_j) g_k
        right = mul[:, mul]  # right[i, j, k] = g_i (g_j g_k)
        bad = np.argwhere(left != right)
        if bad.size:
            i, j, k = bad[0]
            return f"associativity fails at ({i}, {j}, {k})"
    return None


_NAMED = {
    "C2": lambda: cyclic_group(2),
    "D8": lambda: dihedral_group(4),
    "D18": lambda: dihedral_group(9),
    "C6_3": lambda: cyclic_split_group(6, 3),
}


def group_by_name(name: str) -> FiniteGroup:
    """Resolve names like ``C2``, ``D18``, ``C6_3``, ``Cn``, ``D<order>``, ``Csplit:r,s``."""
    key = name.strip()
    if key in _NAMED:
        return _NAMED[key]()
    if m := re.fullmatch(r"C(\d+)", key):
        return cyclic_group(int(m.group(1)))
    if m := re.fullmatch(r"D(\d+)", key):
        order = int(m.group(1))
        if order % 2:
            raise ValueError(f"dihedral group order must be even: {name!r}")
        return dihedral_group(order // 2)
    if m := re.fullmatch(r"(?:Csplit:|C)(\d+)[,_](\d+)", key):
        return cyclic_split_group(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unknown group name {name!r}")
