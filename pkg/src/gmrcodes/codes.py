"""Binary linear codes: duality, self-duality, weight counts and classification.

Low-weight codewords are enumerated over disjoint information sets.  With m
disjoint information sets and a bound ``w_max``, every codeword of weight at
most ``w_max`` has at most ``t = w_max // m`` ones on one of them, so
enumerating messages of weight <= t in each systematic form finds all of them.
A word is credited to the first information set on which it is light, which
removes double counting without hashing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _kernels
from .gf2 import BinaryMatrix, pack_rows, reduce_against, row_reduce
from .groups import FiniteGroup

TYPE_I_W1 = "TypeI-W1"
TYPE_I_W2 = "TypeI-W2"
TYPE_II = "TypeII"


class ClassificationError(ValueError):
    """The weight counts fit none of the known [72,36,12] enumerator shapes."""


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Row space of ``gen``."""

    gen: BinaryMatrix

    @property
    def length(self) -> int:
        return self.gen.cols

    @cached_property
    def _reduced(self) -> tuple[BinaryMatrix, int, list[int]]:
        return row_reduce(self.gen)

    @property
    def rank(self) -> int:
        return self._reduced[1]

    dimension = rank

    @property
    def pivots(self) -> list[int]:
        return list(self._reduced[2])

    @cached_property
    def basis(self) -> BinaryMatrix:
        """The nonzero rows of the reduced echelon form."""
        rref, rk, _ = self._reduced
        return BinaryMatrix(rref.words[:rk], self.length)

    def contains(self, vectors: BinaryMatrix) -> np.ndarray:
        """Membership of each row of ``vectors``."""
        if vectors.cols != self.length:
            raise ValueError("vector length mismatch")
        rest = reduce_against(self.basis, self.pivots, vectors.words)
        return ~np.any(rest, axis=1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.length == other.length and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"LinearCode[{self.length},{self.rank}]"


@dataclass(frozen=True)
class WeightProfile:
    """Codeword counts A_w, complete for every w <= w_max."""

    counts: dict[int, int]
    w_max: int

    def __getitem__(self, w: int) -> int:
        if w > self.w_max:
            raise KeyError(f"weight {w} beyond the enumerated bound {self.w_max}")
        return self.counts.get(w, 0)

    def nonzero_min(self) -> int | None:
        ws = [w for w, a in self.counts.items() if w > 0 and a]
        return min(ws) if ws else None

    def to_text(self) -> str:
        lines = [f"w_max={self.w_max}"]
        lines += [f"A_{w}={a}" for w, a in sorted(self.counts.items()) if a]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"w_max": self.w_max, "counts": {str(w): a for w, a in sorted(self.counts.items()) if a}}


@dataclass(frozen=True)
class Classification72:
    kind: str
    alpha: int | None = None
    beta: int | None = None
    gamma: int | None = None
    a12: int = 0
    a14: int = 0
    a16: int = 0

    def predicted(self) -> tuple[int, int, int]:
        """(A_12, A_14, A_16) implied by the kind and its parameters."""
        if self.kind == TYPE_II:
            return 4398 + self.alpha, 0, 197073 - 12 * self.alpha
        if self.kind == TYPE_I_W1:
            return 2 * self.beta, 8640 - 64 * self.gamma, 124281 - 24 * self.beta + 384 * self.gamma
        if self.kind == TYPE_I_W2:
            return 2 * self.beta, 7616 - 64 * self.gamma, 134521 - 24 * self.beta + 384 * self.gamma
        raise ValueError(f"unknown kind {self.kind!r}")

    def params(self) -> dict[str, int]:
        if self.kind == TYPE_II:
            return {"alpha": self.alpha}
        return {"gamma": self.gamma, "beta": self.beta}

    def to_text(self) -> str:
        lines = [f"kind={self.kind}"]
        lines += [f"{k}={v}" for k, v in self.params().items()]
        lines += [f"A_12={self.a12}", f"A_14={self.a14}", f"A_16={self.a16}"]
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"kind": self.kind, **self.params(), "A_12": self.a12, "A_14": self.a14, "A_16": self.a16}


def code_from_rows(gen: BinaryMatrix) -> LinearCode:
    return LinearCode(gen)


def dual(c: LinearCode) -> LinearCode:
    """Euclidean dual, generated from the reduced echelon form."""
    n, k = c.length, c.rank
    pivots = c.pivots
    free = [j for j in range(n) if j not in set(pivots)]
    r = c.basis.to_array()
    h = np.zeros((n - k, n), dtype=np.uint8)
    for row, j in enumerate(free):
        h[row, j] = 1
        h[row, pivots] = r[:, j]
    if n - k == 0:
        return LinearCode(BinaryMatrix.zeros(0, n))
    return LinearCode(BinaryMatrix.from_array(h))


def is_self_orthogonal(c: LinearCode) -> bool:
    return c.gen.gram().is_zero()


def is_self_dual(c: LinearCode) -> bool:
    n = c.length
    return n % 2 == 0 and c.rank == n // 2 and is_self_orthogonal(c)


def is_doubly_even(c: LinearCode) -> bool:
    """All weights divisible by 4; requires a self-orthogonal code."""
    if not is_self_orthogonal(c):
        raise ValueError("doubly-even test needs a self-orthogonal code")
    return bool(np.all(c.gen.row_weights() % 4 == 0))


def information_sets(c: LinearCode) -> list[list[int]]:
    """Greedy pairwise-disjoint information sets (at least one for a nonzero code)."""
    k, n = c.rank, c.length
    if k == 0:
        return []
    sets = [c.pivots]
    used = set(c.pivots)
    basis = c.basis.to_array()
    while n - len(used) >= k:
        remaining = [j for j in range(n) if j not in used]
        _, rk, piv = row_reduce(BinaryMatrix.from_array(basis[:, remaining]))
        if rk < k:
            break
        chosen = [remaining[p] for p in piv]
        sets.append(chosen)
        used.update(chosen)
    return sets


def systematic_rows(c: LinearCode, info: Sequence[int]) -> np.ndarray:
    """Packed k x n generator equal to the identity on the columns ``info``."""
    n = c.length
    info = list(info)
    rest = [j for j in range(n) if j not in set(info)]
    perm = info + rest
    basis = c.basis.to_array()
    red, rk, piv = row_reduce(BinaryMatrix.from_array(basis[:, perm]))
    if rk != c.rank or piv != list(range(rk)):
        raise ValueError("columns do not form an information set")
    out = np.empty_like(basis)
    out[:, perm] = red.to_array()[:rk]
    return pack_rows(out)


def _mask(cols: Sequence[int], n: int) -> np.ndarray:
    row = np.zeros((1, n), dtype=np.uint8)
    row[0, list(cols)] = 1
    return pack_rows(row)[0]


def weights_upto(c: LinearCode, w_max: int) -> WeightProfile:
    """Exact A_w for all w <= w_max."""
    n, k = c.length, c.rank
    counts = np.zeros(w_max + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return _profile(counts, w_max)
    sets = information_sets(c)
    t = w_max // len(sets)
    if t >= k:
        sets, t = sets[:1], k
    nw = (n + 63) // 64
    masks = np.zeros((len(sets), nw), dtype=np.uint64)
    for j, s in enumerate(sets):
        masks[j] = _mask(s, n)
        rows = systematic_rows(c, s)
        for size in range(min(t, k) + 1):
            _kernels.accumulate_weights(rows, size, masks[:j], t, counts)
    return _profile(counts, w_max)


def _profile(counts: np.ndarray, w_max: int) -> WeightProfile:
    return WeightProfile({int(w): int(a) for w, a in enumerate(counts) if a}, w_max)


def _distance_rounds(c: LinearCode, target: int | None):
    """Escalating enumeration; returns (upper, lower) when settled.

    Without a target it stops when the upper bound meets the lower bound.  With
    a target it stops as soon as either bound decides ``d >= target``.
    """
    n, k = c.length, c.rank
    sets = information_sets(c)
    m = len(sets)
    systematic = [systematic_rows(c, s) for s in sets]
    empty = np.zeros((0, systematic[0].shape[1]), dtype=np.uint64)
    upper = math.inf
    lower = 1
    for t in range(1, k + 1):
        for j, rows in enumerate(systematic):
            counts = np.zeros(n + 1, dtype=np.int64)
            _kernels.accumulate_weights(rows, t, empty, -1, counts)
            hit = np.flatnonzero(counts[1:])
            if hit.size:
                upper = min(upper, int(hit[0]) + 1)
            lower = max(lower, (t + 1) * (j + 1) + t * (m - j - 1))
            if t == k and j == 0:
                lower = upper
            if target is not None and (upper < target or lower >= target):
                return upper, lower
            if upper <= lower:
                return upper, lower
    return upper, upper


def min_distance(c: LinearCode) -> int:
    """Minimum nonzero weight (exact)."""
    if c.rank == 0:
        raise ValueError("minimum distance of the zero code is undefined")
    upper, _ = _distance_rounds(c, None)
    return int(upper)


def has_distance_at_least(c: LinearCode, target: int) -> bool:
    """Decide ``d >= target``, stopping as early as the bounds allow."""
    if c.rank == 0:
        return True
    upper, lower = _distance_rounds(c, target)
    return upper >= target


def brute_force_weights(c: LinearCode, max_dimension: int = 24) -> WeightProfile:
    """Complete weight distribution by listing all 2^k codewords."""
    k, n = c.rank, c.length
    if k > max_dimension:
        raise ValueError(f"dimension {k} exceeds the brute-force limit {max_dimension}")
    words = np.zeros((1, max(1, (n + 63) // 64)), dtype=np.uint64)
    for row in c.basis.words:
        words = np.vstack([words, words ^ row])
    weights = np.bitwise_count(words).sum(axis=1, dtype=np.int64)
    return _profile(np.bincount(weights, minlength=n + 1), n)


def classify_72(c: LinearCode, profile: WeightProfile | None = None) -> Classification72:
    """Identify the weight enumerator shape of a self-dual [72,36,12] code."""
    if c.length != 72 or c.rank != 36 or not is_self_dual(c):
        raise ValueError("classify_72 needs a self-dual [72,36] code")
    if profile is None or profile.w_max < 16:
        profile = weights_upto(c, 16)
    low = [w for w in range(1, 12) if profile[w]]
    if low:
        raise ClassificationError(f"codewords of weight {low[0]} < 12")
    a12, a14, a16 = profile[12], profile[14], profile[16]
    if is_doubly_even(c):
        alpha = a12 - 4398
        out = Classification72(TYPE_II, alpha=alpha, a12=a12, a14=a14, a16=a16)
        if out.predicted() != (a12, a14, a16):
            raise ClassificationError(f"Type II counts inconsistent: {(a12, a14, a16)}")
        return out
    if a12 % 2:
        raise ClassificationError(f"A_12 = {a12} is odd")
    beta = a12 // 2
    for kind, base in ((TYPE_I_W1, 8640), (TYPE_I_W2, 7616)):
        if (base - a14) % 64:
            continue
        gamma = (base - a14) // 64
        out = Classification72(kind, beta=beta, gamma=gamma, a12=a12, a14=a14, a16=a16)
        if out.predicted() == (a12, a14, a16):
            return out
    raise ClassificationError(f"no Type I enumerator fits {(a12, a14, a16)}")


def is_extremal(n: int, d: int, kind: str) -> bool:
    """Whether ``d`` meets the upper bound for a self-dual code of length ``n``."""
    if n % 2:
        raise ValueError("self-dual codes have even length")
    bound = 4 * (n // 24) + 4
    if kind != TYPE_II and n % 24 == 22:
        bound += 2
    return d == bound


def block_translation(g: FiniteGroup, k: int, h: int, segments: int = 1) -> np.ndarray:
    """Coordinate map ``dest`` sending block j to block h*g_j in every segment."""
    n = g.order
    src = np.arange(segments * n * k)
    seg, rem = np.divmod(src, n * k)
    blk, off = np.divmod(rem, k)
    return seg * n * k + g.mul[h, blk] * k + off


def quasi_group_invariant(c: LinearCode, g: FiniteGroup, k: int, segments: int = 1) -> bool:
    """Whether left translation of the k-blocks by every h in G fixes the code.

    ``segments`` > 1 treats the length as that many consecutive copies of the
    kn coordinates, each permuted the same way (e.g. both halves of [I | M]).
    """
    if c.length != segments * k * g.order:
        raise ValueError(f"length {c.length} is not {segments} x {k} x {g.order}")
    old = c.gen.to_array()
    for h in range(g.order):
        new = np.empty_like(old)
        new[:, block_translation(g, k, h, segments)] = old
        if not np.all(c.contains(BinaryMatrix.from_array(new))):
            return False
    return True
