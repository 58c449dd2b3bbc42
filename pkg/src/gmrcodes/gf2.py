"""Dense GF(2) matrices with bit-packed rows.

Row ``i`` is stored as ``ceil(cols / 64)`` little-endian ``uint64`` words:
column ``j`` lives in bit ``j % 64`` of word ``j // 64``.  Row operations are
word-level XORs and products are AND/popcount parities.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

WORD = 64


class NotInvertible(ValueError):
    """Raised when a square matrix has rank below its size."""


def n_words(cols: int) -> int:
    return (cols + WORD - 1) // WORD


def pack_rows(dense: np.ndarray) -> np.ndarray:
    """Pack a 0/1 array of shape (rows, cols) into (rows, n_words) uint64."""
    dense = np.asarray(dense, dtype=np.uint8) & 1
    if dense.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = dense.shape
    nw = n_words(cols)
    padded = np.zeros((rows, nw * WORD), dtype=np.uint8)
    padded[:, :cols] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(rows, nw)


def unpack_rows(words: np.ndarray, cols: int) -> np.ndarray:
    """Inverse of :func:`pack_rows`."""
    words = np.ascontiguousarray(words, dtype="<u8")
    rows = words.shape[0]
    if rows == 0 or words.shape[1] == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    bits = np.unpackbits(words.view(np.uint8).reshape(rows, -1), axis=1, bitorder="little")
    return bits[:, :cols]


def _parity_products(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Return the 0/1 matrix parity(popcount(a_i & b_j)) for packed row sets."""
    out = np.empty((a.shape[0], b.shape[0]), dtype=np.uint8)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return out
    if a.shape[1] == 0:
        out[:] = 0
        return out
    # keep the broadcast temporary below ~2^24 words
    step = max(1, (1 << 24) // max(1, b.shape[0] * a.shape[1]))
    for start in range(0, a.shape[0], step):
        chunk = a[start:start + step, None, :] & b[None, :, :]
        out[start:start + step] = np.bitwise_count(chunk).sum(axis=2, dtype=np.int64) & 1
    return out


class BinaryMatrix:
    """Immutable matrix over GF(2)."""

    __slots__ = ("_words", "_rows", "_cols")

    def __init__(self, words: np.ndarray, cols: int):
        words = np.array(words, dtype=np.uint64, copy=True)
        if words.ndim != 2 or words.shape[1] != n_words(cols):
            raise ValueError(f"word array of shape {words.shape} does not fit {cols} columns")
        rem = cols % WORD
        if rem and words.size and np.any(words[:, -1] >> np.uint64(rem)):
            raise ValueError("bits set beyond the last column")
        words.flags.writeable = False
        self._words = words
        self._rows = words.shape[0]
        self._cols = cols

    # construction

    @classmethod
    def from_array(cls, dense) -> BinaryMatrix:
        arr = np.asarray(dense)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("expected a 2-d array")
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("entries must be 0 or 1")
        return cls(pack_rows(arr.astype(np.uint8)), arr.shape[1])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BinaryMatrix:
        return cls(np.zeros((rows, n_words(cols)), dtype=np.uint64), cols)

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls.from_array(np.eye(n, dtype=np.uint8))

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator) -> BinaryMatrix:
        return cls.from_array(rng.integers(0, 2, size=(rows, cols), dtype=np.uint8))

    @classmethod
    def from_text(cls, text: str) -> BinaryMatrix:
        """Parse one row per line of '0'/'1' characters; blank lines are ignored."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            return cls.zeros(0, 0)
        width = len(lines[0])
        for ln in lines:
            if len(ln) != width or set(ln) - {"0", "1"}:
                raise ValueError(f"malformed matrix row {ln!r}")
        return cls.from_array(np.array([[int(ch) for ch in ln] for ln in lines], dtype=np.uint8))

    @classmethod
    def from_hex(cls, rows: Sequence[str], cols: int) -> BinaryMatrix:
        """Parse rows written by :meth:`to_hex`."""
        words = np.zeros((len(rows), n_words(cols)), dtype=np.uint64)
        mask = (1 << WORD) - 1
        for i, h in enumerate(rows):
            value = int(h, 16)
            if value >> cols:
                raise ValueError(f"hex row {h!r} exceeds {cols} columns")
            for w in range(words.shape[1]):
                words[i, w] = (value >> (WORD * w)) & mask
        return cls(words, cols)

    # basic accessors

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def words(self) -> np.ndarray:
        """Read-only packed storage."""
        return self._words

    def to_array(self) -> np.ndarray:
        return unpack_rows(self._words, self._cols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(idx)
        return int((int(self._words[i, j // WORD]) >> (j % WORD)) & 1)

    def row_weights(self) -> np.ndarray:
        return np.bitwise_count(self._words).sum(axis=1, dtype=np.int64)

    def is_zero(self) -> bool:
        return not np.any(self._words)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BinaryMatrix({self._rows}x{self._cols})"

    # serialization

    def to_text(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.to_array().tolist())

    def to_hex(self) -> list[str]:
        width = max(1, (self._cols + 3) // 4)
        out = []
        for row in self._words:
            value = 0
            for w, word in enumerate(row.tolist()):
                value |= int(word) << (WORD * w)
            out.append(format(value, f"0{width}x"))
        return out

    # arithmetic

    def __add__(self, other: BinaryMatrix) -> BinaryMatrix:
        return mat_add(self, other)

    def __matmul__(self, other: BinaryMatrix) -> BinaryMatrix:
        return mat_mul(self, other)

    @property
    def T(self) -> BinaryMatrix:
        return transpose(self)

    def gram(self) -> BinaryMatrix:
        """Return ``self @ self.T`` using row ANDs and popcounts."""
        return BinaryMatrix.from_array(_parity_products(self._words, self._words))

    def row_reduce(self) -> tuple[BinaryMatrix, int, list[int]]:
        return row_reduce(self)

    @property
    def rank(self) -> int:
        return row_reduce(self)[1]

    def inverse(self) -> BinaryMatrix:
        return inverse(self)

    def select_columns(self, cols: Sequence[int]) -> BinaryMatrix:
        return BinaryMatrix.from_array(self.to_array()[:, list(cols)])

    def select_rows(self, rows: Sequence[int]) -> BinaryMatrix:
        return BinaryMatrix(self._words[list(rows)], self._cols)


def mat_add(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} + {b.shape}")
    return BinaryMatrix(a.words ^ b.words, a.cols)


def mat_mul(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    bt = transpose(b)
    return BinaryMatrix.from_array(_parity_products(a.words, bt.words))


def transpose(a: BinaryMatrix) -> BinaryMatrix:
    return BinaryMatrix.from_array(a.to_array().T)


def concat_horizontal(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    if a.rows != b.rows:
        raise ValueError(f"row-count mismatch: {a.rows} vs {b.rows}")
    return BinaryMatrix.from_array(np.hstack([a.to_array(), b.to_array()]))


def concat_vertical(a: BinaryMatrix, b: BinaryMatrix) -> BinaryMatrix:
    if a.cols != b.cols:
        raise ValueError(f"column-count mismatch: {a.cols} vs {b.cols}")
    return BinaryMatrix(np.vstack([a.words, b.words]), a.cols)


def block_matrix(blocks: Iterable[Iterable[BinaryMatrix]]) -> BinaryMatrix:
    """Assemble a matrix from a 2-d grid of blocks."""
    grid = [[blk.to_array() for blk in row] for row in blocks]
    return BinaryMatrix.from_array(np.block(grid))


def _bit_column(words: np.ndarray, col: int) -> np.ndarray:
    return ((words[:, col // WORD] >> np.uint64(col % WORD)) & np.uint64(1)).astype(bool)


def row_reduce(a: BinaryMatrix) -> tuple[BinaryMatrix, int, list[int]]:
    """Reduced row-echelon form.

    Returns ``(rref, rank, pivots)``; ``rref`` keeps the input's row count with
    the zero rows at the bottom.
    """
    w = np.array(a.words, copy=True)
    pivots: list[int] = []
    r = 0
    for col in range(a.cols):
        if r == a.rows:
            break
        hits = _bit_column(w, col)
        below = np.flatnonzero(hits[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            w[[r, p]] = w[[p, r]]
            hits[[r, p]] = hits[[p, r]]
        hits[r] = False
        w[hits] ^= w[r]
        pivots.append(col)
        r += 1
    return BinaryMatrix(w, a.cols), r, pivots


def reduce_against(rref: BinaryMatrix, pivots: Sequence[int], vectors: np.ndarray) -> np.ndarray:
    """Reduce packed row vectors modulo the row space of an RREF matrix."""
    v = np.array(vectors, dtype=np.uint64, copy=True)
    rw = rref.words
    for i, col in enumerate(pivots):
        hits = _bit_column(v, col)
        if hits.any():
            v[hits] ^= rw[i]
    return v


def rank(a: BinaryMatrix) -> int:
    return row_reduce(a)[1]


def inverse(a: BinaryMatrix) -> BinaryMatrix:
    if a.rows != a.cols:
        raise ValueError(f"inverse of non-square {a.shape} matrix")
    n = a.rows
    aug = concat_horizontal(a, BinaryMatrix.identity(n))
    red, rk, pivots = row_reduce(aug)
    if rk < n or (n and pivots[n - 1] != n - 1):
        raise NotInvertible(f"matrix has rank below {n}")
    return BinaryMatrix.from_array(red.to_array()[:, n:])


def is_invertible(a: BinaryMatrix) -> bool:
    return a.rows == a.cols and rank(a) == a.rows
