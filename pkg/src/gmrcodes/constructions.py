"""Registered length-72 construction cases built from structured k x k blocks.

Every case fixes a group listing, a block size, a sequence of block templates
A_1, A_2, ... and a frame that turns those blocks into the coefficients of an
element v of M_k(GF(2))G.  :func:`build_tau` goes through the general block
matrix map; :func:`build_tau_direct` assembles the same matrix from its
closed-form block layout, and the two are cross-checked in the tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .codes import LinearCode
from .gf2 import BinaryMatrix, block_matrix, concat_horizontal
from .gmr import GroupMatrixRingElement, sigma_tau
from .groups import FiniteGroup, cyclic_group, cyclic_split_group, dihedral_group

CIRCULANT = "circ"
REVERSE_CIRCULANT = "revcirc"
PERSYMMETRIC2 = "persym2"


@dataclass(frozen=True)
class BlockTemplate:
    shape: str
    size: int

    def __post_init__(self):
        if self.shape not in (CIRCULANT, REVERSE_CIRCULANT, PERSYMMETRIC2):
            raise ValueError(f"unknown block shape {self.shape!r}")
        if self.shape == PERSYMMETRIC2 and self.size != 2:
            raise ValueError("persymmetric template is only defined for 2 x 2 blocks")

    @property
    def arity(self) -> int:
        return 3 if self.shape == PERSYMMETRIC2 else self.size


def build_block(t: BlockTemplate, bits: Sequence[int]) -> BinaryMatrix:
    """circ: row i is the first row shifted right i times; revcirc: shifted left."""
    a = np.asarray(bits, dtype=np.uint8)
    if a.shape != (t.arity,):
        raise ValueError(f"{t.shape} block of size {t.size} takes {t.arity} bits, got {a.size}")
    k = t.size
    i, j = np.indices((k, k))
    if t.shape == CIRCULANT:
        return BinaryMatrix.from_array(a[(j - i) % k])
    if t.shape == REVERSE_CIRCULANT:
        return BinaryMatrix.from_array(a[(i + j) % k])
    return BinaryMatrix.from_array(np.array([[a[0], a[1]], [a[2], a[0]]], dtype=np.uint8))


def block_circulant(blocks: Sequence[BinaryMatrix]) -> BinaryMatrix:
    """CIRC(B_1, ..., B_m): each block row is the previous one shifted one block right."""
    m = len(blocks)
    return block_matrix([[blocks[(j - i) % m] for j in range(m)] for i in range(m)])


@dataclass(frozen=True, eq=False)
class ConstructionSpec:
    name: str
    group: FiniteGroup
    k: int
    blocks: tuple[BlockTemplate, ...]
    fields: tuple[tuple[str, int], ...]
    frame: Callable[[list[BinaryMatrix]], list[BinaryMatrix]]
    display: Callable[[list[BinaryMatrix]], BinaryMatrix]
    description: str = ""

    @property
    def bit_budget(self) -> int:
        return sum(b.arity for b in self.blocks)

    @property
    def size(self) -> int:
        return self.k * self.group.order

    def __repr__(self) -> str:
        return f"ConstructionSpec({self.name}, {self.group.name}, k={self.k}, bits={self.bit_budget})"


def _split_blocks(spec: ConstructionSpec, bits) -> list[BinaryMatrix]:
    b = np.asarray(bits, dtype=np.uint8).ravel()
    if b.size != spec.bit_budget:
        raise ValueError(f"{spec.name} takes {spec.bit_budget} bits, got {b.size}")
    if np.any(b > 1):
        raise ValueError("bits must be 0 or 1")
    out, pos = [], 0
    for t in spec.blocks:
        out.append(build_block(t, b[pos:pos + t.arity]))
        pos += t.arity
    return out


def element(spec: ConstructionSpec, bits) -> GroupMatrixRingElement:
    """The group matrix ring element v described by ``bits``."""
    coeffs = spec.frame(_split_blocks(spec, bits))
    return GroupMatrixRingElement(spec.group, spec.k, tuple(coeffs))


def build_tau(spec: ConstructionSpec, bits) -> BinaryMatrix:
    return sigma_tau(element(spec, bits))


def build_tau_direct(spec: ConstructionSpec, bits) -> BinaryMatrix:
    return spec.display(_split_blocks(spec, bits))


def build_generator(spec: ConstructionSpec, bits) -> LinearCode:
    tau = build_tau(spec, bits)
    return LinearCode(concat_horizontal(BinaryMatrix.identity(tau.rows), tau))


def tau_basis(spec: ConstructionSpec) -> np.ndarray:
    """Packed rows of tau for each unit bit vector, shape (bits, size, words).

    tau is linear in the free bits, so tau(bits) is the XOR of the selected slices.
    """
    nb = spec.bit_budget
    slices = []
    for b in range(nb):
        e = np.zeros(nb, dtype=np.uint8)
        e[b] = 1
        slices.append(build_tau(spec, e).words)
    return np.stack(slices)


# frames and displayed layouts


def _identity_frame(blocks):
    return list(blocks)


def block_reverse_circulant(blocks: Sequence[BinaryMatrix]) -> BinaryMatrix:
    """Block (i, j) is B[(i + j) % m]: block rows shift one block left."""
    m = len(blocks)
    return block_matrix([[blocks[(i + j) % m] for j in range(m)] for i in range(m)])


def _c2_half(blocks):
    # [[A, B], [B, A]] as sigma_3 over S3 listed y^j x^i: the B quarters are reverse block circulants
    a = block_circulant(blocks[0:3])
    b = block_reverse_circulant(blocks[3:6])
    return block_matrix([[a, b], [b, a]])


def _c2_frame(blocks):
    return [_c2_half(blocks[0:6]), _c2_half(blocks[6:12])]


def _c2_display(blocks):
    y0, y1 = _c2_frame(blocks)
    return block_matrix([[y0, y1], [y1, y0]])


_SWAP2 = BinaryMatrix.from_array([[0, 1], [1, 0]])


def _d18_display(blocks):
    a = block_circulant(blocks[:9])
    b = block_circulant(blocks[9:])
    return block_matrix([[a, b], [b.T, a.T]])


def _d18_swapped_frame(blocks):
    # reflection coefficients carry an extra J; 2x2 circulants commute with J
    return list(blocks[:9]) + [b @ _SWAP2 for b in blocks[9:]]


def _d18_swapped_display(blocks):
    """[[A, B], [B^T, A^T]] with the two coordinates of every lower 2-block exchanged.

    For persymmetric A_i the transpose is J A_i J, so this conjugate of the
    displayed layout is exactly sigma of the swapped frame.
    """
    perm = list(range(18)) + [18 + (i ^ 1) for i in range(18)]
    return _d18_display(blocks).select_rows(perm).select_columns(perm)


def _c63_display(blocks):
    a = block_circulant(blocks[0:6])
    b = block_circulant(blocks[6:12])
    c = block_circulant(blocks[12:18])
    b_ = block_circulant([blocks[11]] + list(blocks[6:11]))
    c_ = block_circulant([blocks[17]] + list(blocks[12:17]))
    return block_matrix([[a, b, c], [c_, a, b], [b_, c_, a]])


def _templates(*runs: tuple[str, int, int]) -> tuple[BlockTemplate, ...]:
    out = []
    for shape, size, count in runs:
        out += [BlockTemplate(shape, size)] * count
    return tuple(out)


def _persym_fields(count: int, tail: tuple[tuple[str, int], ...]) -> tuple[tuple[str, int], ...]:
    return tuple((f"rA{i}", 3) for i in range(1, count + 1)) + tail


def _build_registry() -> dict[str, ConstructionSpec]:
    c2 = cyclic_group(2)
    d18 = dihedral_group(9)
    c63 = cyclic_split_group(6, 3)
    c2_fields = (("rY0", 18), ("rY1", 18))
    specs = [
        ConstructionSpec("C2_18_CASE1", c2, 18, _templates((REVERSE_CIRCULANT, 3, 12)),
                         c2_fields, _c2_frame, _c2_display,
                         "C2 with 18x18 blocks; A_1..A_12 reverse circulant"),
        ConstructionSpec("C2_18_CASE2", c2, 18,
                         _templates((REVERSE_CIRCULANT, 3, 6), (CIRCULANT, 3, 6)),
                         c2_fields, _c2_frame, _c2_display,
                         "C2 with 18x18 blocks; A_1..A_6 reverse circulant, A_7..A_12 circulant"),
        ConstructionSpec("C2_18_CASE3", c2, 18,
                         _templates((CIRCULANT, 3, 6), (REVERSE_CIRCULANT, 3, 6)),
                         c2_fields, _c2_frame, _c2_display,
                         "C2 with 18x18 blocks; A_1..A_6 circulant, A_7..A_12 reverse circulant"),
        ConstructionSpec("D18_2_CASE1", d18, 2, _templates((CIRCULANT, 2, 18)),
                         (("rA", 18), ("rB", 18)), _identity_frame, _d18_display,
                         "D18 with 2x2 circulant blocks"),
        ConstructionSpec("D18_2_CASE2", d18, 2,
                         _templates((PERSYMMETRIC2, 2, 9), (CIRCULANT, 2, 9)),
                         _persym_fields(9, (("rB", 18),)), _d18_swapped_frame, _d18_swapped_display,
                         "D18; A_1..A_9 persymmetric 2x2, A_10..A_18 circulant"),
        ConstructionSpec("C63_2_CASE1", c63, 2, _templates((CIRCULANT, 2, 18)),
                         (("rA", 12), ("rB", 12), ("rC", 12)), _identity_frame, _c63_display,
                         "C_{6,3} with 2x2 circulant blocks"),
        ConstructionSpec("C63_2_CASE2", c63, 2,
                         _templates((PERSYMMETRIC2, 2, 9), (CIRCULANT, 2, 9)),
                         _persym_fields(9, tuple((f"rA{i}", 2) for i in range(10, 19))),
                         _identity_frame, _c63_display,
                         "C_{6,3}; A_1..A_9 persymmetric 2x2, A_10..A_18 circulant"),
    ]
    return {s.name: s for s in specs}


_REGISTRY = _build_registry()


def registered_specs() -> list[ConstructionSpec]:
    return list(_REGISTRY.values())


def get_spec(name: str) -> ConstructionSpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown construction {name!r}; known: {', '.join(_REGISTRY)}") from None


def normalize_field_name(name: str) -> str:
    """``r_{Y_0}`` -> ``rY0``, ``r_A`` -> ``rA``."""
    return re.sub(r"[_{}\s]", "", name)


def parse_bits(text) -> np.ndarray:
    """Accept '0101', '(0,1,0,1)' or a sequence of ints."""
    if isinstance(text, str):
        digits = re.sub(r"[\s,()\[\]]", "", text)
        if set(digits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return np.array([int(ch) for ch in digits], dtype=np.uint8)
    arr = np.asarray(text, dtype=np.int64).ravel()
    if np.any((arr != 0) & (arr != 1)):
        raise ValueError("bits must be 0 or 1")
    return arr.astype(np.uint8)


def decode_table_row(spec: ConstructionSpec, fields: Mapping[str, object]) -> np.ndarray:
    """Concatenate table fields into the free-bit vector, in the spec's field order."""
    given = {normalize_field_name(k): parse_bits(v) for k, v in fields.items()}
    expected = [name for name, _ in spec.fields]
    if set(given) != set(expected):
        raise ValueError(f"{spec.name} expects fields {expected}, got {sorted(given)}")
    parts = []
    for name, width in spec.fields:
        if given[name].size != width:
            raise ValueError(f"field {name} of {spec.name} has {width} bits, got {given[name].size}")
        parts.append(given[name])
    return np.concatenate(parts)


def encode_table_row(spec: ConstructionSpec, bits) -> dict[str, str]:
    b = parse_bits(bits)
    if b.size != spec.bit_budget:
        raise ValueError(f"{spec.name} takes {spec.bit_budget} bits, got {b.size}")
    out, pos = {}, 0
    for name, width in spec.fields:
        out[name] = "".join(map(str, b[pos:pos + width].tolist()))
        pos += width
    return out
