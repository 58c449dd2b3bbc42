import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from _shared import FAMILIES, unit_seeds
from gmrcodes import catalog
from gmrcodes.codes import code_from_rows, is_self_dual
from gmrcodes.gf2 import BinaryMatrix, concat_horizontal
from gmrcodes.gmr import (
    GroupMatrixRingElement as E,
    block,
    from_sigma_tau,
    gmr_add,
    gmr_mul,
    involution,
    is_unit,
    is_unitary_unit,
    left_translate,
    random_unitary_unit,
    sigma_tau,
)
from gmrcodes.groups import cyclic_group, dihedral_group


def test_add_examples():
    rng = np.random.default_rng(0)
    g = dihedral_group(4)
    v = E.random(g, 2, rng)
    assert gmr_add(v, v) == E.zero(g, 2)
    assert v + E.zero(g, 2) == v
    ex = catalog.example1_element()
    assert all(c.is_zero() for c in (ex + ex).coeffs)


def test_mismatch_errors():
    g = dihedral_group(4)
    with pytest.raises(ValueError):
        gmr_add(E.zero(g, 2), E.zero(g, 3))
    with pytest.raises(ValueError):
        gmr_mul(E.zero(g, 2), E.zero(cyclic_group(8), 2))
    with pytest.raises(ValueError):
        E(g, 2, (BinaryMatrix.identity(2),))


def test_mul_examples():
    rng = np.random.default_rng(1)
    g = dihedral_group(4)
    v = E.random(g, 2, rng)
    assert gmr_mul(E.one(g, 2), v) == v
    assert gmr_mul(v, E.one(g, 2)) == v
    one_plus_x = E.from_stack(cyclic_group(2), np.ones((2, 1, 1), dtype=np.uint8))
    assert gmr_mul(one_plus_x, one_plus_x) == E.zero(cyclic_group(2), 1)


def test_mul_against_definition():
    # coefficient of g_t is the sum of A_i B_j over g_i g_j = g_t, expanded by loops
    rng = np.random.default_rng(2)
    g = dihedral_group(3)
    v, w = E.random(g, 3, rng), E.random(g, 3, rng)
    a, b = v.stack().astype(int), w.stack().astype(int)
    want = np.zeros_like(a)
    for i, j in itertools.product(range(g.order), repeat=2):
        want[g.mul[i, j]] += a[i] @ b[j]
    assert gmr_mul(v, w) == E.from_stack(g, want % 2)


def test_noncommutative():
    rng = np.random.default_rng(3)
    g = dihedral_group(4)
    pairs = [(E.random(g, 2, rng), E.random(g, 2, rng)) for _ in range(10)]
    assert any(gmr_mul(v, w) != gmr_mul(w, v) for v, w in pairs)


def test_sigma_tau_examples():
    g = dihedral_group(4)
    assert sigma_tau(E.one(g, 2)) == BinaryMatrix.identity(16)
    assert sigma_tau(catalog.example1_element()) == catalog.example1_tau()
    for a in itertools.product((0, 1), repeat=3):
        v = E.from_stack(cyclic_group(3), np.array(a, dtype=np.uint8).reshape(3, 1, 1))
        circ = BinaryMatrix.from_array([[a[0], a[1], a[2]], [a[2], a[0], a[1]], [a[1], a[2], a[0]]])
        assert sigma_tau(v) == circ


def test_sigma_blocks_by_definition():
    rng = np.random.default_rng(4)
    g = dihedral_group(9)
    v = E.random(g, 2, rng)
    t = sigma_tau(v)
    for i, j in itertools.product(range(g.order), repeat=2):
        assert block(t, i, j, 2) == v.coeffs[g.mul[g.inv[i], j]]


def test_involution_examples():
    rng = np.random.default_rng(5)
    g = dihedral_group(9)
    assert involution(E.one(g, 2)) == E.one(g, 2)
    v = E.random(g, 2, rng)
    assert involution(involution(v)) == v
    assert sigma_tau(involution(v)) == sigma_tau(v).T
    # coefficient at g^{-1} is A_g (transposed once k > 1)
    for p in range(g.order):
        assert involution(v).coeffs[g.inv[p]] == v.coeffs[p].T
    w = E.random(cyclic_group(5), 1, rng)
    assert all(involution(w).coeffs[cyclic_group(5).inv[p]] == w.coeffs[p] for p in range(5))


def test_unit_examples():
    g = cyclic_group(2)
    assert is_unit(E.one(g, 1))
    assert not is_unit(E.zero(g, 1))
    one_plus_x = E.from_stack(g, np.ones((2, 1, 1), dtype=np.uint8))
    assert not is_unit(one_plus_x)
    everything = [E.from_stack(g, np.array(a, dtype=np.uint8).reshape(2, 1, 1))
                  for a in itertools.product((0, 1), repeat=2)]
    assert not any(gmr_mul(one_plus_x, w) == E.one(g, 1) for w in everything)


def test_unitary_examples():
    g = dihedral_group(4)
    assert is_unitary_unit(E.one(g, 2))
    assert not is_unitary_unit(E.zero(g, 2))
    # the worked example's code is the row space of tau itself, which has rank 8,
    # so its v is not a unit at all
    ex = catalog.example1_element()
    assert not is_unit(ex) and not is_unitary_unit(ex)
    assert is_unitary_unit(unit_seeds("D8")[0])


def test_round_trip_and_first_block_row():
    rng = np.random.default_rng(6)
    for mk, k in FAMILIES.values():
        g = mk()
        v = E.random(g, k, rng)
        t = sigma_tau(v)
        assert from_sigma_tau(t, g, k) == v
        for j in range(g.order):
            assert block(t, 0, j, k) == v.coeffs[j]


def test_dict_round_trip():
    v = catalog.example1_element()
    assert E.from_dict(v.to_dict()) == v


def test_left_translation_permutes_block_rows():
    rng = np.random.default_rng(7)
    for mk, k in FAMILIES.values():
        g = mk()
        v = E.random(g, k, rng)
        rows = sigma_tau(v).to_array().reshape(g.order, k, -1)
        for h in range(g.order):
            moved = sigma_tau(left_translate(v, h)).to_array().reshape(g.order, k, -1)
            # block row i of tau(h v) is block row g_i h of tau(v)
            perm = [next(r for r in range(g.order) if np.array_equal(moved[i], rows[r])) for i in range(g.order)]
            assert sorted(perm) == list(range(g.order))
            assert perm == [int(g.mul[i, h]) for i in range(g.order)]


def test_random_unitary_units_are_unitary():
    rng = np.random.default_rng(8)
    for fam, (mk, k) in FAMILIES.items():
        u = random_unitary_unit(mk(), k, rng, seeds=unit_seeds(fam))
        assert is_unitary_unit(u)
        t = sigma_tau(u)
        assert t @ t.T == BinaryMatrix.identity(t.rows)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["D8", "C2"]))
def test_homomorphism_property(seed, fam):
    mk, k = FAMILIES[fam]
    g = mk()
    rng = np.random.default_rng(seed)
    k = min(k, 6)
    v, w = E.random(g, k, rng), E.random(g, k, rng)
    assert sigma_tau(v + w) == sigma_tau(v) + sigma_tau(w)
    assert sigma_tau(v * w) == sigma_tau(v) @ sigma_tau(w)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_unitary_iff_self_dual_property(seed):
    rng = np.random.default_rng(seed)
    g = dihedral_group(4)
    v = E.random(g, 1, rng)
    t = sigma_tau(v)
    code = code_from_rows(concat_horizontal(BinaryMatrix.identity(t.rows), t))
    assert is_unitary_unit(v) == is_self_dual(code)
