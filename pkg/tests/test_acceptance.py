"""One test per acceptance criterion; each prints a PASS/FAIL line before asserting."""

import itertools
import time

import numpy as np

from _shared import FAMILIES, classification, profile, unit_seeds
from gmrcodes import catalog
from gmrcodes.cli import main
from gmrcodes.codes import (
    TYPE_I_W1,
    TYPE_II,
    brute_force_weights,
    code_from_rows,
    is_doubly_even,
    is_self_dual,
    min_distance,
    quasi_group_invariant,
    weights_upto,
)
from gmrcodes.constructions import build_generator, build_tau, build_tau_direct, registered_specs
from gmrcodes.gf2 import BinaryMatrix, concat_horizontal
from gmrcodes.gmr import (
    GroupMatrixRingElement as E,
    gmr_mul,
    involution,
    is_unit,
    is_unitary_unit,
    random_unitary_unit,
    sigma_tau,
)
from gmrcodes.groups import cyclic_group

# tabulated (gamma, beta) for the W_{72,1} codes and alpha for the doubly-even ones
TYPE_I = {
    "C1": (36, 543), "C3": (0, 342), "C4": (18, 420), "C5": (36, 561), "C7": (0, 186),
    "C8": (18, 432), "C9": (36, 597), "C12": (18, 237), "C13": (18, 387), "C14": (36, 417),
    "C15": (36, 564), "C16": (9, 264), "C17": (27, 345), "C18": (36, 423), "C19": (18, 342),
    "C20": (36, 510),
}
TYPE_II_ALPHA = {"C2": -2604, "C6": -2706, "C10": -2538, "C11": -3066}


def _bordered(t: BinaryMatrix):
    return code_from_rows(concat_horizontal(BinaryMatrix.identity(t.rows), t))


def test_criterion_1_example(acceptance):
    start = time.perf_counter()
    v = catalog.example1_element()
    tau = sigma_tau(v)
    code = code_from_rows(tau)
    spectrum = brute_force_weights(code)
    elapsed = time.perf_counter() - start
    ok = (tau == catalog.example1_tau() and (code.length, code.rank) == (16, 8) and is_self_dual(code)
          and sum(spectrum.counts.values()) == 256 and spectrum.nonzero_min() == 4 and elapsed < 1.0)
    assert acceptance(1, ok, f"tau bit-exact, self-dual [16,8,{spectrum.nonzero_min()}], {elapsed:.2f} s")


def test_criterion_2_type_i_tables(acceptance):
    bad, slowest = [], 0.0
    for name, (gamma, beta) in TYPE_I.items():
        start = time.perf_counter()
        e = catalog.get_entry(name)
        code = e.code()
        d = min_distance(code)
        c = classification(name)
        slowest = max(slowest, time.perf_counter() - start)
        if not (is_self_dual(code) and (code.length, code.rank) == (72, 36) and d == 12
                and not is_doubly_even(code) and c.kind == TYPE_I_W1 and (c.gamma, c.beta) == (gamma, beta)):
            bad.append(f"{name}: d={d} {c.kind} gamma={c.gamma} beta={c.beta}")
    ok = not bad and slowest < 60
    detail = f"{len(TYPE_I) - len(bad)}/{len(TYPE_I)} codes exact, slowest {slowest:.1f} s"
    assert acceptance(2, ok, detail + ("; " + "; ".join(bad) if bad else ""))


def test_criterion_3_type_ii_tables(acceptance):
    bad = []
    for name, alpha in TYPE_II_ALPHA.items():
        code = catalog.get_entry(name).code()
        c = classification(name)
        if not (is_self_dual(code) and is_doubly_even(code) and min_distance(code) == 12
                and c.kind == TYPE_II and c.alpha == alpha and c.a12 == 4398 + alpha):
            bad.append(f"{name}: {c.kind} alpha={c.alpha}")
    a12 = profile("C2")[12]
    ok = not bad and a12 == 1794
    assert acceptance(3, ok, f"{4 - len(bad)}/4 alpha exact, C2 A_12 = {a12}" + ("; " + "; ".join(bad) if bad else ""))


def test_criterion_4_homomorphism(acceptance):
    rng = np.random.default_rng(404)
    failures = 0
    for mk, k in FAMILIES.values():
        g = mk()
        for _ in range(100):
            v, w = E.random(g, k, rng), E.random(g, k, rng)
            tv, tw = sigma_tau(v), sigma_tau(w)
            failures += sigma_tau(v + w) != tv + tw
            failures += sigma_tau(gmr_mul(v, w)) != tv @ tw
    assert acceptance(4, failures == 0, f"300 pairs over D8/k2, D18/k2, C2/k18, {failures} mismatches")


def test_criterion_5_involution(acceptance):
    rng = np.random.default_rng(505)
    failures, unitary = 0, 0
    for fam, (mk, k) in FAMILIES.items():
        g = mk()
        samples = [E.random(g, k, rng) for _ in range(95)]
        samples += [random_unitary_unit(g, k, rng, seeds=unit_seeds(fam)) for _ in range(5)]
        for v in samples:
            t = sigma_tau(v)
            failures += sigma_tau(involution(v)) != t.T
            u = is_unitary_unit(v)
            unitary += u
            failures += u != is_self_dual(_bordered(t))
    ok = failures == 0 and unitary >= 15
    assert acceptance(5, ok, f"300 elements ({unitary} unitary), {failures} mismatches")


def test_criterion_6_units_exhaustive(acceptance):
    failures, units = 0, 0
    for n in (2, 3, 4):
        g = cyclic_group(n)
        elems = [E.from_stack(g, np.array(a, dtype=np.uint8).reshape(n, 1, 1))
                 for a in itertools.product((0, 1), repeat=n)]
        one = E.one(g, 1)
        for v in elems:
            has_inverse = any(gmr_mul(v, w) == one for w in elems)
            units += has_inverse
            failures += is_unit(v) != has_inverse
    assert acceptance(6, failures == 0, f"C2, C3, C4 exhaustive (28 elements, {units} units), {failures} mismatches")


def test_criterion_7_oracle(acceptance):
    rng = np.random.default_rng(707)
    failures = 0
    for _ in range(50):
        n = int(rng.integers(1, 25))
        k = int(rng.integers(1, min(n, 12) + 1))
        code = code_from_rows(BinaryMatrix.random(k, n, rng))
        full = brute_force_weights(code)
        part = weights_upto(code, n)
        failures += any(part[w] != full[w] for w in range(n + 1))
    assert acceptance(7, failures == 0, f"50 random codes n <= 24, k <= 12, {failures} mismatches")


def test_criterion_8_quasi_group(acceptance):
    rng = np.random.default_rng(808)
    failures = 0
    for fam, (mk, k) in FAMILIES.items():
        g = mk()
        for _ in range(20):
            v = random_unitary_unit(g, k, rng, seeds=unit_seeds(fam))
            t = sigma_tau(v)
            failures += not quasi_group_invariant(code_from_rows(t), g, k)
            # a unit's B_k(v) is the whole space; the bordered code is the informative check
            failures += not quasi_group_invariant(_bordered(t), g, k, segments=2)
            w = E.random(g, k, rng)
            failures += not quasi_group_invariant(code_from_rows(sigma_tau(w + gmr_mul(w, v))), g, k)
    assert acceptance(8, failures == 0, f"60 unitary units (B_k, [I|tau] both halves) + 60 general elements, {failures} failures")


def test_criterion_9_direct_layouts(acceptance):
    rng = np.random.default_rng(909)
    failures = 0
    specs = registered_specs()
    for spec in specs:
        for _ in range(100):
            bits = rng.integers(0, 2, spec.bit_budget).astype(np.uint8)
            failures += build_tau_direct(spec, bits) != build_tau(spec, bits)
    assert acceptance(9, failures == 0, f"{len(specs)} specs x 100 bit vectors, {failures} mismatches")


def test_criterion_10_search_determinism(acceptance, tmp_path, capsys):
    c12 = "".join(map(str, catalog.get_entry("C12").bits()))
    outputs = []
    for workers in (1, 1, 8, 8):
        path = tmp_path / f"run{len(outputs)}.jsonl"
        code = main(["search", "--spec", "D18_2_CASE1", "--trials", "8192", "--seed", "11",
                     "--workers", str(workers), "--include-bits", c12, "--out", str(path)])
        assert code == 0
        outputs.append(path.read_bytes())
    capsys.readouterr()
    lines = outputs[0].count(b"\n")
    ok = lines >= 1 and all(o == outputs[0] for o in outputs)
    assert acceptance(10, ok, f"4 runs (workers 1, 1, 8, 8) byte-identical, {lines} records")
