"""The twenty published [72,36,12] codes and the small D8 worked example, as data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .codes import (
    TYPE_II,
    Classification72,
    LinearCode,
    brute_force_weights,
    classify_72,
    code_from_rows,
    is_doubly_even,
    is_self_dual,
    min_distance,
    weights_upto,
)
from .constructions import build_generator, decode_table_row, get_spec
from .gf2 import BinaryMatrix
from .gmr import GroupMatrixRingElement, sigma_tau
from .groups import group_by_name


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: str
    kind: str
    fields: dict
    alpha: int | None = None
    beta: int | None = None
    gamma: int | None = None
    aut: int | None = None

    def bits(self) -> np.ndarray:
        return decode_table_row(get_spec(self.spec), self.fields)

    def code(self) -> LinearCode:
        return build_generator(get_spec(self.spec), self.bits())

    def expected_params(self) -> dict[str, int]:
        if self.kind == TYPE_II:
            return {"alpha": self.alpha}
        return {"gamma": self.gamma, "beta": self.beta}


@lru_cache(maxsize=1)
def _raw() -> dict:
    return json.loads(resources.files("gmrcodes").joinpath("data/catalog.json").read_text())


def load_catalog(path: str | None = None) -> list[CatalogEntry]:
    """Embedded entries, or those of a catalog file with the same layout."""
    if path is None:
        data = _raw()
    else:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    return [CatalogEntry(**e) for e in data["codes"]]


def get_entry(name: str) -> CatalogEntry:
    for e in load_catalog():
        if e.name == name:
            return e
    raise KeyError(f"no catalog code named {name!r}")


def example1_element() -> GroupMatrixRingElement:
    ex = _raw()["example1"]
    return GroupMatrixRingElement.from_stack(group_by_name(ex["group"]), np.array(ex["coeffs"], dtype=np.uint8))


def example1_tau() -> BinaryMatrix:
    """The 16 x 16 matrix as printed."""
    return BinaryMatrix.from_text("\n".join(_raw()["example1"]["tau"]))


def example1_reduced() -> BinaryMatrix:
    return BinaryMatrix.from_text("\n".join(_raw()["example1"]["reduced"]))


def example1_expected() -> tuple[int, int, int]:
    ex = _raw()["example1"]
    return ex["n"], ex["dimension"], ex["d"]


@dataclass(frozen=True)
class Verdict:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def verify_example1() -> Verdict:
    tau = sigma_tau(example1_element())
    code = code_from_rows(tau)
    n, k, d = example1_expected()
    problems = []
    if tau != example1_tau():
        problems.append("tau differs from the printed matrix")
    if code.length != n or code.rank != k:
        problems.append(f"got [{code.length},{code.rank}]")
    if not is_self_dual(code):
        problems.append("not self-dual")
    if code_from_rows(example1_reduced()) != code:
        problems.append("reduced rows span a different code")
    spectrum = brute_force_weights(code)
    if spectrum.nonzero_min() != d or min_distance(code) != d:
        problems.append(f"d = {spectrum.nonzero_min()}")
    detail = "; ".join(problems) or f"self-dual [{n},{k},{d}]"
    return Verdict("Example1", not problems, detail)


def verify_entry(e: CatalogEntry, bits: np.ndarray | None = None) -> Verdict:
    """Rebuild one table code and compare every checked column."""
    spec = get_spec(e.spec)
    code = build_generator(spec, e.bits() if bits is None else bits)
    if not is_self_dual(code) or code.length != 72:
        return Verdict(e.name, False, "not a self-dual [72,36] code")
    profile = weights_upto(code, 16)
    d = profile.nonzero_min()
    try:
        got: Classification72 = classify_72(code, profile)
    except ValueError as exc:
        return Verdict(e.name, False, f"d = {d}; {exc}")
    problems = []
    if d != 12:
        problems.append(f"d = {d}")
    if got.kind != e.kind:
        problems.append(f"kind {got.kind} != {e.kind}")
    if got.params() != e.expected_params():
        problems.append(f"params {got.params()} != {e.expected_params()}")
    if (got.kind == TYPE_II) != is_doubly_even(code):
        problems.append("doubly-even test disagrees with the kind")
    shown = ", ".join(f"{k} = {v}" for k, v in got.params().items())
    detail = "; ".join(problems) or f"[72,36,12] {got.kind}, {shown}"
    return Verdict(e.name, not problems, detail)
