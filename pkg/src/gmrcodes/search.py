"""Seeded random and exhaustive search over a construction's free bits.

Every trial is independent: random trial ``t`` draws its bits from a generator
seeded with ``(seed, t)``, and exhaustive trial ``t`` reads its bits off the
binary expansion of ``t``.  Results therefore do not depend on how trials are
split across worker processes.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .codes import (
    Classification72,
    ClassificationError,
    classify_72,
    has_distance_at_least,
    is_self_dual,
    min_distance,
    weights_upto,
)
from .constructions import build_generator, encode_table_row, get_spec, parse_bits, tau_basis

RANDOM = "random"
EXHAUSTIVE = "exhaustive"
INCLUDE = "include"
_SOURCE_ORDER = {INCLUDE: 0, RANDOM: 1, EXHAUSTIVE: 1}

FILTER_ORDER = ("self_dual", "distance", "classify")
CHUNK = 2048


@dataclass(frozen=True)
class SearchConfig:
    spec: str
    mode: str = RANDOM
    trials: int = 1000
    seed: int = 0
    workers: int = 1
    min_distance_target: int = 12
    exhaustive_cap: int = 28
    free: tuple[int, ...] | None = None
    base: str | None = None
    include: tuple[str, ...] = ()
    filter_order: tuple[str, ...] = FILTER_ORDER
    timestamps: bool = False

    def __post_init__(self):
        spec = get_spec(self.spec)
        if self.mode not in (RANDOM, EXHAUSTIVE):
            raise ValueError(f"mode must be {RANDOM!r} or {EXHAUSTIVE!r}")
        if self.mode == RANDOM and self.trials < 1:
            raise ValueError("random search needs trials >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if sorted(self.filter_order) != sorted(FILTER_ORDER):
            raise ValueError(f"filter_order must be a permutation of {FILTER_ORDER}")
        if self.base is not None and parse_bits(self.base).size != spec.bit_budget:
            raise ValueError(f"base must have {spec.bit_budget} bits")
        free = self.free_positions
        if len(set(free)) != len(free) or any(not 0 <= f < spec.bit_budget for f in free):
            raise ValueError("free positions must be distinct bit indices")
        if self.mode == EXHAUSTIVE and len(free) > self.exhaustive_cap:
            raise ValueError(f"exhaustive search over {len(free)} bits exceeds the cap {self.exhaustive_cap}")

    @property
    def free_positions(self) -> tuple[int, ...]:
        if self.free is None:
            return tuple(range(get_spec(self.spec).bit_budget))
        return tuple(self.free)

    @property
    def total_trials(self) -> int:
        if self.mode == EXHAUSTIVE:
            return 1 << len(self.free_positions)
        return self.trials


@dataclass(frozen=True)
class SearchRecord:
    spec: str
    source: str
    trial: int
    bits: str
    self_dual: bool
    d: int
    classification: Classification72 | None
    timestamp: str | None = field(default=None, compare=False)

    @property
    def dedup_key(self) -> tuple:
        c = self.classification
        if c is None:
            return (None, self.spec, self.bits)
        return (c.kind, tuple(sorted(c.params().items())), c.a12, c.a14, c.a16)

    def bit_vector(self) -> np.ndarray:
        return hex_to_bits(self.bits, get_spec(self.spec).bit_budget)

    def to_dict(self) -> dict:
        out = {
            "spec": self.spec,
            "source": self.source,
            "trial": self.trial,
            "bits": self.bits,
            "fields": encode_table_row(get_spec(self.spec), self.bit_vector()),
            "self_dual": self.self_dual,
            "d": self.d,
            "classification": None if self.classification is None else self.classification.to_dict(),
        }
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    @classmethod
    def from_dict(cls, data: dict) -> SearchRecord:
        c = data.get("classification")
        cls72 = None
        if c is not None:
            cls72 = Classification72(c["kind"], alpha=c.get("alpha"), beta=c.get("beta"),
                                     gamma=c.get("gamma"), a12=c["A_12"], a14=c["A_14"], a16=c["A_16"])
        return cls(data["spec"], data["source"], int(data["trial"]), data["bits"],
                   bool(data["self_dual"]), int(data["d"]), cls72, data.get("timestamp"))


def bits_to_hex(bits) -> str:
    """Bit i of the vector is bit i of the returned integer."""
    b = parse_bits(bits)
    value = 0
    for i in np.flatnonzero(b):
        value |= 1 << int(i)
    return f"{value:0{(b.size + 3) // 4}x}"


def hex_to_bits(text: str, size: int) -> np.ndarray:
    value = int(text, 16)
    if value >> size:
        raise ValueError(f"hex value has bits beyond position {size - 1}")
    return np.array([(value >> i) & 1 for i in range(size)], dtype=np.uint8)


def trial_bits(cfg: SearchConfig, trial: int) -> np.ndarray:
    spec = get_spec(cfg.spec)
    out = np.zeros(spec.bit_budget, dtype=np.uint8) if cfg.base is None else parse_bits(cfg.base).copy()
    free = np.array(cfg.free_positions, dtype=np.int64)
    if cfg.mode == EXHAUSTIVE:
        out[free] = (trial >> np.arange(free.size)) & 1
    else:
        rng = np.random.default_rng([cfg.seed, trial])
        out[free] = rng.integers(0, 2, free.size, dtype=np.uint8)
    return out


# filter chain; each stage reads and extends a shared scratch dict


def _self_dual_stage(state) -> bool:
    state["code"] = state.get("code") or build_generator(get_spec(state["spec"]), state["bits"])
    return is_self_dual(state["code"])


def _distance_stage(state) -> bool:
    state["code"] = state.get("code") or build_generator(get_spec(state["spec"]), state["bits"])
    return has_distance_at_least(state["code"], state["target"])


def _classify_stage(state) -> bool:
    state["code"] = state.get("code") or build_generator(get_spec(state["spec"]), state["bits"])
    c = state["code"]
    if c.length != 72 or not is_self_dual(c):
        return False
    profile = weights_upto(c, 16)
    state["profile"] = profile
    try:
        state["classification"] = classify_72(c, profile)
    except ClassificationError:
        # weights below 12 or an unknown shape; only acceptable under a lower target
        state["classification"] = None
        return (profile.nonzero_min() or 0) >= state["target"] and state["target"] < 12
    return True


_STAGES = {"self_dual": _self_dual_stage, "distance": _distance_stage, "classify": _classify_stage}


def evaluate(cfg: SearchConfig, bits, source: str, trial: int) -> SearchRecord | None:
    """Run the filter chain on one bit vector; a record only if every stage passes."""
    state = {"spec": cfg.spec, "bits": parse_bits(bits), "target": cfg.min_distance_target}
    for name in cfg.filter_order:
        if not _STAGES[name](state):
            return None
    profile = state["profile"]
    d = profile.nonzero_min()
    if d is None:
        d = min_distance(state["code"])
    stamp = datetime.now(timezone.utc).isoformat(timespec="seconds") if cfg.timestamps else None
    return SearchRecord(cfg.spec, source, trial, bits_to_hex(state["bits"]), True, int(d),
                        state["classification"], stamp)


def _run_chunk(cfg: SearchConfig, start: int, stop: int) -> list[SearchRecord]:
    spec = get_spec(cfg.spec)
    bits = np.stack([trial_bits(cfg, t) for t in range(start, stop)])
    if spec.size <= 64:
        # cheap batched gate before any per-trial work
        basis = tau_basis(spec)[:, :, 0].copy()
        keep = np.flatnonzero(_kernels.batch_orthogonal(bits, basis, spec.size))
    else:
        keep = np.arange(stop - start)
    out = []
    for i in keep:
        rec = evaluate(cfg, bits[i], cfg.mode, start + int(i))
        if rec is not None:
            out.append(rec)
    return out


def dedup(records: Iterable[SearchRecord]) -> list[SearchRecord]:
    """Keep the first record for every dedup key."""
    seen = set()
    out = []
    for r in records:
        if r.dedup_key not in seen:
            seen.add(r.dedup_key)
            out.append(r)
    return out


def _sort_key(r: SearchRecord):
    return (_SOURCE_ORDER[r.source], r.trial)


def run_search(cfg: SearchConfig) -> list[SearchRecord]:
    records = []
    for i, text in enumerate(cfg.include):
        rec = evaluate(cfg, text, INCLUDE, i)
        if rec is not None:
            records.append(rec)
    total = cfg.total_trials
    chunks = [(s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    if cfg.workers == 1 or len(chunks) <= 1:
        for s, e in chunks:
            records += _run_chunk(cfg, s, e)
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_run_chunk, cfg, s, e) for s, e in chunks]
            for f in futures:
                records += f.result()
    records.sort(key=_sort_key)
    return dedup(records)


def record_lines(records: Sequence[SearchRecord]) -> list[str]:
    return [json.dumps(r.to_dict(), sort_keys=True, separators=(",", ":")) for r in records]


def write_jsonl(records: Sequence[SearchRecord], path: str | os.PathLike, append: bool = True) -> None:
    with open(path, "a" if append else "w", encoding="utf-8") as fh:
        for line in record_lines(records):
            fh.write(line + "\n")


def read_jsonl(path: str | os.PathLike) -> list[SearchRecord]:
    with open(path, encoding="utf-8") as fh:
        return [SearchRecord.from_dict(json.loads(line)) for line in fh if line.strip()]


def render_summary(records: Sequence[SearchRecord]) -> str:
    """Plain-text table per construction: source/trial, type, table fields, parameters, d."""
    blocks = []
    by_spec: dict[str, list[SearchRecord]] = {}
    for r in records:
        by_spec.setdefault(r.spec, []).append(r)
    for name, recs in by_spec.items():
        spec = get_spec(name)
        header = ["trial", "Type"] + [f for f, _ in spec.fields] + ["gamma", "beta", "alpha", "d"]
        rows = []
        for r in recs:
            fields = encode_table_row(spec, r.bit_vector())
            c = r.classification
            kind = "?" if c is None else c.kind
            params = ["", "", ""] if c is None else [
                "" if c.gamma is None else str(c.gamma),
                "" if c.beta is None else str(c.beta),
                "" if c.alpha is None else str(c.alpha)]
            rows.append([f"{r.source}:{r.trial}", kind] + [fields[f] for f, _ in spec.fields] + params + [str(r.d)])
        widths = [max(len(x) for x in col) for col in zip(header, *rows)]
        lines = [name, "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
        lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in rows]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)
