"""Exhaustive cross-validation sweep, DOT export and JSON reports."""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional, Union

from .borel import GeneratorSet, borel_gens, borel_gens_direct, is_sortable
from .classify import ClassificationResult, classify_closed_form, classify_intro_variant
from .errors import InvalidInput
from .ideal import FreimanVerdict, is_freiman_direct, mu_power, predicted_mu_power
from .monomial import SpreadWord
from .sortgraph import (
    ChordalityCertificate,
    SortedGraph,
    build_sorted_graph,
    is_chordal,
    verify_certificate,
)

__all__ = [
    "METHODS",
    "SweepConfig",
    "InstanceRecord",
    "Mismatch",
    "SweepResult",
    "default_max_index",
    "enumerate_spread_words",
    "check_instance",
    "run_sweep",
    "render_dot",
    "report_json",
    "load_report",
]

METHODS = frozenset({"direct", "chordal", "closed-form", "intro-variant"})
CORE_METHODS = frozenset({"direct", "chordal", "closed-form"})


def default_max_index(d: int, t: int) -> int:
    return (d - 1) * t + 6


def enumerate_spread_words(d: int, t: int, max_last_index: int) -> Iterator[SpreadWord]:
    """All t-spread words of degree d with i_d <= max_last_index, in lex order."""
    if d < 1 or t < 0:
        raise InvalidInput(f"need d >= 1 and t >= 0, got d={d}, t={t}")
    if max_last_index < (d - 1) * t + 1:
        raise InvalidInput(
            f"max_last_index={max_last_index} admits no {t}-spread word of degree {d}"
        )

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        k = len(prefix)
        if k == d:
            yield prefix
            return
        lo = prefix[-1] + t if prefix else 1
        # leave room for the remaining d - k - 1 indices
        hi = max_last_index - (d - k - 1) * t
        for j in range(max(lo, 1), hi + 1):
            yield from extend(prefix + (j,))

    for idx in extend(()):
        yield SpreadWord(idx, t)


@dataclass(frozen=True)
class SweepConfig:
    t_range: tuple[int, int] = (1, 3)
    d_range: tuple[int, int] = (1, 5)
    max_last_index: Union[int, Callable[[int, int], int], None] = None
    methods: frozenset[str] = METHODS
    power_check_k: int = 3
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "methods", frozenset(self.methods))
        unknown = self.methods - METHODS
        if unknown:
            raise InvalidInput(f"unknown methods: {sorted(unknown)}")
        t0, t1 = self.t_range
        d0, d1 = self.d_range
        if t0 <= t1 and not (1 <= t0 and t1 <= 10):
            raise InvalidInput(f"t_range must lie within [1, 10], got {self.t_range}")
        if d0 <= d1 and not (1 <= d0 and d1 <= 8):
            raise InvalidInput(f"d_range must lie within [1, 8], got {self.d_range}")
        if self.power_check_k < 0:
            raise InvalidInput("power_check_k must be nonnegative")
        if self.workers < 1:
            raise InvalidInput("workers must be positive")
        for d, t in self.slices():
            if self.bound(d, t) < (d - 1) * t + 1:
                raise InvalidInput(f"max_last_index too small for d={d}, t={t}")

    def bound(self, d: int, t: int) -> int:
        if self.max_last_index is None:
            return default_max_index(d, t)
        if callable(self.max_last_index):
            return self.max_last_index(d, t)
        return self.max_last_index

    def slices(self) -> list[tuple[int, int]]:
        return [
            (d, t)
            for t in range(self.t_range[0], self.t_range[1] + 1)
            for d in range(self.d_range[0], self.d_range[1] + 1)
        ]

    def words(self) -> Iterator[SpreadWord]:
        for d, t in self.slices():
            yield from enumerate_spread_words(d, t, self.bound(d, t))


@dataclass(frozen=True)
class InstanceRecord:
    """Everything computed for one u; the unit a worker returns."""

    u: SpreadWord
    mu: int
    oracle_ok: bool
    sortable: bool
    direct: Optional[FreimanVerdict] = None
    chordal: Optional[bool] = None
    certificate: Optional[ChordalityCertificate] = None
    certificate_ok: Optional[bool] = None
    closed_form: Optional[ClassificationResult] = None
    intro: Optional[ClassificationResult] = None
    power_checks: tuple[tuple[int, int, int], ...] = ()

    def verdicts(self) -> dict[str, bool]:
        out = {}
        if self.direct is not None:
            out["direct"] = self.direct.is_freiman
        if self.chordal is not None:
            out["chordal"] = self.chordal
        if self.closed_form is not None:
            out["closed-form"] = self.closed_form.verdict
        return out

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts().values())) <= 1

    @property
    def ground_truth(self) -> Optional[bool]:
        if self.direct is not None:
            return self.direct.is_freiman
        return self.chordal


@dataclass(frozen=True)
class Mismatch:
    u: SpreadWord
    verdicts: dict[str, bool]
    certificate: Optional[ChordalityCertificate]


@dataclass
class SweepResult:
    instances_checked: int = 0
    agreements: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    intro_discrepancies: list[SpreadWord] = field(default_factory=list)
    elapsed: float = 0.0
    oracle_failures: list[SpreadWord] = field(default_factory=list)
    sortability_failures: list[SpreadWord] = field(default_factory=list)
    certificate_failures: list[SpreadWord] = field(default_factory=list)
    power_checks: int = 0
    power_failures: list[tuple[SpreadWord, int, int, int]] = field(default_factory=list)
    freiman_count: int = 0
    label_counts: dict[str, int] = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not (
            self.mismatches
            or self.oracle_failures
            or self.sortability_failures
            or self.certificate_failures
            or self.power_failures
        )


def check_instance(u: SpreadWord, methods: frozenset[str] = METHODS, power_check_k: int = 0) -> InstanceRecord:
    gens = borel_gens(u)
    oracle_ok = gens == borel_gens_direct(u)
    sortable = is_sortable(gens)
    direct = is_freiman_direct(gens) if "direct" in methods else None
    chordal = cert = cert_ok = None
    if "chordal" in methods and sortable:
        g = build_sorted_graph(gens)
        cert = is_chordal(g)
        chordal = cert.chordal
        cert_ok = verify_certificate(g, cert)
    closed = classify_closed_form(u) if "closed-form" in methods and u.t >= 1 else None
    intro = classify_intro_variant(u) if "intro-variant" in methods and u.t >= 1 else None
    checks: list[tuple[int, int, int]] = []
    if direct is not None and direct.is_freiman:
        for k in range(2, power_check_k + 1):
            checks.append(
                (k, predicted_mu_power(direct.mu, direct.ell, k), mu_power(gens, k))
            )
    return InstanceRecord(
        u=u,
        mu=len(gens),
        oracle_ok=oracle_ok,
        sortable=sortable,
        direct=direct,
        chordal=chordal,
        certificate=cert,
        certificate_ok=cert_ok,
        closed_form=closed,
        intro=intro,
        power_checks=tuple(checks),
    )


def _check_star(args: tuple) -> InstanceRecord:
    return check_instance(*args)


def run_sweep(cfg: SweepConfig) -> SweepResult:
    start = time.perf_counter()
    words = list(cfg.words())
    jobs = [(u, cfg.methods, cfg.power_check_k) for u in words]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(_check_star, jobs, chunksize=8))
    else:
        records = [_check_star(j) for j in jobs]

    result = SweepResult()
    labels: Counter[str] = Counter()
    for rec in records:
        result.instances_checked += 1
        if not rec.oracle_ok:
            result.oracle_failures.append(rec.u)
        if not rec.sortable:
            result.sortability_failures.append(rec.u)
        if rec.certificate_ok is False:
            result.certificate_failures.append(rec.u)
        if rec.consistent:
            result.agreements += 1
        else:
            result.mismatches.append(Mismatch(rec.u, rec.verdicts(), rec.certificate))
        truth = rec.ground_truth
        if truth:
            result.freiman_count += 1
        if rec.intro is not None and truth is not None and rec.intro.verdict != truth:
            result.intro_discrepancies.append(rec.u)
        if rec.closed_form is not None:
            labels[rec.closed_form.case_label] += 1
        for k, predicted, actual in rec.power_checks:
            result.power_checks += 1
            if predicted != actual:
                result.power_failures.append((rec.u, k, predicted, actual))
    result.label_counts = dict(sorted(labels.items()))
    result.elapsed = time.perf_counter() - start
    return result


def _dot_quote(label: Any) -> str:
    return '"' + str(label).replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(g: SortedGraph, name: str = "sorted_graph") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {_dot_quote(v)};")
    for a, b in g.edges():
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# JSON -----------------------------------------------------------------------

def _word_json(u: SpreadWord) -> dict:
    return {"u": str(u), "indices": list(u.indices), "t": u.t}


def _word_from_json(obj: dict) -> SpreadWord:
    return SpreadWord(tuple(obj["indices"]), obj["t"])


def _cert_json(c: Optional[ChordalityCertificate]) -> Optional[dict]:
    if c is None:
        return None
    return {
        "kind": c.kind,
        "ordering": [str(v) for v in c.ordering],
        "cycle": [str(v) for v in c.cycle],
    }


def _to_jsonable(obj: Any) -> dict:
    if isinstance(obj, FreimanVerdict):
        return {
            "type": "FreimanVerdict",
            "mu": obj.mu,
            "ell": obj.ell,
            "mu2": obj.mu2,
            "bound": obj.bound,
            "is_freiman": obj.is_freiman,
        }
    if isinstance(obj, ClassificationResult):
        return {
            "type": "ClassificationResult",
            "verdict": obj.verdict,
            "case_label": obj.case_label,
            "reductions": obj.reductions,
        }
    if isinstance(obj, SweepResult):
        return {
            "type": "SweepResult",
            "instances_checked": obj.instances_checked,
            "agreements": obj.agreements,
            "mismatches": [
                {**_word_json(m.u), "verdicts": m.verdicts, "certificate": _cert_json(m.certificate)}
                for m in obj.mismatches
            ],
            "intro_discrepancies": [_word_json(u) for u in obj.intro_discrepancies],
            "elapsed": round(obj.elapsed, 6),
            "oracle_failures": [_word_json(u) for u in obj.oracle_failures],
            "sortability_failures": [_word_json(u) for u in obj.sortability_failures],
            "certificate_failures": [_word_json(u) for u in obj.certificate_failures],
            "power_checks": obj.power_checks,
            "power_failures": [
                {**_word_json(u), "k": k, "predicted": p, "actual": a}
                for u, k, p, a in obj.power_failures
            ],
            "freiman_count": obj.freiman_count,
            "label_counts": obj.label_counts,
        }
    raise InvalidInput(f"cannot serialize {type(obj).__name__}")


def report_json(obj: Union[SweepResult, FreimanVerdict, ClassificationResult], **extra: Any) -> str:
    """Serialize with a fixed field order; ``extra`` fields are appended."""
    data = _to_jsonable(obj)
    data.update(extra)
    return json.dumps(data, indent=2)


def load_report(text: str) -> Union[SweepResult, FreimanVerdict, ClassificationResult]:
    """Inverse of ``report_json`` (extra fields are ignored).

    Certificates inside mismatches come back as plain dicts of strings.
    """
    data = json.loads(text)
    kind = data.get("type")
    if kind == "FreimanVerdict":
        return FreimanVerdict(data["mu"], data["ell"], data["mu2"], data["bound"], data["is_freiman"])
    if kind == "ClassificationResult":
        return ClassificationResult(data["verdict"], data["case_label"], data["reductions"])
    if kind == "SweepResult":
        return SweepResult(
            instances_checked=data["instances_checked"],
            agreements=data["agreements"],
            mismatches=[
                Mismatch(_word_from_json(m), m["verdicts"], m["certificate"])
                for m in data["mismatches"]
            ],
            intro_discrepancies=[_word_from_json(u) for u in data["intro_discrepancies"]],
            elapsed=data["elapsed"],
            oracle_failures=[_word_from_json(u) for u in data["oracle_failures"]],
            sortability_failures=[_word_from_json(u) for u in data["sortability_failures"]],
            certificate_failures=[_word_from_json(u) for u in data["certificate_failures"]],
            power_checks=data["power_checks"],
            power_failures=[
                (_word_from_json(p), p["k"], p["predicted"], p["actual"])
                for p in data["power_failures"]
            ],
            freiman_count=data["freiman_count"],
            label_counts=data["label_counts"],
        )
    raise InvalidInput(f"unknown report type {kind!r}")
