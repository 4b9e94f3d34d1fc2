"""Scoring predicted lemmas against gold annotations."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .resources import PosClass, nfc


class AlignmentError(ValueError):
    pass


@dataclass(frozen=True)
class GoldToken:
    surface: str
    pos: PosClass
    lemma: str


@dataclass(frozen=True)
class Bucket:
    total: int
    correct: int

    @property
    def accuracy(self) -> float | None:
        return self.correct / self.total if self.total else None


@dataclass(frozen=True)
class SplitMetrics:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class EvalReport:
    total: int
    correct: int
    per_pos: dict[PosClass, Bucket] = field(default_factory=dict)
    split_metrics: dict[str, SplitMetrics] = field(default_factory=dict)

    @property
    def accuracy(self) -> float | None:
        return self.correct / self.total if self.total else None


def _ratio(num: int, den: int) -> float:
    return num / den if den else 0.0


def _split(gold_pos: int, sys_pos: int, hits_sys: int, hits_gold: int) -> SplitMetrics:
    p, r = _ratio(hits_sys, sys_pos), _ratio(hits_gold, gold_pos)
    f1 = 2 * p * r / (p + r) if p + r else 0.0
    return SplitMetrics(p, r, f1, gold_pos)


def score(gold: Sequence[GoldToken], predictions: Sequence[str]) -> EvalReport:
    """Exact-match accuracy overall and per gold PoS, plus inflected/non-inflected P/R/F1.

    A token is gold-inflected when its gold lemma differs from the surface and
    system-inflected when the prediction does. Precision for a split counts
    correct predictions among the system's positives, recall among the gold
    positives.
    """
    if len(gold) != len(predictions):
        raise AlignmentError(f"{len(gold)} gold tokens but {len(predictions)} predictions")
    counts: dict[PosClass, list[int]] = {}
    # [gold positives, system positives, correct among system positives, correct among gold positives]
    infl = [0, 0, 0, 0]
    noninfl = [0, 0, 0, 0]
    correct = 0
    for tok, pred in zip(gold, predictions):
        surface, lemma, pred = nfc(tok.surface), nfc(tok.lemma), nfc(pred)
        hit = pred == lemma
        correct += hit
        bucket = counts.setdefault(tok.pos, [0, 0])
        bucket[0] += 1
        bucket[1] += hit
        gold_infl, sys_infl = lemma != surface, pred != surface
        for stats, g, s in ((infl, gold_infl, sys_infl), (noninfl, not gold_infl, not sys_infl)):
            stats[0] += g
            stats[1] += s
            stats[2] += s and hit
            stats[3] += g and hit
    per_pos = {pos: Bucket(*counts[pos]) for pos in PosClass if pos in counts}
    return EvalReport(len(gold), correct, per_pos, {
        "inflected": _split(*infl),
        "non_inflected": _split(*noninfl),
    })


def _pct(value: float | None) -> str:
    return "-" if value is None else f"{100 * value:.2f}"


def to_json(report: EvalReport) -> dict:
    return {
        "total": report.total,
        "correct": report.correct,
        "accuracy": report.accuracy,
        "per_pos": {pos.value: {"total": b.total, "correct": b.correct, "accuracy": b.accuracy}
                    for pos, b in report.per_pos.items()},
        "split_metrics": {name: asdict(m) for name, m in report.split_metrics.items()},
    }


def from_json(data: dict | str) -> EvalReport:
    if isinstance(data, str):
        data = json.loads(data)
    return EvalReport(
        data["total"],
        data["correct"],
        {PosClass(name): Bucket(b["total"], b["correct"]) for name, b in data["per_pos"].items()},
        {name: SplitMetrics(**m) for name, m in data["split_metrics"].items()},
    )


def render_report(report: EvalReport, format: str = "table") -> str:
    if format == "json":
        return json.dumps(to_json(report), ensure_ascii=False, indent=2)
    if format != "table":
        raise ValueError(f"unknown report format {format!r}")
    rows = [("PoS", "Total", "Correct", "Accuracy (%)")]
    rows += [(pos.value, str(b.total), str(b.correct), _pct(b.accuracy)) for pos, b in report.per_pos.items()]
    rows.append(("Overall", str(report.total), str(report.correct), _pct(report.accuracy)))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    lines = ["  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths)))
             for r in rows]
    lines.insert(1, "-" * len(lines[0]))
    lines.insert(len(lines) - 1, "-" * len(lines[0]))
    if report.split_metrics:
        lines += ["", f"{'Split':<14}{'Precision':>10}{'Recall':>10}{'F1':>10}{'Support':>9}"]
        for name, m in report.split_metrics.items():
            label = name.replace("_", "-").capitalize()
            lines.append(f"{label:<14}{m.precision:>10.4f}{m.recall:>10.4f}{m.f1:>10.4f}{m.support:>9}")
    return "\n".join(lines) + "\n"
