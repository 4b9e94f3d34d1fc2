"""Marker stripping: the single-category primitive and the sequence executor."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .resources import MarkerCategory, MarkerSet


@dataclass(frozen=True)
class StripOutcome:
    result: str
    resolved: bool = False
    stripped_marker: str | None = None
    # (category, marker) per step that removed something; filled by strip_sequence
    trace: tuple[tuple[MarkerCategory, str], ...] = ()


def strip_marker(word: str, markers: Sequence[str], cluster: Mapping[str, str]) -> StripOutcome:
    """Remove one marker from the end of ``word``.

    ``markers`` must already be ordered longest-first. The first marker whose
    removal leaves a dictionary word wins immediately and the dictionary lemma
    is returned. Failing that, the longest matching marker is stripped. A
    marker equal to the whole word is never considered.
    """
    longest = None
    for m in markers:
        if len(m) < len(word) and word.endswith(m):
            rest = word[: -len(m)]
            if rest in cluster:
                return StripOutcome(cluster[rest], True, m)
            if longest is None:
                longest = m
    if longest is None:
        return StripOutcome(word)
    return StripOutcome(word[: -len(longest)], False, longest)


def strip_sequence(word: str, sequence: Sequence[MarkerCategory], marker_set: MarkerSet,
                   cluster: Mapping[str, str]) -> StripOutcome:
    """Apply :func:`strip_marker` once per category, stopping at the first dictionary hit."""
    trace = []
    current = word
    last = None
    for category in sequence:
        step = strip_marker(current, marker_set[category], cluster)
        if step.stripped_marker is not None:
            trace.append((category, step.stripped_marker))
            last = step.stripped_marker
        if step.resolved:
            return StripOutcome(step.result, True, last, tuple(trace))
        current = step.result
        if current in cluster:
            return StripOutcome(cluster[current], True, last, tuple(trace))
    return StripOutcome(current, False, last, tuple(trace))
