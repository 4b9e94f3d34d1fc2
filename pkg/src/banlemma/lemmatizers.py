"""Per-PoS lemmatization procedures.

Nouns, pronouns, adjectives, adverbs and postpositions strip ordered marker
sequences against their dictionary cluster; verbs strip one suffix and map
the remaining root to a dictionary-form lemma.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .resources import LemmaDictionary, MarkerCategory, MarkerSet, PosClass, VerbResources
from .stripper import strip_sequence

EM, CM, DM, PM, DGM = (MarkerCategory.EMPHASIS, MarkerCategory.CASE, MarkerCategory.DETERMINER,
                       MarkerCategory.PLURAL, MarkerCategory.DEGREE)

VERB_SUFFIX = "verb-suffix"

NOUN_FIRST_SEQUENCE = (EM, CM, DM)
PRONOUN_SEQUENCE = (EM, CM, DM, PM)
ADJECTIVE_SEQUENCE = (EM, DGM)
EMPHASIS_ONLY = (EM,)


class Source(enum.Enum):
    DICTIONARY_HIT = "DictionaryHit"
    RULE_STRIPPED = "RuleStripped"
    ROOT_MAPPED = "RootMapped"
    IDENTITY = "Identity"


TraceStep = tuple[Union[MarkerCategory, str], str]


@dataclass(frozen=True)
class LemmaResult:
    lemma: str
    source: Source
    trace: tuple[TraceStep, ...] = ()

    def format_trace(self) -> str:
        return " ".join(f"{_label(kind)}:{text}" for kind, text in self.trace)


def _label(kind) -> str:
    return kind.value if isinstance(kind, MarkerCategory) else kind


def identity(word: str) -> LemmaResult:
    return LemmaResult(word, Source.IDENTITY)


def _finish(word: str, result: str, resolved: bool, trace) -> LemmaResult:
    if resolved:
        return LemmaResult(result, Source.DICTIONARY_HIT, tuple(trace))
    if trace:
        return LemmaResult(result, Source.RULE_STRIPPED, tuple(trace))
    return identity(word)


def _run(word: str, sequence: Sequence[MarkerCategory], marker_set: MarkerSet,
         cluster: Mapping[str, str]) -> LemmaResult:
    if word in cluster:
        return LemmaResult(cluster[word], Source.DICTIONARY_HIT)
    out = strip_sequence(word, sequence, marker_set, cluster)
    return _finish(word, out.result, out.resolved, out.trace)


def noun_second_sequence(word: str, marker_set: MarkerSet) -> tuple[MarkerCategory, MarkerCategory]:
    """Plural then case when ``word`` ends in a plural marker, else case then plural."""
    if any(word.endswith(m) for m in marker_set[PM]):
        return (PM, CM)
    return (CM, PM)


def noun_lemma(word: str, marker_set: MarkerSet, dictionary: LemmaDictionary) -> LemmaResult:
    cluster = dictionary.cluster(PosClass.NOUN)
    if word in cluster:
        return LemmaResult(cluster[word], Source.DICTIONARY_HIT)
    first = strip_sequence(word, NOUN_FIRST_SEQUENCE, marker_set, cluster)
    if first.resolved:
        return _finish(word, first.result, True, first.trace)
    second_seq = noun_second_sequence(first.result, marker_set)
    second = strip_sequence(first.result, second_seq, marker_set, cluster)
    return _finish(word, second.result, second.resolved, first.trace + second.trace)


def pronoun_lemma(word: str, marker_set: MarkerSet, dictionary: LemmaDictionary) -> LemmaResult:
    return _run(word, PRONOUN_SEQUENCE, marker_set, dictionary.cluster(PosClass.PRONOUN))


def adjective_lemma(word: str, marker_set: MarkerSet, dictionary: LemmaDictionary) -> LemmaResult:
    return _run(word, ADJECTIVE_SEQUENCE, marker_set, dictionary.cluster(PosClass.ADJECTIVE))


def adverb_lemma(word: str, marker_set: MarkerSet, dictionary: LemmaDictionary) -> LemmaResult:
    return _run(word, EMPHASIS_ONLY, marker_set, dictionary.cluster(PosClass.ADVERB))


def postposition_lemma(word: str, marker_set: MarkerSet, dictionary: LemmaDictionary) -> LemmaResult:
    return _run(word, EMPHASIS_ONLY, marker_set, dictionary.cluster(PosClass.POSTPOSITION))


def verb_lemma(word: str, verb_resources: VerbResources, dictionary: LemmaDictionary) -> LemmaResult:
    """Two-pass verb lemmatization: strip the longest suffix, then map the root.

    Roots are not lemmas, so an unmapped root falls back to the surface form.
    """
    cluster = dictionary.cluster(PosClass.VERB)
    if word in cluster:
        return LemmaResult(cluster[word], Source.DICTIONARY_HIT)
    for suffix in verb_resources.suffixes:
        if len(suffix) < len(word) and word.endswith(suffix):
            root = word[: -len(suffix)]
            trace = ((VERB_SUFFIX, suffix),)
            if root in verb_resources.root_lemma:
                return LemmaResult(verb_resources.root_lemma[root], Source.ROOT_MAPPED, trace)
            if root in cluster:
                return LemmaResult(cluster[root], Source.DICTIONARY_HIT, trace)
            break
    return identity(word)
