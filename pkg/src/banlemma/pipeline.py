"""Sentence-level lemmatization, tagged-TSV I/O and a dictionary lookup tagger."""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Protocol, TextIO

from .lemmatizers import (
    LemmaResult,
    adjective_lemma,
    adverb_lemma,
    identity,
    noun_lemma,
    postposition_lemma,
    pronoun_lemma,
    verb_lemma,
)
from .resources import PosClass, ResourceBundle, nfc, resolve_tag

log = logging.getLogger(__name__)

INVISIBLES = "\u200b\u200c\u200d\ufeff"  # ZWSP, ZWNJ, ZWJ, BOM
# detached from token edges by the raw-text tokenizer
PUNCTUATION = "।॥?!,;:.\"'“”‘’()[]{}-–—…"
_EDGE = re.compile(rf"^([{re.escape(PUNCTUATION)}]*)(.*?)([{re.escape(PUNCTUATION)}]*)$", re.S)


class MalformedLine(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class UnknownPosTag(ValueError):
    def __init__(self, lineno: int, tag: str):
        self.lineno = lineno
        self.tag = tag
        super().__init__(f"line {lineno}: unknown PoS tag {tag!r}")


def strip_invisibles(text: str) -> str:
    return text.translate({ord(c): None for c in INVISIBLES})


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    pos: PosClass
    narrow_tag: str | None = None

    def __post_init__(self):
        surface = nfc(self.surface)
        if not surface:
            raise ValueError("empty token surface")
        object.__setattr__(self, "surface", surface)


class TaggerSource(Protocol):
    def __call__(self, sentence: str, resources: ResourceBundle) -> list[TaggedToken]: ...


@dataclass(frozen=True)
class LemmatizedSentence:
    tokens: tuple[tuple[TaggedToken, LemmaResult], ...]

    @property
    def lemmas(self) -> list[str]:
        return [r.lemma for _, r in self.tokens]

    @property
    def rendered(self) -> str:
        return " ".join(self.lemmas)


def _dispatch(resources: ResourceBundle) -> dict[PosClass, Callable[[str], LemmaResult]]:
    m, d = resources.markers, resources.dictionary
    return {
        PosClass.NOUN: lambda w: noun_lemma(w, m, d),
        PosClass.PRONOUN: lambda w: pronoun_lemma(w, m, d),
        PosClass.VERB: lambda w: verb_lemma(w, resources.verbs, d),
        PosClass.ADVERB: lambda w: adverb_lemma(w, m, d),
        PosClass.ADJECTIVE: lambda w: adjective_lemma(w, m, d),
        PosClass.POSTPOSITION: lambda w: postposition_lemma(w, m, d),
        PosClass.CONJUNCTION: identity,
        PosClass.INTERJECTION: identity,
        PosClass.OTHER: identity,
    }


def lemmatize_word(word: str, pos: PosClass, resources: ResourceBundle) -> LemmaResult:
    return _dispatch(resources)[pos](nfc(word))


def lemmatize_sentence(sentence: Iterable[TaggedToken], resources: ResourceBundle) -> LemmatizedSentence:
    handlers = _dispatch(resources)
    return LemmatizedSentence(tuple((tok, handlers[tok.pos](tok.surface)) for tok in sentence))


# -- raw text ----------------------------------------------------------------

def tokenize(text: str, remove_invisibles: bool = False) -> list[str]:
    """Whitespace split, with edge punctuation detached as separate tokens."""
    text = nfc(text)
    if remove_invisibles:
        text = strip_invisibles(text)
    tokens = []
    for chunk in text.split():
        lead, core, trail = _EDGE.match(chunk).groups()
        tokens.extend(lead)
        if core:
            tokens.append(core)
        tokens.extend(trail)
    return tokens


def builtin_lookup_tagger(sentence: str, resources: ResourceBundle,
                          remove_invisibles: bool = False) -> list[TaggedToken]:
    """Tag each token with the first dictionary cluster that contains it.

    Search order is Noun, Verb, Pronoun, Adjective, Adverb, Postposition;
    tokens found nowhere are Other.
    """
    order = (PosClass.NOUN, PosClass.VERB, PosClass.PRONOUN, PosClass.ADJECTIVE,
             PosClass.ADVERB, PosClass.POSTPOSITION)
    clusters = [(pos, resources.dictionary.cluster(pos)) for pos in order]
    out = []
    for tok in tokenize(sentence, remove_invisibles):
        pos = next((p for p, c in clusters if tok in c), PosClass.OTHER)
        out.append(TaggedToken(tok, pos))
    return out


# -- tagged TSV --------------------------------------------------------------

@dataclass
class TsvToken:
    token: TaggedToken
    gold: str | None
    lineno: int


@dataclass
class TsvSentence:
    tokens: list[TsvToken] = field(default_factory=list)
    comments: list[str] = field(default_factory=list)

    @property
    def tagged(self) -> list[TaggedToken]:
        return [t.token for t in self.tokens]


def read_tagged(stream: Iterable[str], resources: ResourceBundle, strict: bool = False,
                require_gold: bool = False, remove_invisibles: bool = False) -> Iterator[TsvSentence]:
    """Parse ``surface<TAB>pos[<TAB>gold]`` lines into sentences.

    Blank lines end a sentence, ``#`` lines are comments. In lenient mode bad
    lines are logged and skipped and unknown tags become Other.
    """
    current = TsvSentence()
    for lineno, raw in enumerate(stream, 1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            if current.tokens:
                yield current
            current = TsvSentence()
            continue
        if line.startswith("#"):
            current.comments.append(line)
            continue
        try:
            current.tokens.append(_parse_line(line, lineno, resources, strict,
                                              require_gold, remove_invisibles))
        except MalformedLine as exc:
            if strict:
                raise
            log.warning("skipping %s", exc)
    if current.tokens:
        yield current


def _parse_line(line, lineno, resources, strict, require_gold, remove_invisibles) -> TsvToken:
    fields = line.split("\t")
    if remove_invisibles:
        fields = [strip_invisibles(f) for f in fields]
    wanted = (3,) if require_gold else (2, 3)
    if len(fields) not in wanted:
        raise MalformedLine(lineno, f"expected {' or '.join(map(str, wanted))} tab-separated fields, got {len(fields)}")
    surface, tag = nfc(fields[0].strip()), fields[1].strip()
    if not surface:
        raise MalformedLine(lineno, "empty surface form")
    pos = resolve_tag(tag, resources.projection)
    if pos is None:
        if strict:
            raise UnknownPosTag(lineno, tag)
        log.warning("line %d: unknown PoS tag %r, treating as %s", lineno, tag,
                    resources.projection.default_class.value)
        pos = resources.projection.default_class
    gold = nfc(fields[2].strip()) if len(fields) == 3 else None
    if require_gold and not gold:
        raise MalformedLine(lineno, "empty gold lemma")
    return TsvToken(TaggedToken(surface, pos, tag), gold, lineno)


def lemmatize_tagged_file(stream: Iterable[str], resources: ResourceBundle, strict: bool = False,
                          remove_invisibles: bool = False) -> Iterator[LemmatizedSentence]:
    for sent in read_tagged(stream, resources, strict=strict, remove_invisibles=remove_invisibles):
        yield lemmatize_sentence(sent.tagged, resources)


def write_tagged(out: TextIO, sentence: TsvSentence, result: LemmatizedSentence) -> None:
    """Echo the input rows with the predicted lemma appended."""
    for comment in sentence.comments:
        out.write(comment + "\n")
    for tok, (_, res) in zip(sentence.tokens, result.tokens):
        cols = [tok.token.surface, tok.token.narrow_tag or tok.token.pos.value]
        if tok.gold is not None:
            cols.append(tok.gold)
        cols.append(res.lemma)
        out.write("\t".join(cols) + "\n")
    out.write("\n")
