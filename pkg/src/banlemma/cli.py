"""Command line entry point: ``banlemma {lemmatize,eval,strip}``."""
from __future__ import annotations

import argparse
import contextlib
import logging
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .evaluation import GoldToken, render_report, score
from .pipeline import (
    MalformedLine,
    UnknownPosTag,
    builtin_lookup_tagger,
    lemmatize_sentence,
    lemmatize_word,
    read_tagged,
    strip_invisibles,
    write_tagged,
)
from .resources import (
    DEFAULT_DICTIONARY,
    DEFAULT_MARKERS,
    DEFAULT_PROJECTION,
    DEFAULT_VERBS,
    ResourceError,
    load_resources,
    nfc,
    resolve_tag,
)

log = logging.getLogger("banlemma")

# flag > environment > bundled sample
RESOURCE_FLAGS = {
    "dict": ("BANLEMMA_DICT", DEFAULT_DICTIONARY),
    "markers": ("BANLEMMA_MARKERS", DEFAULT_MARKERS),
    "verbs": ("BANLEMMA_VERBS", DEFAULT_VERBS),
    "projection": ("BANLEMMA_PROJECTION", DEFAULT_PROJECTION),
}


class CliError(Exception):
    pass


@dataclass
class CliConfig:
    dictionary: Path
    markers: Path
    verbs: Path
    projection: Path
    strict: bool
    strip_invisibles: bool
    input: str | None
    output: str | None
    format: str = "table"


def resolve_config(args: argparse.Namespace, strict_default: bool) -> CliConfig:
    paths = {}
    for name, (env, default) in RESOURCE_FLAGS.items():
        value = getattr(args, name) or os.environ.get(env) or default
        path = Path(value)
        if not path.is_file():
            raise CliError(f"resource file not found: {path} (--{name} / ${env})")
        paths[name] = path
    strict = strict_default
    if args.strict:
        strict = True
    if getattr(args, "lenient", False):
        strict = False
    return CliConfig(paths["dict"], paths["markers"], paths["verbs"], paths["projection"],
                     strict, args.strip_invisibles, args.input, args.output,
                     getattr(args, "format", "table"))


@contextlib.contextmanager
def _open_in(path):
    if path in (None, "-"):
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield fh


@contextlib.contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _load(cfg: CliConfig):
    return load_resources(cfg.dictionary, cfg.markers, cfg.verbs, cfg.projection)


def cmd_lemmatize(cfg: CliConfig, tagged: bool) -> int:
    res = _load(cfg)
    with _open_in(cfg.input) as src, _open_out(cfg.output) as out:
        if tagged:
            for sent in read_tagged(src, res, strict=cfg.strict, remove_invisibles=cfg.strip_invisibles):
                write_tagged(out, sent, lemmatize_sentence(sent.tagged, res))
        else:
            for line in src:
                toks = builtin_lookup_tagger(line, res, remove_invisibles=cfg.strip_invisibles)
                out.write(lemmatize_sentence(toks, res).rendered + "\n")
    return 0


def cmd_eval(cfg: CliConfig) -> int:
    res = _load(cfg)
    gold, preds = [], []
    with _open_in(cfg.input) as src:
        for sent in read_tagged(src, res, strict=cfg.strict, require_gold=True,
                                remove_invisibles=cfg.strip_invisibles):
            result = lemmatize_sentence(sent.tagged, res)
            for tok, lemma in zip(sent.tokens, result.lemmas):
                gold.append(GoldToken(tok.token.surface, tok.token.pos, tok.gold))
                preds.append(lemma)
    with _open_out(cfg.output) as out:
        out.write(render_report(score(gold, preds), cfg.format).rstrip("\n") + "\n")
    return 0


def cmd_strip(cfg: CliConfig, word: str, pos_tag: str) -> int:
    res = _load(cfg)
    pos = resolve_tag(pos_tag, res.projection)
    if pos is None:
        if cfg.strict:
            raise CliError(f"unknown PoS {pos_tag!r}")
        pos = res.projection.default_class
    word = nfc(word)
    if cfg.strip_invisibles:
        word = strip_invisibles(word)
    result = lemmatize_word(word, pos, res)
    with _open_out(cfg.output) as out:
        out.write(f"word:   {word}\npos:    {pos.value}\nlemma:  {result.lemma}\n"
                  f"source: {result.source.value}\ntrace:  {result.format_trace()}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dict", help="dictionary JSON (env BANLEMMA_DICT)")
    common.add_argument("--markers", help="marker inventory JSON (env BANLEMMA_MARKERS)")
    common.add_argument("--verbs", help="verb suffix/root JSON (env BANLEMMA_VERBS)")
    common.add_argument("--projection", help="narrow tag projection JSON (env BANLEMMA_PROJECTION)")
    common.add_argument("--strict", action="store_true", help="fail on malformed lines and unknown tags")
    common.add_argument("--strip-invisibles", action="store_true", help="drop ZWJ/ZWNJ/ZWSP/BOM from input")
    common.add_argument("--input", "-i", help="input path (default stdin)")
    common.add_argument("--output", "-o", help="output path (default stdout)")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(prog="banlemma", description="PoS-aware Bangla lemmatizer")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lemmatize", parents=[common], help="lemmatize raw sentences or tagged TSV")
    p.add_argument("--tagged", action="store_true", help="input is surface<TAB>pos[<TAB>gold] TSV")

    p = sub.add_parser("eval", parents=[common], help="score against a gold TSV")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--lenient", action="store_true", help="skip malformed lines instead of failing")

    p = sub.add_parser("strip", parents=[common], help="show how a single word is lemmatized")
    p.add_argument("word")
    p.add_argument("pos", help="basic PoS class name or narrow tag")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    try:
        if args.command == "lemmatize":
            return cmd_lemmatize(resolve_config(args, strict_default=False), args.tagged)
        if args.command == "eval":
            return cmd_eval(resolve_config(args, strict_default=True))
        return cmd_strip(resolve_config(args, strict_default=False), args.word, args.pos)
    except (CliError, ResourceError, MalformedLine, UnknownPosTag, OSError) as exc:
        print(f"banlemma: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
