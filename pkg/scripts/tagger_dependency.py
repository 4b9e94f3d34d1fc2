"""Compare lemma accuracy on a gold TSV under gold tags vs the dictionary lookup tagger.

    python scripts/tagger_dependency.py [gold.tsv]
"""
import argparse

from banlemma.evaluation import GoldToken, score
from banlemma.pipeline import builtin_lookup_tagger, lemmatize_sentence, read_tagged
from banlemma.resources import DATA_DIR, load_resources


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("gold", nargs="?", default=str(DATA_DIR / "golden.tsv"))
    args = ap.parse_args()

    res = load_resources()
    gold, by_tag, by_lookup = [], [], []
    with open(args.gold, encoding="utf-8") as fh:
        for sent in read_tagged(fh, res, strict=True, require_gold=True):
            guessed = builtin_lookup_tagger(" ".join(t.token.surface for t in sent.tokens), res)
            gold += [GoldToken(t.token.surface, t.token.pos, t.gold) for t in sent.tokens]
            by_tag += lemmatize_sentence(sent.tagged, res).lemmas
            by_lookup += lemmatize_sentence(guessed, res).lemmas

    a, b = score(gold, by_tag), score(gold, by_lookup)
    print(f"{'tags':<16}{'accuracy (%)':>14}")
    print(f"{'gold':<16}{100 * a.accuracy:>14.2f}")
    print(f"{'lookup tagger':<16}{100 * b.accuracy:>14.2f}")
    print()
    for g, x, y in zip(gold, by_tag, by_lookup):
        if x != y:
            print(f"{g.surface}\t{g.pos.value}\tgold={g.lemma}\tlookup-tagged={y}")


if __name__ == "__main__":
    main()
