"""Print the stripping trace for every row of the bundled golden file."""
from banlemma.pipeline import lemmatize_sentence, read_tagged
from banlemma.resources import DATA_DIR, load_resources

res = load_resources()
with open(DATA_DIR / "golden.tsv", encoding="utf-8") as fh:
    for sent in read_tagged(fh, res, strict=True, require_gold=True):
        for tok, (_, r) in zip(sent.tokens, lemmatize_sentence(sent.tagged, res).tokens):
            flag = "ok " if r.lemma == tok.gold else "BAD"
            print(f"{flag} {tok.token.surface:<16}{tok.token.pos.value:<13}{r.lemma:<10}"
                  f"{r.source.value:<14}{r.format_trace()}")
