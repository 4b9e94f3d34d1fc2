import io
import logging
import unicodedata

import pytest
from hypothesis import given, strategies as st

from banlemma.lemmatizers import Source
from banlemma.pipeline import (
    MalformedLine,
    TaggedToken,
    UnknownPosTag,
    builtin_lookup_tagger,
    lemmatize_sentence,
    lemmatize_tagged_file,
    read_tagged,
    tokenize,
    write_tagged,
)
from banlemma.resources import PosClass

N, V, P, O = PosClass.NOUN, PosClass.VERB, PosClass.PRONOUN, PosClass.OTHER


def test_kor_noun_reading(bundle):
    sent = [TaggedToken("নিয়মিত", PosClass.ADVERB), TaggedToken("কর", N), TaggedToken("দিন", V)]
    out = lemmatize_sentence(sent, bundle)
    assert out.lemmas[1] == "কর"
    assert out.rendered == "নিয়মিত কর দেওয়া"


def test_kor_verb_reading(bundle):
    sent = [TaggedToken("যা", P), TaggedToken("বলছি", V), TaggedToken("তা", O), TaggedToken("কর", V)]
    assert lemmatize_sentence(sent, bundle).lemmas == ["যা", "বলা", "তা", "করা"]


@pytest.mark.parametrize("pos", [PosClass.CONJUNCTION, PosClass.INTERJECTION, PosClass.OTHER])
def test_non_targets_identity(bundle, pos):
    ((tok, res),) = lemmatize_sentence([TaggedToken("মানুষগুলো", pos)], bundle).tokens
    assert res.lemma == "মানুষগুলো" and res.source is Source.IDENTITY and res.trace == ()


def test_every_class_dispatched(bundle):
    # every PoS value reaches a handler without KeyError
    out = lemmatize_sentence([TaggedToken("এবং", p) for p in PosClass], bundle)
    assert len(out.tokens) == len(PosClass)


def test_rendered_is_space_join(bundle):
    out = lemmatize_sentence([TaggedToken("বইগুলিতেই", N), TaggedToken("এবং", PosClass.CONJUNCTION)], bundle)
    assert out.rendered == " ".join(out.lemmas) == "বই এবং"


def test_tagged_token_normalizes():
    tok = TaggedToken(unicodedata.normalize("NFD", "মেয়ে"), N)
    assert tok.surface == unicodedata.normalize("NFC", "মেয়ে")
    with pytest.raises(ValueError):
        TaggedToken("", N)


def test_tokenize_punctuation():
    assert tokenize("যা বলছি তা কর।") == ["যা", "বলছি", "তা", "কর", "।"]
    assert tokenize("“আমি”, তুমি?") == ["“", "আমি", "”", ",", "তুমি", "?"]
    assert tokenize("  ") == []


def test_tokenize_invisibles():
    zwnj = "ক্\u200cষ"
    assert tokenize(zwnj) == [zwnj]
    assert tokenize(zwnj, remove_invisibles=True) == ["ক্ষ"]


def test_lookup_tagger(bundle):
    toks = builtin_lookup_tagger("মানুষ অজানা কর আমি।", bundle)
    assert [(t.surface, t.pos) for t in toks] == [
        ("মানুষ", N), ("অজানা", O), ("কর", N), ("আমি", P), ("।", O)]


THREE = """# first
মানুষগুলোকেও\tNC
কর\tVM\tকরা

বইগুলিতেই\tnoun

আমি\tPronoun
"""


def test_three_sentences(bundle):
    out = list(lemmatize_tagged_file(io.StringIO(THREE), bundle))
    assert len(out) == 3
    assert [t.pos for t, _ in out[0].tokens] == [N, V]
    assert out[0].lemmas == ["মানুষ", "করা"]
    assert out[0].tokens[0][0].narrow_tag == "NC"


def test_strict_malformed_line(bundle):
    with pytest.raises(MalformedLine) as exc:
        list(read_tagged(io.StringIO("আমি\tPronoun\nভুল\n"), bundle, strict=True))
    assert exc.value.lineno == 2


def test_lenient_skips_malformed(bundle, caplog):
    with caplog.at_level(logging.WARNING):
        sents = list(read_tagged(io.StringIO("আমি\tPronoun\nভুল\nতুমি\tPronoun\n"), bundle))
    assert [t.token.surface for t in sents[0].tokens] == ["আমি", "তুমি"]
    assert "line 2" in caplog.text


def test_unknown_tag_modes(bundle, caplog):
    with pytest.raises(UnknownPosTag):
        list(read_tagged(io.StringIO("আমি\tXYZ\n"), bundle, strict=True))
    with caplog.at_level(logging.WARNING):
        (sent,) = read_tagged(io.StringIO("আমি\tXYZ\n"), bundle)
    assert sent.tokens[0].token.pos is O
    assert "XYZ" in caplog.text


def test_require_gold(bundle):
    with pytest.raises(MalformedLine):
        list(read_tagged(io.StringIO("আমি\tPronoun\n"), bundle, strict=True, require_gold=True))


def test_write_tagged_appends_prediction(bundle):
    (sent,) = read_tagged(io.StringIO("# c\nবইগুলিতেই\tNC\tবই\n"), bundle)
    buf = io.StringIO()
    write_tagged(buf, sent, lemmatize_sentence(sent.tagged, bundle))
    assert buf.getvalue() == "# c\nবইগুলিতেই\tNC\tবই\tবই\n\n"


surfaces = st.text(alphabet="কগলমাইওেরটি", min_size=1, max_size=10)


@given(st.lists(st.tuples(surfaces, st.sampled_from(list(PosClass))), max_size=8))
def test_token_count_preserved(bundle, pairs):
    toks = [TaggedToken(s, p) for s, p in pairs]
    out = lemmatize_sentence(toks, bundle)
    assert len(out.tokens) == len(toks)
    assert [t for t, _ in out.tokens] == toks


@given(st.lists(st.tuples(surfaces, st.sampled_from(list(PosClass))), min_size=1, max_size=6))
def test_tagger_independence(bundle, pairs):
    # same (surface, pos) pairs from different sources give the same lemmas
    a = [TaggedToken(s, p, "from-a") for s, p in pairs]
    b = [TaggedToken(s, p) for s, p in pairs]
    assert lemmatize_sentence(a, bundle).lemmas == lemmatize_sentence(b, bundle).lemmas
