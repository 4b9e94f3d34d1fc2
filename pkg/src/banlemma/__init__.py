"""PoS-aware rule and dictionary lemmatizer for Bangla."""
from .evaluation import AlignmentError, EvalReport, GoldToken, render_report, score
from .lemmatizers import (
    LemmaResult,
    Source,
    adjective_lemma,
    adverb_lemma,
    noun_lemma,
    postposition_lemma,
    pronoun_lemma,
    verb_lemma,
)
from .pipeline import (
    LemmatizedSentence,
    TaggedToken,
    builtin_lookup_tagger,
    lemmatize_sentence,
    lemmatize_tagged_file,
    lemmatize_word,
    tokenize,
)
from .resources import (
    ConflictingEntry,
    EmptyMarker,
    LemmaDictionary,
    MalformedResource,
    MarkerCategory,
    MarkerSet,
    PosClass,
    PosProjection,
    ResourceBundle,
    VerbResources,
    load_resources,
    project_pos,
)
from .stripper import StripOutcome, strip_marker, strip_sequence

__version__ = "0.1.0"
