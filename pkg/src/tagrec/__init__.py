"""Tag-based website recommendation for Turkish social bookmarking data."""

from tagrec.model import Corpus, Dataset, Provenance, SynonymLexicon, Triple, dataset_insert
from tagrec.preprocess import preprocess_dataset
from tagrec.recommend import Recommendation, recommend_all, recommend_for_user
from tagrec.semantics import expand_synonyms
from tagrec.similarity import SimilarityMatrix, build_similarity_matrix

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "Dataset",
    "Provenance",
    "Recommendation",
    "SimilarityMatrix",
    "SynonymLexicon",
    "Triple",
    "build_similarity_matrix",
    "dataset_insert",
    "expand_synonyms",
    "preprocess_dataset",
    "recommend_all",
    "recommend_for_user",
]
