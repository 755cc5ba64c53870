from .client import FeedbackClient
from .dedupe import deduplicate
from .importer import import_dump
from .language import detect_language
from .normalize import Rejection, clean_text, map_stakeholder, normalize
from .store import CorpusStore

__all__ = [
    "FeedbackClient",
    "CorpusStore",
    "Rejection",
    "clean_text",
    "deduplicate",
    "detect_language",
    "import_dump",
    "map_stakeholder",
    "normalize",
]
