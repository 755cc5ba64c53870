"""Deterministic language tagging for the 24 official EU languages.

Scoring is stopword counting plus bonuses for characters that only occur
in one language's orthography. Bulgarian and Greek are decided by script
alone since they are the only Cyrillic and Greek EU languages. Anything
ambiguous or too short comes back as "unknown"; declared metadata always
wins over detection (handled by the caller).
"""
from __future__ import annotations

import re
import unicodedata

from ..records import EU_LANGUAGES, UNKNOWN

MIN_DETECT_CHARS = 20
MIN_SCORE = 2
CHAR_BONUS = 2
CHAR_BONUS_CAP = 6

# Function words per language. Kept short on purpose: the goal is cheap,
# deterministic tagging of portal comments, not a general-purpose detector.
_STOPWORDS: dict[str, tuple[str, ...]] = {
    "cs": ("a", "je", "se", "na", "to", "že", "v", "do", "pro", "jsem",
           "ale", "který", "jako", "byl", "nás", "velmi", "musí"),
    "da": ("og", "i", "at", "det", "en", "den", "til", "er", "som", "på",
           "med", "af", "for", "ikke", "der", "var", "vi", "god"),
    "de": ("der", "die", "das", "und", "ist", "ich", "nicht", "mit", "für",
           "auf", "ein", "eine", "zu", "den", "von", "sich", "dem", "wir",
           "uns", "alle", "werden", "auch", "sollte"),
    "el": (),  # script gate
    "bg": (),  # script gate
    "en": ("the", "and", "of", "to", "in", "is", "that", "it", "for", "was",
           "on", "are", "with", "as", "at", "this", "have", "from", "they",
           "will", "we", "think", "should", "not", "about"),
    "es": ("el", "la", "los", "las", "de", "que", "y", "es", "un", "una",
           "para", "no", "con", "se", "en", "muy", "todos", "como", "más",
           "por", "pero", "debería"),
    "et": ("ja", "on", "ei", "et", "see", "ta", "mis", "ka", "kui", "oli",
           "aga", "oma", "ma", "või", "siis", "nii", "me", "väga", "hea"),
    "fi": ("ja", "on", "ei", "että", "se", "hän", "oli", "mutta", "joka",
           "kuin", "myös", "niin", "mitä", "tämä", "ovat", "ole", "hyvä",
           "erittäin"),
    "fr": ("le", "la", "les", "de", "des", "et", "est", "un", "une", "pour",
           "que", "qui", "dans", "nous", "vous", "pas", "ce", "cette", "sur",
           "avec", "il", "elle", "être", "très", "tous", "doit"),
    "ga": ("agus", "an", "na", "is", "tá", "sé", "ar", "go", "le", "do",
           "mé", "ag", "níl", "seo", "sin", "chun", "bhí", "againn", "gach"),
    "hr": ("i", "je", "u", "se", "na", "da", "za", "su", "koji", "od", "to",
           "ali", "kako", "što", "vrlo", "nije", "biti", "smo", "svi", "ovu"),
    "hu": ("a", "az", "és", "hogy", "nem", "is", "egy", "ez", "van", "volt",
           "de", "el", "meg", "mi", "nagyon", "fontos", "minden", "jó",
           "kell", "lesz", "számára"),
    "it": ("il", "la", "le", "di", "che", "e", "è", "un", "una", "per",
           "non", "sono", "con", "si", "questo", "della", "molto", "tutti",
           "come", "anche", "dovrebbe"),
    "lt": ("ir", "yra", "aš", "kad", "tai", "apie", "su", "į", "iš", "šis",
           "bet", "kaip", "mes", "labai", "visi", "ar", "kurie", "būti",
           "jau", "tik", "gera"),
    "lv": ("un", "ir", "es", "ka", "tas", "par", "ar", "uz", "no", "šis",
           "bet", "kā", "mēs", "ļoti", "visi", "vai", "to", "lai", "jau",
           "labs"),
    "mt": ("u", "li", "ta", "hija", "huwa", "dan", "din", "ma", "għal",
           "ħafna", "kollha", "aħna", "mhux", "biex", "minn", "fuq", "idea"),
    "nl": ("de", "het", "een", "en", "van", "ik", "te", "dat", "die", "in",
           "is", "niet", "op", "aan", "met", "als", "voor", "er", "maar",
           "zijn", "wij", "goed", "moet"),
    "pl": ("i", "w", "na", "się", "nie", "jest", "że", "do", "z", "to",
           "dla", "jak", "ale", "bardzo", "wszyscy", "być", "są", "o", "po",
           "przez", "dobry"),
    "pt": ("o", "a", "os", "as", "de", "que", "e", "é", "um", "uma", "para",
           "não", "com", "se", "na", "muito", "todos", "como", "mais",
           "por", "boa", "deve"),
    "ro": ("și", "în", "de", "la", "un", "o", "este", "că", "nu", "pe",
           "cu", "pentru", "se", "din", "foarte", "această", "mai", "sunt",
           "dar", "trebuie"),
    "sk": ("a", "je", "sa", "na", "to", "že", "v", "do", "pre", "som",
           "ale", "ktorý", "ako", "bol", "by", "veľmi", "nás"),
    "sl": ("in", "je", "se", "na", "da", "za", "so", "ki", "od", "to",
           "ali", "kako", "kaj", "zelo", "ni", "biti", "smo", "vsi", "tudi",
           "kot", "ne"),
    "sv": ("och", "i", "att", "det", "en", "den", "till", "är", "som", "på",
           "med", "han", "av", "för", "inte", "vi", "bra", "borde"),
}

# Characters that, among the 24 EU orthographies, identify one language.
_UNIQUE_CHARS: dict[str, str] = {
    "cs": "řěů",
    "de": "ß",
    "es": "ñ¿¡",
    "fr": "œ",
    "hu": "őű",
    "lt": "ėųį",
    "lv": "āēīūģķļņ",
    "mt": "ħċ",
    "pl": "łśź",
    "pt": "ã",
    "ro": "șțăţş",
    "sk": "ľĺŕô",
}

_WORD_RE = re.compile(r"[^\W\d_]+", re.UNICODE)

assert set(_STOPWORDS) == set(EU_LANGUAGES)


def _script_counts(text: str) -> tuple[int, int, int]:
    cyrillic = greek = latin = 0
    for ch in text:
        if not ch.isalpha():
            continue
        name = unicodedata.name(ch, "")
        if name.startswith("CYRILLIC"):
            cyrillic += 1
        elif name.startswith("GREEK"):
            greek += 1
        elif name.startswith("LATIN"):
            latin += 1
    return cyrillic, greek, latin


def detect_language(text: str, declared: str | None = None) -> str:
    """Tag text with one of the 24 EU language codes or "unknown".

    A declared language (already-trusted metadata) short-circuits
    detection. Texts below MIN_DETECT_CHARS are not guessed at.
    """
    if declared:
        declared = declared.strip().lower()
        if declared in EU_LANGUAGES:
            return declared
    text = text.strip()
    if len(text) < MIN_DETECT_CHARS:
        return UNKNOWN

    cyrillic, greek, latin = _script_counts(text)
    letters = cyrillic + greek + latin
    if letters == 0:
        return UNKNOWN
    if cyrillic > letters / 2:
        return "bg"
    if greek > letters / 2:
        return "el"

    lowered = text.lower()
    tokens = _WORD_RE.findall(lowered)
    scores: dict[str, int] = {}
    for lang, words in _STOPWORDS.items():
        if not words:
            continue
        hits = sum(1 for tok in tokens if tok in words)
        bonus = 0
        unique = _UNIQUE_CHARS.get(lang)
        if unique:
            bonus = min(
                CHAR_BONUS * sum(lowered.count(ch) for ch in unique),
                CHAR_BONUS_CAP,
            )
        score = hits + bonus
        if score:
            scores[lang] = score

    if not scores:
        return UNKNOWN
    best = max(scores.values())
    winners = [lang for lang, s in scores.items() if s == best]
    if best < MIN_SCORE or len(winners) > 1:
        return UNKNOWN
    return winners[0]
