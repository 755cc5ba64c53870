import pytest

from civicqa.ingest.language import detect_language
from civicqa.records import EU_LANGUAGES, UNKNOWN

# One pinned sentence per official EU language, consultation-flavored.
PINNED = {
    "bg": "Ние подкрепяме тази инициатива за възобновяема енергия.",
    "hr": "Mi podržavamo ovu inicijativu jer je vrlo važna za sve građane.",
    "cs": "Myslím, že je to pro nás velmi důležité a že se to musí změnit.",
    "da": "Vi synes, at det er en god idé, og vi håber, at den bliver til noget.",
    "nl": "Wij vinden dat het een goed idee is en dat de regering niet moet wachten.",
    "en": "We think that this is a good idea and that the government should not wait.",
    "et": "Me arvame, et see on hea mõte ja et valitsus ei tohiks oodata.",
    "fi": "Mielestämme tämä on hyvä ajatus, mutta hallituksen ei pitäisi odottaa liian kauan.",
    "fr": "Nous pensons que c'est une bonne idée et que le gouvernement doit agir pour les citoyens.",
    "de": "Die Energiewende ist wichtig für uns alle.",
    "el": "Υποστηρίζουμε αυτή την πρωτοβουλία για την καθαρή ενέργεια.",
    "hu": "Úgy gondoljuk, hogy ez egy jó ötlet, és nagyon fontos minden polgár számára.",
    "ga": "Ceapaimid go bhfuil sé seo an-tábhachtach agus tá súil againn go n-éireoidh leis.",
    "it": "Pensiamo che sia una buona idea e che il governo non debba aspettare troppo.",
    "lv": "Mēs domājam, ka tas ir labs priekšlikums un ka tas ir ļoti svarīgi visiem.",
    "lt": "Manome, kad tai yra gera idėja ir kad vyriausybė neturėtų laukti.",
    "mt": "Naħsbu li din hija idea tajba ħafna għall-poplu kollu tagħna.",
    "pl": "Uważamy, że to bardzo dobry pomysł i że rząd nie powinien czekać.",
    "pt": "Achamos que é uma boa ideia e que o governo não deve esperar muito.",
    "ro": "Credem că este o idee foarte bună și că guvernul nu ar trebui să aștepte.",
    "sk": "Myslíme si, že je to veľmi dobrý nápad a že vláda by nemala čakať pre všetkých.",
    "sl": "Menimo, da je to zelo dobra zamisel in da vlada ne sme čakati.",
    "es": "Creemos que es una buena idea y que el gobierno no debería esperar más.",
    "sv": "Vi tycker att det är en bra idé och att regeringen inte borde vänta.",
}


def test_fixture_covers_all_24_languages():
    assert set(PINNED) == set(EU_LANGUAGES)


@pytest.mark.parametrize("code,sentence", sorted(PINNED.items()))
def test_pinned_sentence_detected(code, sentence):
    assert detect_language(sentence) == code


def test_short_text_is_unknown():
    assert detect_language("ok") == UNKNOWN
    assert detect_language("") == UNKNOWN


def test_declared_language_wins():
    assert detect_language("anything at all", declared="fr") == "fr"
    assert detect_language("ok", declared="de") == "de"


def test_declared_outside_eu_set_is_ignored():
    assert detect_language(PINNED["de"], declared="zz") == "de"


def test_numbers_and_symbols_are_unknown():
    assert detect_language("12345 67890 12345 67890 ???") == UNKNOWN


def test_detection_is_deterministic():
    sentence = PINNED["fr"]
    assert all(detect_language(sentence) == "fr" for _ in range(5))
