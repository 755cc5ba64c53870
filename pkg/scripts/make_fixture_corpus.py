#!/usr/bin/env python3
"""Regenerate tests/fixtures/corpus.jsonl deterministically.

The fixture is a corpus dump: one JSON object per line in the import
format. It spans 3 initiatives, 6 stakeholder groups, 8 countries and 6
languages, with distinct normalized texts so nothing collapses in
deduplication. Run from the repo root:

    python scripts/make_fixture_corpus.py
"""
from __future__ import annotations

import json
import random
import sys
from datetime import datetime, timedelta, timezone
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from civicqa.ingest.normalize import clean_text  # noqa: E402

SEED = 20240612
TARGET_RECORDS = 1040
OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "corpus.jsonl"

INITIATIVES = [
    {
        "initiative_id": "init-energy-2024",
        "initiative_title": "Dynamic electricity tariffs for households",
        "topic": "energy",
    },
    {
        "initiative_id": "init-mobility-2024",
        "initiative_title": "Urban cycling infrastructure and safer streets",
        "topic": "transport",
    },
    {
        "initiative_id": "init-ai-2024",
        "initiative_title": "Transparency requirements for AI systems",
        "topic": "digital",
    },
]

COUNTRIES = ["DE", "FR", "ES", "IT", "PL", "SK", "AT", "NL"]

GROUPS = [
    ("citizen", 0.46),
    ("company", 0.14),
    ("ngo", 0.14),
    ("academic_research", 0.10),
    ("public_authority", 0.08),
    ("trade_union", 0.05),
    ("anonymous", 0.03),
]

ORG_STEMS = {
    "company": ["Energy Solutions", "Grid Services", "Mobility Works", "Data Systems", "Power Retail"],
    "ngo": ["Climate Action Network", "Citizens Forum", "Clean Air Alliance", "Digital Rights Group"],
    "academic_research": ["Institute for Energy Policy", "Urban Studies Centre", "AI Ethics Lab"],
    "public_authority": ["City Council", "Regional Energy Agency", "Transport Authority"],
    "trade_union": ["Workers Union", "Federation of Energy Workers", "Transport Staff Union"],
}

# language -> topic -> (openers, stances, details); texts are assembled as
# opener + stance + detail so combinations stay distinct and on-topic.
TEMPLATES = {
    "en": {
        "energy": (
            ["As a household consumer,", "Speaking for our members,", "After reviewing the proposal,", "From our experience with smart meters,"],
            ["we support dynamic electricity tariffs", "we are concerned that dynamic electricity pricing will hurt vulnerable households", "we welcome hourly electricity prices", "we doubt the grid is ready for dynamic tariffs"],
            ["because flexible prices reward shifting demand to cheap hours.", "but only if smart meters are rolled out for free.", "since peak prices could double bills for families without storage.", "provided regulators cap the maximum hourly price.", "and ask for a social tariff for low-income households.", "because transparency about price formation is still missing."],
        ),
        "transport": (
            ["As daily cyclists,", "On behalf of our city,", "Having studied the plan,", "As parents of school children,"],
            ["we strongly support protected cycling lanes", "we fear the cycling plan ignores delivery traffic", "we welcome safer crossings and lower speed limits", "we think the budget for bicycle parking is too small"],
            ["because separated lanes demonstrably reduce accidents.", "and urge the city to connect the network gaps first.", "since school routes must be safe before anything else.", "but winter maintenance of the lanes must be funded too.", "and suggest priority traffic lights for bicycles at junctions."],
        ),
        "digital": (
            ["As software engineers,", "Representing consumer interests,", "After consulting our faculty,", "As a small business,"],
            ["we support transparency requirements for AI systems", "we worry the AI transparency rules burden small developers", "we welcome mandatory disclosure of training data sources", "we think the AI audit obligations are too vague"],
            ["because users must know when a decision was automated.", "and ask for standard templates instead of free-form reports.", "since opaque models already shape credit and hiring decisions.", "but trade secrets need a narrow, well-defined exemption.", "and propose a public register of high-risk systems."],
        ),
    },
    "de": {
        "energy": (
            ["Als Privathaushalt", "Im Namen unserer Mitglieder", "Nach Prüfung des Vorschlags", "Aus Sicht der Verbraucher"],
            ["unterstützen wir dynamische Stromtarife", "befürchten wir, dass dynamische Strompreise einkommensschwache Haushalte belasten", "begrüßen wir stündliche Strompreise", "bezweifeln wir, dass das Netz für dynamische Tarife bereit ist"],
            ["weil flexible Preise das Verschieben des Verbrauchs belohnen.", "aber nur, wenn intelligente Zähler kostenlos eingebaut werden.", "da Spitzenpreise die Rechnung von Familien verdoppeln können.", "sofern die Regulierungsbehörde den Höchstpreis begrenzt.", "und fordern einen Sozialtarif für einkommensschwache Haushalte."],
        ),
        "transport": (
            ["Als tägliche Radfahrer", "Im Namen unserer Stadt", "Nach Durchsicht des Plans", "Als Eltern von Schulkindern"],
            ["unterstützen wir geschützte Radwege nachdrücklich", "befürchten wir, dass der Radverkehrsplan den Lieferverkehr ignoriert", "begrüßen wir sichere Kreuzungen und Tempolimits", "halten wir das Budget für Fahrradparkplätze für zu klein"],
            ["weil getrennte Radwege Unfälle nachweislich verringern.", "und bitten die Stadt, zuerst die Netzlücken zu schließen.", "denn Schulwege müssen zuerst sicher sein.", "aber der Winterdienst auf den Radwegen muss finanziert werden."],
        ),
        "digital": (
            ["Als Softwareentwickler", "Als Verbrauchervertretung", "Nach Beratung in unserer Fakultät", "Als kleines Unternehmen"],
            ["unterstützen wir Transparenzpflichten für KI-Systeme", "befürchten wir, dass die KI-Transparenzregeln kleine Entwickler überfordern", "begrüßen wir die Offenlegung der Trainingsdatenquellen", "halten wir die KI-Prüfpflichten für zu vage"],
            ["weil Nutzer wissen müssen, wann eine Entscheidung automatisiert war.", "und bitten um Standardvorlagen statt freier Berichte.", "da undurchsichtige Modelle bereits über Kredite entscheiden.", "aber Geschäftsgeheimnisse brauchen eine enge Ausnahme."],
        ),
    },
    "fr": {
        "energy": (
            ["En tant que ménage,", "Au nom de nos membres,", "Après examen de la proposition,", "Du point de vue des consommateurs,"],
            ["nous soutenons les tarifs dynamiques de l'électricité", "nous craignons que les prix dynamiques pénalisent les ménages modestes", "nous saluons les prix horaires de l'électricité", "nous doutons que le réseau soit prêt pour les tarifs dynamiques"],
            ["car des prix flexibles récompensent le report de la consommation.", "mais seulement si les compteurs intelligents sont installés gratuitement.", "car les prix de pointe peuvent doubler la facture des familles.", "à condition que le régulateur plafonne le prix horaire maximal.", "et demandons un tarif social pour les ménages modestes."],
        ),
        "transport": (
            ["En tant que cyclistes quotidiens,", "Au nom de notre ville,", "Après étude du plan,", "En tant que parents d'élèves,"],
            ["nous soutenons fermement les pistes cyclables protégées", "nous craignons que le plan vélo ignore les livraisons", "nous saluons des carrefours plus sûrs et des vitesses réduites", "nous jugeons trop faible le budget du stationnement vélo"],
            ["car les pistes séparées réduisent nettement les accidents.", "et demandons de combler d'abord les coupures du réseau.", "car les trajets scolaires doivent être sûrs avant tout.", "mais l'entretien hivernal des pistes doit être financé."],
        ),
        "digital": (
            ["En tant qu'ingénieurs,", "Représentant les consommateurs,", "Après consultation de notre faculté,", "En tant que petite entreprise,"],
            ["nous soutenons les obligations de transparence des systèmes d'IA", "nous craignons que les règles de transparence pèsent sur les petits développeurs", "nous saluons la divulgation des sources de données d'entraînement", "nous trouvons les obligations d'audit trop vagues"],
            ["car chacun doit savoir quand une décision est automatisée.", "et demandons des modèles types plutôt que des rapports libres.", "car des modèles opaques influencent déjà le crédit et l'embauche.", "mais le secret des affaires exige une exception étroite."],
        ),
    },
    "es": {
        "energy": (
            ["Como hogar consumidor,", "En nombre de nuestros socios,", "Tras revisar la propuesta,", "Desde la experiencia con contadores inteligentes,"],
            ["apoyamos las tarifas eléctricas dinámicas", "tememos que los precios dinámicos perjudiquen a los hogares vulnerables", "celebramos los precios horarios de la electricidad", "dudamos de que la red esté lista para tarifas dinámicas"],
            ["porque los precios flexibles premian desplazar el consumo.", "pero solo si los contadores inteligentes se instalan gratis.", "porque los precios punta pueden duplicar la factura familiar.", "siempre que el regulador limite el precio horario máximo.", "y pedimos una tarifa social para hogares con pocos ingresos."],
        ),
        "transport": (
            ["Como ciclistas diarios,", "En nombre de nuestra ciudad,", "Tras estudiar el plan,", "Como padres de escolares,"],
            ["apoyamos firmemente los carriles bici protegidos", "tememos que el plan ciclista ignore el reparto de mercancías", "celebramos cruces más seguros y velocidades más bajas", "creemos que el presupuesto para aparcar bicicletas es escaso"],
            ["porque los carriles separados reducen claramente los accidentes.", "y pedimos conectar primero los tramos que faltan.", "porque las rutas escolares deben ser seguras ante todo.", "pero el mantenimiento invernal de los carriles debe financiarse."],
        ),
        "digital": (
            ["Como ingenieros de software,", "Representando a los consumidores,", "Tras consultar a nuestra facultad,", "Como pequeña empresa,"],
            ["apoyamos los requisitos de transparencia para sistemas de IA", "tememos que las normas de transparencia carguen a los pequeños desarrolladores", "celebramos la divulgación de las fuentes de datos de entrenamiento", "creemos que las obligaciones de auditoría son demasiado vagas"],
            ["porque la gente debe saber cuándo una decisión fue automatizada.", "y pedimos plantillas estándar en lugar de informes libres.", "porque los modelos opacos ya deciden créditos y contrataciones.", "pero los secretos comerciales necesitan una excepción estricta."],
        ),
    },
    "it": {
        "energy": (
            ["Come famiglia consumatrice,", "A nome dei nostri iscritti,", "Dopo aver esaminato la proposta,", "Dall'esperienza con i contatori intelligenti,"],
            ["sosteniamo le tariffe elettriche dinamiche", "temiamo che i prezzi dinamici danneggino le famiglie vulnerabili", "accogliamo con favore i prezzi orari dell'elettricità", "dubitiamo che la rete sia pronta per le tariffe dinamiche"],
            ["perché i prezzi flessibili premiano lo spostamento dei consumi.", "ma solo se i contatori intelligenti saranno installati gratuitamente.", "perché i prezzi di punta possono raddoppiare la bolletta.", "purché il regolatore fissi un tetto al prezzo orario.", "e chiediamo una tariffa sociale per le famiglie a basso reddito."],
        ),
        "transport": (
            ["Come ciclisti quotidiani,", "A nome della nostra città,", "Dopo aver studiato il piano,", "Come genitori di alunni,"],
            ["sosteniamo con forza le piste ciclabili protette", "temiamo che il piano ciclistico ignori le consegne", "accogliamo con favore incroci più sicuri e velocità ridotte", "riteniamo troppo scarso il bilancio per i parcheggi bici"],
            ["perché le piste separate riducono chiaramente gli incidenti.", "e chiediamo di collegare prima i tratti mancanti.", "perché i percorsi scolastici devono essere sicuri prima di tutto.", "ma la manutenzione invernale delle piste va finanziata."],
        ),
        "digital": (
            ["Come ingegneri del software,", "In rappresentanza dei consumatori,", "Dopo un confronto in facoltà,", "Come piccola impresa,"],
            ["sosteniamo gli obblighi di trasparenza per i sistemi di IA", "temiamo che le regole di trasparenza pesino sui piccoli sviluppatori", "accogliamo con favore la divulgazione delle fonti dei dati di addestramento", "riteniamo troppo vaghi gli obblighi di audit"],
            ["perché le persone devono sapere quando una decisione è automatizzata.", "e chiediamo modelli standard invece di relazioni libere.", "perché modelli opachi già decidono crediti e assunzioni.", "ma i segreti commerciali richiedono un'eccezione ristretta."],
        ),
    },
    "pl": {
        "energy": (
            ["Jako gospodarstwo domowe", "W imieniu naszych członków", "Po analizie propozycji", "Z doświadczenia z inteligentnymi licznikami"],
            ["popieramy dynamiczne taryfy energii elektrycznej", "obawiamy się, że dynamiczne ceny uderzą w uboższe gospodarstwa", "z zadowoleniem przyjmujemy godzinowe ceny prądu", "wątpimy, czy sieć jest gotowa na dynamiczne taryfy"],
            ["ponieważ elastyczne ceny nagradzają przesuwanie zużycia.", "ale tylko jeśli inteligentne liczniki będą montowane bezpłatnie.", "bo ceny szczytowe mogą podwoić rachunki rodzin.", "pod warunkiem że regulator ograniczy maksymalną cenę godzinową.", "i prosimy o taryfę socjalną dla uboższych gospodarstw."],
        ),
        "transport": (
            ["Jako codzienni rowerzyści", "W imieniu naszego miasta", "Po zapoznaniu się z planem", "Jako rodzice uczniów"],
            ["zdecydowanie popieramy chronione drogi rowerowe", "obawiamy się, że plan rowerowy pomija dostawy", "z zadowoleniem przyjmujemy bezpieczniejsze skrzyżowania i niższe prędkości", "uważamy, że budżet na parkingi rowerowe jest za mały"],
            ["ponieważ oddzielone drogi wyraźnie zmniejszają liczbę wypadków.", "i prosimy najpierw połączyć brakujące odcinki sieci.", "bo drogi do szkół muszą być bezpieczne przede wszystkim.", "ale zimowe utrzymanie dróg rowerowych też wymaga środków."],
        ),
        "digital": (
            ["Jako inżynierowie oprogramowania", "Reprezentując konsumentów", "Po konsultacji na wydziale", "Jako mała firma"],
            ["popieramy wymogi przejrzystości dla systemów SI", "obawiamy się, że zasady przejrzystości obciążą małych twórców", "z zadowoleniem przyjmujemy ujawnianie źródeł danych treningowych", "uważamy, że obowiązki audytu są zbyt ogólne"],
            ["ponieważ ludzie muszą wiedzieć, kiedy decyzja była automatyczna.", "i prosimy o standardowe szablony zamiast dowolnych raportów.", "bo nieprzejrzyste modele już decydują o kredytach.", "ale tajemnice handlowe wymagają wąskiego wyjątku."],
        ),
    },
}

LANG_WEIGHTS = [("en", 0.42), ("de", 0.18), ("fr", 0.12), ("es", 0.10), ("it", 0.09), ("pl", 0.09)]


def pick(rng: random.Random, weighted: list[tuple[str, float]]) -> str:
    roll = rng.random()
    acc = 0.0
    for value, weight in weighted:
        acc += weight
        if roll <= acc:
            return value
    return weighted[-1][0]


def main() -> None:
    rng = random.Random(SEED)
    start = datetime(2024, 1, 1, tzinfo=timezone.utc)
    seen_texts: set[tuple[str, str]] = set()
    lines: list[str] = []
    attempts = 0
    while len(lines) < TARGET_RECORDS and attempts < TARGET_RECORDS * 40:
        attempts += 1
        initiative = rng.choice(INITIATIVES)
        language = pick(rng, LANG_WEIGHTS)
        group = pick(rng, GROUPS)
        openers, stances, details = TEMPLATES[language][initiative["topic"]]
        text = " ".join(
            (rng.choice(openers), rng.choice(stances), rng.choice(details))
        )
        key = (initiative["initiative_id"], clean_text(text))
        if key in seen_texts:
            continue
        seen_texts.add(key)
        idx = len(lines)
        if rng.random() < 0.12:  # some portal submissions arrive as markup
            text = f"<p>{text.replace(' ', '&nbsp;', 1)}</p>"
        country = "unknown" if group == "anonymous" and rng.random() < 0.7 else rng.choice(COUNTRIES)
        organization = None
        if group in ORG_STEMS:
            organization = f"{rng.choice(ORG_STEMS[group])} {country}"
        submitted = start + timedelta(minutes=rng.randrange(0, 525600))
        record = {
            "source_id": f"s{idx:05d}",
            "initiative_id": initiative["initiative_id"],
            "initiative_title": initiative["initiative_title"],
            "topic": initiative["topic"],
            "stakeholder_group": group,
            "organization_name": organization,
            "country": country,
            "language": language,
            "submitted_at": submitted.isoformat(),
            "text": text,
        }
        lines.append(json.dumps(record, sort_keys=True, ensure_ascii=False))
    if len(lines) < TARGET_RECORDS:
        raise SystemExit(f"only generated {len(lines)} distinct records")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} records to {OUT}")


if __name__ == "__main__":
    main()
