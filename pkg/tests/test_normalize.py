import json

from hypothesis import given
from hypothesis import strategies as st

from civicqa.ingest.normalize import Rejection, clean_text, map_stakeholder, normalize
from civicqa.records import EU_LANGUAGES, UNKNOWN, InitiativeMeta, RawSubmission

INITIATIVE = InitiativeMeta("init-a", "Initiative A", "energy")


def make_raw(payload, user_type="EU citizen", date="2024-03-01T10:00:00Z", **meta):
    declared = {"user_type": user_type, "date": date, **meta}
    return RawSubmission(
        source_id="s1", initiative_id="init-a", payload=payload, declared_metadata=declared
    )


def test_markup_and_entities_are_stripped():
    record = normalize(make_raw("<p>Great&nbsp;idea!</p>"), INITIATIVE)
    assert record.text == "Great idea!"
    assert record.stakeholder_group == "citizen"


def test_whitespace_only_payload_is_rejected():
    result = normalize(make_raw("   "), INITIATIVE)
    assert isinstance(result, Rejection)
    assert result.reason == "empty_text"


def test_unmapped_user_type_falls_back_to_other():
    record = normalize(make_raw("Long enough feedback text.", user_type="Dachverband XY"), INITIATIVE)
    assert record.stakeholder_group == "other"


def test_missing_user_type_is_anonymous():
    assert map_stakeholder(None) == "anonymous"
    assert map_stakeholder("  ") == "anonymous"


def test_bad_timestamp_rejected():
    result = normalize(make_raw("Fine text here.", date="soonish"), INITIATIVE)
    assert isinstance(result, Rejection)
    assert result.reason == "bad_timestamp"


def test_control_characters_removed_and_whitespace_collapsed():
    record = normalize(make_raw("a\x00b\tc\n\nd   e"), INITIATIVE)
    assert record.text == "a b c d e"


def test_declared_language_wins_over_detection():
    record = normalize(
        make_raw("Die Energiewende ist wichtig für uns alle.", language="fr"),
        INITIATIVE,
    )
    assert record.language == "fr"


def test_normalize_is_deterministic():
    raw = make_raw("<b>Exactly</b> the same input text.")
    first = normalize(raw, INITIATIVE)
    second = normalize(raw, INITIATIVE)
    assert json.dumps(first.to_dict(), sort_keys=True) == json.dumps(
        second.to_dict(), sort_keys=True
    )


def test_country_normalization():
    assert normalize(make_raw("Some text ok.", country="de"), INITIATIVE).country == "DE"
    assert normalize(make_raw("Some text ok.", country="Germany"), INITIATIVE).country == UNKNOWN
    assert normalize(make_raw("Some text ok."), INITIATIVE).country == UNKNOWN


@given(payload=st.text(max_size=400))
def test_accepted_records_satisfy_invariants(payload):
    result = normalize(make_raw(payload), INITIATIVE)
    if isinstance(result, Rejection):
        assert result.reason in ("empty_text", "bad_timestamp")
        return
    assert len(result.text) >= 3
    assert result.language in EU_LANGUAGES or result.language == UNKNOWN
    assert result.record_id
    assert "  " not in result.text
    assert result.text == result.text.strip()


@given(payload=st.text(max_size=200))
def test_clean_text_is_idempotent(payload):
    once = clean_text(payload)
    assert clean_text(once) == once
