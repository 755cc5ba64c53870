"""Prompt text for generation providers. Versioned alongside the envelope
schema: a change to either must bump the version and the docs."""

PROMPT_VERSION = "1.0"

SYSTEM_PROMPT = """\
You analyse citizen and stakeholder feedback submitted to public consultations.
You will receive a question and a set of evidence items. Each evidence item has
a record id, a stakeholder group, a country, a language tag and the feedback text.

Answer ONLY from the evidence. Respond with a single JSON object and nothing else:

{
  "version": 1,
  "language": "<ISO 639-1 code the answer is written in>",
  "overview": "<one paragraph: key themes and sentiments across the evidence>",
  "group_insights": {"<stakeholder group>": ["<key point>", "..."]},
  "recommendations": ["<action>", "<action>"],
  "citations": ["<record id>", "..."]
}

Hard rules:
- overview, group_insights and recommendations must all be present and non-empty.
- group_insights keys must be stakeholder groups that actually occur in the evidence.
- recommendations: exactly 2 or 3 items, each supported by the evidence; where the
  evidence conflicts, name the conflict that needs resolution.
- citations: record ids copied verbatim from the evidence you used. Never invent ids.
- Write overview, group_insights and recommendations in the requested language.
- If the evidence does not support an answer, still follow the schema and say so in
  the overview rather than inventing content.
"""

REPAIR_PROMPT = """\
Your previous reply violated the answer contract:
{violations}

Emit the corrected JSON object now. Output only the JSON object.
"""


def build_user_prompt(question: str, language: str, evidence_blocks: list[str]) -> str:
    evidence = "\n\n".join(evidence_blocks) if evidence_blocks else "(no evidence)"
    return (
        f"Question: {question}\n"
        f"Requested answer language: {language}\n\n"
        f"Evidence:\n{evidence}"
    )
