#!/usr/bin/env python3
"""Regenerate the bundled sample corpora.

``sample32.jsonl``: 4 triplets per category, ordered in category blocks so
the pairwise control transform swaps negatives within each category.
``oneway8.jsonl``: triplets crafted for the order-sensitivity checks
(deletions and claim-in-context cases where one direction of containment
holds verbatim, plus symmetric controls).

Run from the repo root: python scripts/build_fixtures.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from matchprobe.corpus import (  # noqa: E402
    Corpus,
    CorpusMetadata,
    MRCategory,
    Sentence,
    Source,
    Triplet,
    serialize_corpus,
    validate_triplet,
)

C = Source.COLLECTED
G = Source.GENERATED

# (category, base, positive, negative, positive_source, negative_source)
SAMPLE32 = [
    (
        MRCategory.WORD_SWAP,
        "The only factory in the village produces light cotton fabric for the summer markets.",
        "Light cotton fabric for the summer markets is made by the village's single factory.",
        "The light factory in the village produces only cotton fabric for the summer markets.",
        G, C,
    ),
    (
        MRCategory.WORD_SWAP,
        "The old bridge near the harbor carries heavy trucks across the narrow channel.",
        "Heavy trucks cross the narrow channel on the aging bridge by the harbor.",
        "The heavy bridge near the harbor carries old trucks across the narrow channel.",
        G, C,
    ),
    (
        MRCategory.WORD_SWAP,
        "The young coach praised the tired players after the final whistle.",
        "After the final whistle, praise went from the youthful coach to his exhausted players.",
        "The tired coach praised the young players after the final whistle.",
        G, C,
    ),
    (
        MRCategory.WORD_SWAP,
        "A quiet student answered the difficult question before the nervous teacher.",
        "Before the teacher, who was nervous, the question was answered by a student who kept quiet.",
        "A nervous student answered the difficult question before the quiet teacher.",
        G, C,
    ),
    (
        MRCategory.OBJ_SUB,
        "Maria lent her camera to Daniel because he wanted it for the trip.",
        "Daniel borrowed Maria's camera since he needed one for the journey.",
        "Maria lent her camera to Daniel because she wanted it for the trip.",
        G, C,
    ),
    (
        MRCategory.OBJ_SUB,
        "The committee sent the report to the mayor after the meeting.",
        "Once the meeting ended, the mayor received the committee's report.",
        "The committee sent the report to the journalist after the meeting.",
        G, C,
    ),
    (
        MRCategory.OBJ_SUB,
        "The nurse gave the medicine to the patient in the evening.",
        "In the evening the patient took the medicine from the nurse.",
        "The nurse gave the medicine to the visitor in the evening.",
        G, C,
    ),
    (
        MRCategory.OBJ_SUB,
        "The museum bought the painting from a collector in Vienna.",
        "A Vienna collector sold the painting to the museum.",
        "The museum bought the sculpture from a collector in Vienna.",
        G, C,
    ),
    (
        MRCategory.ACT_SUB,
        "I think we know what we are going to discuss at the meeting.",
        "I believe we are aware of the topics for the meeting.",
        "I think we forget what we are going to discuss at the meeting.",
        G, C,
    ),
    (
        MRCategory.ACT_SUB,
        "The workers built the wooden cabin beside the lake last spring.",
        "Last spring, a wooden cabin went up beside the lake thanks to the workers.",
        "The workers destroyed the wooden cabin beside the lake last spring.",
        G, C,
    ),
    (
        MRCategory.ACT_SUB,
        "She opened the heavy gate before the guests arrived.",
        "Before the guests came, the heavy gate was opened by her.",
        "She locked the heavy gate before the guests arrived.",
        G, C,
    ),
    (
        MRCategory.ACT_SUB,
        "The company increased the salaries of its engineers this year.",
        "This year, engineer pay at the company went up.",
        "The company reduced the salaries of its engineers this year.",
        G, C,
    ),
    (
        MRCategory.NEGA_EXP,
        "I appreciate the gesture, and that is good to know.",
        "It is pleasing to learn that, and the gesture is valued.",
        "I do not appreciate the gesture, and that is good to know.",
        G, C,
    ),
    (
        MRCategory.NEGA_EXP,
        "The critics found the second album surprisingly disappointing.",
        "To the critics' surprise, the second album fell flat.",
        "The critics found the second album surprisingly upbeat.",
        G, C,
    ),
    (
        MRCategory.NEGA_EXP,
        "The trail to the summit is safe during the dry season.",
        "During the dry months, hikers can use the summit trail without danger.",
        "The trail to the summit is not safe during the dry season.",
        G, C,
    ),
    (
        MRCategory.NEGA_EXP,
        "The new policy made the commuters happy in the capital.",
        "Commuters in the capital welcomed the new policy.",
        "The new policy made the commuters unhappy in the capital.",
        G, C,
    ),
    (
        MRCategory.WORD_DEL,
        "In 1998, the city council approved the light rail project after months of debate.",
        "Following months of debate, the council of the city gave the light rail project its approval in 1998.",
        "The city council approved the light rail project after months of debate.",
        G, C,
    ),
    (
        MRCategory.WORD_DEL,
        "During the winter, the mountain road stays closed to all tourist buses.",
        "Tourist buses cannot use the mountain road in the winter months.",
        "The mountain road stays closed to all tourist buses.",
        G, C,
    ),
    (
        MRCategory.WORD_DEL,
        "Before sunrise, the fishing crew loaded the nets onto the small boat.",
        "The nets went onto the small boat while the crew worked ahead of sunrise.",
        "The fishing crew loaded the nets onto the small boat.",
        G, C,
    ),
    (
        MRCategory.WORD_DEL,
        "After the storm, volunteers cleared the fallen branches from the schoolyard.",
        "The schoolyard was cleared of the branches the storm had brought down by volunteers.",
        "Volunteers cleared the fallen branches from the schoolyard.",
        G, C,
    ),
    (
        MRCategory.QUANT_SUB,
        "In 1902, the museum opened its doors to the public for the first time.",
        "The museum first welcomed the public in 1902.",
        "In 2814, the museum opened its doors to the public for the first time.",
        G, G,
    ),
    (
        MRCategory.QUANT_SUB,
        "The farm delivered 120 crates of apples to the market on Friday.",
        "On Friday the market received one hundred twenty apple crates from the farm.",
        "The farm delivered 57 crates of apples to the market on Friday.",
        G, G,
    ),
    (
        MRCategory.QUANT_SUB,
        "The new stadium can seat 45000 spectators during league matches.",
        "During league games, forty-five thousand fans fit in the new stadium.",
        "The new stadium can seat 81000 spectators during league matches.",
        G, G,
    ),
    (
        MRCategory.QUANT_SUB,
        "The report says the glacier retreated 8.5 meters in a single year.",
        "Within one year, the glacier lost eight and a half meters, the report notes.",
        "The report says the glacier retreated 3.2 meters in a single year.",
        G, G,
    ),
    (
        MRCategory.ERR_TRANS,
        "The night train to the coast leaves earlier than the morning express.",
        "Compared with the morning express, the coastal night train departs sooner.",
        "The morning express to the coast leaves earlier than the night train.",
        G, C,
    ),
    (
        MRCategory.ERR_TRANS,
        "The committee blamed the delays on the contractor's poor planning.",
        "Poor planning by the contractor caused the delays, the committee said.",
        "The contractor blamed the delays on the committee's poor planning.",
        G, C,
    ),
    (
        MRCategory.ERR_TRANS,
        "Most visitors preferred the old wing of the gallery to the modern annex.",
        "The gallery's historic wing drew more favor from visitors than the new annex.",
        "Most visitors preferred the modern annex of the gallery to the old wing.",
        G, C,
    ),
    (
        MRCategory.ERR_TRANS,
        "The southern vineyards produce sweeter grapes than the northern slopes.",
        "Grapes from the south of the region come out sweeter than those grown up north.",
        "The northern vineyards produce sweeter grapes than the southern slopes.",
        G, C,
    ),
    (
        MRCategory.ERR_NLI,
        "The lighthouse was completed in 1821.",
        "In 1821, workers finished the granite lighthouse at the harbor mouth, and a keeper's cottage was added the following spring.",
        "Workers finished the granite structure at the harbor mouth, and a keeper's cottage was added the following spring.",
        C, G,
    ),
    (
        MRCategory.ERR_NLI,
        "The novel sold two million copies.",
        "The novel sold two million copies within its first decade, a record the publisher celebrated with a special anniversary edition.",
        "The book reached a wide audience within its first decade, a record the publisher celebrated with a special anniversary edition.",
        C, G,
    ),
    (
        MRCategory.ERR_NLI,
        "The comet returns every 76 years.",
        "Astronomers confirmed that the comet returns every 76 years, placing its next visit within this century.",
        "Astronomers confirmed the body's periodic visits, placing its next appearance within this century.",
        C, G,
    ),
    (
        MRCategory.ERR_NLI,
        "The castle survived the great fire.",
        "Although the great fire destroyed most of the lower town, the castle survived behind its stone walls.",
        "Although the blaze destroyed most of the lower town, the fortress endured behind its stone walls.",
        C, G,
    ),
]

ONEWAY8 = [
    (
        MRCategory.WORD_DEL,
        "The orchestra rehearsed the symphony in the old concert hall.",
        "The orchestra rehearsed the symphony in the old concert hall before the visiting conductor arrived.",
        "The orchestra rehearsed the symphony.",
        G, C,
    ),
    (
        MRCategory.WORD_DEL,
        "The bakery sells fresh rye bread on weekday mornings.",
        "The bakery sells fresh rye bread on weekday mornings, and regulars line up before the doors open.",
        "The bakery sells fresh rye bread.",
        G, C,
    ),
    (
        MRCategory.ERR_NLI,
        "The observatory opened in 1932.",
        "The observatory opened in 1932, and its brass telescope still draws visitors every clear night.",
        "The domed building on the ridge still draws visitors every clear night with its brass telescope.",
        C, G,
    ),
    (
        MRCategory.ERR_NLI,
        "The ferry crosses the strait twice a day.",
        "The ferry crosses the strait twice a day, weather permitting, carrying mail to the outer islands.",
        "The old vessel makes regular trips, weather permitting, carrying mail to the outer islands.",
        C, G,
    ),
    (
        MRCategory.WORD_SWAP,
        "The tall gardener watered the thirsty roses near the gate.",
        "Near the gate, the roses, which were thirsty, got water from the tall gardener.",
        "The thirsty gardener watered the tall roses near the gate.",
        G, C,
    ),
    (
        MRCategory.WORD_SWAP,
        "A silver coin rolled under the wooden bench by the door.",
        "By the door, the coin of silver went rolling beneath the bench made of wood.",
        "A wooden coin rolled under the silver bench by the door.",
        G, C,
    ),
    (
        MRCategory.OBJ_SUB,
        "Elena handed the keys to the doorman after midnight.",
        "After midnight the doorman received the keys from Elena.",
        "Elena handed the keys to the plumber after midnight.",
        G, C,
    ),
    (
        MRCategory.OBJ_SUB,
        "The satellite sent the images to the ground station.",
        "The ground station received the satellite's images.",
        "The satellite sent the images to the submarine.",
        G, C,
    ),
]


def make_corpus(name: str, rows) -> Corpus:
    triplets = []
    for i, (category, base, positive, negative, pos_src, neg_src) in enumerate(rows, start=1):
        tid = f"{name}-{i:03d}"
        triplet = Triplet(
            id=tid,
            base=Sentence.make(f"{tid}.base", base, C),
            positive=Sentence.make(f"{tid}.positive", positive, pos_src),
            negative=Sentence.make(f"{tid}.negative", negative, neg_src),
            category=category,
        )
        violations = validate_triplet(triplet)
        if violations:
            raise SystemExit(f"{tid}: invalid fixture triplet: {violations}")
        triplets.append(triplet)
    return Corpus(triplets=tuple(triplets), metadata=CorpusMetadata(name=name))


def main() -> None:
    out_dir = ROOT / "src" / "matchprobe" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, rows in (("sample32", SAMPLE32), ("oneway8", ONEWAY8)):
        corpus = make_corpus(name, rows)
        path = out_dir / f"{name}.jsonl"
        path.write_text(serialize_corpus(corpus), encoding="utf-8")
        print(f"wrote {path} ({len(corpus)} triplets)")


if __name__ == "__main__":
    main()
