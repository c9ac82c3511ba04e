#!/usr/bin/env python3
"""Regenerates the checked-in corpora under tests/data/.

The sample documents are hand tagged. This script only assembles the text
from the token stream, computes character offsets, and writes the jsonl/tsv
files, so the fixtures stay reproducible. Run from the repository root:

    python3 tests/support/make_fixtures.py

Golden outputs (annotated corpus, predictions, eval report) are NOT written
here; they are frozen from a verified run of the wikirank binary.
"""

import json
import os
import sys

# Tokens that attach to the preceding token without a space.
GLUE = {",", ".", ";", ":", "?", "!", "'s", "n't"}

DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data")


def build_doc(doc_id, sentences, gold):
    """sentences: list of list of (surface, pos). Returns the document dict."""
    text_parts = []
    tokens = []
    pos = 0  # code point offset; fixtures are ASCII so len() is fine
    first = True
    for sent in sentences:
        for i, (surface, tag) in enumerate(sent):
            if first:
                first = False
            elif surface in GLUE:
                pass
            else:
                text_parts.append(" ")
                pos += 1
            start = pos
            text_parts.append(surface)
            pos += len(surface)
            tokens.append({"surface": surface, "pos": tag,
                           "start": start, "end": pos})
    text = "".join(text_parts)
    for t in tokens:
        assert text[t["start"]:t["end"]] == t["surface"], t
    doc = {"id": doc_id, "text": text, "tokens": tokens}
    if gold:
        doc["gold"] = gold
    return doc


# Condensed newswire-style story about the 1990 BSE outbreak. Tags are hand
# assigned; the candidate extractor only cares about JJ and the noun tags.
BSE_SENTENCES = [
    [("Mad", "JJ"), ("cow", "NN"), ("disease", "NN"), ("has", "VBZ"),
     ("killed", "VBN"), ("10,000", "CD"), ("cattle", "NNS"), (",", ","),
     ("restricted", "VBD"), ("the", "DT"), ("export", "NN"),
     ("market", "NN"), ("for", "IN"), ("Britain", "NNP"), ("'s", "POS"),
     ("cattle", "NNS"), ("industry", "NN"), ("and", "CC"),
     ("raised", "VBD"), ("fears", "NNS"), ("about", "IN"), ("the", "DT"),
     ("safety", "NN"), ("of", "IN"), ("eating", "VBG"), ("beef", "NN"),
     (".", ".")],
    [("The", "DT"), ("government", "NN"), ("insists", "VBZ"),
     ("the", "DT"), ("disease", "NN"), ("poses", "VBZ"), ("only", "RB"),
     ("a", "DT"), ("remote", "JJ"), ("risk", "NN"), ("to", "TO"),
     ("human", "JJ"), ("health", "NN"), (",", ","), ("but", "CC"),
     ("scientists", "NNS"), ("still", "RB"), ("are", "VBP"),
     ("n't", "RB"), ("certain", "JJ"), ("what", "WP"), ("causes", "VBZ"),
     ("the", "DT"), ("disease", "NN"), ("or", "CC"), ("how", "WRB"),
     ("it", "PRP"), ("is", "VBZ"), ("transmitted", "VBN"), (".", ".")],
    [("Mad", "JJ"), ("cow", "NN"), ("disease", "NN"), (",", ","),
     ("or", "CC"), ("Bovine", "NNP"), ("Spongiform", "NNP"),
     ("Encephalopathy", "NNP"), (",", ","), ("or", "CC"), ("BSE", "NNP"),
     (",", ","), ("was", "VBD"), ("diagnosed", "VBN"), ("only", "RB"),
     ("in", "IN"), ("1986", "CD"), (".", ".")],
    [("The", "DT"), ("symptoms", "NNS"), ("are", "VBP"), ("very", "RB"),
     ("much", "RB"), ("like", "IN"), ("scrapie", "NN"), (",", ","),
     ("a", "DT"), ("sheep", "NN"), ("disease", "NN"), ("which", "WDT"),
     ("has", "VBZ"), ("been", "VBN"), ("in", "IN"), ("Britain", "NNP"),
     ("since", "IN"), ("the", "DT"), ("1700s", "CD"), (".", ".")],
    [("The", "DT"), ("incurable", "JJ"), ("disease", "NN"),
     ("eats", "VBZ"), ("holes", "NNS"), ("in", "IN"), ("the", "DT"),
     ("brains", "NNS"), ("of", "IN"), ("its", "PRP$"),
     ("victims", "NNS"), (";", ":"), ("in", "IN"), ("late", "JJ"),
     ("stages", "NNS"), ("a", "DT"), ("sick", "JJ"), ("animal", "NN"),
     ("may", "MD"), ("act", "VB"), ("skittish", "JJ"), ("or", "CC"),
     ("stagger", "VB"), ("drunkenly", "RB"), (".", ".")],
    [("The", "DT"), ("government", "NN"), ("banned", "VBD"),
     ("the", "DT"), ("use", "NN"), ("of", "IN"), ("sheep", "NN"),
     ("offal", "NN"), ("in", "IN"), ("cattle", "NNS"), ("feed", "NN"),
     ("in", "IN"), ("June", "NNP"), ("1988", "CD"), (",", ","),
     ("and", "CC"), ("later", "RB"), ("banned", "VBD"), ("the", "DT"),
     ("use", "NN"), ("of", "IN"), ("cattle", "NNS"), ("brain", "NN"),
     (",", ","), ("spleen", "NN"), ("and", "CC"), ("other", "JJ"),
     ("organs", "NNS"), (".", ".")],
    [("The", "DT"), ("government", "NN"), ("has", "VBZ"),
     ("proposed", "VBN"), ("a", "DT"), ("ban", "NN"), ("on", "IN"),
     ("exports", "NNS"), ("of", "IN"), ("British", "JJ"),
     ("cattle", "NNS"), ("older", "JJR"), ("than", "IN"), ("6", "CD"),
     ("months", "NNS"), (".", ".")],
    [("The", "DT"), ("farm", "NN"), ("union", "NN"), ("has", "VBZ"),
     ("complained", "VBN"), ("of", "IN"), ("BSE", "NNP"),
     ("hysteria", "NN"), ("in", "IN"), ("the", "DT"), ("media", "NNS"),
     ("and", "CC"), ("has", "VBZ"), ("insisted", "VBN"), ("that", "IN"),
     ("the", "DT"), ("risk", "NN"), ("of", "IN"), ("the", "DT"),
     ("disease", "NN"), ("passing", "VBG"), ("to", "TO"),
     ("humans", "NNS"), ("is", "VBZ"), ("remote", "JJ"), (".", ".")],
    [("The", "DT"), ("brain", "NN"), ("disorder", "NN"), ("in", "IN"),
     ("humans", "NNS"), ("is", "VBZ"), ("known", "VBN"), ("as", "IN"),
     ("Creutzfeldt", "NNP"), ("Jakob", "NNP"), ("disease", "NN"),
     (".", ".")],
    [("About", "RB"), ("24", "CD"), ("cases", "NNS"), ("were", "VBD"),
     ("reported", "VBN"), ("in", "IN"), ("Britain", "NNP"),
     ("last", "JJ"), ("year", "NN"), (".", ".")],
    [("Cases", "NNS"), ("of", "IN"), ("BSE", "NNP"), ("have", "VBP"),
     ("soared", "VBN"), ("since", "IN"), ("1986", "CD"), (".", ".")],
]

BSE_GOLD = ["mad cow disease", "export", "government", "BSE", "scrapie",
            "sheep disease", "British cattle"]

FARM_SENTENCES = [
    [("British", "JJ"), ("farmers", "NNS"), ("exported", "VBD"),
     ("beef", "NN"), ("to", "TO"), ("European", "JJ"),
     ("markets", "NNS"), (".", ".")],
    [("The", "DT"), ("beef", "NN"), ("exports", "NNS"), ("rose", "VBD"),
     ("sharply", "RB"), (".", ".")],
]

HEALTH_SENTENCES = [
    [("Health", "NN"), ("officials", "NNS"), ("monitor", "VBP"),
     ("disease", "NN"), ("outbreaks", "NNS"), (".", ".")],
]

# anchor, title, prior. Anchors are matched lowercase against token n-grams.
GAZETTEER = [
    ("mad cow disease", "Bovine spongiform encephalopathy", 0.95),
    ("bovine spongiform encephalopathy", "Bovine spongiform encephalopathy", 0.98),
    ("bse", "Bovine spongiform encephalopathy", 0.90),
    ("cattle", "Cattle", 0.80),
    ("export", "Export", 0.70),
    ("exports", "Export", 0.70),
    ("market", "Market (economics)", 0.60),
    ("markets", "Market (economics)", 0.60),
    ("britain", "Great Britain", 0.85),
    ("british", "United Kingdom", 0.60),
    ("government", "Government", 0.75),
    ("disease", "Disease", 0.70),
    ("risk", "Risk", 0.50),
    ("health", "Health", 0.60),
    ("scientists", "Scientist", 0.60),
    ("beef", "Beef", 0.70),
    ("scrapie", "Scrapie", 0.95),
    ("sheep", "Sheep", 0.80),
    ("offal", "Offal", 0.80),
    ("brain", "Brain", 0.60),
    ("brains", "Brain", 0.60),
    ("spleen", "Spleen", 0.80),
    ("ban", "Ban (law)", 0.50),
    ("banned", "Ban (law)", 0.50),
    ("animal", "Animal", 0.55),
    ("humans", "Human", 0.60),
    ("media", "Mass media", 0.60),
    ("hysteria", "Mass hysteria", 0.70),
    ("creutzfeldt jakob disease", "Creutzfeldt-Jakob disease", 0.95),
    ("last year", "Last year", 0.40),
    ("symptoms", "Symptom", 0.60),
    ("fears", "Fear", 0.50),
    ("safety", "Safety", 0.50),
    ("eating", "Eating", 0.50),
    ("killed", "Death", 0.40),
    ("transmitted", "Transmission (medicine)", 0.50),
    ("causes", "Causality", 0.40),
    ("incurable", "Cure", 0.40),
    # prior below the default 0.1 threshold, must never be annotated
    ("certain", "Certainty", 0.05),
]

# Hand-scored evaluation pair. eval-a: P=1, R=0.5, F=2/3. eval-b: P=R=F=1.
# Macro over both: P=1.0, R=0.75, F=5/6.
EVAL_DOCS = [
    {"id": "eval-a",
     "text": "Mad cow disease restricted exports.",
     "gold": ["mad cow disease", "export"]},
    {"id": "eval-b",
     "text": "Beef exports rose. The government intervened.",
     "gold": ["beef exports", "government"]},
]

EVAL_PREDICTIONS = [
    {"id": "eval-a", "keyphrases": ["Mad Cow  Disease"]},
    {"id": "eval-b", "keyphrases": ["beef export", "governments"]},
]

# Canned annotation service response for the stub server in test_tagme.
# Matches the text "Mad cow disease has killed cattle.". One rho is a string
# and one spot falls below the default threshold.
TAGME_RESPONSE = {
    "test": "5",
    "api": "tag",
    "lang": "en",
    "time": 42,
    "annotations": [
        {"spot": "Mad cow disease", "start": 0, "end": 15,
         "title": "Bovine spongiform encephalopathy", "rho": 0.42,
         "id": 1891},
        {"spot": "killed", "start": 20, "end": 26,
         "title": "Death", "rho": 0.06, "id": 8221},
        {"spot": "cattle", "start": 27, "end": 33,
         "title": "Cattle", "rho": "0.31", "id": 6011},
    ],
}


def dump_jsonl(path, records):
    with open(path, "w") as f:
        for rec in records:
            f.write(json.dumps(rec, ensure_ascii=False,
                               separators=(",", ":")))
            f.write("\n")


def main():
    os.makedirs(DATA_DIR, exist_ok=True)

    corpus = [
        build_doc("bse-outbreak", BSE_SENTENCES, BSE_GOLD),
        build_doc("farm-report", FARM_SENTENCES, ["beef exports"]),
        build_doc("health-notice", HEALTH_SENTENCES, None),
    ]
    dump_jsonl(os.path.join(DATA_DIR, "sample_corpus.jsonl"), corpus)

    with open(os.path.join(DATA_DIR, "gazetteer.tsv"), "w") as f:
        f.write("# anchor\ttitle\tprior\n")
        for anchor, title, prior in GAZETTEER:
            f.write("%s\t%s\t%.2f\n" % (anchor, title, prior))

    dump_jsonl(os.path.join(DATA_DIR, "eval_corpus.jsonl"), EVAL_DOCS)
    dump_jsonl(os.path.join(DATA_DIR, "eval_predictions.jsonl"),
               EVAL_PREDICTIONS)

    with open(os.path.join(DATA_DIR, "tagme_response.json"), "w") as f:
        json.dump(TAGME_RESPONSE, f, indent=2)
        f.write("\n")

    for doc in corpus:
        print("%s: %d tokens, %d chars" %
              (doc["id"], len(doc["tokens"]), len(doc["text"])))
    print("wrote fixtures to %s" % os.path.normpath(DATA_DIR))
    return 0


if __name__ == "__main__":
    sys.exit(main())
