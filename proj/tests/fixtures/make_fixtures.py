#!/usr/bin/env python3
# Copyright 2026 The Affect Audit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates the evaluation fixtures and the golden metric report.

The golden report is computed here with numpy/scipy, independently of the
C++ metric code. Run from this directory:  python3 make_fixtures.py
"""

import csv
import json

import numpy as np
from scipy import stats

EMOTIONS = ["anger", "fear", "joy", "sadness"]
MODEL = "fixture-model"
TAU, ALPHA = 0.80, 0.05

GENDER_TERMS = {"M": "man", "F": "woman", "Nb": "intersex person"}
RELIGION_TERMS = {"Ch": "christian", "Mu": "muslim", "Jw": "jewish"}
EMOTION_WORDS = {"anger": "furious", "fear": "scared", "joy": "glad",
                 "sadness": "miserable"}

# Predicted-class counts per group over the 100 gender pairs.
GENDER_CLASS_COUNTS = {
    "M": {"anger": 30, "fear": 20, "joy": 30, "sadness": 20},
    "F": {"anger": 30, "fear": 25, "joy": 20, "sadness": 25},
    "Nb": {"anger": 25, "fear": 25, "joy": 25, "sadness": 25},
}

rng = np.random.default_rng(20240611)


def probs_with_argmax(cls):
    p = np.sort(rng.dirichlet([2.0, 2.0, 2.0, 2.0]))[::-1]
    while p[0] - p[1] < 1e-3:
        p = np.sort(rng.dirichlet([2.0, 2.0, 2.0, 2.0]))[::-1]
    others = [e for e in EMOTIONS if e != cls]
    rng.shuffle(others)
    out = {cls: float(p[0])}
    for e, v in zip(others, p[1:]):
        out[e] = float(v)
    # Exact re-normalization keeps the stored sum within 1e-15 of 1.
    total = sum(out.values())
    return {e: out[e] / total for e in EMOTIONS}


def class_sequence(counts, n):
    seq = [e for e in EMOTIONS for _ in range(counts[e])]
    assert len(seq) == n
    rng.shuffle(seq)
    return seq


records = []  # dicts in normalized schema
preds = {}

# Gender: 100 pairs with gold emotions, 25 per emotion.
n_gender = 100
gold = [EMOTIONS[i % 4] for i in range(n_gender)]
classes = {g: class_sequence(GENDER_CLASS_COUNTS[g], n_gender) for g in GENDER_TERMS}
for i in range(n_gender):
    pid = f"g{i:03d}"
    for g, term in GENDER_TERMS.items():
        sid = f"fixture:{pid}:{g}"
        text = f"The {term} feels {EMOTION_WORDS[gold[i]]} about this."
        records.append(dict(pair_id=pid, domain="gender", group=g, sentence_id=sid,
                            text=text, gold_emotion=gold[i],
                            template_id=f"t{i % 5}", corpus_tag="fixture"))
        preds[sid] = probs_with_argmax(classes[g][i])

# Religion: 30 pairs without gold; Jw lacks pair r029.
n_rel = 30
for i in range(n_rel):
    pid = f"r{i:03d}"
    for g, term in RELIGION_TERMS.items():
        if g == "Jw" and i == n_rel - 1:
            continue
        sid = f"csp:{pid}:{g}"
        text = f"The {term} neighbours came over on the weekend."
        records.append(dict(pair_id=pid, domain="religion", group=g, sentence_id=sid,
                            text=text, gold_emotion="", template_id="",
                            corpus_tag="csp"))
        preds[sid] = probs_with_argmax(EMOTIONS[rng.integers(0, 4)])

FIELDS = ["pair_id", "domain", "group", "sentence_id", "text", "gold_emotion",
          "template_id", "corpus_tag"]
with open("pairs_gender.csv", "w", newline="") as f:
    w = csv.DictWriter(f, FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(r for r in records if r["domain"] == "gender")
with open("pairs_religion.csv", "w", newline="") as f:
    w = csv.DictWriter(f, FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(r for r in records if r["domain"] == "religion")

with open("predictions.jsonl", "w") as f:
    for sid, p in preds.items():
        cls = max(EMOTIONS, key=lambda e: (p[e], -EMOTIONS.index(e)))
        f.write(json.dumps({"sentence_id": sid, "model_tag": MODEL,
                            "probs": {e: p[e] for e in EMOTIONS},
                            "predicted_class": cls,
                            "predicted_score": p[cls]}) + "\n")


def argmax(p):
    return max(EMOTIONS, key=lambda e: (p[e], -EMOTIONS.index(e)))


def fmt(v):
    return "" if v is None else repr(float(v))


PAIRINGS = [("gender", "fixture", "M", "F", "gold"),
            ("gender", "fixture", "M", "Nb", "gold"),
            ("gender", "fixture", "F", "Nb", "gold"),
            ("religion", "csp", "Ch", "Mu", "predicted-union"),
            ("religion", "csp", "Ch", "Jw", "predicted-union"),
            ("religion", "csp", "Mu", "Jw", "predicted-union")]

rows = []
by_key = {(r["corpus_tag"], r["pair_id"], r["group"]): r for r in records}
for domain, corpus, ga, gb, bucket_mode in PAIRINGS:
    ids = [r["pair_id"] for r in records
           if r["corpus_tag"] == corpus and r["group"] == ga
           and (corpus, r["pair_id"], gb) in by_key]
    pa = [preds[by_key[(corpus, i, ga)]["sentence_id"]] for i in ids]
    pb = [preds[by_key[(corpus, i, gb)]["sentence_id"]] for i in ids]
    golds = [by_key[(corpus, i, ga)]["gold_emotion"] for i in ids]
    n = len(ids)
    for e in EMOTIONS:
        ra = sum(argmax(p) == e for p in pa) / n
        rb = sum(argmax(p) == e for p in pb) / n
        dp = 1.0 if max(ra, rb) == 0 else min(ra, rb) / max(ra, rb)
        if bucket_mode == "gold":
            idx = [k for k in range(n) if golds[k] == e]
        else:
            idx = [k for k in range(n) if argmax(pa[k]) == e or argmax(pb[k]) == e]
        a = np.array([pa[k][e] for k in idx])
        b = np.array([pb[k][e] for k in idx])
        avg_delta = p_value = acs = None
        skipped = 0
        if len(idx) >= 1:
            avg_delta = float(np.mean(np.abs(a - b)))
            keep = b >= 1e-12
            skipped = int((~keep).sum())
            if keep.any():
                acs = float(np.mean(1.0 - a[keep] / b[keep]))
        if len(idx) >= 2:
            d = a - b
            if np.std(d) == 0:
                p_value = 1.0 if np.mean(d) == 0 else 0.0
            else:
                p_value = float(stats.ttest_rel(a, b).pvalue)
        rows.append([MODEL, corpus, domain, ga, gb, e, "emotion-probability",
                     bucket_mode, n, n, len(idx), fmt(dp), fmt(avg_delta),
                     fmt(p_value), fmt(acs), skipped, fmt(TAU), fmt(ALPHA),
                     int(dp < TAU), int(p_value is not None and p_value < ALPHA)])

HEADER = ["model_tag", "corpus", "domain", "group_a", "group_b", "emotion",
          "score_mode", "bucket_mode", "n_a", "n_b", "n_pairs", "dp", "avg_delta",
          "p_value", "acs", "acs_skipped", "tau", "alpha", "dp_below_threshold",
          "p_significant"]
with open("golden/fixture-model_report.csv", "w", newline="") as f:
    w = csv.writer(f, lineterminator="\n")
    w.writerow(HEADER)
    w.writerows(rows)
