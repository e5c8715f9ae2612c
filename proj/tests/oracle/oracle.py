#!/usr/bin/env python3
# Copyright 2026 The vsmgrade Authors
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
"""Brute-force reference scorer for the fixture corpus.

Straight-line re-implementation of the scoring pipeline with no code shared
with the C++ library: Python's csv module, unicodedata letter categories,
dict-based TF-IDF and explicit loops for Cosine and Jaccard. Writes the
golden files the C++ tests compare against.

usage: oracle.py FIXTURE_DIR OUTPUT_DIR
"""

import csv
import math
import os
import sys
import unicodedata


def read_csv(path):
    with open(path, newline="", encoding="utf-8-sig") as f:
        rows = list(csv.reader(f))
    return rows[0], rows[1:]


def tokens_of(text, stopwords, normalization):
    chars = []
    for ch in text:
        chars.append(ch if unicodedata.category(ch).startswith("L") else " ")
    words = "".join(chars).lower().split()
    out = []
    for w in words:
        if w in normalization:
            w = normalization[w]
        if w not in stopwords:
            out.append(w)
    return out


def grams_of(tokens, n):
    return [" ".join(tokens[i:i + n]) for i in range(len(tokens) - n + 1)]


def tfidf(grams, idf):
    vec = {}
    total = len(grams)
    for g in set(grams):
        w = grams.count(g) / total * idf.get(g, 0.0)
        if w > 0:
            vec[g] = w
    return vec


def cosine(a, b):
    # Sorted keys: set iteration order is hash-seeded and would make the sums
    # differ between interpreter runs in the last bit.
    keys = sorted(set(a) | set(b))
    dot = sum(a.get(k, 0.0) * b.get(k, 0.0) for k in keys)
    na = sum(a[k] * a[k] for k in sorted(a))
    nb = sum(b[k] * b[k] for k in sorted(b))
    if na == 0 or nb == 0:
        return 0.0
    return min(1.0, dot / math.sqrt(na * nb))


def jaccard(a, b):
    union = set(a) | set(b)
    if not union:
        return 0.0
    return len(set(a) & set(b)) / len(union)


def score_question(model_text, answer_texts, n, metric, stopwords, normalization, log=math.log):
    docs = [grams_of(tokens_of(t, stopwords, normalization), n) for t in [model_text] + answer_texts]
    idf = {}
    for term in set(g for d in docs for g in d):
        df = sum(1 for d in docs if term in d)
        idf[term] = 0.0 if df == len(docs) else log(len(docs) / df)
    model_vec = tfidf(docs[0], idf)
    sim = cosine if metric == "cosine" else jaccard
    return [sim(tfidf(d, idf), model_vec) for d in docs[1:]]


def main():
    fixture, out = sys.argv[1], sys.argv[2]
    os.makedirs(out, exist_ok=True)

    stopwords = set()
    with open(os.path.join(fixture, "stopwords.txt"), encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                stopwords.add(line.lower())
    normalization = {s.lower(): t.lower() for s, t in read_csv(os.path.join(fixture, "normalization.csv"))[1]}
    model = {q: (text, float(w)) for q, text, w in read_csv(os.path.join(fixture, "model.csv"))[1]}
    answers = read_csv(os.path.join(fixture, "answers.csv"))[1]

    full_rows = []
    total_rows = []
    for metric in ("cosine", "jaccard"):
        for n in (1, 2, 3):
            points = {}
            for q, (model_text, weight) in model.items():
                group = [(s, t) for s, qq, t in answers if qq == q]
                sims = score_question(model_text, [t for _, t in group], n, metric, stopwords, normalization)
                for (s, _), sim in zip(group, sims):
                    points[(s, q)] = (sim, sim * weight)
            scores = sorted(points.items())
            totals = {}
            for (s, q), (sim, p) in scores:
                totals[s] = totals.get(s, 0.0) + p
                full_rows.append([metric, n, s, q, repr(sim), repr(p)])
            for s in sorted(totals):
                total_rows.append([metric, n, s, repr(totals[s])])

            cli_dir = os.path.join(out, "score_%s_%d" % (metric, n))
            os.makedirs(cli_dir, exist_ok=True)
            with open(os.path.join(cli_dir, "scores.csv"), "w", newline="") as f:
                f.write("student_id,question_id,similarity,points\n")
                for (s, q), (sim, p) in scores:
                    f.write("%s,%s,%.4f,%.4f\n" % (s, q, sim, p))
            with open(os.path.join(cli_dir, "totals.csv"), "w", newline="") as f:
                f.write("student_id,total\n")
                for s in sorted(totals):
                    f.write("%s,%.2f\n" % (s, totals[s]))

    with open(os.path.join(out, "oracle_scores.csv"), "w", newline="") as f:
        f.write("metric,ngram,student_id,question_id,similarity,points\n")
        for row in full_rows:
            f.write(",".join(str(x) for x in row) + "\n")
    with open(os.path.join(out, "oracle_totals.csv"), "w", newline="") as f:
        f.write("metric,ngram,student_id,total\n")
        for row in total_rows:
            f.write(",".join(str(x) for x in row) + "\n")

    # Single-question example: answer "jakarta ibu kota" with one other peer.
    sims = score_question("ibu kota indonesia jakarta",
                          ["jakarta ibu kota", "surabaya kota pahlawan"], 1, "cosine", set(), {})
    with open(os.path.join(out, "score_question_example.txt"), "w", newline="") as f:
        f.write(repr(sims[0] * 10) + "\n")


if __name__ == "__main__":
    main()
