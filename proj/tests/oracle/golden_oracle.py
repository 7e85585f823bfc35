#!/usr/bin/env python3
"""Independent oracle for the bundled golden corpus.

Recomputes WER/CoER/CVER and the per-tag table for a ref/hyp manifest
pair from scratch (normalization, inline BIO parsing, edit-distance
alignment with the documented diagonal/delete/insert tie-break) and
prints the counts as JSON. Used to verify the frozen golden report;
shares no code with the C++ implementation.

Usage: golden_oracle.py ref.jsonl hyp.jsonl
"""

import json
import sys

DIACRITICS = set(range(0x064B, 0x0653)) | {0x0670, 0x0640, 0x0653, 0x0654, 0x0655}
HAMZA_MAP = {0x0622: "ا", 0x0623: "ا", 0x0625: "ا",
             0x0624: "و", 0x0626: "ي", 0x0621: ""}
PUNCT = set("!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~") | {"،", "؛", "؟", "۔", "«", "»"}


def norm_word(word):
    out = []
    for ch in word:
        cp = ord(ch)
        if cp in DIACRITICS:
            continue
        if cp in HAMZA_MAP:
            out.append(HAMZA_MAP[cp])
            continue
        if 0x0660 <= cp <= 0x0669:
            out.append(chr(ord("0") + cp - 0x0660))
            continue
        if 0x06F0 <= cp <= 0x06F9:
            out.append(chr(ord("0") + cp - 0x06F0))
            continue
        if ch in PUNCT:
            out.append(" ")
            continue
        out.append(ch)
    return "".join(out).split()


def parse_inline(text):
    """-> list of (word, tag-or-None); lenient (last of adjacent tags wins,
    dangling tag dropped, orphan I- kept)."""
    tokens = []
    pending = None
    for tok in text.split():
        if len(tok) > 4 and tok[0] == "<" and tok[-1] == ">" and tok[1] in "BI" and tok[2] == "-":
            pending = tok[1:-1]
        else:
            tokens.append((tok, pending))
            pending = None
    return tokens


def normalize_transcript(tokens):
    out = []
    for word, tag in tokens:
        pieces = norm_word(word)
        if not pieces:
            continue
        out.append((pieces[0], tag))
        for extra in pieces[1:]:
            out.append((extra, None))
    return out


def align(ref, hyp):
    """Unit-cost DP; backtrace prefers diagonal, then delete, then insert.
    Returns (S, D, I, matches, path) with path entries
    (kind, ref_idx, hyp_idx)."""
    n, m = len(ref), len(hyp)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dp[i][0] = i
    for j in range(m + 1):
        dp[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            dp[i][j] = min(dp[i - 1][j - 1] + (0 if ref[i - 1] == hyp[j - 1] else 1),
                           dp[i - 1][j] + 1, dp[i][j - 1] + 1)
    path = []
    i, j = n, m
    s = d = ins = match = 0
    while i > 0 or j > 0:
        if i > 0 and j > 0:
            eq = ref[i - 1] == hyp[j - 1]
            if dp[i][j] == dp[i - 1][j - 1] + (0 if eq else 1):
                i, j = i - 1, j - 1
                if eq:
                    match += 1
                    path.append(("match", i, j))
                else:
                    s += 1
                    path.append(("sub", i, j))
                continue
        if i > 0 and dp[i][j] == dp[i - 1][j] + 1:
            i -= 1
            d += 1
            path.append(("del", i, None))
            continue
        j -= 1
        ins += 1
        path.append(("ins", None, j))
    path.reverse()
    return s, d, ins, match, path


def counts_json(s, d, i, match, n, m):
    errors = s + d + i
    rate = errors / n if n > 0 else (0.0 if errors == 0 else None)
    return {"substitutions": s, "deletions": d, "insertions": i,
            "matches": match, "ref_len": n, "hyp_len": m,
            "errors": errors, "rate": rate}


def main():
    refs = [json.loads(l) for l in open(sys.argv[1], encoding="utf-8") if l.strip()]
    hyps = {r["id"]: r["text"] for l in [0] for r in
            (json.loads(x) for x in open(sys.argv[2], encoding="utf-8") if x.strip())}

    tot = {k: [0, 0, 0, 0, 0, 0] for k in ("wer", "coer", "cver")}
    per_tag = {}
    missing = 0

    for rec in refs:
        ref = normalize_transcript(parse_inline(rec["text"]))
        hyp_text = hyps.get(rec["id"])
        if hyp_text is None:
            missing += 1
            hyp = []
        else:
            hyp = normalize_transcript(parse_inline(hyp_text))

        ref_words = [w for w, _ in ref]
        hyp_words = [w for w, _ in hyp]
        ref_tags = [t for _, t in ref if t]
        hyp_tags = [t for _, t in hyp if t]
        ref_pairs = [(t, w) for w, t in ref if t]
        hyp_pairs = [(t, w) for w, t in hyp if t]

        for key, (r, h) in (("wer", (ref_words, hyp_words)),
                            ("coer", (ref_tags, hyp_tags)),
                            ("cver", (ref_pairs, hyp_pairs))):
            s, d, i, match, path = align(r, h)
            acc = tot[key]
            acc[0] += s
            acc[1] += d
            acc[2] += i
            acc[3] += match
            acc[4] += len(r)
            acc[5] += len(h)
            if key == "coer":
                for tag in ref_tags:
                    per_tag.setdefault(tag, [0, 0, 0, 0])[3] += 1
                for kind, ri, hi in path:
                    if kind == "del":
                        per_tag.setdefault(ref_tags[ri], [0, 0, 0, 0])[1] += 1
                    elif kind == "sub":
                        per_tag.setdefault(ref_tags[ri], [0, 0, 0, 0])[2] += 1
                    elif kind == "ins":
                        per_tag.setdefault(hyp_tags[hi], [0, 0, 0, 0])[0] += 1

    report = {"utterances": len(refs), "missing_hypotheses": missing}
    for key in ("wer", "coer", "cver"):
        s, d, i, match, n, m = tot[key]
        report[key] = counts_json(s, d, i, match, n, m)
    rows = []
    for tag in sorted(per_tag):
        ins, dl, sub, n = per_tag[tag]
        errors = ins + dl + sub
        rate = errors / n if n > 0 else (0.0 if errors == 0 else None)
        rows.append({"tag": tag, "insertions": ins, "deletions": dl,
                     "substitutions": sub, "ref_count": n, "coer": rate})
    report["per_tag"] = rows
    json.dump(report, sys.stdout, indent=2, ensure_ascii=False)
    print()


if __name__ == "__main__":
    main()
