// src/metrics.cc

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "sner/metrics.h"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "json.hpp"

namespace sner {

void MetricReport::Merge(const UtteranceScore &score) {
  wer.Merge(score.wer);
  coer.Merge(score.coer);
  cver.Merge(score.cver);
  for (const auto &[label, counts] : score.per_tag)
    per_tag[label].Merge(counts);
  ++utterance_count;
  if (score.missing_hyp) ++missing_count;
}

TaggedTranscript NormalizeTranscript(const TaggedTranscript &t,
                                     const NormalizationProfile &profile) {
  TaggedTranscript out;
  out.tokens.reserve(t.tokens.size());
  for (const auto &tok : t.tokens) {
    auto pieces = Tokenize(NormalizeText(tok.word, profile));
    if (pieces.empty()) continue;  // word was pure punctuation
    // a word that split (embedded punctuation) keeps its tag on the
    // first piece only
    out.tokens.push_back({pieces[0], tok.tag});
    for (size_t i = 1; i < pieces.size(); ++i)
      out.tokens.push_back({pieces[i], std::nullopt});
  }
  return out;
}

namespace {

std::vector<std::string> ConceptLabels(const TaggedTranscript &t) {
  std::vector<std::string> labels;
  for (const auto &tag : ExtractConcepts(t)) labels.push_back(tag.Label());
  return labels;
}

std::vector<std::pair<std::string, std::string>> ConceptValuePairs(
    const TaggedTranscript &t) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto &[tag, word] : ExtractConceptValues(t))
    pairs.emplace_back(tag.Label(), word);
  return pairs;
}

// Span units: (entity type, space-joined span text). A span starts at a
// B- tag or an orphan I- tag and extends over following I- tags of the
// same type.
std::vector<std::pair<std::string, std::string>> ConceptSpans(
    const TaggedTranscript &t) {
  std::vector<std::pair<std::string, std::string>> spans;
  const BioTag *prev = nullptr;
  for (const auto &tok : t.tokens) {
    if (!tok.tag) {
      prev = nullptr;
      continue;
    }
    bool continues = tok.tag->position == BioPosition::kInside && prev &&
                     prev->entity == tok.tag->entity;
    if (continues) {
      spans.back().second += " " + tok.word;
    } else {
      spans.emplace_back(tok.tag->entity, tok.word);
    }
    prev = &*tok.tag;
  }
  return spans;
}

void AttributePerTag(const AlignmentResult &coer,
                     const std::vector<std::string> &ref_labels,
                     const std::vector<std::string> &hyp_labels,
                     std::map<std::string, TagCounts> &per_tag) {
  for (const auto &label : ref_labels) per_tag[label].ref_count++;
  for (const auto &op : coer.path) {
    switch (op.kind) {
      case EditKind::kDelete:
        per_tag[ref_labels[*op.ref_index]].deletions++;
        break;
      case EditKind::kSubstitute:
        per_tag[ref_labels[*op.ref_index]].substitutions++;
        break;
      case EditKind::kInsert:
        per_tag[hyp_labels[*op.hyp_index]].insertions++;
        break;
      case EditKind::kMatch:
        break;
    }
  }
}

}  // namespace

UtteranceScore ScoreUtterance(const std::string &id,
                              const TaggedTranscript &ref,
                              const TaggedTranscript &hyp,
                              const ScoringOptions &options) {
  UtteranceScore score;
  score.id = id;
  TaggedTranscript ref_n = NormalizeTranscript(ref, options.profile);
  TaggedTranscript hyp_n = NormalizeTranscript(hyp, options.profile);

  score.wer = Align(StripTags(ref_n), StripTags(hyp_n));

  auto ref_labels = ConceptLabels(ref_n);
  auto hyp_labels = ConceptLabels(hyp_n);
  score.coer = Align(ref_labels, hyp_labels);
  AttributePerTag(score.coer, ref_labels, hyp_labels, score.per_tag);

  if (options.cver_unit == CverUnit::kToken) {
    score.cver = Align(ConceptValuePairs(ref_n), ConceptValuePairs(hyp_n));
  } else {
    score.cver = Align(ConceptSpans(ref_n), ConceptSpans(hyp_n));
  }
  return score;
}

MetricReport ScoreCorpus(const std::vector<CorpusPair> &pairs,
                         const ScoringOptions &options) {
  if (pairs.empty()) throw EmptyCorpus("no utterances to score");
  std::unordered_set<std::string> seen;
  MetricReport report;
  for (const auto &pair : pairs) {
    if (!seen.insert(pair.id).second)
      throw DuplicateId("duplicate utterance id: " + pair.id);
    static const TaggedTranscript kEmpty;
    UtteranceScore score = ScoreUtterance(
        pair.id, pair.ref, pair.hyp ? *pair.hyp : kEmpty, options);
    score.missing_hyp = !pair.hyp.has_value();
    report.Merge(score);
  }
  return report;
}

std::string FormatRatePercent(size_t s, size_t d, size_t i, size_t n) {
  size_t errors = s + d + i;
  if (n == 0) return errors > 0 ? "inf" : "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f",
                100.0 * static_cast<double>(errors) / static_cast<double>(n));
  return buf;
}

namespace {

std::string FormatCountLine(const char *name, const AlignmentResult &r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%%%s %s [ %zu / %zu, %zu ins, %zu del, %zu sub ]\n", name,
                FormatRatePercent(r.substitutions, r.deletions, r.insertions,
                                  r.ref_len)
                    .c_str(),
                r.NumErrors(), r.ref_len, r.insertions, r.deletions,
                r.substitutions);
  return buf;
}

nlohmann::ordered_json CountsJson(const AlignmentResult &r) {
  nlohmann::ordered_json j;
  j["substitutions"] = r.substitutions;
  j["deletions"] = r.deletions;
  j["insertions"] = r.insertions;
  j["matches"] = r.matches;
  j["ref_len"] = r.ref_len;
  j["hyp_len"] = r.hyp_len;
  j["errors"] = r.NumErrors();
  auto rate = ErrorRate(r);
  if (rate)
    j["rate"] = *rate;
  else
    j["rate"] = nullptr;
  return j;
}

}  // namespace

std::string FormatReport(const MetricReport &report, ReportStyle style,
                         bool per_tag) {
  if (style == ReportStyle::kTextTable) {
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "Scored %zu utterances, %zu missing hypotheses.\n",
                  report.utterance_count, report.missing_count);
    out += buf;
    out += FormatCountLine("WER ", report.wer);
    out += FormatCountLine("CoER", report.coer);
    out += FormatCountLine("CVER", report.cver);
    if (per_tag) {
      size_t width = 3;
      for (const auto &[label, counts] : report.per_tag)
        width = std::max(width, label.size());
      out += "\n";
      std::snprintf(buf, sizeof(buf), "%-*s %5s %5s %5s  %s\n",
                    static_cast<int>(width), "Tag", "INS", "DEL", "SUB",
                    "CoER (%)");
      out += buf;
      for (const auto &[label, counts] : report.per_tag) {
        std::snprintf(buf, sizeof(buf), "%-*s %5zu %5zu %5zu  %s\n",
                      static_cast<int>(width), label.c_str(),
                      counts.insertions, counts.deletions,
                      counts.substitutions,
                      FormatRatePercent(counts.substitutions, counts.deletions,
                                        counts.insertions, counts.ref_count)
                          .c_str());
        out += buf;
      }
    }
    return out;
  }

  nlohmann::ordered_json j;
  j["utterances"] = report.utterance_count;
  j["missing_hypotheses"] = report.missing_count;
  j["wer"] = CountsJson(report.wer);
  j["coer"] = CountsJson(report.coer);
  j["cver"] = CountsJson(report.cver);
  if (per_tag) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto &[label, counts] : report.per_tag) {
      nlohmann::ordered_json row;
      row["tag"] = label;
      row["insertions"] = counts.insertions;
      row["deletions"] = counts.deletions;
      row["substitutions"] = counts.substitutions;
      row["ref_count"] = counts.ref_count;
      auto rate = ErrorRate(counts.substitutions, counts.deletions,
                            counts.insertions, counts.ref_count);
      if (rate)
        row["coer"] = *rate;
      else
        row["coer"] = nullptr;
      rows.push_back(std::move(row));
    }
    j["per_tag"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

}  // namespace sner
