// include/sner/metrics.h

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

#ifndef SNER_METRICS_H_
#define SNER_METRICS_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sner/align.h"
#include "sner/markup.h"
#include "sner/normalize.h"

namespace sner {

struct MetricsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateId : MetricsError {
  using MetricsError::MetricsError;
};
struct EmptyCorpus : MetricsError {
  using MetricsError::MetricsError;
};

// Concept unit for CVER. Token mode compares per-token (tag, word)
// pairs; span mode compares (entity type, concatenated normalized span
// text) per whole entity.
enum class CverUnit { kToken, kSpan };

struct ScoringOptions {
  NormalizationProfile profile;
  CverUnit cver_unit = CverUnit::kToken;
};

// Per-tag insertion/deletion/substitution counts attributed from the
// concept alignment. Keys are tag labels ("B-PERS").
struct TagCounts {
  size_t insertions = 0;
  size_t deletions = 0;
  size_t substitutions = 0;
  size_t ref_count = 0;

  void Merge(const TagCounts &other) {
    insertions += other.insertions;
    deletions += other.deletions;
    substitutions += other.substitutions;
    ref_count += other.ref_count;
  }
};

struct UtteranceScore {
  std::string id;
  AlignmentResult wer;   // over words, tags stripped
  AlignmentResult coer;  // over BIO tag labels
  AlignmentResult cver;  // over (tag, value) units
  std::map<std::string, TagCounts> per_tag;
  bool missing_hyp = false;
};

struct MetricReport {
  AlignmentResult wer;
  AlignmentResult coer;
  AlignmentResult cver;
  std::map<std::string, TagCounts> per_tag;
  size_t utterance_count = 0;
  size_t missing_count = 0;

  void Merge(const UtteranceScore &score);
};

// Normalizes every word under the profile. Tokens whose word normalizes
// to empty (pure punctuation) are dropped.
TaggedTranscript NormalizeTranscript(const TaggedTranscript &t,
                                     const NormalizationProfile &profile);

// Aligns ref/hyp three ways: words (WER), BIO tags (CoER), tag-value
// pairs (CVER). Per-tag counts come off the CoER path: deletions and
// substitutions charge the reference tag, insertions the hypothesis tag.
UtteranceScore ScoreUtterance(const std::string &id,
                              const TaggedTranscript &ref,
                              const TaggedTranscript &hyp,
                              const ScoringOptions &options = {});

struct CorpusPair {
  std::string id;
  TaggedTranscript ref;
  std::optional<TaggedTranscript> hyp;  // absent = missing hypothesis
};

// Micro-aggregation: counts summed over utterances, one division at the
// end. Missing hypotheses score as all-deletions and are tallied.
MetricReport ScoreCorpus(const std::vector<CorpusPair> &pairs,
                         const ScoringOptions &options = {});

enum class ReportStyle { kTextTable, kStructured };

// Text style mirrors the per-entity table layout (Tag INS DEL SUB
// CoER%); structured style is JSON carrying all raw counts.
std::string FormatReport(const MetricReport &report, ReportStyle style,
                         bool per_tag = true);

// Rate rendering used by both report styles: percentage with one
// decimal, "inf" for errors over an empty reference, "n/a" when nothing
// was seen at all.
std::string FormatRatePercent(size_t s, size_t d, size_t i, size_t n);

}  // namespace sner

#endif  // SNER_METRICS_H_
