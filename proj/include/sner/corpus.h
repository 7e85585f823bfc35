// include/sner/corpus.h

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

#ifndef SNER_CORPUS_H_
#define SNER_CORPUS_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sner/schema.h"

namespace sner {

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadManifestLine : CorpusError {
  using CorpusError::CorpusError;
};
struct DuplicateManifestId : CorpusError {
  using CorpusError::CorpusError;
};

// One manifest entry: JSON-Lines object with keys id, text, optional
// audio, duration.
struct UtteranceRecord {
  std::string id;
  std::optional<std::string> audio;
  std::optional<double> duration_s;
  std::string text;

  bool operator==(const UtteranceRecord &other) const = default;
};

struct CorpusStats {
  size_t utterance_count = 0;
  double total_duration_s = 0.0;
  std::map<std::string, size_t> tag_distribution;  // entity type -> count
  size_t token_count = 0;  // word tokens, tag tokens excluded

  void Merge(const CorpusStats &other);
};

// Streaming manifest reader: parses one JSON object per line and hands
// each record to the callback. Duplicate ids across the stream throw.
void ForEachRecord(std::istream &in,
                   const std::function<void(UtteranceRecord)> &fn);

std::vector<UtteranceRecord> ReadManifest(std::istream &in);
std::vector<UtteranceRecord> ReadManifestFile(const std::string &path);

void WriteManifest(const std::vector<UtteranceRecord> &records,
                   std::ostream &out);
void WriteManifestFile(const std::vector<UtteranceRecord> &records,
                       const std::string &path);

// Common Voice-style TSV export: id TAB duration TAB text (duration may
// be empty). No header.
std::vector<UtteranceRecord> ReadTsv(std::istream &in);
void WriteTsv(const std::vector<UtteranceRecord> &records, std::ostream &out);

// True when the record's transcript has at least one tagged token
// (lenient parse). Parse errors are rethrown with the record id attached.
bool HasEntities(const UtteranceRecord &record, const EntitySchema &schema);

// Keeps exactly the records with >= 1 entity, order preserved.
std::vector<UtteranceRecord> FilterEntities(
    const std::vector<UtteranceRecord> &records, const EntitySchema &schema,
    bool invert = false);

// Utterance/duration/token counts plus the per-type entity distribution.
// By default entities are counted once per span (B- tags); bio_tokens
// counts every B-/I- tag token instead, keyed by tag label.
CorpusStats ComputeStats(const std::vector<UtteranceRecord> &records,
                         const EntitySchema &schema, bool bio_tokens = false);

// "h:mm" as used in corpus summaries (8:15 for 8h15m), minutes rounded
// to nearest.
std::string FormatDurationHMM(double seconds);

}  // namespace sner

#endif  // SNER_CORPUS_H_
