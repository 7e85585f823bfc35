// src/corpus.cc

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

#include "sner/corpus.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

#include "sner/markup.h"

namespace sner {

void CorpusStats::Merge(const CorpusStats &other) {
  utterance_count += other.utterance_count;
  total_duration_s += other.total_duration_s;
  token_count += other.token_count;
  for (const auto &[type, count] : other.tag_distribution)
    tag_distribution[type] += count;
}

namespace {

UtteranceRecord ParseManifestLine(const std::string &line, size_t lineno) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception &e) {
    throw BadManifestLine("manifest line " + std::to_string(lineno) + ": " +
                          e.what());
  }
  if (!j.is_object() || !j.contains("id") || !j.contains("text") ||
      !j["id"].is_string() || !j["text"].is_string())
    throw BadManifestLine("manifest line " + std::to_string(lineno) +
                          ": expected object with string id and text");
  UtteranceRecord record;
  record.id = j["id"].get<std::string>();
  record.text = j["text"].get<std::string>();
  if (record.id.empty())
    throw BadManifestLine("manifest line " + std::to_string(lineno) +
                          ": empty id");
  if (j.contains("audio")) {
    if (!j["audio"].is_string())
      throw BadManifestLine("manifest line " + std::to_string(lineno) +
                            ": audio must be a string");
    record.audio = j["audio"].get<std::string>();
  }
  if (j.contains("duration")) {
    if (!j["duration"].is_number())
      throw BadManifestLine("manifest line " + std::to_string(lineno) +
                            ": duration must be a number");
    double d = j["duration"].get<double>();
    if (d <= 0.0)
      throw BadManifestLine("manifest line " + std::to_string(lineno) +
                            ": duration must be positive");
    record.duration_s = d;
  }
  return record;
}

}  // namespace

void ForEachRecord(std::istream &in,
                   const std::function<void(UtteranceRecord)> &fn) {
  std::unordered_set<std::string> seen;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    UtteranceRecord record = ParseManifestLine(line, lineno);
    if (!seen.insert(record.id).second)
      throw DuplicateManifestId("duplicate id in manifest: " + record.id +
                                " (line " + std::to_string(lineno) + ")");
    fn(std::move(record));
  }
}

std::vector<UtteranceRecord> ReadManifest(std::istream &in) {
  std::vector<UtteranceRecord> records;
  ForEachRecord(in, [&](UtteranceRecord r) { records.push_back(std::move(r)); });
  return records;
}

std::vector<UtteranceRecord> ReadManifestFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open manifest: " + path);
  return ReadManifest(in);
}

void WriteManifest(const std::vector<UtteranceRecord> &records,
                   std::ostream &out) {
  for (const auto &record : records) {
    nlohmann::ordered_json j;
    j["id"] = record.id;
    if (record.audio) j["audio"] = *record.audio;
    if (record.duration_s) j["duration"] = *record.duration_s;
    j["text"] = record.text;
    out << j.dump() << '\n';
  }
}

void WriteManifestFile(const std::vector<UtteranceRecord> &records,
                       const std::string &path) {
  std::ofstream out(path);
  if (!out) throw CorpusError("cannot open manifest for writing: " + path);
  WriteManifest(records, out);
}

std::vector<UtteranceRecord> ReadTsv(std::istream &in) {
  std::vector<UtteranceRecord> records;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos
                                      : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos)
      throw BadManifestLine("tsv line " + std::to_string(lineno) +
                            ": expected id<TAB>duration<TAB>text");
    UtteranceRecord record;
    record.id = line.substr(0, t1);
    std::string dur = line.substr(t1 + 1, t2 - t1 - 1);
    record.text = line.substr(t2 + 1);
    if (record.id.empty())
      throw BadManifestLine("tsv line " + std::to_string(lineno) +
                            ": empty id");
    if (!seen.insert(record.id).second)
      throw DuplicateManifestId("duplicate id in tsv: " + record.id);
    if (!dur.empty()) {
      try {
        record.duration_s = std::stod(dur);
      } catch (const std::exception &) {
        throw BadManifestLine("tsv line " + std::to_string(lineno) +
                              ": bad duration '" + dur + "'");
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

void WriteTsv(const std::vector<UtteranceRecord> &records, std::ostream &out) {
  for (const auto &record : records) {
    out << record.id << '\t';
    if (record.duration_s) out << *record.duration_s;
    out << '\t' << record.text << '\n';
  }
}

bool HasEntities(const UtteranceRecord &record, const EntitySchema &schema) {
  try {
    return ParseInline(record.text, schema, ParseMode::kLenient).HasEntities();
  } catch (const MarkupError &e) {
    throw CorpusError("utterance " + record.id + ": " + e.what());
  }
}

std::vector<UtteranceRecord> FilterEntities(
    const std::vector<UtteranceRecord> &records, const EntitySchema &schema,
    bool invert) {
  std::vector<UtteranceRecord> kept;
  for (const auto &record : records)
    if (HasEntities(record, schema) != invert) kept.push_back(record);
  return kept;
}

CorpusStats ComputeStats(const std::vector<UtteranceRecord> &records,
                         const EntitySchema &schema, bool bio_tokens) {
  CorpusStats stats;
  for (const auto &record : records) {
    TaggedTranscript t;
    try {
      t = ParseInline(record.text, schema, ParseMode::kLenient);
    } catch (const MarkupError &e) {
      throw CorpusError("utterance " + record.id + ": " + e.what());
    }
    ++stats.utterance_count;
    if (record.duration_s) stats.total_duration_s += *record.duration_s;
    stats.token_count += t.tokens.size();
    for (const auto &tok : t.tokens) {
      if (!tok.tag) continue;
      if (bio_tokens) {
        stats.tag_distribution[tok.tag->Label()]++;
      } else if (tok.tag->position == BioPosition::kBegin) {
        stats.tag_distribution[tok.tag->entity]++;
      }
    }
  }
  return stats;
}

std::string FormatDurationHMM(double seconds) {
  long total_minutes = std::lround(seconds / 60.0);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%ld:%02ld", total_minutes / 60,
                total_minutes % 60);
  return buf;
}

}  // namespace sner
