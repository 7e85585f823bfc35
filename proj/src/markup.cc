// src/markup.cc

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

#include "sner/markup.h"

#include <sstream>

#include "sner/normalize.h"

namespace sner {

bool TaggedTranscript::HasEntities() const {
  for (const auto &tok : tokens)
    if (tok.tag) return true;
  return false;
}

namespace {

void Warn(std::vector<std::string> *warnings, const std::string &msg) {
  if (warnings) warnings->push_back(msg);
}

// An I-tagged token is BIO-valid iff the previous token carries a B or I
// tag of the same entity type.
bool ValidInsidePosition(const TaggedTranscript &t, size_t index) {
  const auto &tag = *t.tokens[index].tag;
  if (index == 0) return false;
  const auto &prev = t.tokens[index - 1].tag;
  return prev && prev->entity == tag.entity;
}

}  // namespace

TaggedTranscript ParseInline(const std::string &text,
                             const EntitySchema &schema, ParseMode mode,
                             std::vector<std::string> *warnings) {
  TaggedTranscript result;
  std::optional<BioTag> pending;
  for (const auto &token : Tokenize(text)) {
    if (IsTagShaped(token)) {
      auto tag = schema.ParseTagToken(token);
      if (!tag) throw UnknownTag("unknown tag token: " + token);
      if (pending) {
        if (mode == ParseMode::kStrict)
          throw AdjacentTags("adjacent tag tokens: " + pending->Token() +
                             " " + token);
        Warn(warnings, "adjacent tag tokens, keeping " + token);
      }
      pending = std::move(tag);
    } else {
      result.tokens.push_back({token, std::move(pending)});
      pending.reset();
    }
  }
  if (pending) {
    if (mode == ParseMode::kStrict)
      throw DanglingTag("tag token at end of utterance: " + pending->Token());
    Warn(warnings, "dropped dangling tag " + pending->Token());
  }
  for (size_t i = 0; i < result.tokens.size(); ++i) {
    const auto &tag = result.tokens[i].tag;
    if (tag && tag->position == BioPosition::kInside &&
        !ValidInsidePosition(result, i)) {
      if (mode == ParseMode::kStrict)
        throw BrokenBio("I- tag without matching predecessor: " +
                        tag->Token() + " " + result.tokens[i].word);
      Warn(warnings, "orphan " + tag->Token() + " kept as-is");
    }
  }
  return result;
}

std::string RenderInline(const TaggedTranscript &t) {
  std::string out;
  for (const auto &tok : t.tokens) {
    if (!out.empty()) out.push_back(' ');
    if (tok.tag) {
      out += tok.tag->Token();
      out.push_back(' ');
    }
    out += tok.word;
  }
  return out;
}

std::vector<std::string> StripTags(const TaggedTranscript &t) {
  std::vector<std::string> words;
  words.reserve(t.tokens.size());
  for (const auto &tok : t.tokens) words.push_back(tok.word);
  return words;
}

std::vector<BioTag> ExtractConcepts(const TaggedTranscript &t) {
  std::vector<BioTag> concepts;
  for (const auto &tok : t.tokens)
    if (tok.tag) concepts.push_back(*tok.tag);
  return concepts;
}

std::vector<std::pair<BioTag, std::string>> ExtractConceptValues(
    const TaggedTranscript &t) {
  std::vector<std::pair<BioTag, std::string>> pairs;
  for (const auto &tok : t.tokens)
    if (tok.tag) pairs.emplace_back(*tok.tag, tok.word);
  return pairs;
}

std::string ToColumns(const TaggedTranscript &t) {
  std::string out;
  for (const auto &tok : t.tokens) {
    out += tok.word;
    out.push_back('\t');
    out += tok.tag ? tok.tag->Label() : "O";
    out.push_back('\n');
  }
  return out;
}

TaggedTranscript FromColumns(const std::string &doc,
                             const EntitySchema &schema) {
  TaggedTranscript result;
  std::istringstream in(doc);
  std::string line;
  size_t lineno = 0;
  bool seen_blank = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      seen_blank = true;
      continue;
    }
    if (seen_blank)
      throw BadColumnLine("line " + std::to_string(lineno) +
                          ": content after utterance-ending blank line");
    auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
      throw BadColumnLine("line " + std::to_string(lineno) +
                          ": expected exactly two tab-separated fields");
    std::string word = line.substr(0, tab);
    std::string label = line.substr(tab + 1);
    if (word.empty() || word.find(' ') != std::string::npos)
      throw BadColumnLine("line " + std::to_string(lineno) + ": bad word field");
    if (label == "O") {
      result.tokens.push_back({std::move(word), std::nullopt});
      continue;
    }
    auto tag = schema.ParseLabel(label);
    if (!tag)
      throw BadColumnLine("line " + std::to_string(lineno) + ": bad label '" +
                          label + "'");
    result.tokens.push_back({std::move(word), std::move(tag)});
  }
  return result;
}

}  // namespace sner
