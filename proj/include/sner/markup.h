// include/sner/markup.h

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

#ifndef SNER_MARKUP_H_
#define SNER_MARKUP_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sner/schema.h"

namespace sner {

struct MarkupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownTag : MarkupError {
  using MarkupError::MarkupError;
};
struct DanglingTag : MarkupError {
  using MarkupError::MarkupError;
};
struct BrokenBio : MarkupError {
  using MarkupError::MarkupError;
};
struct AdjacentTags : MarkupError {
  using MarkupError::MarkupError;
};
struct BadColumnLine : MarkupError {
  using MarkupError::MarkupError;
};

// One word plus an optional BIO tag; no tag means outside any entity.
struct TaggedToken {
  std::string word;
  std::optional<BioTag> tag;

  bool operator==(const TaggedToken &other) const = default;
};

struct TaggedTranscript {
  std::vector<TaggedToken> tokens;

  bool operator==(const TaggedTranscript &other) const = default;
  bool HasEntities() const;
};

enum class ParseMode { kStrict, kLenient };

// Parses inline markup: each tag token labels the word immediately after
// it, one tag token per tagged word. Strict mode throws on any BIO
// violation; lenient mode repairs what it can (dangling tag dropped,
// last of adjacent tags wins, orphan I- kept as-is) and records a
// warning per repair. UnknownTag is fatal in both modes.
TaggedTranscript ParseInline(const std::string &text,
                             const EntitySchema &schema, ParseMode mode,
                             std::vector<std::string> *warnings = nullptr);

// Inverse of ParseInline under lenient parsing.
std::string RenderInline(const TaggedTranscript &t);

// Word sequence with tags discarded; same length as t.tokens.
std::vector<std::string> StripTags(const TaggedTranscript &t);

// BIO tags of tagged tokens, in order.
std::vector<BioTag> ExtractConcepts(const TaggedTranscript &t);

// (tag, word) pairs of tagged tokens, in order.
std::vector<std::pair<BioTag, std::string>> ExtractConceptValues(
    const TaggedTranscript &t);

// Two-column CoNLL-style format: "word<TAB>label" per line, label one of
// B-X / I-X / O.
std::string ToColumns(const TaggedTranscript &t);
TaggedTranscript FromColumns(const std::string &doc,
                             const EntitySchema &schema);

}  // namespace sner

#endif  // SNER_MARKUP_H_
