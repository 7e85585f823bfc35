// include/sner/schema.h

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

#ifndef SNER_SCHEMA_H_
#define SNER_SCHEMA_H_

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace sner {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateType : SchemaError {
  using SchemaError::SchemaError;
};
struct BadTypeName : SchemaError {
  using SchemaError::SchemaError;
};
struct EmptySchema : SchemaError {
  using SchemaError::SchemaError;
};

// Entity tag position within a span: B- opens, I- continues.
enum class BioPosition { kBegin, kInside };

// One BIO tag, e.g. (kBegin, "PERS"). Entity names are uppercase ASCII
// letters and digits; the surface form used inside transcripts is the
// atomic token "<B-PERS>" / "<I-PERS>".
struct BioTag {
  BioPosition position;
  std::string entity;

  bool operator==(const BioTag &other) const = default;
  bool operator<(const BioTag &other) const {
    if (entity != other.entity) return entity < other.entity;
    return position < other.position;
  }

  // "B-PERS" / "I-PERS"
  std::string Label() const;
  // "<B-PERS>" / "<I-PERS>"
  std::string Token() const;
};

// Immutable set of entity types plus the derived tag-token inventory.
// Safe to share across threads once constructed.
class EntitySchema {
 public:
  explicit EntitySchema(std::vector<std::string> types);

  const std::vector<std::string> &Types() const { return types_; }
  size_t NumTypes() const { return types_.size(); }
  bool HasType(const std::string &name) const {
    return type_set_.count(name) != 0;
  }

  // All 2*|types| surface forms "<B-X>", "<I-X>" in type order (B before I).
  std::vector<std::string> TagTokens() const;

  // Parses "<B-PERS>" style tokens. Returns nullopt when the token is not
  // tag-shaped at all; throws nothing. A tag-shaped token whose entity is
  // not in the schema also yields nullopt (callers decide severity).
  std::optional<BioTag> ParseTagToken(const std::string &token) const;

  // Parses "B-PERS" / "I-PERS" / "O" column labels.
  std::optional<BioTag> ParseLabel(const std::string &label) const;

 private:
  std::vector<std::string> types_;
  std::unordered_set<std::string> type_set_;
};

// True if the token is lexically shaped like a tag token <B-NAME>/<I-NAME>,
// regardless of any schema.
bool IsTagShaped(const std::string &token);

// The built-in Wojood 21-type schema.
const EntitySchema &DefaultSchema();

// Reads a schema file: UTF-8, one type name per line, '#' comments and
// blank lines ignored.
EntitySchema LoadSchema(std::istream &in);
EntitySchema LoadSchemaFile(const std::string &path);

}  // namespace sner

#endif  // SNER_SCHEMA_H_
