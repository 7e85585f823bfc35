// src/schema.cc

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

#include "sner/schema.h"

#include <fstream>
#include <sstream>

namespace sner {

namespace {

bool IsTypeNameChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool IsValidTypeName(const std::string &name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!IsTypeNameChar(c)) return false;
  return true;
}

}  // namespace

std::string BioTag::Label() const {
  return (position == BioPosition::kBegin ? "B-" : "I-") + entity;
}

std::string BioTag::Token() const { return "<" + Label() + ">"; }

EntitySchema::EntitySchema(std::vector<std::string> types)
    : types_(std::move(types)) {
  if (types_.empty()) throw EmptySchema("schema has no entity types");
  for (const auto &name : types_) {
    if (!IsValidTypeName(name))
      throw BadTypeName("bad entity type name: '" + name +
                        "' (uppercase ASCII letters and digits only)");
    if (!type_set_.insert(name).second)
      throw DuplicateType("duplicate entity type: " + name);
  }
}

std::vector<std::string> EntitySchema::TagTokens() const {
  std::vector<std::string> tokens;
  tokens.reserve(2 * types_.size());
  for (const auto &name : types_) {
    tokens.push_back("<B-" + name + ">");
    tokens.push_back("<I-" + name + ">");
  }
  return tokens;
}

bool IsTagShaped(const std::string &token) {
  if (token.size() < 5) return false;  // "<B-X>"
  if (token.front() != '<' || token.back() != '>') return false;
  if (token[1] != 'B' && token[1] != 'I') return false;
  if (token[2] != '-') return false;
  for (size_t i = 3; i + 1 < token.size(); ++i)
    if (!((token[i] >= 'A' && token[i] <= 'Z') ||
          (token[i] >= '0' && token[i] <= '9')))
      return false;
  return true;
}

std::optional<BioTag> EntitySchema::ParseTagToken(
    const std::string &token) const {
  if (!IsTagShaped(token)) return std::nullopt;
  std::string name = token.substr(3, token.size() - 4);
  if (!HasType(name)) return std::nullopt;
  BioPosition pos =
      token[1] == 'B' ? BioPosition::kBegin : BioPosition::kInside;
  return BioTag{pos, std::move(name)};
}

std::optional<BioTag> EntitySchema::ParseLabel(const std::string &label) const {
  if (label.size() < 3) return std::nullopt;
  if (label[1] != '-' || (label[0] != 'B' && label[0] != 'I'))
    return std::nullopt;
  std::string name = label.substr(2);
  if (!HasType(name)) return std::nullopt;
  BioPosition pos =
      label[0] == 'B' ? BioPosition::kBegin : BioPosition::kInside;
  return BioTag{pos, std::move(name)};
}

const EntitySchema &DefaultSchema() {
  // Wojood tagset, 21 types.
  static const EntitySchema schema({
      "CARDINAL", "CURR",    "DATE",    "EVENT",   "FAC",     "GPE",
      "LANGUAGE", "LAW",     "LOC",     "MONEY",   "NORP",    "OCC",
      "ORDINAL",  "ORG",     "PERCENT", "PERS",    "PRODUCT", "QUANTITY",
      "TIME",     "UNIT",    "WEBSITE",
  });
  return schema;
}

EntitySchema LoadSchema(std::istream &in) {
  std::vector<std::string> types;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t");
    types.push_back(line.substr(begin, end - begin + 1));
  }
  return EntitySchema(std::move(types));
}

EntitySchema LoadSchemaFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open schema file: " + path);
  return LoadSchema(in);
}

}  // namespace sner
