// include/sner/normalize.h

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

#ifndef SNER_NORMALIZE_H_
#define SNER_NORMALIZE_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace sner {

// Arabic ASR text normalization profile. The default enables punctuation
// removal, diacritic removal, hamza/madda folding, and Eastern Arabic
// numeral transliteration. custom_map entries win over the built-in
// rules; an empty replacement deletes the codepoint.
struct NormalizationProfile {
  bool remove_punctuation = true;
  bool remove_diacritics = true;
  bool normalize_hamza = true;
  bool transliterate_numerals = true;
  std::unordered_map<char32_t, std::u32string> custom_map;
};

// Normalizes one line of text. Entity tag tokens (<B-X>/<I-X>) pass
// through byte-identical. Runs of whitespace collapse to single spaces
// and the result is trimmed. Total: never fails.
std::string NormalizeText(const std::string &text,
                          const NormalizationProfile &profile = {});

// Splits on whitespace into maximal non-whitespace runs. Tag tokens are
// whitespace-free, so they come out as single tokens.
std::vector<std::string> Tokenize(const std::string &text);

// Profile file format: key=value lines ('#' comments). Keys are the four
// flag names plus repeated "map=HHHH:HHHH" entries (hex codepoints, empty
// right side deletes).
NormalizationProfile LoadProfile(std::istream &in);
NormalizationProfile LoadProfileFile(const std::string &path);

// Minimal UTF-8 helpers shared across the toolkit. Invalid bytes decode
// as U+FFFD and advance by one.
namespace utf8 {
char32_t Decode(const std::string &s, size_t &pos);
void Append(std::string &out, char32_t cp);
std::u32string ToU32(const std::string &s);
std::string FromU32(const std::u32string &s);
}  // namespace utf8

}  // namespace sner

#endif  // SNER_NORMALIZE_H_
