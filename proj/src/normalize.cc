// src/normalize.cc

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

#include "sner/normalize.h"

#include <fstream>
#include <stdexcept>

namespace sner {

namespace utf8 {

char32_t Decode(const std::string &s, size_t &pos) {
  unsigned char c = s[pos];
  if (c < 0x80) {
    ++pos;
    return c;
  }
  int len = 0;
  char32_t cp = 0;
  if ((c & 0xE0) == 0xC0) {
    len = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    len = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    len = 4;
    cp = c & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + len > s.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (int i = 1; i < len; ++i) {
    unsigned char cc = s[pos + i];
    if ((cc & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  pos += len;
  return cp;
}

void Append(std::string &out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::u32string ToU32(const std::string &s) {
  std::u32string out;
  size_t pos = 0;
  while (pos < s.size()) out.push_back(Decode(s, pos));
  return out;
}

std::string FromU32(const std::u32string &s) {
  std::string out;
  for (char32_t cp : s) Append(out, cp);
  return out;
}

}  // namespace utf8

namespace {

bool IsWhitespace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == 0x00A0 || cp == 0x2009 || cp == 0x200A || cp == 0x3000 ||
         (cp >= 0x2000 && cp <= 0x2006);
}

// Harakat and tatweel: U+064B..U+0652 (tanween/fatha/damma/kasra/shadda/
// sukun), U+0670 superscript alef, U+0640 tatweel.
bool IsDiacritic(char32_t cp) {
  return (cp >= 0x064B && cp <= 0x0652) || cp == 0x0670 || cp == 0x0640;
}

// Combining madda/hamza marks, folded together with the composed forms.
bool IsHamzaMark(char32_t cp) {
  return cp >= 0x0653 && cp <= 0x0655;
}

// Approximation of Unicode P* restricted to ranges that occur in ASR
// transcripts: ASCII, Latin-1, general punctuation, Arabic punctuation,
// ornate parentheses, CJK full stops.
bool IsPunctuation(char32_t cp) {
  if (cp < 0x80)
    return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
           (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
  switch (cp) {
    case 0x00A1: case 0x00A7: case 0x00AB: case 0x00B6: case 0x00B7:
    case 0x00BB: case 0x00BF:
    case 0x060C: case 0x060D: case 0x061B: case 0x061E: case 0x061F:
    case 0x066A: case 0x066B: case 0x066C: case 0x066D: case 0x06D4:
    case 0xFD3E: case 0xFD3F:
    case 0x3001: case 0x3002:
      return true;
    default:
      return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
  }
}

// Returns the length of a tag token <B-X>/<I-X> starting at text[pos],
// or 0 when there is none.
size_t TagTokenLength(const std::string &text, size_t pos) {
  if (text[pos] != '<' || pos + 4 >= text.size()) return 0;
  char bi = text[pos + 1];
  if ((bi != 'B' && bi != 'I') || text[pos + 2] != '-') return 0;
  size_t i = pos + 3;
  while (i < text.size() &&
         ((text[i] >= 'A' && text[i] <= 'Z') ||
          (text[i] >= '0' && text[i] <= '9')))
    ++i;
  if (i == pos + 3 || i >= text.size() || text[i] != '>') return 0;
  return i + 1 - pos;
}

void NormalizeCodepoint(char32_t cp, const NormalizationProfile &p,
                        std::string &out) {
  auto it = p.custom_map.find(cp);
  if (it != p.custom_map.end()) {
    for (char32_t r : it->second) utf8::Append(out, r);
    return;
  }
  if (IsWhitespace(cp)) {
    out.push_back(' ');
    return;
  }
  if (p.remove_diacritics && IsDiacritic(cp)) return;
  if (p.normalize_hamza) {
    if (IsHamzaMark(cp)) return;
    switch (cp) {
      case 0x0621: return;                          // standalone hamza
      case 0x0622: case 0x0623: case 0x0625:        // آ أ إ
        utf8::Append(out, 0x0627);                  // ا
        return;
      case 0x0624: utf8::Append(out, 0x0648); return;  // ؤ -> و
      case 0x0626: utf8::Append(out, 0x064A); return;  // ئ -> ي
    }
  }
  if (p.transliterate_numerals) {
    if (cp >= 0x0660 && cp <= 0x0669) {
      out.push_back(static_cast<char>('0' + (cp - 0x0660)));
      return;
    }
    if (cp >= 0x06F0 && cp <= 0x06F9) {
      out.push_back(static_cast<char>('0' + (cp - 0x06F0)));
      return;
    }
  }
  if (p.remove_punctuation && IsPunctuation(cp)) {
    out.push_back(' ');  // space, not deletion, so words never merge
    return;
  }
  utf8::Append(out, cp);
}

std::string CollapseWhitespace(const std::string &s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (c == ' ') {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string NormalizeText(const std::string &text,
                          const NormalizationProfile &profile) {
  std::string raw;
  raw.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    size_t tag_len = TagTokenLength(text, pos);
    if (tag_len > 0) {
      raw.append(text, pos, tag_len);
      pos += tag_len;
      continue;
    }
    char32_t cp = utf8::Decode(text, pos);
    NormalizeCodepoint(cp, profile, raw);
  }
  return CollapseWhitespace(raw);
}

std::vector<std::string> Tokenize(const std::string &text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
            text[i] == '\r'))
      ++i;
    size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\n' && text[i] != '\r')
      ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

namespace {

bool ParseBool(const std::string &value, const std::string &key) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::runtime_error("profile: bad boolean for " + key + ": " + value);
}

}  // namespace

NormalizationProfile LoadProfile(std::istream &in) {
  NormalizationProfile p;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t");
    line = line.substr(begin, end - begin + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("profile: expected key=value, got: " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "remove_punctuation") {
      p.remove_punctuation = ParseBool(value, key);
    } else if (key == "remove_diacritics") {
      p.remove_diacritics = ParseBool(value, key);
    } else if (key == "normalize_hamza") {
      p.normalize_hamza = ParseBool(value, key);
    } else if (key == "transliterate_numerals") {
      p.transliterate_numerals = ParseBool(value, key);
    } else if (key == "map") {
      auto colon = value.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("profile: map entry needs FROM:TO hex: " +
                                 value);
      char32_t from =
          static_cast<char32_t>(std::stoul(value.substr(0, colon), nullptr, 16));
      std::u32string to;
      std::string to_hex = value.substr(colon + 1);
      if (!to_hex.empty())
        to.push_back(static_cast<char32_t>(std::stoul(to_hex, nullptr, 16)));
      p.custom_map[from] = to;
    } else {
      throw std::runtime_error("profile: unknown key: " + key);
    }
  }
  return p;
}

NormalizationProfile LoadProfileFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  return LoadProfile(in);
}

}  // namespace sner
