// src/errorsim.cc

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

#include "sner/errorsim.h"

#include <random>
#include <stdexcept>

namespace sner {

namespace {

double NextUnit(std::mt19937_64 &rng) {
  // top 53 bits -> [0, 1); independent of std distribution internals
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

size_t NextIndex(std::mt19937_64 &rng, size_t bound) {
  return static_cast<size_t>(rng() % bound);
}

std::string DrawWord(std::mt19937_64 &rng,
                     const std::vector<std::string> &vocab,
                     const std::string &avoid) {
  if (vocab.size() == 1 && vocab[0] == avoid)
    return vocab[0];  // nothing else to draw
  std::string word;
  do {
    word = vocab[NextIndex(rng, vocab.size())];
  } while (word == avoid);
  return word;
}

void ValidateModel(const ErrorModel &m) {
  auto prob = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!prob(m.p_sub) || !prob(m.p_del) || !prob(m.p_ins) ||
      !prob(m.tag_noise) || m.p_sub + m.p_del > 1.0)
    throw std::invalid_argument(
        "error model: probabilities must be in [0,1] with p_sub+p_del <= 1");
  if ((m.p_sub > 0.0 || m.p_ins > 0.0) && m.vocabulary.empty())
    throw EmptyVocabulary(
        "error model needs a vocabulary when p_sub or p_ins > 0");
}

}  // namespace

uint64_t DeriveSeed(uint64_t seed, const std::string &utterance_id) {
  // FNV-1a over the id, then mixed with the base seed
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : utterance_id) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

TaggedTranscript Inject(const TaggedTranscript &ref, const ErrorModel &model) {
  ValidateModel(model);
  std::mt19937_64 rng(model.seed);
  TaggedTranscript out;
  out.tokens.reserve(ref.tokens.size());
  for (const auto &tok : ref.tokens) {
    double action = NextUnit(rng);
    if (action < model.p_del) {
      // deleted; fall through to the insertion draw for this position
    } else if (action < model.p_del + model.p_sub) {
      TaggedToken replaced{DrawWord(rng, model.vocabulary, tok.word), tok.tag};
      if (replaced.tag && model.tag_noise > 0.0 &&
          NextUnit(rng) < model.tag_noise) {
        if (!model.tag_pool.empty())
          replaced.tag = model.tag_pool[NextIndex(rng, model.tag_pool.size())];
        else
          replaced.tag.reset();
      }
      out.tokens.push_back(std::move(replaced));
    } else {
      TaggedToken kept = tok;
      if (kept.tag && model.tag_noise > 0.0 &&
          NextUnit(rng) < model.tag_noise) {
        if (!model.tag_pool.empty())
          kept.tag = model.tag_pool[NextIndex(rng, model.tag_pool.size())];
        else
          kept.tag.reset();
      }
      out.tokens.push_back(std::move(kept));
    }
    if (model.p_ins > 0.0 && NextUnit(rng) < model.p_ins)
      out.tokens.push_back(
          {model.vocabulary[NextIndex(rng, model.vocabulary.size())],
           std::nullopt});
  }
  return out;
}

}  // namespace sner
