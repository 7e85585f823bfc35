// include/sner/errorsim.h

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

#ifndef SNER_ERRORSIM_H_
#define SNER_ERRORSIM_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sner/markup.h"

namespace sner {

struct EmptyVocabulary : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Seeded ASR-style error model. Per reference word, independently:
// delete with p_del, substitute with p_sub (drawing a different word
// from the vocabulary, tag kept unless tag_noise fires); after each
// surviving position, insert an untagged vocabulary word with p_ins.
// tag_noise drops the tag, or re-types it when tag_pool is non-empty.
//
// Randomness comes from std::mt19937_64 (a fixed, portable algorithm)
// with raw 64-bit draws mapped to [0,1) in-house, so outputs are
// bit-identical across platforms and standard libraries.
struct ErrorModel {
  double p_sub = 0.0;
  double p_del = 0.0;
  double p_ins = 0.0;
  double tag_noise = 0.0;
  std::vector<std::string> vocabulary;
  std::vector<BioTag> tag_pool;
  uint64_t seed = 0;
};

TaggedTranscript Inject(const TaggedTranscript &ref, const ErrorModel &model);

// Per-utterance stream derivation: mixes the model seed with a hash of
// the utterance id so parallel injection over a corpus is
// order-independent.
uint64_t DeriveSeed(uint64_t seed, const std::string &utterance_id);

}  // namespace sner

#endif  // SNER_ERRORSIM_H_
