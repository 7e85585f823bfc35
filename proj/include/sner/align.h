// include/sner/align.h

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

#ifndef SNER_ALIGN_H_
#define SNER_ALIGN_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sner {

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert };

// One step of the alignment path. Match/Substitute carry both indices,
// Delete only ref_index, Insert only hyp_index.
struct EditOp {
  EditKind kind;
  std::optional<size_t> ref_index;
  std::optional<size_t> hyp_index;

  bool operator==(const EditOp &other) const = default;
};

struct AlignmentResult {
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
  size_t matches = 0;
  size_t ref_len = 0;  // N in (S+D+I)/N
  size_t hyp_len = 0;
  std::vector<EditOp> path;

  size_t NumErrors() const { return substitutions + deletions + insertions; }

  void Merge(const AlignmentResult &other) {
    substitutions += other.substitutions;
    deletions += other.deletions;
    insertions += other.insertions;
    matches += other.matches;
    ref_len += other.ref_len;
    hyp_len += other.hyp_len;
    // paths are per-utterance, not merged
  }
};

// (S+D+I)/N. Returns 0.0 for the all-zero case and nullopt (undefined)
// when N = 0 but errors exist.
inline std::optional<double> ErrorRate(size_t s, size_t d, size_t i,
                                       size_t n) {
  size_t errors = s + d + i;
  if (n > 0) return static_cast<double>(errors) / static_cast<double>(n);
  if (errors == 0) return 0.0;
  return std::nullopt;
}

inline std::optional<double> ErrorRate(const AlignmentResult &r) {
  return ErrorRate(r.substitutions, r.deletions, r.insertions, r.ref_len);
}

// Minimum edit distance under unit costs with full backtrace. Cost ties
// resolve diagonal first, then delete, then insert, so the path is
// deterministic across platforms.
template <typename T, typename Eq = std::equal_to<T>>
AlignmentResult Align(const std::vector<T> &ref, const std::vector<T> &hyp,
                      Eq equals = Eq()) {
  const size_t n = ref.size(), m = hyp.size();
  std::vector<uint32_t> dp((n + 1) * (m + 1));
  auto at = [m](size_t i, size_t j) { return i * (m + 1) + j; };
  for (size_t i = 0; i <= n; ++i) dp[at(i, 0)] = static_cast<uint32_t>(i);
  for (size_t j = 0; j <= m; ++j) dp[at(0, j)] = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      uint32_t diag =
          dp[at(i - 1, j - 1)] + (equals(ref[i - 1], hyp[j - 1]) ? 0 : 1);
      uint32_t del = dp[at(i - 1, j)] + 1;
      uint32_t ins = dp[at(i, j - 1)] + 1;
      dp[at(i, j)] = std::min(diag, std::min(del, ins));
    }
  }

  AlignmentResult result;
  result.ref_len = n;
  result.hyp_len = m;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      bool eq = equals(ref[i - 1], hyp[j - 1]);
      if (dp[at(i, j)] == dp[at(i - 1, j - 1)] + (eq ? 0u : 1u)) {
        --i;
        --j;
        if (eq) {
          ++result.matches;
          result.path.push_back({EditKind::kMatch, i, j});
        } else {
          ++result.substitutions;
          result.path.push_back({EditKind::kSubstitute, i, j});
        }
        continue;
      }
    }
    if (i > 0 && dp[at(i, j)] == dp[at(i - 1, j)] + 1) {
      --i;
      ++result.deletions;
      result.path.push_back({EditKind::kDelete, i, std::nullopt});
      continue;
    }
    --j;
    ++result.insertions;
    result.path.push_back({EditKind::kInsert, std::nullopt, j});
  }
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace sner

#endif  // SNER_ALIGN_H_
