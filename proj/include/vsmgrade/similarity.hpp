// Copyright 2026 The vsmgrade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VSMGRADE_SIMILARITY_HPP
#define VSMGRADE_SIMILARITY_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "vsmgrade/vsm.hpp"

namespace vsmgrade {

enum class Metric { cosine, jaccard };

constexpr std::string_view to_string(Metric m) noexcept {
  return m == Metric::cosine ? "cosine" : "jaccard";
}

inline std::optional<Metric> parse_metric(std::string_view s) {
  if (s == "cosine") return Metric::cosine;
  if (s == "jaccard") return Metric::jaccard;
  return std::nullopt;
}

/// A similarity in [0, 1]. Non-negative TF-IDF weights make the bounds hold
/// for cosine as well as Jaccard.
struct SimilarityScore {
  double value = 0.0;
  Metric metric = Metric::cosine;
};

/// Dot product over the norms; 0 when either side has no terms.
inline SimilarityScore cosine_similarity(const TermVector& d, const TermVector& q) {
  double dot = 0.0;
  // Ordered maps: a merge walk visits the shared keys in a fixed order.
  auto di = d.begin();
  auto qi = q.begin();
  while (di != d.end() && qi != q.end()) {
    if (di->first < qi->first) {
      ++di;
    } else if (qi->first < di->first) {
      ++qi;
    } else {
      dot += di->second * qi->second;
      ++di;
      ++qi;
    }
  }
  double dd = 0.0;
  for (const auto& [_, w] : d) dd += w * w;
  double qq = 0.0;
  for (const auto& [_, w] : q) qq += w * w;
  if (dd == 0.0 || qq == 0.0) return {0.0, Metric::cosine};
  const double value = dot / std::sqrt(dd * qq);
  return {std::clamp(value, 0.0, 1.0), Metric::cosine};
}

/// |shared terms| / |distinct terms|; weights only matter through presence.
inline SimilarityScore jaccard_similarity(const TermVector& d, const TermVector& q) {
  std::size_t shared = 0;
  auto di = d.begin();
  auto qi = q.begin();
  while (di != d.end() && qi != q.end()) {
    if (di->first < qi->first) {
      ++di;
    } else if (qi->first < di->first) {
      ++qi;
    } else {
      ++shared;
      ++di;
      ++qi;
    }
  }
  const std::size_t distinct = d.size() + q.size() - shared;
  if (distinct == 0) return {0.0, Metric::jaccard};
  return {static_cast<double>(shared) / static_cast<double>(distinct), Metric::jaccard};
}

inline SimilarityScore similarity(Metric metric, const TermVector& d, const TermVector& q) {
  return metric == Metric::cosine ? cosine_similarity(d, q) : jaccard_similarity(d, q);
}

}  // namespace vsmgrade

#endif  // VSMGRADE_SIMILARITY_HPP
