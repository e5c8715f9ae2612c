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

#ifndef VSMGRADE_VSM_HPP
#define VSMGRADE_VSM_HPP

#include <cmath>
#include <cstdio>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "vsmgrade/csv.hpp"
#include "vsmgrade/error.hpp"
#include "vsmgrade/ngram.hpp"

namespace vsmgrade {

/// Logarithm used for inverse document frequency. Similarities are invariant
/// under the choice; it only rescales every weight.
enum class LogBase { natural, base2, base10 };

inline double log_in(LogBase base, double x) {
  switch (base) {
    case LogBase::base2: return std::log2(x);
    case LogBase::base10: return std::log10(x);
    case LogBase::natural: break;
  }
  return std::log(x);
}

/// Sparse term -> weight map. Only strictly positive weights are stored.
/// Ordered so that every reduction over it is reproducible.
using TermVector = std::map<std::string, double>;

/// Relative frequency of each gram; the values sum to 1 for non-empty input.
inline std::map<std::string, double> term_frequency(const NGramProfile& profile) {
  std::map<std::string, std::size_t> counts;
  for (const auto& g : profile.grams) ++counts[g];
  std::map<std::string, double> tf;
  const auto total = static_cast<double>(profile.grams.size());
  for (const auto& [term, count] : counts) tf.emplace(term, static_cast<double>(count) / total);
  return tf;
}

class Vocabulary {
 public:
  struct Entry {
    std::size_t df = 0;
    double idf = 0.0;
  };

  Vocabulary() = default;

  std::size_t corpus_size() const noexcept { return corpus_size_; }
  LogBase log_base() const noexcept { return base_; }
  const std::map<std::string, Entry>& entries() const noexcept { return entries_; }
  bool contains(const std::string& term) const { return entries_.contains(term); }

  std::size_t df(const std::string& term) const {
    auto it = entries_.find(term);
    return it == entries_.end() ? 0 : it->second.df;
  }

  /// 0 for out-of-vocabulary terms, which transform() drops anyway.
  double idf(const std::string& term) const {
    auto it = entries_.find(term);
    return it == entries_.end() ? 0.0 : it->second.idf;
  }

  friend Vocabulary fit_vocabulary(std::span<const NGramProfile>, LogBase);
  friend Vocabulary vocabulary_from_idf(std::map<std::string, double>, std::size_t);

 private:
  std::size_t corpus_size_ = 0;
  LogBase base_ = LogBase::natural;
  std::map<std::string, Entry> entries_;
};

/// IDF(t) = log(|docs| / DF(t)), DF counting documents that contain t at least once.
inline Vocabulary fit_vocabulary(std::span<const NGramProfile> docs,
                                 LogBase base = LogBase::natural) {
  if (docs.empty()) throw Error(ErrorKind::EmptyCorpus, "cannot fit a vocabulary on zero documents");
  Vocabulary vocab;
  vocab.corpus_size_ = docs.size();
  vocab.base_ = base;
  for (const auto& doc : docs) {
    const std::set<std::string> unique(doc.grams.begin(), doc.grams.end());
    for (const auto& term : unique) ++vocab.entries_[term].df;
  }
  const auto n = static_cast<double>(docs.size());
  for (auto& [term, entry] : vocab.entries_) {
    // Exact zero for ubiquitous terms, whatever the base.
    entry.idf = entry.df == docs.size() ? 0.0 : log_in(base, n / static_cast<double>(entry.df));
  }
  return vocab;
}

/// Builds a vocabulary from explicit idf values (df is left at 0). Used to
/// apply externally supplied weights.
inline Vocabulary vocabulary_from_idf(std::map<std::string, double> idf, std::size_t corpus_size) {
  Vocabulary vocab;
  vocab.corpus_size_ = corpus_size;
  for (auto& [term, value] : idf) vocab.entries_[term].idf = value;
  return vocab;
}

/// TF-IDF weights; zero weights and out-of-vocabulary terms are omitted.
inline TermVector transform(const NGramProfile& profile, const Vocabulary& vocab) {
  TermVector weights;
  for (const auto& [term, tf] : term_frequency(profile)) {
    const double w = tf * vocab.idf(term);
    if (w > 0.0) weights.emplace(term, w);
  }
  return weights;
}

/// `term,df,idf` rows sorted by term.
inline std::string vocabulary_to_csv(const Vocabulary& vocab) {
  std::string out = "term,df,idf\n";
  char buf[64];
  for (const auto& [term, entry] : vocab.entries()) {
    std::snprintf(buf, sizeof buf, ",%zu,%.17g\n", entry.df, entry.idf);
    out += csv::quote(term);
    out += buf;
  }
  return out;
}

}  // namespace vsmgrade

#endif  // VSMGRADE_VSM_HPP
