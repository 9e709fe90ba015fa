#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "nererr/corpus.hpp"
#include "nererr/span.hpp"
#include "nererr/taxonomy.hpp"

namespace nererr {

struct TagCounts {
  std::size_t correct_ne = 0;  ///< exact range and tag matches
  std::size_t gold_ne = 0;     ///< gold spans
  std::size_t found_ne = 0;    ///< predicted spans, right or wrong

  TagCounts& operator+=(const TagCounts& o) noexcept {
    correct_ne += o.correct_ne;
    gold_ne += o.gold_ne;
    found_ne += o.found_ne;
    return *this;
  }
  friend bool operator==(const TagCounts&, const TagCounts&) = default;
};

/// Precision, recall and F1 as percentages at full precision.
struct Scores {
  TagCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct MetricsReport {
  std::map<std::string, Scores> per_tag;
  /// Micro average over the summed counts.
  Scores overall;
};

/// Per-tag correctNE / goldNE / foundNE. A tag seen on one side only gets a
/// row with zeros for the other side.
inline std::map<std::string, TagCounts> count_matches(std::span<const EntitySpan> gold,
                                                      std::span<const EntitySpan> pred) {
  std::map<std::string, TagCounts> counts;
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::string_view>;
  std::set<Key> gold_keys;
  for (const auto& g : gold) {
    ++counts[g.tag].gold_ne;
    gold_keys.emplace(g.sentence, g.start, g.end, g.tag);
  }
  for (const auto& p : pred) {
    auto& c = counts[p.tag];
    ++c.found_ne;
    if (gold_keys.count(Key{p.sentence, p.start, p.end, p.tag})) ++c.correct_ne;
  }
  return counts;
}

/// Harmonic mean of two percentages; 0 when both are 0.
inline double harmonic_f1(double precision, double recall) {
  return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

/// P = 100 correct/found, R = 100 correct/gold, F1 = 2PR/(P+R); every
/// ratio with a zero denominator is 0.
inline Scores score(const TagCounts& c) {
  Scores s{c, 0.0, 0.0, 0.0};
  if (c.found_ne) s.precision = static_cast<double>(c.correct_ne) * 100.0 / static_cast<double>(c.found_ne);
  if (c.gold_ne) s.recall = static_cast<double>(c.correct_ne) * 100.0 / static_cast<double>(c.gold_ne);
  s.f1 = harmonic_f1(s.precision, s.recall);
  return s;
}

inline MetricsReport compute_metrics(const std::map<std::string, TagCounts>& counts) {
  MetricsReport r;
  TagCounts total;
  for (const auto& [tag, c] : counts) {
    r.per_tag.emplace(tag, score(c));
    total += c;
  }
  r.overall = score(total);
  return r;
}

template <typename Nested>
std::vector<EntitySpan> flatten_spans(const Nested& per_sentence) {
  std::vector<EntitySpan> out;
  for (const auto& s : per_sentence) out.insert(out.end(), s.begin(), s.end());
  return out;
}

/// Aligns, extracts spans and scores a prediction corpus.
inline MetricsReport evaluate(const Corpus& gold, const Corpus& pred) {
  detail::require_aligned(gold, pred);
  const auto g = flatten_spans(corpus_spans(gold));
  const auto p = flatten_spans(corpus_spans(pred));
  return compute_metrics(count_matches(g, p));
}

}  // namespace nererr
