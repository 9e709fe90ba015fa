#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "nererr/corpus.hpp"
#include "nererr/error.hpp"
#include "nererr/percent.hpp"
#include "nererr/span.hpp"

namespace nererr {

/// Outcome of comparing a gold span against the predictions.
enum class GoldVerdict { Correct, WrongTag, WrongRange, WrongRangeAndTag, NoExtraction };
/// Outcome of comparing a predicted span against the gold annotation.
enum class PredVerdict { Correct, WrongTag, WrongRange, WrongRangeAndTag, NoAnnotation };

struct GoldOutcome {
  GoldVerdict verdict = GoldVerdict::NoExtraction;
  /// The predicted span that decided the verdict; empty for NoExtraction.
  std::optional<EntitySpan> matched_span;

  friend bool operator==(const GoldOutcome&, const GoldOutcome&) = default;
};

struct PredOutcome {
  PredVerdict verdict = PredVerdict::NoAnnotation;
  /// The gold span that decided the verdict; empty for NoAnnotation.
  std::optional<EntitySpan> matched_span;

  friend bool operator==(const PredOutcome&, const PredOutcome&) = default;
};

namespace detail {

// Shared by both directions: verdict codes 0..4 line up with the two enums.
inline std::pair<int, const EntitySpan*> cascade(const EntitySpan& span, std::span<const EntitySpan> others) {
  for (const auto& o : others) {
    if (span.same_range(o)) return {o.tag == span.tag ? 0 : 1, &o};
  }
  const EntitySpan* same_tag = nullptr;
  const EntitySpan* any_tag = nullptr;
  std::size_t same_len = 0, any_len = 0;
  auto better = [](std::size_t len, const EntitySpan& cand, std::size_t best_len, const EntitySpan* best) {
    return best == nullptr || len > best_len || (len == best_len && cand.start < best->start);
  };
  for (const auto& o : others) {
    const std::size_t len = overlap_length(span, o);
    if (len == 0) continue;
    if (better(len, o, any_len, any_tag)) {
      any_tag = &o;
      any_len = len;
    }
    if (o.tag == span.tag && better(len, o, same_len, same_tag)) {
      same_tag = &o;
      same_len = len;
    }
  }
  if (same_tag) return {2, same_tag};
  if (any_tag) return {3, any_tag};
  return {4, nullptr};
}

}  // namespace detail

/// Classifies one gold span:
///   identical range -> Correct or WrongTag;
///   otherwise, among overlapping predictions, a same-tag one -> WrongRange,
///   any other -> WrongRangeAndTag; nothing overlapping -> NoExtraction.
/// Several candidates resolve to the largest token overlap, then the
/// smallest start.
inline GoldOutcome classify_gold_span(const EntitySpan& gold, std::span<const EntitySpan> predicted) {
  const auto [code, match] = detail::cascade(gold, predicted);
  GoldOutcome out{static_cast<GoldVerdict>(code), std::nullopt};
  if (match) out.matched_span = *match;
  return out;
}

/// Mirror of classify_gold_span; the no-overlap case is NoAnnotation.
inline PredOutcome classify_pred_span(const EntitySpan& pred, std::span<const EntitySpan> gold) {
  const auto [code, match] = detail::cascade(pred, gold);
  PredOutcome out{static_cast<PredVerdict>(code), std::nullopt};
  if (match) out.matched_span = *match;
  return out;
}

enum class Direction { Gold, Prediction };

inline const char* direction_name(Direction d) { return d == Direction::Gold ? "gold" : "pred"; }

/// The four error types. Missing is NoExtraction on the gold side and
/// NoAnnotation on the prediction side.
enum class ErrorType { Missing, WrongTag, WrongRange, WrongRangeAndTag };

inline constexpr std::array<ErrorType, 4> kErrorTypes = {ErrorType::Missing, ErrorType::WrongTag,
                                                         ErrorType::WrongRange, ErrorType::WrongRangeAndTag};

struct ErrorCounts {
  std::size_t correct = 0;
  std::size_t wrong_tag = 0;
  std::size_t wrong_range = 0;
  std::size_t wrong_range_and_tag = 0;
  std::size_t missing = 0;

  std::size_t errors() const noexcept { return wrong_tag + wrong_range + wrong_range_and_tag + missing; }
  std::size_t total() const noexcept { return correct + errors(); }

  std::size_t count(ErrorType t) const noexcept {
    switch (t) {
      case ErrorType::Missing: return missing;
      case ErrorType::WrongTag: return wrong_tag;
      case ErrorType::WrongRange: return wrong_range;
      case ErrorType::WrongRangeAndTag: return wrong_range_and_tag;
    }
    return 0;
  }

  /// Adds one outcome; code follows the verdict enums' order.
  void add(int code) noexcept {
    switch (code) {
      case 0: ++correct; break;
      case 1: ++wrong_tag; break;
      case 2: ++wrong_range; break;
      case 3: ++wrong_range_and_tag; break;
      default: ++missing; break;
    }
  }

  ErrorCounts& operator+=(const ErrorCounts& o) noexcept {
    correct += o.correct;
    wrong_tag += o.wrong_tag;
    wrong_range += o.wrong_range;
    wrong_range_and_tag += o.wrong_range_and_tag;
    missing += o.missing;
    return *this;
  }

  friend bool operator==(const ErrorCounts&, const ErrorCounts&) = default;
};

/// Per-tag error counts from one direction.
struct ErrorReport {
  Direction direction = Direction::Gold;
  std::map<std::string, ErrorCounts> per_tag;
  ErrorCounts totals;

  /// Share of all errors, full precision; 0 when there are no errors.
  double rate(ErrorType t) const noexcept {
    const auto errors = totals.errors();
    return errors ? 100.0 * static_cast<double>(totals.count(t)) / static_cast<double>(errors) : 0.0;
  }

  /// Share of all errors in hundredths of a percent, rounded half up.
  std::int64_t rate_hundredths(ErrorType t) const noexcept {
    return percent_hundredths(totals.count(t), totals.errors());
  }

  static ErrorReport from_counts(Direction d, std::map<std::string, ErrorCounts> per_tag) {
    ErrorReport r{d, std::move(per_tag), {}};
    for (const auto& [tag, c] : r.per_tag) r.totals += c;
    return r;
  }

  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

struct ErrorAnalysis {
  ErrorReport gold;
  ErrorReport pred;
};

/// Every span of both sides with its outcome, ordered by sentence then start.
struct SpanClassification {
  std::vector<std::pair<EntitySpan, GoldOutcome>> gold;
  std::vector<std::pair<EntitySpan, PredOutcome>> pred;
};

struct AnalyzeOptions {
  /// Worker threads for per-sentence classification; results do not depend
  /// on it.
  unsigned threads = 1;
};

namespace detail {

inline void require_aligned(const Corpus& gold, const Corpus& pred) {
  const auto a = check_alignment(gold, pred);
  if (!a) throw AlignmentError("gold and predicted corpora are misaligned at " + a.describe());
}

template <typename Fn>
void for_each_sentence(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Classifies every span of both corpora. Throws AlignmentError when the
/// corpora do not share a tokenization.
inline SpanClassification classify_corpus(const Corpus& gold, const Corpus& pred, AnalyzeOptions opts = {}) {
  detail::require_aligned(gold, pred);
  const auto gold_spans = corpus_spans(gold);
  const auto pred_spans = corpus_spans(pred);
  const std::size_t n = gold_spans.size();

  std::vector<SpanClassification> per_sentence(n);
  detail::for_each_sentence(n, opts.threads, [&](std::size_t i) {
    auto& out = per_sentence[i];
    for (const auto& g : gold_spans[i]) out.gold.emplace_back(g, classify_gold_span(g, pred_spans[i]));
    for (const auto& p : pred_spans[i]) out.pred.emplace_back(p, classify_pred_span(p, gold_spans[i]));
  });

  SpanClassification all;
  for (auto& s : per_sentence) {
    std::move(s.gold.begin(), s.gold.end(), std::back_inserter(all.gold));
    std::move(s.pred.begin(), s.pred.end(), std::back_inserter(all.pred));
  }
  return all;
}

/// Aggregates outcomes into a gold-based and a prediction-based report.
/// Both reports carry a row for every tag seen on either side.
inline ErrorAnalysis summarize(const SpanClassification& c) {
  std::map<std::string, ErrorCounts> gold_rows, pred_rows;
  auto touch = [&](const std::string& tag) {
    gold_rows.try_emplace(tag);
    pred_rows.try_emplace(tag);
  };
  for (const auto& entry : c.gold) touch(entry.first.tag);
  for (const auto& entry : c.pred) touch(entry.first.tag);
  for (const auto& [span, o] : c.gold) gold_rows[span.tag].add(static_cast<int>(o.verdict));
  for (const auto& [span, o] : c.pred) pred_rows[span.tag].add(static_cast<int>(o.verdict));
  return {ErrorReport::from_counts(Direction::Gold, std::move(gold_rows)),
          ErrorReport::from_counts(Direction::Prediction, std::move(pred_rows))};
}

inline ErrorAnalysis analyze(const Corpus& gold, const Corpus& pred, AnalyzeOptions opts = {}) {
  return summarize(classify_corpus(gold, pred, opts));
}

}  // namespace nererr
