#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nererr/error.hpp"
#include "nererr/labels.hpp"

namespace nererr {

/// A contiguous token range [start, end) within one sentence carrying one
/// entity type (without scheme prefix).
struct EntitySpan {
  std::size_t sentence = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string tag;

  std::size_t length() const noexcept { return end - start; }
  bool same_range(const EntitySpan& o) const noexcept {
    return sentence == o.sentence && start == o.start && end == o.end;
  }

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
  friend auto operator<=>(const EntitySpan&, const EntitySpan&) = default;
};

/// Non-empty token intersection within the same sentence. Touching spans do
/// not overlap.
inline bool overlap(const EntitySpan& a, const EntitySpan& b) noexcept {
  return a.sentence == b.sentence && a.start < b.end && b.start < a.end;
}

inline std::size_t overlap_length(const EntitySpan& a, const EntitySpan& b) noexcept {
  if (!overlap(a, b)) return 0;
  return std::min(a.end, b.end) - std::max(a.start, b.start);
}

/// Turns one sentence's labels into its entity spans, sorted by start.
///
/// IOB2: every maximal B-X (I-X)* run is one span. Under Lenient an I-X
/// without a B-X/I-X predecessor opens a new span; under Strict it throws
/// InvalidTransition. IO: every maximal run of one non-O type is one span.
inline std::vector<EntitySpan> extract_spans(std::span<const std::string> labels, TagScheme scheme,
                                             RepairPolicy policy, std::size_t sentence) {
  if (scheme == TagScheme::Auto) scheme = resolve_scheme(scheme, labels);

  std::vector<std::string> canonical(labels.begin(), labels.end());
  if (scheme == TagScheme::IOB2) {
    if (policy == RepairPolicy::Strict) {
      if (auto bad = first_invalid_iob2(canonical))
        throw InvalidTransition("labels", 0, sentence, *bad, canonical[*bad]);
    } else {
      repair_iob2(canonical);
    }
  }

  std::vector<EntitySpan> spans;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    const auto cur = decode_label(canonical[i], scheme);
    if (cur.kind == DecodedLabel::Kind::Outside) continue;
    const bool continues = !spans.empty() && spans.back().end == i && spans.back().tag == cur.type &&
                           (scheme == TagScheme::IO || cur.kind == DecodedLabel::Kind::Inside);
    if (continues) {
      spans.back().end = i + 1;
    } else {
      spans.push_back({sentence, i, i + 1, std::string(cur.type)});
    }
  }
  return spans;
}

/// Inverse of extract_spans. Positions outside every span become "O".
/// Throws OverlapError for overlapping input and SchemeError when IO would
/// merge two adjacent same-type spans.
inline std::vector<std::string> spans_to_labels(std::span<const EntitySpan> spans, std::size_t length,
                                                TagScheme scheme) {
  if (scheme == TagScheme::Auto) scheme = TagScheme::IOB2;

  std::vector<const EntitySpan*> ordered;
  ordered.reserve(spans.size());
  for (const auto& s : spans) {
    if (s.start >= s.end || s.end > length)
      throw std::out_of_range("span [" + std::to_string(s.start) + ", " + std::to_string(s.end) +
                              ") does not fit a sentence of " + std::to_string(length) + " tokens");
    if (s.tag.empty() || s.tag == kOutside) throw std::invalid_argument("span tag must be an entity type");
    ordered.push_back(&s);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const EntitySpan* a, const EntitySpan* b) { return a->start < b->start; });

  std::vector<std::string> labels(length, std::string(kOutside));
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const EntitySpan& s = *ordered[k];
    if (k > 0) {
      const EntitySpan& prev = *ordered[k - 1];
      if (prev.end > s.start)
        throw OverlapError("spans [" + std::to_string(prev.start) + ", " + std::to_string(prev.end) +
                           ") and [" + std::to_string(s.start) + ", " + std::to_string(s.end) + ") overlap");
      if (scheme == TagScheme::IO && prev.end == s.start && prev.tag == s.tag)
        throw SchemeError("IO cannot separate adjacent " + s.tag + " spans at token " + std::to_string(s.start));
    }
    for (std::size_t i = s.start; i < s.end; ++i) {
      if (scheme == TagScheme::IO)
        labels[i] = s.tag;
      else
        labels[i] = (i == s.start ? "B-" : "I-") + s.tag;
    }
  }
  return labels;
}

}  // namespace nererr
