#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nererr {

/// How per-token labels encode entity boundaries.
enum class TagScheme {
  IOB2,  ///< B-X begins a span, I-X continues it
  IO,    ///< bare tags; a tag change or O begins a new span
  Auto,  ///< resolved per file, see resolve_scheme()
};

/// What to do with an I-X that has no B-X/I-X predecessor.
enum class RepairPolicy {
  Strict,   ///< report it as an error
  Lenient,  ///< read it as B-X
};

inline constexpr std::string_view kOutside = "O";

/// One label split into its boundary marker and entity type.
struct DecodedLabel {
  enum class Kind { Outside, Begin, Inside };
  Kind kind = Kind::Outside;
  std::string_view type;
};

/// Under IOB2, labels without a B-/I- prefix decode as Inside so that they
/// follow the same legality rule as a stray I-X.
inline DecodedLabel decode_label(std::string_view label, TagScheme scheme) {
  using Kind = DecodedLabel::Kind;
  if (label == kOutside) return {Kind::Outside, {}};
  const bool prefixed = label.size() > 2 && label[1] == '-' && (label[0] == 'B' || label[0] == 'I');
  if (scheme == TagScheme::IO) return {Kind::Inside, prefixed ? label.substr(2) : label};
  if (prefixed) return {label[0] == 'B' ? Kind::Begin : Kind::Inside, label.substr(2)};
  return {Kind::Inside, label};
}

/// Auto becomes IOB2 as soon as any label carries a B- or I- prefix.
template <typename Labels>
TagScheme resolve_scheme(TagScheme requested, const Labels& labels) {
  if (requested != TagScheme::Auto) return requested;
  for (std::string_view l : labels) {
    if (l.size() >= 2 && l[1] == '-' && (l[0] == 'B' || l[0] == 'I')) return TagScheme::IOB2;
  }
  return TagScheme::IO;
}

/// True when `label` may legally follow `previous` under IOB2.
inline bool legal_iob2_transition(std::string_view previous, std::string_view label) {
  const auto cur = decode_label(label, TagScheme::IOB2);
  if (cur.kind == DecodedLabel::Kind::Outside) return true;
  if (cur.kind == DecodedLabel::Kind::Begin) return label.size() > 2;
  if (label.size() <= 2 || label[0] != 'I') return false;  // bare tag
  if (previous.empty()) return false;
  const auto prev = decode_label(previous, TagScheme::IOB2);
  return prev.kind != DecodedLabel::Kind::Outside && prev.type == cur.type &&
         (previous.size() > 2 && previous[1] == '-');
}

/// Index of the first label that breaks IOB2 legality, if any.
inline std::optional<std::size_t> first_invalid_iob2(const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!legal_iob2_transition(i ? std::string_view(labels[i - 1]) : std::string_view(), labels[i]))
      return i;
  }
  return std::nullopt;
}

/// Rewrites labels into canonical IOB2 (O / B-X / I-X). A stray I-X becomes
/// B-X; a bare X continues a same-type predecessor and begins a span
/// otherwise. Returns the number of rewrites.
inline std::size_t repair_iob2(std::vector<std::string>& labels) {
  std::size_t repairs = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string_view prev = i ? std::string_view(labels[i - 1]) : std::string_view();
    if (legal_iob2_transition(prev, labels[i])) continue;
    const auto cur = decode_label(labels[i], TagScheme::IOB2);
    const bool bare = !(labels[i].size() > 2 && labels[i][1] == '-');
    std::string fixed = "B-";
    if (bare && !prev.empty()) {
      const auto p = decode_label(prev, TagScheme::IOB2);
      if (p.kind != DecodedLabel::Kind::Outside && p.type == cur.type) fixed = "I-";
    }
    fixed.append(cur.type);
    labels[i] = std::move(fixed);
    ++repairs;
  }
  return repairs;
}

}  // namespace nererr
