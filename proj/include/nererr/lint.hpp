#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "nererr/corpus.hpp"
#include "nererr/span.hpp"
#include "nererr/unicode.hpp"

namespace nererr {

/// One named partition (train/dev/test) with gold labels.
struct Split {
  std::string name;
  Corpus corpus;
};

/// Declaration order is the output order.
enum class LintKind { UnlabeledElsewhere, TagConflict, RangeConflict, CaseConflict };

inline const char* lint_kind_name(LintKind k) {
  switch (k) {
    case LintKind::UnlabeledElsewhere: return "UnlabeledElsewhere";
    case LintKind::TagConflict: return "TagConflict";
    case LintKind::RangeConflict: return "RangeConflict";
    case LintKind::CaseConflict: return "CaseConflict";
  }
  return "?";
}

struct Occurrence {
  std::string split;
  std::size_t split_index = 0;
  std::size_t sentence = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  /// Entity tag, or empty for an unlabeled token sequence.
  std::optional<std::string> tag;

  auto key() const { return std::tie(split_index, sentence, start, end, tag); }
  friend bool operator==(const Occurrence& a, const Occurrence& b) { return a.key() == b.key(); }
  friend bool operator<(const Occurrence& a, const Occurrence& b) { return a.key() < b.key(); }
};

struct LintFinding {
  LintKind kind = LintKind::UnlabeledElsewhere;
  /// Entity surface, or the lowercased designator for Range/Case findings.
  std::string surface;
  /// Sorted by split order, then position.
  std::vector<Occurrence> occurrences;
  std::string note;
};

namespace detail {

inline std::string join_surface(const Sentence& s, std::size_t start, std::size_t end) {
  std::string out;
  for (std::size_t i = start; i < end; ++i) {
    if (i > start) out += ' ';
    out += s.tokens[i].surface;
  }
  return out;
}

inline bool is_outside(const Corpus& c, const Token& t) {
  return decode_label(t.label, c.scheme).kind == DecodedLabel::Kind::Outside;
}

inline void require_splits(const std::vector<Split>& splits) {
  if (splits.size() < 2) throw std::invalid_argument("consistency lint needs at least two splits");
}

inline std::string join_names(const std::set<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

struct LabeledEntity {
  std::vector<std::string> tokens;
  std::vector<Occurrence> occurrences;
};

/// surface -> every occurrence as a full entity span
inline std::map<std::string, LabeledEntity> index_entities(const std::vector<Split>& splits) {
  std::map<std::string, LabeledEntity> index;
  for (std::size_t k = 0; k < splits.size(); ++k) {
    const Corpus& c = splits[k].corpus;
    const auto spans = corpus_spans(c);
    for (std::size_t si = 0; si < spans.size(); ++si) {
      const Sentence& sent = c.sentences[si];
      for (const auto& sp : spans[si]) {
        auto& e = index[join_surface(sent, sp.start, sp.end)];
        if (e.tokens.empty()) {
          for (std::size_t i = sp.start; i < sp.end; ++i) e.tokens.push_back(sent.tokens[i].surface);
        }
        e.occurrences.push_back({splits[k].name, k, si, sp.start, sp.end, sp.tag});
      }
    }
  }
  return index;
}

// A designator is a token either opening a span (inside) or sitting on an O
// token directly in front of one (outside).
struct DesignatorUse {
  Occurrence occurrence;
  bool inside = false;
  bool upper = false;
};

inline std::map<std::string, std::vector<DesignatorUse>> index_designators(const std::vector<Split>& splits) {
  std::map<std::string, std::vector<DesignatorUse>> index;
  for (std::size_t k = 0; k < splits.size(); ++k) {
    const Corpus& c = splits[k].corpus;
    const auto spans = corpus_spans(c);
    for (std::size_t si = 0; si < spans.size(); ++si) {
      const Sentence& sent = c.sentences[si];
      for (const auto& sp : spans[si]) {
        Occurrence occ{splits[k].name, k, si, sp.start, sp.end, sp.tag};
        if (sp.length() >= 2) {
          const auto& tok = sent.tokens[sp.start].surface;
          index[fold_case(tok)].push_back({occ, true, starts_upper(tok)});
        }
        if (sp.start > 0 && is_outside(c, sent.tokens[sp.start - 1])) {
          const auto& tok = sent.tokens[sp.start - 1].surface;
          index[fold_case(tok)].push_back({occ, false, starts_upper(tok)});
        }
      }
    }
  }
  return index;
}

inline void sort_findings(std::vector<LintFinding>& findings) {
  for (auto& f : findings) {
    std::sort(f.occurrences.begin(), f.occurrences.end());
    f.occurrences.erase(std::unique(f.occurrences.begin(), f.occurrences.end()), f.occurrences.end());
  }
  std::sort(findings.begin(), findings.end(), [](const LintFinding& a, const LintFinding& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.surface != b.surface) return a.surface < b.surface;
    return a.occurrences.front() < b.occurrences.front();
  });
}

// Shared by the range and case checks: pairs an inside use with an outside
// use of the same designator, same tag, in different splits.
template <typename PairFilter>
std::vector<LintFinding> designator_conflicts(const std::vector<Split>& splits, LintKind kind, PairFilter accept) {
  std::vector<LintFinding> findings;
  for (const auto& [key, uses] : index_designators(splits)) {
    std::set<std::size_t> involved;
    std::set<std::string> inside_splits, outside_splits, tags;
    for (std::size_t a = 0; a < uses.size(); ++a) {
      const auto& in = uses[a];
      if (!in.inside) continue;
      for (std::size_t b = 0; b < uses.size(); ++b) {
        const auto& out = uses[b];
        if (out.inside || out.occurrence.tag != in.occurrence.tag) continue;
        if (out.occurrence.split_index == in.occurrence.split_index || !accept(in, out)) continue;
        involved.insert(a);
        involved.insert(b);
        inside_splits.insert(in.occurrence.split);
        outside_splits.insert(out.occurrence.split);
        tags.insert(*in.occurrence.tag);
      }
    }
    if (involved.empty()) continue;
    LintFinding f{kind, key, {}, {}};
    for (auto i : involved) f.occurrences.push_back(uses[i].occurrence);
    if (kind == LintKind::CaseConflict)
      f.note = "capitalized '" + key + "' opens " + join_names(tags) + " spans in " + join_names(inside_splits) +
               " but lowercase '" + key + "' precedes them in " + join_names(outside_splits);
    else
      f.note = "'" + key + "' is inside " + join_names(tags) + " spans in " + join_names(inside_splits) +
               " but precedes them in " + join_names(outside_splits);
    findings.push_back(std::move(f));
  }
  return findings;
}

}  // namespace detail

/// A surface annotated as an entity in one split but present as a plain,
/// all-O token sequence in another.
inline std::vector<LintFinding> lint_unlabeled(const std::vector<Split>& splits) {
  detail::require_splits(splits);
  const auto entities = detail::index_entities(splits);

  std::map<std::string, std::vector<const std::string*>> by_first;  // first token -> surfaces
  for (const auto& [surface, e] : entities) by_first[e.tokens.front()].push_back(&surface);

  std::map<std::string, std::vector<Occurrence>> unlabeled;
  for (std::size_t k = 0; k < splits.size(); ++k) {
    const Corpus& c = splits[k].corpus;
    for (std::size_t si = 0; si < c.sentences.size(); ++si) {
      const auto& toks = c.sentences[si].tokens;
      for (std::size_t i = 0; i < toks.size(); ++i) {
        const auto hit = by_first.find(toks[i].surface);
        if (hit == by_first.end()) continue;
        for (const std::string* surface : hit->second) {
          const auto& want = entities.at(*surface).tokens;
          if (i + want.size() > toks.size()) continue;
          bool match = true;
          for (std::size_t j = 0; j < want.size() && match; ++j)
            match = toks[i + j].surface == want[j] && detail::is_outside(c, toks[i + j]);
          if (match) unlabeled[*surface].push_back({splits[k].name, k, si, i, i + want.size(), std::nullopt});
        }
      }
    }
  }

  std::vector<LintFinding> findings;
  for (const auto& [surface, plain] : unlabeled) {
    const auto& labeled = entities.at(surface).occurrences;
    std::set<std::string> labeled_in, plain_in;
    for (const auto& l : labeled) {
      for (const auto& p : plain) {
        if (l.split_index == p.split_index) continue;
        labeled_in.insert(l.split);
        plain_in.insert(p.split);
      }
    }
    if (labeled_in.empty()) continue;
    std::set<std::string> tags;
    for (const auto& l : labeled) tags.insert(*l.tag);
    LintFinding f{LintKind::UnlabeledElsewhere, surface, labeled, {}};
    f.occurrences.insert(f.occurrences.end(), plain.begin(), plain.end());
    f.note = "labeled " + detail::join_names(tags) + " in " + detail::join_names(labeled_in) + " but unlabeled in " +
             detail::join_names(plain_in);
    findings.push_back(std::move(f));
  }
  detail::sort_findings(findings);
  return findings;
}

/// The same surface carries different entity tags in different splits.
inline std::vector<LintFinding> lint_tag_conflict(const std::vector<Split>& splits) {
  detail::require_splits(splits);
  std::vector<LintFinding> findings;
  for (const auto& [surface, e] : detail::index_entities(splits)) {
    const auto& occ = e.occurrences;
    bool conflict = false;
    for (std::size_t a = 0; a < occ.size() && !conflict; ++a)
      for (std::size_t b = a + 1; b < occ.size() && !conflict; ++b)
        conflict = occ[a].split_index != occ[b].split_index && occ[a].tag != occ[b].tag;
    if (!conflict) continue;
    std::set<std::string> tags;
    for (const auto& o : occ) tags.insert(*o.tag);
    findings.push_back({LintKind::TagConflict, surface, occ, "tagged " + detail::join_names(tags) + " across splits"});
  }
  detail::sort_findings(findings);
  return findings;
}

/// A designator opens a span in one split and sits just outside a same-tag
/// span in another. Pairs explained by capitalization belong to
/// lint_case_conflict instead.
inline std::vector<LintFinding> lint_range_conflict(const std::vector<Split>& splits) {
  detail::require_splits(splits);
  auto findings = detail::designator_conflicts(
      splits, LintKind::RangeConflict,
      [](const detail::DesignatorUse& in, const detail::DesignatorUse& out) { return !(in.upper && !out.upper); });
  detail::sort_findings(findings);
  return findings;
}

/// A capitalized designator opens a span in one split while its lowercase
/// form precedes a same-tag span in another.
inline std::vector<LintFinding> lint_case_conflict(const std::vector<Split>& splits) {
  detail::require_splits(splits);
  auto findings = detail::designator_conflicts(
      splits, LintKind::CaseConflict,
      [](const detail::DesignatorUse& in, const detail::DesignatorUse& out) { return in.upper && !out.upper; });
  detail::sort_findings(findings);
  return findings;
}

/// All four checks, merged and sorted by kind, surface, first occurrence.
inline std::vector<LintFinding> lint(const std::vector<Split>& splits) {
  std::vector<LintFinding> all;
  for (auto* check : {&lint_unlabeled, &lint_tag_conflict, &lint_range_conflict, &lint_case_conflict}) {
    auto part = check(splits);
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  detail::sort_findings(all);
  return all;
}

}  // namespace nererr
