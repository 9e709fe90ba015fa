#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nererr/error.hpp"
#include "nererr/labels.hpp"
#include "nererr/span.hpp"
#include "nererr/unicode.hpp"

namespace nererr {

struct Token {
  std::string surface;
  std::string label;
  /// Extra columns (POS, chunk, ...) in file order; carried but never read.
  std::vector<std::string> columns;

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;

  std::size_t size() const noexcept { return tokens.size(); }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.label);
    return out;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  TagScheme scheme = TagScheme::IOB2;
  std::string source_name;
  /// Labels rewritten by the Lenient policy while parsing.
  std::size_t repairs = 0;

  std::size_t token_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
  }

  /// Equality is over content: sentences and scheme.
  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.scheme == b.scheme && a.sentences == b.sentences;
  }
};

struct ParseOptions {
  /// Column of the token surface. Negative values count from the end.
  int token_column = 0;
  /// Column of the label. Negative values count from the end.
  int label_column = -1;
  TagScheme scheme = TagScheme::Auto;
  RepairPolicy policy = RepairPolicy::Lenient;
  std::string source_name = "<input>";
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

inline std::optional<std::size_t> resolve_column(int column, std::size_t count) {
  const long long idx = column >= 0 ? column : static_cast<long long>(count) + column;
  if (idx < 0 || idx >= static_cast<long long>(count)) return std::nullopt;
  return static_cast<std::size_t>(idx);
}

}  // namespace detail

/// Parses CoNLL-2003-style column text.
///
/// Blank lines separate sentences (runs of them collapse), "-DOCSTART-"
/// lines are dropped, fields are split on any run of spaces or tabs. The
/// scheme is resolved once for the whole file.
inline Corpus parse_corpus(std::string_view text, const ParseOptions& opts = {}) {
  const std::string& src = opts.source_name;
  Corpus corpus;
  corpus.source_name = src;

  std::vector<std::vector<std::size_t>> token_lines;
  std::vector<Token> current;
  std::vector<std::size_t> current_lines;
  auto flush = [&] {
    if (current.empty()) return;
    corpus.sentences.push_back({std::move(current), corpus.sentences.size()});
    token_lines.push_back(std::move(current_lines));
    current.clear();
    current_lines.clear();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!valid_utf8(line)) throw MalformedLine(src, line_no, "invalid UTF-8");
    const auto fields = detail::split_fields(line);
    if (fields.empty()) {
      flush();
      continue;
    }
    if (fields.front() == "-DOCSTART-") {
      flush();
      continue;
    }
    const auto tok = detail::resolve_column(opts.token_column, fields.size());
    const auto lab = detail::resolve_column(opts.label_column, fields.size());
    if (!tok || !lab || *tok == *lab)
      throw MalformedLine(src, line_no,
                          "needs separate token and label columns, found " + std::to_string(fields.size()) +
                              " field(s)");
    Token t{std::string(fields[*tok]), std::string(fields[*lab]), {}};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i != *tok && i != *lab) t.columns.emplace_back(fields[i]);
    }
    current.push_back(std::move(t));
    current_lines.push_back(line_no);
  }
  flush();

  if (corpus.sentences.empty()) throw EmptyInput(src);

  std::vector<std::string_view> all_labels;
  for (const auto& s : corpus.sentences)
    for (const auto& t : s.tokens) all_labels.push_back(t.label);
  corpus.scheme = resolve_scheme(opts.scheme, all_labels);

  if (corpus.scheme == TagScheme::IOB2) {
    for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
      auto& sentence = corpus.sentences[si];
      auto labels = sentence.labels();
      if (opts.policy == RepairPolicy::Strict) {
        if (auto bad = first_invalid_iob2(labels))
          throw InvalidTransition(src, token_lines[si][*bad], si, *bad, labels[*bad]);
        continue;
      }
      const std::size_t fixed = repair_iob2(labels);
      if (fixed == 0) continue;
      corpus.repairs += fixed;
      for (std::size_t i = 0; i < labels.size(); ++i) sentence.tokens[i].label = std::move(labels[i]);
    }
  }
  return corpus;
}

inline Corpus parse_corpus(std::string_view text, int token_column, int label_column, TagScheme scheme,
                           RepairPolicy policy) {
  return parse_corpus(text, ParseOptions{token_column, label_column, scheme, policy, "<input>"});
}

/// Canonical form: "surface extra... label", single spaces, one blank line
/// between sentences, trailing newline.
inline std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (std::size_t si = 0; si < corpus.sentences.size(); ++si) {
    if (si) out += '\n';
    for (const auto& t : corpus.sentences[si].tokens) {
      out += t.surface;
      for (const auto& c : t.columns) {
        out += ' ';
        out += c;
      }
      out += ' ';
      out += t.label;
      out += '\n';
    }
  }
  return out;
}

struct AlignmentMismatch {
  std::size_t sentence = 0;
  /// Absent when the mismatch is a sentence or token count.
  std::optional<std::size_t> token;
  std::string reason;
};

struct Alignment {
  std::optional<AlignmentMismatch> mismatch;

  bool aligned() const noexcept { return !mismatch.has_value(); }
  explicit operator bool() const noexcept { return aligned(); }

  std::string describe() const {
    if (!mismatch) return "aligned";
    std::string s = "sentence " + std::to_string(mismatch->sentence);
    if (mismatch->token) s += ", token " + std::to_string(*mismatch->token);
    return s + ": " + mismatch->reason;
  }
};

/// Aligned iff both corpora have the same sentences with the same token
/// surfaces. Labels may differ.
inline Alignment check_alignment(const Corpus& gold, const Corpus& pred) {
  const std::size_t common = std::min(gold.sentences.size(), pred.sentences.size());
  for (std::size_t si = 0; si < common; ++si) {
    const auto& g = gold.sentences[si].tokens;
    const auto& p = pred.sentences[si].tokens;
    const std::size_t n = std::min(g.size(), p.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i].surface != p[i].surface)
        return {AlignmentMismatch{si, i, "surface '" + g[i].surface + "' vs '" + p[i].surface + "'"}};
    }
    if (g.size() != p.size())
      return {AlignmentMismatch{si, std::nullopt,
                                std::to_string(g.size()) + " vs " + std::to_string(p.size()) + " tokens"}};
  }
  if (gold.sentences.size() != pred.sentences.size())
    return {AlignmentMismatch{common, std::nullopt,
                              std::to_string(gold.sentences.size()) + " vs " +
                                  std::to_string(pred.sentences.size()) + " sentences"}};
  return {};
}

using TagAliases = std::map<std::string, std::string, std::less<>>;

/// Reads "FROM TO" pairs, one per line; blank lines and '#' comments skipped.
inline TagAliases parse_tag_aliases(std::string_view text, const std::string& source = "<aliases>") {
  TagAliases aliases;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = detail::split_fields(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) throw MalformedLine(source, line_no, "alias lines need exactly two fields");
    aliases[std::string(fields[0])] = std::string(fields[1]);
  }
  return aliases;
}

/// Renames entity types, keeping each label's B-/I- prefix.
inline Corpus apply_tag_aliases(const Corpus& corpus, const TagAliases& aliases) {
  Corpus out = corpus;
  if (aliases.empty()) return out;
  for (auto& s : out.sentences) {
    for (auto& t : s.tokens) {
      const auto d = decode_label(t.label, out.scheme);
      if (d.kind == DecodedLabel::Kind::Outside) continue;
      const auto it = aliases.find(d.type);
      if (it == aliases.end()) continue;
      const std::size_t prefix = static_cast<std::size_t>(d.type.data() - t.label.data());
      t.label = t.label.substr(0, prefix) + it->second;
    }
  }
  return out;
}

/// Entity spans of every sentence, indexed like corpus.sentences.
inline std::vector<std::vector<EntitySpan>> corpus_spans(const Corpus& corpus) {
  std::vector<std::vector<EntitySpan>> out;
  out.reserve(corpus.sentences.size());
  for (const auto& s : corpus.sentences) {
    const auto labels = s.labels();
    out.push_back(extract_spans(labels, corpus.scheme, RepairPolicy::Lenient, s.index));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Corpus load_corpus(const std::string& path, ParseOptions opts = {}) {
  opts.source_name = path;
  return parse_corpus(read_file(path), opts);
}

}  // namespace nererr
