#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nererr/lint.hpp"
#include "nererr/metrics.hpp"
#include "nererr/percent.hpp"
#include "nererr/taxonomy.hpp"

namespace nererr {

enum class ReportFormat { Text, TSV, JSON };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "tsv") return ReportFormat::TSV;
  if (s == "json") return ReportFormat::JSON;
  return std::nullopt;
}

/// Which error reports to render.
enum class DirectionFilter { Gold, Prediction, Both };

namespace detail {

inline std::size_t display_width(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

/// Left-aligned columns, two spaces apart, no trailing blanks.
class TextTable {
 public:
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], display_width(r[i]));
    }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line.append(width[i] - display_width(r[i]) + 2, ' ');
      }
      out += line + '\n';
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

inline std::string tsv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += '\t';
    out += cells[i];
  }
  return out + '\n';
}

// The gold-side summary leads with the missing type; the prediction-side
// summary ends with it.
inline std::array<ErrorType, 4> summary_order(Direction d) {
  if (d == Direction::Gold)
    return {ErrorType::Missing, ErrorType::WrongTag, ErrorType::WrongRange, ErrorType::WrongRangeAndTag};
  return {ErrorType::WrongTag, ErrorType::WrongRange, ErrorType::WrongRangeAndTag, ErrorType::Missing};
}

inline std::string error_type_label(ErrorType t, Direction d) {
  switch (t) {
    case ErrorType::Missing: return d == Direction::Gold ? "No extraction" : "No annotation";
    case ErrorType::WrongTag: return "Wrong tag";
    case ErrorType::WrongRange: return "Wrong range";
    case ErrorType::WrongRangeAndTag: return "Wrong range and tag";
  }
  return "?";
}

inline std::string error_type_key(ErrorType t) {
  switch (t) {
    case ErrorType::Missing: return "missing";
    case ErrorType::WrongTag: return "wrong_tag";
    case ErrorType::WrongRange: return "wrong_range";
    case ErrorType::WrongRangeAndTag: return "wrong_range_and_tag";
  }
  return "?";
}

inline std::string direction_title(Direction d) { return d == Direction::Gold ? "gold-based" : "prediction-based"; }

inline std::vector<std::string> detail_cells(const std::string& tag, const ErrorCounts& c) {
  return {tag,
          std::to_string(c.correct),
          std::to_string(c.errors()),
          std::to_string(c.total()),
          std::to_string(c.missing),
          std::to_string(c.wrong_tag),
          std::to_string(c.wrong_range),
          std::to_string(c.wrong_range_and_tag)};
}

inline std::vector<std::string> score_cells(const std::string& tag, const Scores& s) {
  return {tag, format_percent(s.precision), format_percent(s.recall), format_percent(s.f1)};
}

}  // namespace detail

// ---- JSON encoding ---------------------------------------------------------

inline nlohmann::json to_json(const ErrorCounts& c) {
  return {{"correct", c.correct},
          {"wrong_tag", c.wrong_tag},
          {"wrong_range", c.wrong_range},
          {"wrong_range_and_tag", c.wrong_range_and_tag},
          {"missing", c.missing},
          {"errors", c.errors()},
          {"total", c.total()}};
}

/// Stable schema: direction, missing_type, per_tag, totals, rates.
inline nlohmann::json to_json(const ErrorReport& r) {
  nlohmann::json j;
  j["direction"] = direction_name(r.direction);
  j["missing_type"] = r.direction == Direction::Gold ? "no_extraction" : "no_annotation";
  j["per_tag"] = nlohmann::json::object();
  for (const auto& [tag, c] : r.per_tag) j["per_tag"][tag] = to_json(c);
  j["totals"] = to_json(r.totals);
  j["rates"] = nlohmann::json::object();
  if (r.totals.errors()) {
    for (auto t : kErrorTypes)
      j["rates"][detail::error_type_key(t)] = {{"percent", r.rate(t)},
                                               {"display", format_hundredths(r.rate_hundredths(t))}};
  }
  return j;
}

inline ErrorCounts error_counts_from_json(const nlohmann::json& j) {
  ErrorCounts c;
  c.correct = j.at("correct").get<std::size_t>();
  c.wrong_tag = j.at("wrong_tag").get<std::size_t>();
  c.wrong_range = j.at("wrong_range").get<std::size_t>();
  c.wrong_range_and_tag = j.at("wrong_range_and_tag").get<std::size_t>();
  c.missing = j.at("missing").get<std::size_t>();
  return c;
}

inline ErrorReport error_report_from_json(const nlohmann::json& j) {
  const auto d = j.at("direction").get<std::string>() == "gold" ? Direction::Gold : Direction::Prediction;
  std::map<std::string, ErrorCounts> rows;
  for (const auto& [tag, c] : j.at("per_tag").items()) rows[tag] = error_counts_from_json(c);
  return ErrorReport::from_counts(d, std::move(rows));
}

inline nlohmann::json to_json(const Scores& s) {
  return {{"correct_ne", s.counts.correct_ne},
          {"gold_ne", s.counts.gold_ne},
          {"found_ne", s.counts.found_ne},
          {"precision", s.precision},
          {"recall", s.recall},
          {"f1", s.f1},
          {"precision_display", format_percent(s.precision)},
          {"recall_display", format_percent(s.recall)},
          {"f1_display", format_percent(s.f1)}};
}

inline nlohmann::json to_json(const MetricsReport& r) {
  nlohmann::json j;
  j["per_tag"] = nlohmann::json::object();
  for (const auto& [tag, s] : r.per_tag) j["per_tag"][tag] = to_json(s);
  j["overall"] = to_json(r.overall);
  return j;
}

/// Rebuilds a report from the counts; scores are recomputed.
inline MetricsReport metrics_from_json(const nlohmann::json& j) {
  std::map<std::string, TagCounts> counts;
  for (const auto& [tag, s] : j.at("per_tag").items())
    counts[tag] = {s.at("correct_ne").get<std::size_t>(), s.at("gold_ne").get<std::size_t>(),
                   s.at("found_ne").get<std::size_t>()};
  return compute_metrics(counts);
}

inline nlohmann::json to_json(const LintFinding& f) {
  nlohmann::json occ = nlohmann::json::array();
  for (const auto& o : f.occurrences) {
    occ.push_back({{"split", o.split},
                   {"sentence", o.sentence},
                   {"start", o.start},
                   {"end", o.end},
                   {"tag", o.tag ? nlohmann::json(*o.tag) : nlohmann::json(nullptr)}});
  }
  return {{"kind", lint_kind_name(f.kind)}, {"surface", f.surface}, {"occurrences", occ}, {"note", f.note}};
}

// ---- renderers -------------------------------------------------------------

/// Precision/recall/F1 table: the micro "All" row first, then one row per tag.
inline std::string render_metrics(const MetricsReport& r, ReportFormat fmt) {
  if (fmt == ReportFormat::JSON) return to_json(r).dump(2) + '\n';
  if (fmt == ReportFormat::TSV) {
    std::string out = detail::tsv_line({"tag", "precision", "recall", "f1", "correct_ne", "gold_ne", "found_ne"});
    auto line = [&](const std::string& tag, const Scores& s) {
      auto cells = detail::score_cells(tag, s);
      cells.push_back(std::to_string(s.counts.correct_ne));
      cells.push_back(std::to_string(s.counts.gold_ne));
      cells.push_back(std::to_string(s.counts.found_ne));
      out += detail::tsv_line(cells);
    };
    line("All", r.overall);
    for (const auto& [tag, s] : r.per_tag) line(tag, s);
    return out;
  }
  detail::TextTable t;
  t.row({"Tag name", "Precision (%)", "Recall (%)", "F1 (%)"});
  t.row(detail::score_cells("All", r.overall));
  for (const auto& [tag, s] : r.per_tag) t.row(detail::score_cells(tag, s));
  return t.str();
}

/// One direction: the error-type summary followed by the per-tag detail.
inline std::string render_error_report(const ErrorReport& r, ReportFormat fmt) {
  const Direction d = r.direction;
  const auto errors = r.totals.errors();
  if (fmt == ReportFormat::JSON) return to_json(r).dump() + '\n';

  const std::string missing_header = d == Direction::Gold ? "No Extraction" : "No Annotation";
  if (fmt == ReportFormat::TSV) {
    const std::string dir = direction_name(d);
    std::string out = detail::tsv_line({"direction", "error_type", "count", "rate"});
    if (errors) {
      for (auto t : detail::summary_order(d))
        out += detail::tsv_line({dir, detail::error_type_key(t), std::to_string(r.totals.count(t)),
                                 format_hundredths(r.rate_hundredths(t))});
      out += detail::tsv_line({dir, "all_errors", std::to_string(errors), "100.00"});
    } else {
      out += detail::tsv_line({dir, "all_errors", "0", ""});
    }
    out += '\n';
    out += detail::tsv_line({"direction", "tag", "correct", "error", "total", "missing", "wrong_tag", "wrong_range",
                             "wrong_range_and_tag"});
    auto row = [&](const std::string& tag, const ErrorCounts& c) {
      auto cells = detail::detail_cells(tag, c);
      cells.insert(cells.begin(), dir);
      out += detail::tsv_line(cells);
    };
    for (const auto& [tag, c] : r.per_tag) row(tag, c);
    row("All Tags", r.totals);
    return out;
  }

  std::string out = "Error summary (" + detail::direction_title(d) + ")\n";
  detail::TextTable summary;
  summary.row({"Error type", "Number (NE)", "Rate (%)"});
  if (errors) {
    for (auto t : detail::summary_order(d))
      summary.row({detail::error_type_label(t, d), std::to_string(r.totals.count(t)),
                   format_hundredths(r.rate_hundredths(t))});
    summary.row({"All errors", std::to_string(errors), "100.00"});
  } else {
    summary.row({"All errors", "0"});
  }
  out += summary.str();
  out += "\nError detail (" + detail::direction_title(d) + ")\n";
  detail::TextTable table;
  table.row({"Tags", "Correct", "Error", "Total", missing_header, "Wrong Tag", "Wrong Range", "Wrong Range & Tag"});
  for (const auto& [tag, c] : r.per_tag) table.row(detail::detail_cells(tag, c));
  table.row(detail::detail_cells("All Tags", r.totals));
  out += table.str();
  return out;
}

inline std::string render_errors(const ErrorAnalysis& a, ReportFormat fmt,
                                 DirectionFilter filter = DirectionFilter::Both) {
  std::string out;
  if (filter != DirectionFilter::Prediction) out += render_error_report(a.gold, fmt);
  if (filter == DirectionFilter::Both && fmt != ReportFormat::JSON) out += '\n';
  if (filter != DirectionFilter::Gold) out += render_error_report(a.pred, fmt);
  return out;
}

inline std::string render_lint(const std::vector<LintFinding>& findings, ReportFormat fmt) {
  if (fmt == ReportFormat::JSON) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : findings) arr.push_back(to_json(f));
    return arr.dump(2) + '\n';
  }
  if (fmt == ReportFormat::TSV) {
    std::string out = detail::tsv_line({"kind", "surface", "split", "sentence", "start", "end", "tag"});
    for (const auto& f : findings)
      for (const auto& o : f.occurrences)
        out += detail::tsv_line({lint_kind_name(f.kind), f.surface, o.split, std::to_string(o.sentence),
                                 std::to_string(o.start), std::to_string(o.end), o.tag.value_or("")});
    return out;
  }
  if (findings.empty()) return "No findings.\n";
  std::string out;
  for (std::size_t i = 0; i < findings.size(); ++i) {
    const auto& f = findings[i];
    if (i) out += '\n';
    out += std::string("[") + lint_kind_name(f.kind) + "] " + f.surface + '\n';
    detail::TextTable t;
    for (const auto& o : f.occurrences)
      t.row({"", o.split, "sentence " + std::to_string(o.sentence),
             "tokens [" + std::to_string(o.start) + ", " + std::to_string(o.end) + ")", o.tag.value_or("-")});
    out += t.str();
    out += "  " + f.note + '\n';
  }
  return out;
}

}  // namespace nererr
