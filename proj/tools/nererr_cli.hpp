#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nererr/nererr.hpp"

namespace nererr::cli {

/// Stable exit codes.
enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kAlignment = 3, kFindings = 4 };

struct Config {
  std::string gold_path;
  std::string pred_path;
  std::vector<std::string> splits;  // NAME=PATH
  std::string scheme = "auto";
  std::string policy = "lenient";
  int token_column = 0;
  int label_column = -1;
  std::string aliases_path;
  std::string format;
  bool json = false;
  std::string direction = "both";
  unsigned threads = 1;
};

namespace detail {

inline ParseOptions parse_options(const Config& c) {
  ParseOptions o;
  o.token_column = c.token_column;
  o.label_column = c.label_column;
  o.scheme = c.scheme == "iob2" ? TagScheme::IOB2 : c.scheme == "io" ? TagScheme::IO : TagScheme::Auto;
  o.policy = c.policy == "strict" ? RepairPolicy::Strict : RepairPolicy::Lenient;
  return o;
}

class Runner {
 public:
  Runner(const Config& c, std::ostream& err) : err_(err), options_(parse_options(c)) {
    if (!c.aliases_path.empty()) aliases_ = parse_tag_aliases(read_file(c.aliases_path), c.aliases_path);
  }

  Corpus load(const std::string& path) const {
    Corpus c = apply_tag_aliases(load_corpus(path, options_), aliases_);
    if (c.repairs) err_ << "nererr: " << path << ": repaired " << c.repairs << " label(s)\n";
    return c;
  }

 private:
  std::ostream& err_;
  ParseOptions options_;
  TagAliases aliases_;
};

}  // namespace detail

/// Entry point shared by the nererr binary and the tests. Reports go to
/// `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Span-level NER evaluation, error taxonomy and annotation consistency lint", "nererr"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--scheme", cfg.scheme, "Label scheme")
        ->check(CLI::IsMember({"auto", "iob2", "io"}))
        ->capture_default_str();
    sub->add_option("--policy", cfg.policy, "Handling of I- tags without a legal predecessor")
        ->check(CLI::IsMember({"lenient", "strict"}))
        ->capture_default_str();
    sub->add_option("--token-column", cfg.token_column, "Token column (negative counts from the end)")
        ->capture_default_str();
    sub->add_option("--label-column", cfg.label_column, "Label column (negative counts from the end)")
        ->capture_default_str();
    sub->add_option("--tag-aliases", cfg.aliases_path, "File of 'FROM TO' tag renames")->check(CLI::ExistingFile);
    sub->add_option("--format", cfg.format, "Output format (default: $NERERR_FORMAT or text)")
        ->check(CLI::IsMember({"text", "tsv", "json"}));
    sub->add_flag("--json", cfg.json, "Same as --format json");
  };
  auto add_pair = [&cfg](CLI::App* sub) {
    sub->add_option("--gold", cfg.gold_path, "Gold CoNLL file")->required()->check(CLI::ExistingFile);
    sub->add_option("--pred", cfg.pred_path, "Predicted CoNLL file")->required()->check(CLI::ExistingFile);
  };

  auto* evaluate = app.add_subcommand("evaluate", "Per-tag and micro precision, recall and F1");
  add_pair(evaluate);
  add_common(evaluate);

  auto* errors = app.add_subcommand("errors", "Classify every gold and predicted span into the error types");
  add_pair(errors);
  add_common(errors);
  errors->add_option("--direction", cfg.direction, "Which reports to print")
      ->check(CLI::IsMember({"gold", "pred", "both"}))
      ->capture_default_str();
  errors->add_option("--threads", cfg.threads, "Classification threads")->check(CLI::PositiveNumber);

  auto* lint_cmd = app.add_subcommand("lint", "Find annotation inconsistencies across corpus splits");
  lint_cmd->add_option("--split", cfg.splits, "NAME=PATH, at least twice")->required();
  add_common(lint_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<ReportFormat> fmt = ReportFormat::Text;
  if (cfg.json) {
    fmt = ReportFormat::JSON;
  } else if (!cfg.format.empty()) {
    fmt = parse_report_format(cfg.format);
  } else if (const char* env = std::getenv("NERERR_FORMAT"); env && *env) {
    fmt = parse_report_format(env);
    if (!fmt) {
      err << "nererr: NERERR_FORMAT must be text, tsv or json\n";
      return kUsage;
    }
  }

  try {
    detail::Runner runner(cfg, err);

    if (*evaluate) {
      const Corpus gold = runner.load(cfg.gold_path);
      const Corpus pred = runner.load(cfg.pred_path);
      out << render_metrics(nererr::evaluate(gold, pred), *fmt);
      return kOk;
    }

    if (*errors) {
      const Corpus gold = runner.load(cfg.gold_path);
      const Corpus pred = runner.load(cfg.pred_path);
      const auto filter = cfg.direction == "gold"   ? DirectionFilter::Gold
                          : cfg.direction == "pred" ? DirectionFilter::Prediction
                                                    : DirectionFilter::Both;
      out << render_errors(analyze(gold, pred, {cfg.threads}), *fmt, filter);
      return kOk;
    }

    std::vector<Split> splits;
    for (const auto& arg : cfg.splits) {
      const auto eq = arg.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
        err << "nererr: --split expects NAME=PATH, got '" << arg << "'\n";
        return kUsage;
      }
      splits.push_back({arg.substr(0, eq), {}});
      const std::string path = arg.substr(eq + 1);
      if (!std::ifstream(path)) {
        err << "nererr: cannot open '" << path << "'\n";
        return kUsage;
      }
      splits.back().corpus = runner.load(path);
    }
    if (splits.size() < 2) {
      err << "nererr: lint needs at least two --split arguments\n";
      return kUsage;
    }
    const auto findings = nererr::lint(splits);
    out << render_lint(findings, *fmt);
    return findings.empty() ? kOk : kFindings;
  } catch (const AlignmentError& e) {
    err << "nererr: " << e.what() << '\n';
    return kAlignment;
  } catch (const Error& e) {
    err << "nererr: " << e.what() << '\n';
    return kParse;
  }
}

}  // namespace nererr::cli
