#include <gtest/gtest.h>

#include <sstream>

#include "nererr/report.hpp"
#include "support/fixtures.hpp"

using namespace nererr;

namespace {

ErrorReport report(Direction d, std::size_t missing, std::size_t wrong_tag, std::size_t wrong_range,
                   std::size_t wrong_both) {
  return ErrorReport::from_counts(d, {{"ALL", ErrorCounts{0, wrong_tag, wrong_range, wrong_both, missing}}});
}

std::vector<std::vector<std::string>> parse_tsv(const std::string& s) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::size_t pos = 0;
    while (true) {
      const auto tab = line.find('\t', pos);
      cells.push_back(line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(RenderErrors, GoldSummaryRates) {
  const auto r = report(Direction::Gold, 142, 112, 100, 74);
  EXPECT_EQ(format_hundredths(r.rate_hundredths(ErrorType::Missing)), "33.18");
  EXPECT_EQ(format_hundredths(r.rate_hundredths(ErrorType::WrongTag)), "26.17");
  EXPECT_EQ(format_hundredths(r.rate_hundredths(ErrorType::WrongRange)), "23.36");
  EXPECT_EQ(format_hundredths(r.rate_hundredths(ErrorType::WrongRangeAndTag)), "17.29");

  const std::string text = render_error_report(r, ReportFormat::Text);
  EXPECT_EQ(text.substr(0, text.find("\n\n")),
            "Error summary (gold-based)\n"
            "Error type           Number (NE)  Rate (%)\n"
            "No extraction        142          33.18\n"
            "Wrong tag            112          26.17\n"
            "Wrong range          100          23.36\n"
            "Wrong range and tag  74           17.29\n"
            "All errors           428          100.00");
}

TEST(RenderErrors, PredictionSummaryRates) {
  const auto r = report(Direction::Prediction, 89, 113, 88, 69);
  const std::string text = render_error_report(r, ReportFormat::Text);
  EXPECT_NE(text.find("Wrong tag            113          31.48\n"), std::string::npos) << text;
  EXPECT_NE(text.find("Wrong range          88           24.51\n"), std::string::npos);
  EXPECT_NE(text.find("Wrong range and tag  69           19.22\n"), std::string::npos);
  EXPECT_NE(text.find("No annotation        89           24.79\n"), std::string::npos);
  EXPECT_NE(text.find("All errors           359          100.00\n"), std::string::npos);
  EXPECT_NE(text.find("No Annotation"), std::string::npos);
  EXPECT_EQ(text.find("No Extraction"), std::string::npos);
}

TEST(RenderErrors, ZeroErrorsOmitsRates) {
  const auto c = parse_corpus(fixtures::kTaxonomyGold);
  const auto a = analyze(c, c);
  const std::string text = render_error_report(a.gold, ReportFormat::Text);
  EXPECT_NE(text.find("All errors  0\n"), std::string::npos) << text;
  EXPECT_EQ(text.find("No extraction"), std::string::npos);
  EXPECT_EQ(to_json(a.gold)["rates"], nlohmann::json::object());
}

TEST(RenderErrors, DetailTableColumns) {
  const auto a = analyze(parse_corpus(fixtures::kTaxonomyGold), parse_corpus(fixtures::kTaxonomyPred));
  const std::string text = render_error_report(a.gold, ReportFormat::Text);
  EXPECT_NE(text.find("Tags      Correct  Error  Total  No Extraction  Wrong Tag  Wrong Range  Wrong Range & Tag\n"),
            std::string::npos)
      << text;
  EXPECT_NE(text.find("All Tags  0        4      4      1              1          1            1\n"),
            std::string::npos)
      << text;
}

TEST(RenderErrors, DirectionFilter) {
  const auto a = analyze(parse_corpus(fixtures::kTaxonomyGold), parse_corpus(fixtures::kTaxonomyPred));
  const auto gold_only = render_errors(a, ReportFormat::Text, DirectionFilter::Gold);
  const auto pred_only = render_errors(a, ReportFormat::Text, DirectionFilter::Prediction);
  EXPECT_EQ(pred_only.find("gold-based"), std::string::npos);
  EXPECT_EQ(gold_only.find("prediction-based"), std::string::npos);
  EXPECT_EQ(render_errors(a, ReportFormat::Text), gold_only + "\n" + pred_only);
}

TEST(RenderErrors, JsonRoundTrip) {
  const auto a = analyze(parse_corpus(fixtures::kTaxonomyGold), parse_corpus(fixtures::kTaxonomyPred));
  const auto lines = render_errors(a, ReportFormat::JSON);
  std::istringstream in(lines);
  std::string gold_line, pred_line;
  std::getline(in, gold_line);
  std::getline(in, pred_line);
  const auto gj = nlohmann::json::parse(gold_line);
  EXPECT_EQ(gj["direction"], "gold");
  EXPECT_EQ(gj["missing_type"], "no_extraction");
  EXPECT_EQ(gj["rates"]["missing"]["display"], "25.00");
  EXPECT_EQ(error_report_from_json(gj), a.gold);
  EXPECT_EQ(error_report_from_json(nlohmann::json::parse(pred_line)), a.pred);
}

TEST(RenderErrors, TsvCarriesCounts) {
  const auto r = report(Direction::Gold, 142, 112, 100, 74);
  const auto rows = parse_tsv(render_error_report(r, ReportFormat::TSV));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"gold", "missing", "142", "33.18"}));
  EXPECT_EQ(rows[5], (std::vector<std::string>{"gold", "all_errors", "428", "100.00"}));
  EXPECT_EQ(rows.back(), (std::vector<std::string>{"gold", "All Tags", "0", "428", "428", "142", "112", "100", "74"}));
}

TEST(RenderMetrics, TableShape) {
  const auto r = compute_metrics({{"LOC", {1, 2, 2}}, {"MISC", {1, 1, 1}}, {"PER", {3, 4, 3}}, {"ORG", {0, 1, 2}}});
  const std::string text = render_metrics(r, ReportFormat::Text);
  EXPECT_EQ(text,
            "Tag name  Precision (%)  Recall (%)  F1 (%)\n"
            "All       62.50          62.50       62.50\n"
            "LOC       50.00          50.00       50.00\n"
            "MISC      100.00         100.00      100.00\n"
            "ORG       0.00           0.00        0.00\n"
            "PER       100.00         75.00       85.71\n");
}

TEST(RenderMetrics, EmptyReport) {
  EXPECT_EQ(render_metrics(compute_metrics({}), ReportFormat::Text),
            "Tag name  Precision (%)  Recall (%)  F1 (%)\n"
            "All       0.00           0.00        0.00\n");
}

TEST(RenderMetrics, TsvAndJsonReparse) {
  const auto r = compute_metrics({{"LOC", {1198, 1377, 1367}}, {"PER", {1181, 1294, 1310}}, {"MISC", {38, 49, 39}}});
  const auto rows = parse_tsv(render_metrics(r, ReportFormat::TSV));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1][0], "All");
  for (std::size_t i = 2; i < rows.size(); ++i) {
    const auto& s = r.per_tag.at(rows[i][0]);
    EXPECT_EQ(rows[i][1], format_percent(s.precision));
    EXPECT_EQ(rows[i][2], format_percent(s.recall));
    EXPECT_EQ(rows[i][3], format_percent(s.f1));
    EXPECT_EQ(std::stoul(rows[i][4]), s.counts.correct_ne);
    EXPECT_EQ(std::stoul(rows[i][5]), s.counts.gold_ne);
    EXPECT_EQ(std::stoul(rows[i][6]), s.counts.found_ne);
  }

  const auto j = nlohmann::json::parse(render_metrics(r, ReportFormat::JSON));
  const auto back = metrics_from_json(j);
  for (const auto& [tag, s] : r.per_tag) {
    EXPECT_EQ(back.per_tag.at(tag).counts, s.counts);
    EXPECT_EQ(j["per_tag"][tag]["recall"].get<double>(), s.recall);
    EXPECT_EQ(j["per_tag"][tag]["recall_display"], format_percent(s.recall));
  }
  EXPECT_EQ(back.overall.counts, r.overall.counts);
}

TEST(RenderLint, EmptyFindings) {
  EXPECT_EQ(render_lint({}, ReportFormat::Text), "No findings.\n");
  EXPECT_EQ(nlohmann::json::parse(render_lint({}, ReportFormat::JSON)), nlohmann::json::array());
}

TEST(RenderLint, BlocksInKindOrder) {
  const std::vector<Split> s = {{"train", parse_corpus(fixtures::kLintTrain)}, {"test", parse_corpus(fixtures::kLintTest)}};
  const auto findings = lint(s);
  const std::string text = render_lint(findings, ReportFormat::Text);
  const auto u = text.find("[UnlabeledElsewhere] Sở Y_tế\n");
  const auto t = text.find("[TagConflict] Việt\n");
  const auto r = text.find("[RangeConflict] làng\n");
  const auto c = text.find("[CaseConflict] công_ty\n");
  ASSERT_NE(u, std::string::npos) << text;
  EXPECT_LT(u, t);
  EXPECT_LT(t, r);
  EXPECT_LT(r, c);
  EXPECT_NE(text.find("  train  sentence 0  tokens [1, 3)  ORG\n"), std::string::npos) << text;
  EXPECT_NE(text.find("  test   sentence 0  tokens [0, 2)  -\n"), std::string::npos) << text;

  const auto j = nlohmann::json::parse(render_lint(findings, ReportFormat::JSON));
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["kind"], "UnlabeledElsewhere");
  EXPECT_TRUE(j[0]["occurrences"][1]["tag"].is_null());
  EXPECT_EQ(j[3]["surface"], "công_ty");
}

TEST(Render, ByteDeterministic) {
  const auto a = analyze(parse_corpus(fixtures::kTaxonomyGold), parse_corpus(fixtures::kTaxonomyPred));
  for (auto fmt : {ReportFormat::Text, ReportFormat::TSV, ReportFormat::JSON})
    EXPECT_EQ(render_errors(a, fmt), render_errors(a, fmt));
}
