#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "nererr_cli.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace nererr;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "nererr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("NERERR_FORMAT"); }
  gen::TempDir dir;
};

}  // namespace

TEST_F(Cli, EvaluateIdenticalFiles) {
  const auto g = dir.write("g.conll", fixtures::kTaxonomyGold);
  const auto r = run({"evaluate", "--gold", g, "--pred", g});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("All       100.00         100.00      100.00\n"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST_F(Cli, MisalignedExitsThree) {
  const auto g = dir.write("g.conll", "a O\n\nb O\n\nc O\n");
  const auto p = dir.write("p.conll", "a O\n\nb O\n");
  const auto r = run({"evaluate", "--gold", g, "--pred", p});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("sentence 2"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"errors", "--gold", g, "--pred", p}).code, 3);
}

TEST_F(Cli, RecallRoundsHalfUp) {
  // 2994 gold entities, 2566 of them predicted exactly, nothing spurious.
  std::string gold, pred;
  for (int i = 0; i < 2994; ++i) {
    if (i) gold += '\n', pred += '\n';
    gold += "x B-PER\n";
    pred += i < 2566 ? "x B-PER\n" : "x O\n";
  }
  const auto r = run({"evaluate", "--gold", dir.write("g", gold), "--pred", dir.write("p", pred), "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("All\t100.00\t85.70\t92.30\t2566\t2994\t2566\n"), std::string::npos) << r.out;
}

TEST_F(Cli, ParseErrorsExitTwo) {
  const auto g = dir.write("g.conll", "a O\nbroken\n");
  const auto p = dir.write("p.conll", "a O\n");
  const auto r = run({"evaluate", "--gold", g, "--pred", p});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("g.conll:2"), std::string::npos) << r.err;

  const auto strict = dir.write("s.conll", "a I-PER\n");
  EXPECT_EQ(run({"evaluate", "--gold", strict, "--pred", strict, "--policy", "strict"}).code, 2);
  const auto lenient = run({"evaluate", "--gold", strict, "--pred", strict});
  EXPECT_EQ(lenient.code, 0);
  EXPECT_NE(lenient.err.find("repaired 1 label(s)"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitOne) {
  const auto g = dir.write("g.conll", "a O\n");
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"evaluate", "--gold", g}).code, 1);
  EXPECT_EQ(run({"evaluate", "--gold", g, "--pred", dir.write("missing/x", "")}).code, 1);
  EXPECT_EQ(run({"evaluate", "--gold", g, "--pred", g, "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"lint", "--split", "train=" + g}).code, 1);
  EXPECT_EQ(run({"lint", "--split", "train=" + g, "--split", "bad"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, ErrorsOnTaxonomyFixture) {
  const auto g = dir.write("g.conll", fixtures::kTaxonomyGold);
  const auto p = dir.write("p.conll", fixtures::kTaxonomyPred);
  const auto both = run({"errors", "--gold", g, "--pred", p});
  ASSERT_EQ(both.code, 0);
  EXPECT_NE(both.out.find("No extraction        1            25.00\n"), std::string::npos) << both.out;
  EXPECT_NE(both.out.find("No annotation        1            25.00\n"), std::string::npos);

  const auto pred_only = run({"errors", "--gold", g, "--pred", p, "--direction", "pred"});
  EXPECT_EQ(pred_only.out.find("gold-based"), std::string::npos);
  EXPECT_NE(pred_only.out.find("prediction-based"), std::string::npos);
}

TEST_F(Cli, FormatSelection) {
  const auto g = dir.write("g.conll", fixtures::kTaxonomyGold);
  const auto p = dir.write("p.conll", fixtures::kTaxonomyPred);
  const auto json = run({"evaluate", "--gold", g, "--pred", p, "--json"});
  EXPECT_EQ(json.out, run({"evaluate", "--gold", g, "--pred", p, "--format", "json"}).out);
  EXPECT_TRUE(nlohmann::json::accept(json.out));

  setenv("NERERR_FORMAT", "tsv", 1);
  const auto env = run({"evaluate", "--gold", g, "--pred", p});
  EXPECT_EQ(env.out.rfind("tag\tprecision", 0), 0u) << env.out;
  EXPECT_EQ(run({"evaluate", "--gold", g, "--pred", p, "--format", "text"}).out.rfind("Tag name", 0), 0u);
  setenv("NERERR_FORMAT", "yaml", 1);
  EXPECT_EQ(run({"evaluate", "--gold", g, "--pred", p}).code, 1);
  unsetenv("NERERR_FORMAT");
}

TEST_F(Cli, TagAliasesAndColumns) {
  const auto g = dir.write("g.conll", "NN a B-MISCELLANEOUS\n");
  const auto p = dir.write("p.conll", "NN a B-MISC\n");
  const auto aliases = dir.write("aliases", "MISCELLANEOUS MISC\n");
  const auto r = run({"evaluate", "--gold", g, "--pred", p, "--token-column", "1", "--tag-aliases", aliases});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("MISC      100.00"), std::string::npos) << r.out;
  EXPECT_EQ(run({"evaluate", "--gold", g, "--pred", p, "--token-column", "1"}).out.find("MISC      100.00"),
            std::string::npos);
}

TEST_F(Cli, LintExitCodes) {
  const auto train = dir.write("train.conll", fixtures::kLintTrain);
  const auto test = dir.write("test.conll", fixtures::kLintTest);
  const auto r = run({"lint", "--split", "train=" + train, "--split", "test=" + test});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("[CaseConflict] công_ty"), std::string::npos);

  const auto clean = dir.write("clean.conll", "Hà_Nội B-LOC\n");
  const auto ok = run({"lint", "--split", "a=" + clean, "--split", "b=" + clean});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "No findings.\n");
}

TEST_F(Cli, ErrorsMatchLibrary) {
  gen::Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = gen::random_pair(rng);
    const auto gtext = gen::to_conll(p.tokens, p.gold), ptext = gen::to_conll(p.tokens, p.pred);
    const auto r = run({"errors", "--gold", dir.write("g", gtext), "--pred", dir.write("p", ptext), "--json"});
    ASSERT_EQ(r.code, 0);
    const auto lib = analyze(parse_corpus(gtext), parse_corpus(ptext));
    std::istringstream lines(r.out);
    std::string gold_line, pred_line;
    std::getline(lines, gold_line);
    std::getline(lines, pred_line);
    ASSERT_EQ(error_report_from_json(nlohmann::json::parse(gold_line)), lib.gold);
    ASSERT_EQ(error_report_from_json(nlohmann::json::parse(pred_line)), lib.pred);
  }
}

TEST_F(Cli, ShippedSamples) {
  const std::string s = NERERR_SAMPLES_DIR;
  const auto r = run({"errors", "--gold", s + "/taxonomy.gold.conll", "--pred", s + "/taxonomy.pred.conll",
                      "--direction", "gold", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["totals"]["missing"], 1);
  EXPECT_EQ(j["totals"]["wrong_tag"], 1);
  EXPECT_EQ(j["totals"]["wrong_range"], 1);
  EXPECT_EQ(j["totals"]["wrong_range_and_tag"], 1);

  const auto l = run({"lint", "--split", "train=" + s + "/lint/train.conll", "--split", "test=" + s + "/lint/test.conll"});
  EXPECT_EQ(l.code, 4);
}
