#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/report.hpp"
#include "parsign/graph6.hpp"
#include "parsign/parity_analysis.hpp"
#include "parsign/rna_solver.hpp"
#include "support/oracle.hpp"

namespace parsign::cli {
namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Invocation r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string fixture(const std::string& name) { return std::string(PARSIGN_FIXTURE_DIR) + "/" + name; }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(CliRna, InlineCompleteGraph) {
  const Invocation r = invoke({"rna", "--input", "g6:C~", "--method", "bnb", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const auto rows = read_rna_json(in);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].graph6, "C~");
  EXPECT_EQ(rows[0].sigma, 4);
  EXPECT_EQ(rows[0].bound_trivial, 4);
  EXPECT_EQ(rows[0].bound_main, 4);
}

TEST(CliRna, InlinePathBruteforce) {
  const Invocation r = invoke({"rna", "-i", "g6:Bg", "-m", "bruteforce", "-f", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const auto rows = read_rna_csv(in);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].sigma, 1);
  EXPECT_EQ(rows[0].n, 3);
  EXPECT_EQ(rows[0].m, 2);
  EXPECT_EQ(rows[0].method, RnaMethod::bruteforce);
}

TEST(CliRna, TableHasHeaderAndOneRowPerGraph) {
  const Invocation r = invoke({"rna", "-i", testing::corpus_file(4)});
  ASSERT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 7U);
  EXPECT_EQ(lines[0].rfind("graph6", 0), 0U);
}

TEST(CliRna, Errors) {
  const Invocation missing = invoke({"rna", "--input", "/nonexistent/graphs.g6"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("/nonexistent/graphs.g6"), std::string::npos);

  EXPECT_EQ(invoke({"rna", "--input", "g6:C!"}).code, 2);
  EXPECT_EQ(invoke({"rna", "--input", "g6:C~", "--method", "annealing"}).code, 2);
  EXPECT_EQ(invoke({"rna", "--input", "g6:C~", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"rna"}).code, 2);

  const Invocation malformed = invoke({"rna", "--input", fixture("malformed.g6")});
  EXPECT_EQ(malformed.code, 2);
  EXPECT_NE(malformed.err.find("line 3"), std::string::npos) << malformed.err;
}

TEST(CliRna, DescentNeverBelowExact) {
  for (int n = 2; n <= 7; ++n) {
    const std::string file = testing::corpus_file(n);
    const Invocation exact = invoke({"rna", "-i", file, "-m", "bnb", "-f", "json"});
    const Invocation local = invoke({"rna", "-i", file, "-m", "descent", "-f", "json", "--seed", "9", "--restarts", "3"});
    ASSERT_EQ(exact.code, 0);
    ASSERT_EQ(local.code, 0);
    std::istringstream a(exact.out);
    std::istringstream b(local.out);
    const auto exact_rows = read_rna_json(a);
    const auto local_rows = read_rna_json(b);
    ASSERT_EQ(exact_rows.size(), local_rows.size());
    for (std::size_t i = 0; i < exact_rows.size(); ++i) {
      ASSERT_EQ(exact_rows[i].graph6, local_rows[i].graph6);
      ASSERT_GE(local_rows[i].sigma, exact_rows[i].sigma) << local_rows[i].graph6;
      const Graph g = parse_graph6(local_rows[i].graph6);
      ASSERT_EQ(cut_size(g, parse_partition(local_rows[i].witness, n).v1()), local_rows[i].sigma);
    }
  }
}

TEST(CliRna, DescentIsReproducible) {
  const std::vector<std::string> args{"rna", "-i", testing::corpus_file(7), "-m", "descent", "-f", "csv",
                                      "--seed", "123", "--restarts", "2"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(CliRna, DefaultDescentStartsFromLowHalf) {
  // P4 from {0,1}|{2,3} is already optimal, so no swap is taken.
  const Invocation r = invoke({"rna", "-i", "g6:Ch", "-m", "descent", "-f", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  const auto rows = read_rna_json(in);
  ASSERT_EQ(rows.size(), 1U);
  EXPECT_EQ(rows[0].witness, "v1=0,1;v2=2,3");
  EXPECT_EQ(rows[0].sigma, 1);
}

// Every machine format must read back into exactly the rows the library
// produces for the same graphs.
TEST(CliFormats, RnaRoundTrip) {
  for (const RnaMethod method : {RnaMethod::bruteforce, RnaMethod::bnb, RnaMethod::descent}) {
    std::vector<RnaRow> expected;
    for (int n = 1; n <= 6; ++n) {
      std::ifstream in(testing::corpus_file(n));
      Graph6Reader reader(in);
      while (auto line = reader.next()) {
        const Graph& g = line->graph;
        const RnaResult r = method == RnaMethod::bruteforce ? rna_exact_bruteforce(g)
                            : method == RnaMethod::bnb
                                ? rna_exact_bnb(g)
                                : rna_switch_descent(g, ParityPartition::from_side(g.order(),
                                                                                    VertexSet::range((g.order() + 1) / 2)));
        expected.push_back(make_rna_row(line->text, g, r));
      }
    }
    std::vector<RnaRow> from_csv;
    std::vector<RnaRow> from_json;
    for (int n = 1; n <= 6; ++n) {
      const std::string m{method_name(method)};
      std::istringstream csv(invoke({"rna", "-i", testing::corpus_file(n), "-m", m, "-f", "csv"}).out);
      std::istringstream json(invoke({"rna", "-i", testing::corpus_file(n), "-m", m, "-f", "json"}).out);
      for (RnaRow& row : read_rna_csv(csv)) from_csv.push_back(std::move(row));
      for (RnaRow& row : read_rna_json(json)) from_json.push_back(std::move(row));
    }
    EXPECT_EQ(from_csv, expected) << method_name(method);
    EXPECT_EQ(from_json, expected) << method_name(method);
  }
}

TEST(CliFormats, SpectrumRoundTrip) {
  std::vector<SpectrumRow> expected;
  std::ifstream in(testing::corpus_file(6));
  Graph6Reader reader(in);
  while (auto line = reader.next()) {
    expected.push_back({line->text, line->graph.order(), line->graph.size(), spectrum(line->graph).values});
  }
  std::istringstream csv(invoke({"spectrum", "-i", testing::corpus_file(6), "-f", "csv"}).out);
  std::istringstream json(invoke({"spectrum", "-i", testing::corpus_file(6), "-f", "json"}).out);
  EXPECT_EQ(read_spectrum_csv(csv), expected);
  EXPECT_EQ(read_spectrum_json(json), expected);
}

TEST(CliFormats, ClassifyRoundTrip) {
  const Invocation csv_run = invoke({"classify", "-i", testing::corpus_file(5), "-f", "csv"});
  const Invocation json_run = invoke({"classify", "-i", testing::corpus_file(5), "-f", "json"});
  ASSERT_EQ(csv_run.code, 0);
  std::istringstream csv(csv_run.out);
  std::istringstream json(json_run.out);
  const auto rows = read_classify_csv(csv);
  EXPECT_EQ(read_classify_json(json), rows);
  ASSERT_EQ(rows.size(), 21U);
  for (const ClassifyRow& row : rows) {
    const Graph g = parse_graph6(row.graph6);
    EXPECT_EQ(row.tag, classify_family(g));
    for (FamilyTag t : row.memberships) EXPECT_TRUE(in_family(g, t));
  }
}

TEST(CliFormats, VerifyJsonlRoundTrip) {
  std::vector<VerifyRow> expected;
  CorpusOptions options;
  options.observer = [&](const CheckRecord& r) { expected.push_back(make_verify_row(r)); };
  run_corpus(std::filesystem::path(testing::corpus_file(5)), parse_checks("all"), options);

  const Invocation r = invoke({"verify", "--checks", "all", "-i", testing::corpus_file(5), "--format", "jsonl"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  EXPECT_EQ(read_verify_json(in), expected);
  EXPECT_EQ(expected.size(), 21U * 5U);
}

TEST(CliFormats, CsvSplitting) {
  EXPECT_EQ(split_csv("a,\"b,c\",d"), (std::vector<std::string>{"a", "b,c", "d"}));
  EXPECT_EQ(split_csv("\"x\"\"y\","), (std::vector<std::string>{"x\"y", ""}));
  EXPECT_THROW(split_csv("\"open"), std::runtime_error);
}

TEST(CliFormats, ParsersRejectGarbage) {
  std::istringstream no_header("C~,4,6,4,bnb,\"v1=0,1;v2=2,3\",4,4\n");
  EXPECT_THROW(read_rna_csv(no_header), std::runtime_error);
  std::istringstream bad_json("{\"graph6\": \"C~\"\n");
  EXPECT_THROW(read_rna_json(bad_json), std::runtime_error);
  std::istringstream bad_pass(
      R"({"position":0,"graph6":"@","check":"conjecture2","outcome":"fail","pass":true,"expected":"","actual":"","witness":null})"
      "\n");
  EXPECT_THROW(read_verify_json(bad_pass), std::runtime_error);
}

TEST(CliVerify, EnumerateFiveAllPass) {
  const Invocation r = invoke({"verify", "--enumerate", "5", "--checks", "all"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("graphs read: 772"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, PlantedWrongExpectationExitsOne) {
  const Invocation r = invoke({"verify", "--checks", "annotated_rna", "-i", fixture("planted_rna.g6")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("counterexample [annotated_rna] #1 Bw expected sigma=1, got sigma=2"), std::string::npos) << r.out;

  const Invocation jsonl =
      invoke({"verify", "--checks", "annotated_rna", "-i", fixture("planted_rna.g6"), "-f", "jsonl"});
  EXPECT_EQ(jsonl.code, 1);
  std::istringstream in(jsonl.out);
  const auto rows = read_verify_json(in);
  ASSERT_EQ(rows.size(), 3U);  // the unannotated line has no expectation
  EXPECT_EQ(rows[1].graph6, "Bw");
  EXPECT_EQ(rows[1].outcome, Outcome::fail);
  EXPECT_EQ(rows[0].outcome, Outcome::pass);
  EXPECT_EQ(rows[2].outcome, Outcome::pass);
}

TEST(CliVerify, TheoremChecksPassOnPlantedFixture) {
  // The wrong annotation only concerns annotated_rna.
  EXPECT_EQ(invoke({"verify", "--checks", "all", "-i", fixture("planted_rna.g6")}).code, 0);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--checks", "bogus", "--enumerate", "3"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--checks", "all"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--enumerate", "3", "-i", testing::corpus_file(3)}).code, 2);
  EXPECT_EQ(invoke({"verify", "--enumerate", "8"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--enumerate", "3", "--format", "csv"}).code, 2);
  EXPECT_EQ(invoke({"verify", "-i", fixture("malformed.g6")}).code, 2);
  EXPECT_EQ(invoke({"verify", "-i", "/nonexistent.g6"}).code, 2);
}

TEST(CliVerify, MaxOrderSkips) {
  const Invocation r = invoke({"verify", "-i", testing::corpus_file(5), "--max-order", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("skipped (order): 21"), std::string::npos) << r.out;
}

TEST(CliGen, Examples) {
  EXPECT_EQ(invoke({"gen", "--family", "star", "--n", "4"}).out, "Cs\n");
  EXPECT_EQ(invoke({"gen", "--family", "complete", "--n", "4"}).out, "C~\n");
  EXPECT_EQ(invoke({"gen", "--family", "path", "--n", "3", "--edges"}).out, "3: 0-1 1-2\n");
  EXPECT_EQ(invoke({"gen", "--family", "complete_minus_triangle", "--n", "2"}).code, 2);
  EXPECT_EQ(invoke({"gen", "--family", "wheel", "--n", "5"}).code, 2);
  EXPECT_EQ(invoke({"gen", "--family", "star"}).code, 2);
}

TEST(CliConvert, GraphSixIsIdentityOnCorpus) {
  for (int n = 1; n <= 6; ++n) {
    std::ifstream in(testing::corpus_file(n));
    std::stringstream original;
    original << in.rdbuf();
    EXPECT_EQ(invoke({"convert", "-i", testing::corpus_file(n), "--to", "g6"}).out, original.str()) << n;
  }
}

TEST(CliConvert, EdgeLists) {
  const Invocation r = invoke({"convert", "-i", testing::corpus_file(3), "--to", "edges"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3: 0-2 1-2\n3: 0-1 0-2 1-2\n");
  EXPECT_EQ(invoke({"convert", "-i", testing::corpus_file(3), "--to", "dot"}).code, 2);
}

TEST(CliMisc, HelpAndNoSubcommand) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

}  // namespace
}  // namespace parsign::cli
