#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parsign/graph.hpp"
#include "parsign/signed_graph.hpp"

namespace parsign {

enum class FamilyTag {
  complete,
  complete_minus_e,
  complete_minus_2e,
  complete_minus_P2,
  complete_minus_triangle,
  star,
  join_p2_independent,
  other,
};

std::string_view tag_name(FamilyTag t);

/// Structural membership test; a graph can belong to several families
/// (K_{1,3} is also K_4 minus a triangle, P_3 is also K_3 - e).
/// Complete-minus families are read off the complement's edges; star and
/// join_p2_independent off the degree sequence. `other` never matches.
bool in_family(const Graph& g, FamilyTag t);

/// First tag, in declaration order, that the graph belongs to.
FamilyTag classify_family(const Graph& g);

enum class Check {
  conjecture2,
  trivial_bound,
  main_bound,
  degree_balance_lemma,
  complement_theorem,
  annotated_rna,
};

std::string_view check_name(Check c);

/// Comma-separated check names or "all" (the five theorem checks).
/// Throws std::invalid_argument naming the first unknown check.
std::vector<Check> parse_checks(std::string_view list);

enum class Outcome { pass, fail, info };

std::string_view outcome_name(Outcome o);

struct CheckResult {
  Outcome outcome = Outcome::pass;
  std::string expected;
  std::string actual;
  std::optional<ParityPartition> witness;
};

// Each theorem check throws std::invalid_argument on a disconnected graph.

/// Spectrum is a singleton iff G is an even-order star or complete.
CheckResult verify_conjecture2(const Graph& g);

/// sigma <= b = ceil(n/2) floor(n/2), with sigma = b, b-1, b-2 exactly for
/// K_n, K_n - e and {K_n - triangle, K_n - 2e, K_n - P_2}.
CheckResult verify_trivial_bound(const Graph& g);

/// sigma <= floor((2m + n) / 4) with equality exactly for K_n, K_n - e and
/// K_n - triangle. For n < 4 the values are reported with Outcome::info.
CheckResult verify_main_bound(const Graph& g);

/// Any degree-balanced parity signature forces K_{1,n-1} or K_n (n even),
/// P_2 v I_{n-2} or K_n (n odd).
CheckResult verify_degree_balance_lemma(const Graph& g);

/// sigma(G) + sigma(complement) <= b, with equality exactly for even stars
/// and complete graphs. The complement may be disconnected.
CheckResult verify_complement_theorem(const Graph& g);

/// Compares sigma with an expectation given as "rna=K" in `annotation`.
/// Returns std::nullopt when the annotation carries no expectation.
std::optional<CheckResult> verify_annotated_rna(const Graph& g, std::string_view annotation);

// ---------------------------------------------------------------------------
// Corpus runs

/// Connected labeled graphs of every order 1..n.
struct EnumeratedCorpus {
  int max_order = 1;
};

using CorpusSource = std::variant<std::filesystem::path, EnumeratedCorpus>;

struct Failure {
  std::size_t position = 0;  // 0-based index among the corpus graphs
  std::string graph6;
  std::string expected;
  std::string actual;
  std::optional<ParityPartition> witness;
};

struct VerificationReport {
  Check check = Check::conjecture2;
  std::size_t graphs_tested = 0;
  std::size_t informational = 0;  // graphs reported without a verdict
  std::vector<Failure> failures;
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// One (graph, check) outcome, streamed to the observer in corpus order.
struct CheckRecord {
  std::size_t position = 0;
  std::string graph6;
  Check check = Check::conjecture2;
  CheckResult result;
};

struct CorpusOptions {
  int max_order = kMaxVertices;
  std::function<void(const CheckRecord&)> observer;
};

struct CorpusSummary {
  std::vector<VerificationReport> reports;  // in the order of `checks`
  std::size_t graphs_read = 0;
  std::size_t skipped_order = 0;         // above max_order
  std::size_t skipped_disconnected = 0;  // outside the theorems' hypothesis
};

/// Runs every check on every corpus graph. Throws Graph6Error (with the line
/// number) on a malformed line and std::runtime_error on an unreadable file.
CorpusSummary run_corpus(const CorpusSource& source, const std::vector<Check>& checks,
                         const CorpusOptions& options = {});

/// Runs one check on one graph; std::nullopt when the check does not apply
/// (annotated_rna without an annotation).
std::optional<CheckResult> run_check(Check c, const Graph& g, std::string_view annotation = {});

/// Fixed-width table; timings only when `with_timing`.
void print_summary(std::ostream& out, const CorpusSummary& summary, bool with_timing);

}  // namespace parsign
