#include "parsign/verifier.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "parsign/enumerate.hpp"
#include "parsign/graph6.hpp"
#include "parsign/parity_analysis.hpp"
#include "parsign/rna_solver.hpp"

namespace parsign {

namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 8> kTagNames{{
    {FamilyTag::complete, "complete"},
    {FamilyTag::complete_minus_e, "complete_minus_e"},
    {FamilyTag::complete_minus_2e, "complete_minus_2e"},
    {FamilyTag::complete_minus_P2, "complete_minus_P2"},
    {FamilyTag::complete_minus_triangle, "complete_minus_triangle"},
    {FamilyTag::star, "star"},
    {FamilyTag::join_p2_independent, "join_p2_independent"},
    {FamilyTag::other, "other"},
}};

constexpr std::array<std::pair<Check, std::string_view>, 6> kCheckNames{{
    {Check::conjecture2, "conjecture2"},
    {Check::trivial_bound, "trivial_bound"},
    {Check::main_bound, "main_bound"},
    {Check::degree_balance_lemma, "degree_balance_lemma"},
    {Check::complement_theorem, "complement_theorem"},
    {Check::annotated_rna, "annotated_rna"},
}};

void require_connected(const Graph& g, std::string_view check) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(check) + " requires a connected graph");
}

std::string join_values(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "}";
}

// Degree sequence helpers for the degree-based families.
bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    bool leaves = true;
    for (Vertex v = 0; v < n && leaves; ++v) leaves = v == c || g.degree(v) == 1;
    if (leaves) return true;
  }
  return false;
}

bool is_join_p2_independent(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  VertexSet hubs;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) hubs.insert(v);
  }
  // For n = 3 every vertex of K_3 has degree n - 1 = 2; any two can serve as hubs.
  if (n == 3) return g.size() == 3;
  if (hubs.size() != 2) return false;
  const VertexSet rest = g.vertices() ^ hubs;
  for (Vertex v : rest) {
    if (g.degree(v) != 2 || !(g.neighbors(v) & rest).empty()) return false;
  }
  return true;
}

bool even_star_or_complete(const Graph& g) {
  return (g.order() % 2 == 0 && in_family(g, FamilyTag::star)) || in_family(g, FamilyTag::complete);
}

}  // namespace

std::string_view tag_name(FamilyTag t) {
  for (const auto& [tag, name] : kTagNames) {
    if (tag == t) return name;
  }
  return "other";
}

bool in_family(const Graph& g, FamilyTag t) {
  if (t == FamilyTag::star) return is_star(g);
  if (t == FamilyTag::join_p2_independent) return is_join_p2_independent(g);
  if (t == FamilyTag::other) return false;

  const Graph missing = complement(g);
  const std::vector<Edge> gone = missing.edges();
  switch (t) {
    case FamilyTag::complete:
      return gone.empty();
    case FamilyTag::complete_minus_e:
      return gone.size() == 1;
    case FamilyTag::complete_minus_2e:
    case FamilyTag::complete_minus_P2: {
      if (gone.size() != 2) return false;
      const bool share = gone[0].u == gone[1].u || gone[0].u == gone[1].v || gone[0].v == gone[1].u ||
                         gone[0].v == gone[1].v;
      return share == (t == FamilyTag::complete_minus_P2);
    }
    case FamilyTag::complete_minus_triangle: {
      if (gone.size() != 3) return false;
      VertexSet ends;
      for (const Edge& e : gone) {
        ends.insert(e.u);
        ends.insert(e.v);
      }
      return ends.size() == 3;
    }
    default:
      return false;
  }
}

FamilyTag classify_family(const Graph& g) {
  for (const auto& [tag, name] : kTagNames) {
    if (in_family(g, tag)) return tag;
  }
  return FamilyTag::other;
}

std::string_view check_name(Check c) {
  for (const auto& [check, name] : kCheckNames) {
    if (check == c) return name;
  }
  return "unknown";
}

std::vector<Check> parse_checks(std::string_view list) {
  if (list == "all") {
    return {Check::conjecture2, Check::trivial_bound, Check::main_bound, Check::degree_balance_lemma,
            Check::complement_theorem};
  }
  std::vector<Check> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const std::string_view name = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    bool found = false;
    for (const auto& [check, known] : kCheckNames) {
      if (known == name) {
        found = true;
        bool dup = false;
        for (Check c : out) dup = dup || c == check;
        if (!dup) out.push_back(check);
      }
    }
    if (!found) throw std::invalid_argument("unknown check '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::info:
      return "info";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Theorem checks

CheckResult verify_conjecture2(const Graph& g) {
  require_connected(g, "conjecture2");
  const Spectrum spec = spectrum(g);
  const bool expect_singleton = even_star_or_complete(g);
  CheckResult r;
  r.expected = expect_singleton ? "singleton" : "not singleton";
  r.actual = "spectrum=" + join_values(spec.values);
  r.outcome = spec.singleton() == expect_singleton ? Outcome::pass : Outcome::fail;
  if (r.outcome == Outcome::fail && !spec.singleton()) {
    // A partition attaining the maximum shows the spread.
    for (const ParityPartition& p : parity_partitions(g.order())) {
      if (cut_size(g, p.v1()) == spec.max()) {
        r.witness = p;
        break;
      }
    }
  }
  return r;
}

CheckResult verify_trivial_bound(const Graph& g) {
  require_connected(g, "trivial_bound");
  const int b = upper_bound_trivial(g.order());
  const RnaResult rna = rna_exact_bruteforce(g);
  const int s = rna.value;
  CheckResult r;
  r.actual = "sigma=" + std::to_string(s);
  bool ok = false;
  if (in_family(g, FamilyTag::complete)) {
    r.expected = "sigma=" + std::to_string(b);
    ok = s == b;
  } else if (in_family(g, FamilyTag::complete_minus_e)) {
    r.expected = "sigma=" + std::to_string(b - 1);
    ok = s == b - 1;
  } else if (in_family(g, FamilyTag::complete_minus_triangle) || in_family(g, FamilyTag::complete_minus_2e) ||
             in_family(g, FamilyTag::complete_minus_P2)) {
    r.expected = "sigma=" + std::to_string(b - 2);
    ok = s == b - 2;
  } else {
    r.expected = "sigma<=" + std::to_string(b - 3);
    ok = s <= b - 3;
  }
  r.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) r.witness = rna.witness;
  return r;
}

CheckResult verify_main_bound(const Graph& g) {
  require_connected(g, "main_bound");
  const int u = upper_bound_main(g.size(), g.order());
  const RnaResult rna = rna_exact_bruteforce(g);
  const int s = rna.value;
  CheckResult r;
  r.actual = "sigma=" + std::to_string(s);
  if (g.order() < 4) {
    r.outcome = Outcome::info;
    r.expected = "bound=" + std::to_string(u);
    r.witness = rna.witness;
    return r;
  }
  const bool equality_family = in_family(g, FamilyTag::complete) || in_family(g, FamilyTag::complete_minus_e) ||
                               in_family(g, FamilyTag::complete_minus_triangle);
  r.expected = (equality_family ? "sigma=" : "sigma<") + std::to_string(u);
  const bool ok = equality_family ? s == u : s < u;
  r.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) r.witness = rna.witness;
  return r;
}

CheckResult verify_degree_balance_lemma(const Graph& g) {
  require_connected(g, "degree_balance_lemma");
  const bool even = g.order() % 2 == 0;
  const bool allowed = in_family(g, FamilyTag::complete) ||
                       in_family(g, even ? FamilyTag::star : FamilyTag::join_p2_independent);
  int balanced = 0;
  std::optional<ParityPartition> first_balanced;
  ParityPartitions gen(g.order());
  while (auto p = gen.next()) {
    if (is_degree_balanced(g, *p)) {
      ++balanced;
      if (!first_balanced) first_balanced = *p;
    }
  }
  CheckResult r;
  r.expected = allowed ? "any" : "no degree-balanced partition";
  r.actual = "degree-balanced partitions=" + std::to_string(balanced);
  r.outcome = allowed || balanced == 0 ? Outcome::pass : Outcome::fail;
  if (r.outcome == Outcome::fail) r.witness = first_balanced;
  return r;
}

CheckResult verify_complement_theorem(const Graph& g) {
  require_connected(g, "complement_theorem");
  const int b = upper_bound_trivial(g.order());
  const RnaResult own = rna_exact_bruteforce(g);
  const int other = rna_exact_bruteforce(complement(g)).value;
  const int sum = own.value + other;
  const bool equality = even_star_or_complete(g);
  CheckResult r;
  r.expected = (equality ? "sum=" : "sum<") + std::to_string(b);
  r.actual = "sum=" + std::to_string(own.value) + "+" + std::to_string(other) + "=" + std::to_string(sum);
  const bool ok = equality ? sum == b : sum < b;
  r.outcome = ok ? Outcome::pass : Outcome::fail;
  if (!ok) r.witness = own.witness;
  return r;
}

std::optional<CheckResult> verify_annotated_rna(const Graph& g, std::string_view annotation) {
  std::optional<int> want;
  std::size_t pos = 0;
  while (pos < annotation.size()) {
    const auto start = annotation.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = annotation.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = annotation.size();
    const std::string_view token = annotation.substr(start, end - start);
    if (token.starts_with("rna=")) {
      int value = 0;
      const auto digits = token.substr(4);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad annotation '" + std::string(token) + "'");
      }
      want = value;
    }
    pos = end;
  }
  if (!want) return std::nullopt;
  const RnaResult rna = rna_exact_bruteforce(g);
  CheckResult r;
  r.expected = "sigma=" + std::to_string(*want);
  r.actual = "sigma=" + std::to_string(rna.value);
  r.outcome = rna.value == *want ? Outcome::pass : Outcome::fail;
  r.witness = rna.witness;
  return r;
}

std::optional<CheckResult> run_check(Check c, const Graph& g, std::string_view annotation) {
  switch (c) {
    case Check::conjecture2:
      return verify_conjecture2(g);
    case Check::trivial_bound:
      return verify_trivial_bound(g);
    case Check::main_bound:
      return verify_main_bound(g);
    case Check::degree_balance_lemma:
      return verify_degree_balance_lemma(g);
    case Check::complement_theorem:
      return verify_complement_theorem(g);
    case Check::annotated_rna:
      return verify_annotated_rna(g, annotation);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Corpus runner

namespace {

class CorpusRun {
 public:
  CorpusRun(const std::vector<Check>& checks, const CorpusOptions& options) : checks_(checks), options_(options) {
    for (Check c : checks) summary_.reports.push_back(VerificationReport{c, 0, 0, {}, {}});
  }

  void visit(const Graph& g, std::string_view annotation, const std::string* text) {
    const std::size_t position = summary_.graphs_read++;
    if (g.order() > options_.max_order) {
      ++summary_.skipped_order;
      return;
    }
    if (!is_connected(g)) {
      ++summary_.skipped_disconnected;
      return;
    }
    const std::string graph6 = text ? *text : write_graph6(g);
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      VerificationReport& report = summary_.reports[i];
      const auto started = std::chrono::steady_clock::now();
      std::optional<CheckResult> result = run_check(checks_[i], g, annotation);
      report.elapsed += std::chrono::steady_clock::now() - started;
      if (!result) continue;
      if (result->outcome == Outcome::info) {
        ++report.informational;
      } else {
        ++report.graphs_tested;
        if (result->outcome == Outcome::fail) {
          report.failures.push_back(Failure{position, graph6, result->expected, result->actual, result->witness});
        }
      }
      if (options_.observer) options_.observer(CheckRecord{position, graph6, checks_[i], std::move(*result)});
    }
  }

  CorpusSummary finish() { return std::move(summary_); }

 private:
  const std::vector<Check>& checks_;
  const CorpusOptions& options_;
  CorpusSummary summary_;
};

}  // namespace

CorpusSummary run_corpus(const CorpusSource& source, const std::vector<Check>& checks, const CorpusOptions& options) {
  CorpusRun run(checks, options);
  if (const auto* path = std::get_if<std::filesystem::path>(&source)) {
    std::ifstream in(*path);
    if (!in) throw std::runtime_error("cannot read corpus file '" + path->string() + "'");
    Graph6Reader reader(in);
    while (auto line = reader.next()) run.visit(line->graph, line->trailer, &line->text);
  } else {
    const int max_order = std::get<EnumeratedCorpus>(source).max_order;
    for (int n = 1; n <= max_order; ++n) {
      ConnectedLabeledGraphs gen(n);
      while (auto g = gen.next()) run.visit(*g, {}, nullptr);
    }
  }
  return run.finish();
}

void print_summary(std::ostream& out, const CorpusSummary& summary, bool with_timing) {
  out << "graphs read: " << summary.graphs_read << "  skipped (order): " << summary.skipped_order
      << "  skipped (disconnected): " << summary.skipped_disconnected << '\n';
  out << std::left << std::setw(22) << "check" << std::right << std::setw(10) << "tested" << std::setw(8) << "info"
      << std::setw(10) << "failures" << std::setw(8) << "status";
  if (with_timing) out << std::setw(12) << "seconds";
  out << '\n';
  for (const VerificationReport& r : summary.reports) {
    out << std::left << std::setw(22) << check_name(r.check) << std::right << std::setw(10) << r.graphs_tested
        << std::setw(8) << r.informational << std::setw(10) << r.failures.size() << std::setw(8)
        << (r.passed() ? "PASS" : "FAIL");
    if (with_timing) {
      out << std::setw(12) << std::fixed << std::setprecision(3)
          << std::chrono::duration<double>(r.elapsed).count();
    }
    out << '\n';
  }
  for (const VerificationReport& r : summary.reports) {
    for (const Failure& f : r.failures) {
      out << "counterexample [" << check_name(r.check) << "] #" << f.position << ' ' << f.graph6
          << " expected " << f.expected << ", got " << f.actual;
      if (f.witness) out << " witness " << format_partition(*f.witness);
      out << '\n';
    }
  }
}

}  // namespace parsign
