#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "parsign/enumerate.hpp"
#include "parsign/families.hpp"
#include "parsign/graph6.hpp"
#include "parsign/parity_analysis.hpp"

namespace parsign::cli {

namespace {

constexpr std::string_view kInlinePrefix = "g6:";

struct InputGraph {
  std::string graph6;
  std::string trailer;
  Graph graph;
};

// Streams the graphs named by --input: a graph6 file, or "g6:S" for one
// inline graph.
void for_each_input(const std::string& input, const std::function<void(const InputGraph&)>& fn) {
  if (input.starts_with(kInlinePrefix)) {
    const std::string text = input.substr(kInlinePrefix.size());
    fn({text, {}, parse_graph6(text)});
    return;
  }
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot read '" + input + "'");
  Graph6Reader reader(in);
  while (auto line = reader.next()) fn({line->text, line->trailer, line->graph});
}

std::string edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  for (const Edge& e : g.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

ParityPartition default_start(int n) { return ParityPartition::from_side(n, VertexSet::range((n + 1) / 2)); }

// Descent from the default start, then from `restarts` random partitions
// drawn from `seed`. Keeps the first best value.
RnaResult descent_with_restarts(const Graph& g, int restarts, std::uint64_t seed) {
  const int n = g.order();
  RnaResult best = rna_switch_descent(g, default_start(n));
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int r = 0; r < restarts; ++r) {
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet side;
    for (int i = 0; i < (n + 1) / 2; ++i) side.insert(order[static_cast<std::size_t>(i)]);
    RnaResult next = rna_switch_descent(g, ParityPartition::from_side(n, side));
    next.nodes_explored += best.nodes_explored;
    if (next.value < best.value) {
      best = std::move(next);
    } else {
      best.nodes_explored = next.nodes_explored;
    }
  }
  return best;
}

enum class Format { table, csv, json };

const std::map<std::string, Format> kFormats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};

// Rows are streamed in csv/json and buffered for tables, which need widths.
template <typename Row>
class RowSink {
 public:
  RowSink(std::ostream& out, Format format, void (*header)(std::ostream&), void (*csv)(std::ostream&, const Row&),
          void (*json)(std::ostream&, const Row&), void (*table)(std::ostream&, const std::vector<Row>&))
      : out_(out), format_(format), csv_(csv), json_(json), table_(table) {
    if (format_ == Format::csv) header(out_);
  }

  void add(Row row) {
    switch (format_) {
      case Format::csv: csv_(out_, row); break;
      case Format::json: json_(out_, row); break;
      case Format::table: rows_.push_back(std::move(row)); break;
    }
  }

  void finish() {
    if (format_ == Format::table) table_(out_, rows_);
  }

 private:
  std::ostream& out_;
  Format format_;
  void (*csv_)(std::ostream&, const Row&);
  void (*json_)(std::ostream&, const Row&);
  void (*table_)(std::ostream&, const std::vector<Row>&);
  std::vector<Row> rows_;
};

struct Options {
  std::string input;
  Format format = Format::table;
  RnaMethod method = RnaMethod::bnb;
  std::uint64_t seed = 0;
  int restarts = 0;

  std::string checks = "all";
  int enumerate = 0;
  int max_order = kMaxVertices;
  bool jsonl = false;
  bool timing = false;

  std::string family;
  int n = 0;
  bool edges = false;
  std::string to = "g6";
};

RnaResult solve(const Graph& g, const Options& o) {
  switch (o.method) {
    case RnaMethod::bruteforce: return rna_exact_bruteforce(g);
    case RnaMethod::descent: return descent_with_restarts(g, o.restarts, o.seed);
    case RnaMethod::bnb: break;
  }
  return rna_exact_bnb(g);
}

int cmd_rna(const Options& o, std::ostream& out) {
  RowSink<RnaRow> sink(out, o.format, write_rna_csv_header, write_rna_csv, write_rna_json, write_rna_table);
  for_each_input(o.input, [&](const InputGraph& in) {
    const RnaResult r = solve(in.graph, o);
    sink.add(make_rna_row(in.graph6, in.graph, r));
  });
  sink.finish();
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  RowSink<SpectrumRow> sink(out, o.format, write_spectrum_csv_header, write_spectrum_csv, write_spectrum_json,
                            write_spectrum_table);
  for_each_input(o.input, [&](const InputGraph& in) {
    sink.add({in.graph6, in.graph.order(), in.graph.size(), spectrum(in.graph).values});
  });
  sink.finish();
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  RowSink<ClassifyRow> sink(out, o.format, write_classify_csv_header, write_classify_csv, write_classify_json,
                            write_classify_table);
  for_each_input(o.input, [&](const InputGraph& in) {
    ClassifyRow row{in.graph6, in.graph.order(), in.graph.size(), classify_family(in.graph), {}};
    for (FamilyTag t : {FamilyTag::complete, FamilyTag::complete_minus_e, FamilyTag::complete_minus_2e,
                        FamilyTag::complete_minus_P2, FamilyTag::complete_minus_triangle, FamilyTag::star,
                        FamilyTag::join_p2_independent}) {
      if (in_family(in.graph, t)) row.memberships.push_back(t);
    }
    sink.add(std::move(row));
  });
  sink.finish();
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<Check> checks = parse_checks(o.checks);
  CorpusOptions options;
  options.max_order = o.max_order;
  if (o.jsonl) {
    options.observer = [&out](const CheckRecord& record) { write_verify_json(out, make_verify_row(record)); };
  }
  CorpusSource source = o.enumerate > 0 ? CorpusSource{EnumeratedCorpus{o.enumerate}}
                                        : CorpusSource{std::filesystem::path(o.input)};
  const CorpusSummary summary = run_corpus(source, checks, options);
  if (!o.jsonl) print_summary(out, summary, o.timing);
  const bool ok = std::all_of(summary.reports.begin(), summary.reports.end(),
                              [](const VerificationReport& r) { return r.passed(); });
  return ok ? kExitOk : kExitCounterexample;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (!family) throw std::invalid_argument("unknown family '" + o.family + "'");
  const Graph g = generate({*family, o.n});
  out << (o.edges ? edge_list(g) : write_graph6(g)) << '\n';
  return kExitOk;
}

int cmd_convert(const Options& o, std::ostream& out) {
  for_each_input(o.input, [&](const InputGraph& in) {
    out << (o.to == "edges" ? edge_list(in.graph) : write_graph6(in.graph)) << '\n';
  });
  return kExitOk;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--input,-i", o.input, "graph6 file, or g6:<graph6> for one inline graph")->required();
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format,-f", o.format, "table, csv or json (one object per line)")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity signed graphs: rna numbers, spectra and theorem checks", "parsign"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "parsign 0.1.0");

  Options o;

  auto* rna = app.add_subcommand("rna", "rna number and witness partition per graph");
  add_input(rna, o);
  add_format(rna, o);
  const std::map<std::string, RnaMethod> methods{
      {"bruteforce", RnaMethod::bruteforce}, {"bnb", RnaMethod::bnb}, {"descent", RnaMethod::descent}};
  rna->add_option("--method,-m", o.method, "bruteforce, bnb or descent")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  rna->add_option("--seed", o.seed, "seed for descent restarts");
  rna->add_option("--restarts", o.restarts, "random descent restarts after the default start")
      ->check(CLI::NonNegativeNumber);

  auto* spec = app.add_subcommand("spectrum", "all negative-edge counts over parity signatures");
  add_input(spec, o);
  add_format(spec, o);

  auto* classify = app.add_subcommand("classify", "family of each graph");
  add_input(classify, o);
  add_format(classify, o);

  auto* verify = app.add_subcommand("verify", "run theorem checks over a corpus");
  verify->add_option("--checks,-c", o.checks, "comma-separated check names, or all");
  auto* verify_input = verify->add_option("--input,-i", o.input, "graph6 corpus file");
  auto* verify_enum = verify->add_option("--enumerate,-e", o.enumerate, "all connected labeled graphs up to order N")
                          ->check(CLI::Range(1, kMaxEnumerationOrder));
  verify_input->excludes(verify_enum);
  verify->add_option("--max-order", o.max_order, "skip corpus graphs above this order")
      ->check(CLI::Range(1, kMaxVertices));
  const std::map<std::string, bool> verify_formats{{"table", false}, {"jsonl", true}};
  verify->add_option("--format,-f", o.jsonl, "table or jsonl")
      ->transform(CLI::CheckedTransformer(verify_formats, CLI::ignore_case));
  verify->add_flag("--timing", o.timing, "show per-check timings in the table");

  auto* gen = app.add_subcommand("gen", "generate a family member");
  gen->add_option("--family", o.family, "family name")->required();
  gen->add_option("--n,-n", o.n, "order")->required();
  gen->add_flag("--edges", o.edges, "print an edge list instead of graph6");

  auto* convert = app.add_subcommand("convert", "rewrite a graph6 file");
  add_input(convert, o);
  convert->add_option("--to", o.to, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (rna->parsed()) return cmd_rna(o, out);
    if (spec->parsed()) return cmd_spectrum(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (verify->parsed()) {
      if (verify_input->count() == 0 && verify_enum->count() == 0) {
        err << "verify: one of --input or --enumerate is required\n";
        return kExitUsage;
      }
      return cmd_verify(o, out);
    }
    if (gen->parsed()) return cmd_gen(o, out);
    if (convert->parsed()) return cmd_convert(o, out);
  } catch (const std::exception& e) {
    out.flush();
    err << "parsign: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace parsign::cli
