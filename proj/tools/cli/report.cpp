#include "cli/report.hpp"

#include <array>
#include <charconv>
#include <iomanip>
#include <stdexcept>

#include <json.hpp>

#include "parsign/signed_graph.hpp"

namespace parsign::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array kMethods{RnaMethod::bruteforce, RnaMethod::bnb, RnaMethod::descent};
constexpr std::array kTags{FamilyTag::complete,         FamilyTag::complete_minus_e,
                           FamilyTag::complete_minus_2e, FamilyTag::complete_minus_P2,
                           FamilyTag::complete_minus_triangle, FamilyTag::star,
                           FamilyTag::join_p2_independent, FamilyTag::other};
constexpr std::array kChecks{Check::conjecture2,          Check::trivial_bound,      Check::main_bound,
                             Check::degree_balance_lemma, Check::complement_theorem, Check::annotated_rna};
constexpr std::array kOutcomes{Outcome::pass, Outcome::fail, Outcome::info};

template <typename T, std::size_t N, typename NameFn>
T lookup(const std::array<T, N>& all, std::string_view name, NameFn name_of, std::string_view what) {
  for (T v : all) {
    if (name_of(v) == name) return v;
  }
  throw std::runtime_error("unknown " + std::string(what) + " '" + std::string(name) + "'");
}

RnaMethod method_from(std::string_view s) { return lookup(kMethods, s, method_name, "method"); }
FamilyTag tag_from(std::string_view s) { return lookup(kTags, s, tag_name, "family"); }
Check check_from(std::string_view s) { return lookup(kChecks, s, check_name, "check"); }
Outcome outcome_from(std::string_view s) { return lookup(kOutcomes, s, outcome_name, "outcome"); }

int to_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::runtime_error("bad integer '" + s + "'");
  return v;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <typename T, typename Fn>
std::string join(const std::vector<T>& xs, char sep, Fn fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += fmt(xs[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string spectrum_text(const std::vector<int>& values) {
  return join(values, ';', [](int v) { return std::to_string(v); });
}

std::vector<int> parse_values(const std::string& s) {
  std::vector<int> out;
  for (const std::string& part : split(s, ';')) out.push_back(to_int(part));
  return out;
}

std::string tag_list(const std::vector<FamilyTag>& tags) {
  return join(tags, ';', [](FamilyTag t) { return std::string(tag_name(t)); });
}

// Reads csv records after checking the header line.
template <typename Fn>
void for_each_record(std::istream& in, std::string_view header, std::size_t width, Fn fn) {
  std::string line;
  if (!std::getline(in, line) || line != header) throw std::runtime_error("missing csv header");
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != width) {
      throw std::runtime_error("csv line " + std::to_string(line_number) + ": expected " + std::to_string(width) +
                               " fields");
    }
    fn(fields);
  }
}

template <typename Fn>
void for_each_json(std::istream& in, Fn fn) {
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      fn(json::parse(line));
    } catch (const json::exception& e) {
      throw std::runtime_error("json line " + std::to_string(line_number) + ": " + e.what());
    }
  }
}

constexpr std::string_view kRnaHeader = "graph6,n,m,sigma,method,witness,bound_trivial,bound_main";
constexpr std::string_view kSpectrumHeader = "graph6,n,m,spectrum,min,max,singleton";
constexpr std::string_view kClassifyHeader = "graph6,n,m,family,memberships";

}  // namespace

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c != '"') {
        fields.back() += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else {
        in_quotes = false;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (in_quotes) throw std::runtime_error("unterminated quote in csv line");
  return fields;
}

RnaRow make_rna_row(const std::string& graph6, const Graph& g, const RnaResult& r) {
  return {graph6,
          g.order(),
          g.size(),
          r.value,
          r.method,
          format_partition(r.witness),
          upper_bound_trivial(g.order()),
          upper_bound_main(g.size(), g.order())};
}

VerifyRow make_verify_row(const CheckRecord& record) {
  VerifyRow row{record.position, record.graph6, record.check, record.result.outcome,
                record.result.expected, record.result.actual, std::nullopt};
  if (record.result.witness) row.witness = format_partition(*record.result.witness);
  return row;
}

// --- rna --------------------------------------------------------------------

void write_rna_table(std::ostream& out, const std::vector<RnaRow>& rows) {
  std::size_t g6 = 6;
  std::size_t wit = 7;
  for (const RnaRow& r : rows) {
    g6 = std::max(g6, r.graph6.size());
    wit = std::max(wit, r.witness.size());
  }
  out << std::left << std::setw(static_cast<int>(g6 + 2)) << "graph6" << std::right << std::setw(4) << "n"
      << std::setw(6) << "m" << std::setw(7) << "sigma" << "  " << std::left << std::setw(11) << "method"
      << std::setw(static_cast<int>(wit + 2)) << "witness" << std::right << std::setw(9) << "trivial" << std::setw(7)
      << "main" << '\n';
  for (const RnaRow& r : rows) {
    out << std::left << std::setw(static_cast<int>(g6 + 2)) << r.graph6 << std::right << std::setw(4) << r.n
        << std::setw(6) << r.m << std::setw(7) << r.sigma << "  " << std::left << std::setw(11)
        << method_name(r.method) << std::setw(static_cast<int>(wit + 2)) << r.witness << std::right << std::setw(9)
        << r.bound_trivial << std::setw(7) << r.bound_main << '\n';
  }
}

void write_rna_csv_header(std::ostream& out) { out << kRnaHeader << '\n'; }

void write_rna_csv(std::ostream& out, const RnaRow& r) {
  out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.sigma << ',' << method_name(r.method) << ','
      << quoted(r.witness) << ',' << r.bound_trivial << ',' << r.bound_main << '\n';
}

void write_rna_json(std::ostream& out, const RnaRow& r) {
  const json j{{"graph6", r.graph6},
               {"n", r.n},
               {"m", r.m},
               {"sigma", r.sigma},
               {"method", method_name(r.method)},
               {"witness", r.witness},
               {"bound_trivial", r.bound_trivial},
               {"bound_main", r.bound_main}};
  out << j.dump() << '\n';
}

std::vector<RnaRow> read_rna_csv(std::istream& in) {
  std::vector<RnaRow> rows;
  for_each_record(in, kRnaHeader, 8, [&](const std::vector<std::string>& f) {
    rows.push_back({f[0], to_int(f[1]), to_int(f[2]), to_int(f[3]), method_from(f[4]), f[5], to_int(f[6]),
                    to_int(f[7])});
  });
  return rows;
}

std::vector<RnaRow> read_rna_json(std::istream& in) {
  std::vector<RnaRow> rows;
  for_each_json(in, [&](const json& j) {
    rows.push_back({j.at("graph6").get<std::string>(), j.at("n").get<int>(), j.at("m").get<int>(),
                    j.at("sigma").get<int>(), method_from(j.at("method").get<std::string>()),
                    j.at("witness").get<std::string>(), j.at("bound_trivial").get<int>(),
                    j.at("bound_main").get<int>()});
  });
  return rows;
}

// --- spectrum ---------------------------------------------------------------

void write_spectrum_table(std::ostream& out, const std::vector<SpectrumRow>& rows) {
  std::size_t g6 = 6;
  for (const SpectrumRow& r : rows) g6 = std::max(g6, r.graph6.size());
  out << std::left << std::setw(static_cast<int>(g6 + 2)) << "graph6" << std::right << std::setw(4) << "n"
      << std::setw(6) << "m" << std::setw(6) << "min" << std::setw(6) << "max" << "  spectrum\n";
  for (const SpectrumRow& r : rows) {
    out << std::left << std::setw(static_cast<int>(g6 + 2)) << r.graph6 << std::right << std::setw(4) << r.n
        << std::setw(6) << r.m << std::setw(6) << r.values.front() << std::setw(6) << r.values.back() << "  {"
        << join(r.values, ',', [](int v) { return std::to_string(v); }) << "}\n";
  }
}

void write_spectrum_csv_header(std::ostream& out) { out << kSpectrumHeader << '\n'; }

void write_spectrum_csv(std::ostream& out, const SpectrumRow& r) {
  out << r.graph6 << ',' << r.n << ',' << r.m << ',' << spectrum_text(r.values) << ',' << r.values.front() << ','
      << r.values.back() << ',' << (r.values.size() == 1 ? "true" : "false") << '\n';
}

void write_spectrum_json(std::ostream& out, const SpectrumRow& r) {
  const json j{{"graph6", r.graph6},
               {"n", r.n},
               {"m", r.m},
               {"spectrum", r.values},
               {"min", r.values.front()},
               {"max", r.values.back()},
               {"singleton", r.values.size() == 1}};
  out << j.dump() << '\n';
}

std::vector<SpectrumRow> read_spectrum_csv(std::istream& in) {
  std::vector<SpectrumRow> rows;
  for_each_record(in, kSpectrumHeader, 7, [&](const std::vector<std::string>& f) {
    SpectrumRow row{f[0], to_int(f[1]), to_int(f[2]), parse_values(f[3])};
    if (row.values.empty()) throw std::runtime_error("empty spectrum for " + row.graph6);
    rows.push_back(std::move(row));
  });
  return rows;
}

std::vector<SpectrumRow> read_spectrum_json(std::istream& in) {
  std::vector<SpectrumRow> rows;
  for_each_json(in, [&](const json& j) {
    SpectrumRow row{j.at("graph6").get<std::string>(), j.at("n").get<int>(), j.at("m").get<int>(),
                    j.at("spectrum").get<std::vector<int>>()};
    if (row.values.empty()) throw std::runtime_error("empty spectrum for " + row.graph6);
    rows.push_back(std::move(row));
  });
  return rows;
}

// --- classify ---------------------------------------------------------------

void write_classify_table(std::ostream& out, const std::vector<ClassifyRow>& rows) {
  std::size_t g6 = 6;
  for (const ClassifyRow& r : rows) g6 = std::max(g6, r.graph6.size());
  out << std::left << std::setw(static_cast<int>(g6 + 2)) << "graph6" << std::right << std::setw(4) << "n"
      << std::setw(6) << "m" << "  " << std::left << std::setw(25) << "family" << "also\n";
  for (const ClassifyRow& r : rows) {
    std::vector<FamilyTag> others;
    for (FamilyTag t : r.memberships) {
      if (t != r.tag) others.push_back(t);
    }
    out << std::left << std::setw(static_cast<int>(g6 + 2)) << r.graph6 << std::right << std::setw(4) << r.n
        << std::setw(6) << r.m << "  " << std::left << std::setw(25) << tag_name(r.tag)
        << join(others, ',', [](FamilyTag t) { return std::string(tag_name(t)); }) << '\n';
  }
  out << std::right;
}

void write_classify_csv_header(std::ostream& out) { out << kClassifyHeader << '\n'; }

void write_classify_csv(std::ostream& out, const ClassifyRow& r) {
  out << r.graph6 << ',' << r.n << ',' << r.m << ',' << tag_name(r.tag) << ',' << tag_list(r.memberships) << '\n';
}

void write_classify_json(std::ostream& out, const ClassifyRow& r) {
  json members = json::array();
  for (FamilyTag t : r.memberships) members.push_back(tag_name(t));
  const json j{{"graph6", r.graph6}, {"n", r.n}, {"m", r.m}, {"family", tag_name(r.tag)}, {"memberships", members}};
  out << j.dump() << '\n';
}

std::vector<ClassifyRow> read_classify_csv(std::istream& in) {
  std::vector<ClassifyRow> rows;
  for_each_record(in, kClassifyHeader, 5, [&](const std::vector<std::string>& f) {
    ClassifyRow row{f[0], to_int(f[1]), to_int(f[2]), tag_from(f[3]), {}};
    for (const std::string& t : split(f[4], ';')) row.memberships.push_back(tag_from(t));
    rows.push_back(std::move(row));
  });
  return rows;
}

std::vector<ClassifyRow> read_classify_json(std::istream& in) {
  std::vector<ClassifyRow> rows;
  for_each_json(in, [&](const json& j) {
    ClassifyRow row{j.at("graph6").get<std::string>(), j.at("n").get<int>(), j.at("m").get<int>(),
                    tag_from(j.at("family").get<std::string>()), {}};
    for (const auto& t : j.at("memberships")) row.memberships.push_back(tag_from(t.get<std::string>()));
    rows.push_back(std::move(row));
  });
  return rows;
}

// --- verify -----------------------------------------------------------------

void write_verify_json(std::ostream& out, const VerifyRow& r) {
  json j{{"position", r.position},
         {"graph6", r.graph6},
         {"check", check_name(r.check)},
         {"outcome", outcome_name(r.outcome)},
         {"pass", r.outcome != Outcome::fail},
         {"expected", r.expected},
         {"actual", r.actual},
         {"witness", nullptr}};
  if (r.witness) j["witness"] = *r.witness;
  out << j.dump() << '\n';
}

std::vector<VerifyRow> read_verify_json(std::istream& in) {
  std::vector<VerifyRow> rows;
  for_each_json(in, [&](const json& j) {
    VerifyRow row{j.at("position").get<std::size_t>(),
                  j.at("graph6").get<std::string>(),
                  check_from(j.at("check").get<std::string>()),
                  outcome_from(j.at("outcome").get<std::string>()),
                  j.at("expected").get<std::string>(),
                  j.at("actual").get<std::string>(),
                  std::nullopt};
    if (j.at("pass").get<bool>() != (row.outcome != Outcome::fail)) {
      throw std::runtime_error("pass flag disagrees with outcome for " + row.graph6);
    }
    if (!j.at("witness").is_null()) row.witness = j.at("witness").get<std::string>();
    rows.push_back(std::move(row));
  });
  return rows;
}

}  // namespace parsign::cli
