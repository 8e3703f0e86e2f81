#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "parsign/rna_solver.hpp"
#include "parsign/verifier.hpp"

namespace parsign::cli {

/// One graph's rna result as printed by `parsign rna`.
struct RnaRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  int sigma = 0;
  RnaMethod method = RnaMethod::bnb;
  std::string witness;  // "v1=..;v2=.."
  int bound_trivial = 0;
  int bound_main = 0;

  friend bool operator==(const RnaRow&, const RnaRow&) = default;
};

RnaRow make_rna_row(const std::string& graph6, const Graph& g, const RnaResult& r);

struct SpectrumRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::vector<int> values;

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

struct ClassifyRow {
  std::string graph6;
  int n = 0;
  int m = 0;
  FamilyTag tag = FamilyTag::other;
  std::vector<FamilyTag> memberships;  // every family the graph belongs to

  friend bool operator==(const ClassifyRow&, const ClassifyRow&) = default;
};

/// One (graph, check) line of `parsign verify --format jsonl`.
struct VerifyRow {
  std::size_t position = 0;
  std::string graph6;
  Check check = Check::conjecture2;
  Outcome outcome = Outcome::pass;
  std::string expected;
  std::string actual;
  std::optional<std::string> witness;

  friend bool operator==(const VerifyRow&, const VerifyRow&) = default;
};

VerifyRow make_verify_row(const CheckRecord& record);

// Writers. Tables are for people; csv and json (one object per line) are
// meant to be read back with the parsers below.
void write_rna_table(std::ostream& out, const std::vector<RnaRow>& rows);
void write_rna_csv_header(std::ostream& out);
void write_rna_csv(std::ostream& out, const RnaRow& row);
void write_rna_json(std::ostream& out, const RnaRow& row);

void write_spectrum_table(std::ostream& out, const std::vector<SpectrumRow>& rows);
void write_spectrum_csv_header(std::ostream& out);
void write_spectrum_csv(std::ostream& out, const SpectrumRow& row);
void write_spectrum_json(std::ostream& out, const SpectrumRow& row);

void write_classify_table(std::ostream& out, const std::vector<ClassifyRow>& rows);
void write_classify_csv_header(std::ostream& out);
void write_classify_csv(std::ostream& out, const ClassifyRow& row);
void write_classify_json(std::ostream& out, const ClassifyRow& row);

void write_verify_json(std::ostream& out, const VerifyRow& row);

// Parsers; all throw std::runtime_error on malformed input.
std::vector<RnaRow> read_rna_csv(std::istream& in);
std::vector<RnaRow> read_rna_json(std::istream& in);
std::vector<SpectrumRow> read_spectrum_csv(std::istream& in);
std::vector<SpectrumRow> read_spectrum_json(std::istream& in);
std::vector<ClassifyRow> read_classify_csv(std::istream& in);
std::vector<ClassifyRow> read_classify_json(std::istream& in);
std::vector<VerifyRow> read_verify_json(std::istream& in);

/// Splits one csv record; fields may be double-quoted with "" escapes.
std::vector<std::string> split_csv(const std::string& line);

}  // namespace parsign::cli
