#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mgdom/domination.hpp"
#include "mgdom/families.hpp"
#include "mgdom/theorems.hpp"

namespace mgdom::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kInputError = 2,
  kExhausted = 3,
};

/// Node budget default, honouring MGDOM_BUDGET.
std::uint64_t default_node_budget();

struct SweepRow {
  FamilySpec spec;
  std::string family;
  std::string params;
  Parameter parameter = Parameter::GammaTc;
  int middle_order = 0;
  int solver_value = 0;
  FormulaResult formula;
  std::string match;  // yes | no | bounds_ok | disputed | n/a
  double elapsed_ms = 0;
};

struct SweepRequest {
  Family family = Family::Cycle;
  int first_lo = 0, first_hi = 0;
  int second_lo = 0, second_hi = 0;
  std::uint64_t seed_lo = 0, seed_hi = 0;
  Parameter parameter = Parameter::GammaTc;
  std::optional<Corona> corona;
  SolverOptions solver;
};

/// Instances in row order. Throws BadParameter for empty or invalid ranges.
std::vector<FamilySpec> sweep_instances(const SweepRequest& req);
SweepRow sweep_one(const FamilySpec& spec, const SweepRequest& req);
std::vector<SweepRow> run_sweep(const SweepRequest& req);

extern const char* const kSweepHeader;
/// One CSV line without newline. elapsed_ms is "-" unless `timing`.
std::string format_row(const SweepRow& row, bool timing);

/// Full command line entry point; returns the process exit code.
int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mgdom::cli
