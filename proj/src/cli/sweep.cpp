#include <chrono>
#include <sstream>

#include "mgdom/cli.hpp"
#include "mgdom/error.hpp"

namespace mgdom::cli {

const char* const kSweepHeader =
    "family,params,parameter,middle_order,solver_value,formula_value,theorem,match,elapsed_ms";

std::vector<FamilySpec> sweep_instances(const SweepRequest& req) {
  if (req.first_lo > req.first_hi) throw Error(ErrorCode::BadParameter, "empty parameter range");
  const bool two = family_arity(req.family) == 2;
  if (two && req.second_lo > req.second_hi)
    throw Error(ErrorCode::BadParameter, "empty second parameter range");
  const bool random = is_random_family(req.family);
  if (random && req.seed_lo > req.seed_hi) throw Error(ErrorCode::BadParameter, "empty seed range");

  std::vector<FamilySpec> out;
  for (int a = req.first_lo; a <= req.first_hi; ++a) {
    const int b_lo = two ? req.second_lo : 0;
    const int b_hi = two ? req.second_hi : 0;
    for (int b = b_lo; b <= b_hi; ++b) {
      const std::uint64_t s_hi = random ? req.seed_hi : req.seed_lo;
      for (std::uint64_t s = req.seed_lo;; ++s) {
        FamilySpec spec{req.family, a, b, random ? s : 0};
        try {
          validate(spec);
          out.push_back(spec);
        } catch (const Error& e) {
          // Random graphs with an impossible edge count are skipped, not fatal.
          if (e.code() != ErrorCode::Infeasible) throw;
        }
        if (s >= s_hi) break;
      }
    }
  }
  if (out.empty()) throw Error(ErrorCode::BadParameter, "sweep range contains no valid instance");
  return out;
}

namespace {

FormulaResult formula_for(const FamilySpec& spec, const Graph& base, const Graph& g,
                          const SweepRequest& req) {
  if (req.parameter == Parameter::GammaT) return formula_gamma_t_middle(g);
  try {
    if (req.corona) return formula_gamma_tc_corona(base, *req.corona, req.solver);
    FormulaResult f = formula_gamma_tc_middle(spec);
    if (f.applicable()) return f;
    return bounds_gamma_tc_middle(g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BadParameter) throw;
    return FormulaResult::inapplicable(e.what());
  }
}

std::string match_status(const FormulaResult& f, int value) {
  switch (f.kind) {
    case FormulaResult::Kind::Exact:
      if (f.disputed) return "disputed";
      return f.lo == value ? "yes" : "no";
    case FormulaResult::Kind::Bounds:
      return f.admits(value) ? "bounds_ok" : "no";
    case FormulaResult::Kind::Inapplicable:
      break;
  }
  return "n/a";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SweepRow sweep_one(const FamilySpec& spec, const SweepRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  const Graph base = generate(spec);
  Graph g = base;
  if (req.corona) g = *req.corona == Corona::K1 ? corona_k1(base) : corona_p2(base);
  const MiddleGraph mg = middle_graph(g);

  SweepRow row;
  row.spec = spec;
  row.family = std::string(family_name(spec.family));
  if (req.corona) row.family += *req.corona == Corona::K1 ? "+corona-k1" : "+corona-p2";
  row.params = params_string(spec);
  row.parameter = req.parameter;
  row.middle_order = mg.graph().order();
  row.solver_value = solve(mg.graph(), req.parameter, req.solver).value;
  row.formula = formula_for(spec, base, g, req);
  row.match = match_status(row.formula, row.solver_value);
  row.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<SweepRow> run_sweep(const SweepRequest& req) {
  std::vector<SweepRow> rows;
  for (const auto& spec : sweep_instances(req)) rows.push_back(sweep_one(spec, req));
  return rows;
}

std::string format_row(const SweepRow& row, bool timing) {
  std::ostringstream os;
  os << csv_field(row.family) << ',' << csv_field(row.params) << ',' << to_string(row.parameter)
     << ',' << row.middle_order << ',' << row.solver_value << ','
     << csv_field(row.formula.value_string()) << ','
     << csv_field(row.formula.applicable() ? row.formula.theorem : "-") << ',' << row.match
     << ',';
  if (timing) {
    os.setf(std::ios::fixed);
    os.precision(3);
    os << row.elapsed_ms;
  } else {
    os << '-';
  }
  return os.str();
}

}  // namespace mgdom::cli
