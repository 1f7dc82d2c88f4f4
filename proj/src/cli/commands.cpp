#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mgdom/cli.hpp"
#include "mgdom/edge_list.hpp"
#include "mgdom/error.hpp"
#include "mgdom/middle.hpp"

namespace mgdom::cli {

using nlohmann::json;

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("MGDOM_BUDGET")) {
    std::uint64_t value = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) return value;
  }
  return SolverOptions{}.node_budget;
}

namespace {

struct SolverFlags {
  std::string method = "auto";
  std::uint64_t budget = 0;
  double time_budget = 0;
  bool parallel = false;
  bool any_witness = false;

  void attach(CLI::App* app) {
    app->add_option("--method", method, "auto | iterative-deepening | complement-search | brute-force")
        ->check(CLI::IsMember({"auto", "iterative-deepening", "complement-search", "brute-force"}));
    app->add_option("--budget", budget, "Node budget (default 1e8 or $MGDOM_BUDGET)");
    app->add_option("--time-budget", time_budget, "Wall-clock limit in seconds");
    app->add_flag("--parallel", parallel, "Split each search level across threads");
    app->add_flag("--any-witness", any_witness, "Stop at the first minimum set found");
  }

  SolverOptions options() const {
    SolverOptions o;
    o.method = *method_from_name(method);
    o.node_budget = budget > 0 ? budget : default_node_budget();
    if (time_budget > 0) o.time_budget_seconds = time_budget;
    o.parallel = parallel;
    o.canonical_witness = !any_witness;
    return o;
  }
};

Parameter parse_parameter(const std::string& s) {
  return s == "gamma-t" ? Parameter::GammaT : Parameter::GammaTc;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw Error(ErrorCode::BadParameter, "bad range '" + text + "'");
    return v;
  };
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(std::string_view(text).substr(0, dots)),
          to_int(std::string_view(text).substr(dots + 2))};
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// Plain graphs accept "3" or "v3"; middle graphs take "v3" / "m2_5".
VertexSet parse_set(const std::string& text, const Graph& g, const MiddleGraph* mg) {
  VertexSet s(g.order());
  for (const auto& tok : split_labels(text)) {
    if (mg != nullptr) {
      const auto label = parse_label(tok);
      if (!label) throw Error(ErrorCode::UnknownLabel, "cannot parse label '" + tok + "'");
      s.insert(mg->resolve(*label));
      continue;
    }
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == 'v') digits.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || v < 1 || v > g.order())
      throw Error(ErrorCode::UnknownLabel, "no vertex '" + tok + "'");
    s.insert(v);
  }
  return s;
}

std::vector<std::string> format_set(const VertexSet& s, const MiddleGraph* mg) {
  if (mg != nullptr) return mg->format(s);
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back("v" + std::to_string(v)); });
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

int do_verify(const Graph& base, bool middle, Parameter param, const std::string& labels,
              bool as_json, std::ostream& out) {
  std::optional<MiddleGraph> mg;
  if (middle) mg = middle_graph(base);
  const Graph& g = mg ? mg->graph() : base;
  const VertexSet d = parse_set(labels, g, mg ? &*mg : nullptr);
  const VerificationReport r = verify_tocd(g, d);
  const bool valid = param == Parameter::GammaT ? r.total_dominating : r.valid_tocd;
  if (as_json) {
    json j{{"parameter", to_string(param)},
           {"size", d.size()},
           {"total_dominating", r.total_dominating},
           {"undominated", format_set(r.undominated, mg ? &*mg : nullptr)},
           {"outer_connected", r.outer_connected},
           {"outside_components", r.outside_component_count},
           {"valid", valid}};
    out << j.dump() << '\n';
  } else {
    out << "size: " << d.size() << '\n'
        << "total_dominating: " << (r.total_dominating ? "yes" : "no") << '\n';
    if (!r.total_dominating)
      out << "undominated: " << join(format_set(r.undominated, mg ? &*mg : nullptr)) << '\n';
    out << "outer_connected: " << (r.outer_connected ? "yes" : "no") << " ("
        << r.outside_component_count << " outside components)\n"
        << "valid: " << (valid ? "yes" : "no") << '\n';
  }
  return valid ? kOk : kInvalid;
}

int do_compute(const Graph& base, bool middle, Parameter param, const SolverOptions& opts,
               bool as_json, std::ostream& out) {
  std::optional<MiddleGraph> mg;
  if (middle) mg = middle_graph(base);
  const Graph& g = mg ? mg->graph() : base;
  const auto start = std::chrono::steady_clock::now();
  const SolveReport rep = solve(g, param, opts);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const auto witness = format_set(rep.witness, mg ? &*mg : nullptr);
  if (as_json) {
    json j;
    j["graph"] = {{"n", base.order()}, {"m", base.size()}};
    if (mg) j["middle"] = {{"order", g.order()}, {"size", g.size()}};
    j["parameter"] = to_string(param);
    j["value"] = rep.value;
    j["witness"] = witness;
    j["method"] = to_string(rep.method_used);
    j["nodes"] = rep.nodes_explored;
    j["elapsed_ms"] = elapsed;
    out << j.dump() << '\n';
  } else {
    out << "graph: n=" << base.order() << " m=" << base.size() << '\n';
    if (mg) out << "middle: order=" << g.order() << " size=" << g.size() << '\n';
    out << to_string(param) << ": " << rep.value << '\n'
        << "witness: " << join(witness) << '\n'
        << "method: " << to_string(rep.method_used) << '\n'
        << "nodes: " << rep.nodes_explored << '\n';
  }
  return kOk;
}

json ng_json(const NGReport& r) {
  return json{{"n", r.n},
              {"m", r.m},
              {"is_tree", r.is_tree},
              {"value_g", r.value_g},
              {"value_gbar", r.value_gbar},
              {"sum", r.sum},
              {"lower", r.lower},
              {"upper", r.upper},
              {"bounds_hold", r.bounds_hold},
              {"tight_lower", r.tight_lower}};
}

FamilySpec family_spec(const std::string& name, const std::vector<int>& params,
                       std::uint64_t seed) {
  const auto fam = family_from_name(name);
  if (!fam) throw Error(ErrorCode::BadParameter, "unknown family '" + name + "'");
  if (static_cast<int>(params.size()) != family_arity(*fam))
    throw Error(ErrorCode::BadParameter, "family '" + name + "' takes " +
                                             std::to_string(family_arity(*fam)) + " parameter(s)");
  FamilySpec spec{*fam, params[0], params.size() > 1 ? params[1] : 0, seed};
  validate(spec);
  return spec;
}

std::optional<Corona> parse_corona(const std::string& s) {
  if (s == "k1") return Corona::K1;
  if (s == "p2") return Corona::P2;
  return std::nullopt;
}

}  // namespace

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total and total outer-connected domination of middle graphs"};
  app.require_subcommand(1);

  const std::vector<std::string> params{"gamma-t", "gamma-tc"};

  // compute
  auto* compute = app.add_subcommand("compute", "Exact gamma_t / gamma_tc of a graph or its middle graph");
  std::string c_input = "-";
  std::string c_param = "gamma-tc";
  bool c_middle = false;
  bool c_json = false;
  std::string c_verify;
  SolverFlags c_solver;
  compute->add_option("input", c_input, "Edge-list file, '-' for stdin");
  compute->add_option("--param", c_param)->check(CLI::IsMember(params));
  compute->add_flag("--middle", c_middle, "Work on M(G)");
  compute->add_flag("--json", c_json);
  compute->add_option("--verify", c_verify, "Check this set instead of solving");
  c_solver.attach(compute);

  // verify
  auto* verify = app.add_subcommand("verify", "Check a candidate set");
  std::string v_input = "-";
  std::string v_param = "gamma-tc";
  std::string v_set;
  bool v_middle = false;
  bool v_json = false;
  verify->add_option("input", v_input, "Edge-list file, '-' for stdin");
  verify->add_option("--set", v_set, "Labels: 'v1,m1_2' (middle) or '1,2'")->required();
  verify->add_option("--param", v_param)->check(CLI::IsMember(params));
  verify->add_flag("--middle", v_middle);
  verify->add_flag("--json", v_json);

  // family
  auto* family = app.add_subcommand("family", "Emit a family instance");
  std::string f_name;
  std::vector<int> f_params;
  std::uint64_t f_seed = 0;
  std::string f_emit = "edgelist";
  std::string f_corona;
  bool f_middle = false;
  family->add_option("name", f_name)->required();
  family->add_option("params", f_params)->required();
  family->add_option("--seed", f_seed);
  family->add_option("--emit", f_emit)->check(CLI::IsMember({"edgelist", "dot"}));
  family->add_option("--corona", f_corona)->check(CLI::IsMember({"k1", "p2"}));
  family->add_flag("--middle", f_middle, "Emit M(G) instead of G");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Solver vs closed form over a family range, as CSV");
  std::string s_family;
  std::vector<std::string> s_ranges;
  std::string s_seeds = "0";
  std::string s_param = "gamma-tc";
  std::string s_corona;
  bool s_timing = false;
  SolverFlags s_solver;
  sweep->add_option("family", s_family)->required();
  sweep->add_option("ranges", s_ranges, "lo..hi for each family parameter")->required()->expected(1, 2);
  sweep->add_option("--seeds", s_seeds, "Seed range for random families");
  sweep->add_option("--param", s_param)->check(CLI::IsMember(params));
  sweep->add_option("--corona", s_corona)->check(CLI::IsMember({"k1", "p2"}));
  sweep->add_flag("--timing", s_timing, "Fill elapsed_ms (output is then not reproducible)");
  s_solver.attach(sweep);

  // ng
  auto* ng = app.add_subcommand("ng", "Sum bounds over G and its complement, as JSON");
  std::string n_input = "-";
  SolverFlags n_solver;
  ng->add_option("input", n_input, "Edge-list file, '-' for stdin");
  n_solver.attach(ng);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (compute->parsed()) {
      const Graph g = parse_edge_list(read_input(c_input, in));
      if (!c_verify.empty())
        return do_verify(g, c_middle, parse_parameter(c_param), c_verify, c_json, out);
      return do_compute(g, c_middle, parse_parameter(c_param), c_solver.options(), c_json, out);
    }
    if (verify->parsed()) {
      const Graph g = parse_edge_list(read_input(v_input, in));
      return do_verify(g, v_middle, parse_parameter(v_param), v_set, v_json, out);
    }
    if (family->parsed()) {
      const FamilySpec spec = family_spec(f_name, f_params, f_seed);
      Graph g = generate(spec);
      if (const auto c = parse_corona(f_corona)) g = *c == Corona::K1 ? corona_k1(g) : corona_p2(g);
      if (f_middle) {
        const MiddleGraph mg = middle_graph(g);
        out << (f_emit == "dot" ? emit_dot(mg) : emit_edge_list(mg.graph()));
      } else {
        out << (f_emit == "dot" ? emit_dot(g) : emit_edge_list(g));
      }
      return kOk;
    }
    if (sweep->parsed()) {
      const auto fam = family_from_name(s_family);
      if (!fam) throw Error(ErrorCode::BadParameter, "unknown family '" + s_family + "'");
      if (static_cast<int>(s_ranges.size()) != family_arity(*fam))
        throw Error(ErrorCode::BadParameter, "family '" + s_family + "' takes " +
                                                 std::to_string(family_arity(*fam)) + " range(s)");
      SweepRequest req;
      req.family = *fam;
      std::tie(req.first_lo, req.first_hi) = parse_range(s_ranges[0]);
      if (s_ranges.size() > 1) std::tie(req.second_lo, req.second_hi) = parse_range(s_ranges[1]);
      const auto seeds = parse_range(s_seeds);
      if (seeds.first < 0) throw Error(ErrorCode::BadParameter, "seeds must be non-negative");
      req.seed_lo = static_cast<std::uint64_t>(seeds.first);
      req.seed_hi = static_cast<std::uint64_t>(seeds.second);
      req.parameter = parse_parameter(s_param);
      req.corona = parse_corona(s_corona);
      req.solver = s_solver.options();
      const auto instances = sweep_instances(req);
      out << kSweepHeader << '\n';
      for (const auto& spec : instances) out << format_row(sweep_one(spec, req), s_timing) << '\n';
      return kOk;
    }
    if (ng->parsed()) {
      const Graph g = parse_edge_list(read_input(n_input, in));
      out << ng_json(nordhaus_gaddum_audit(g, n_solver.options())).dump() << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExhausted ? kExhausted : kInputError;
  }
  return kInputError;
}

}  // namespace mgdom::cli
