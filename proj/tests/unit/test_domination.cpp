#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "mgdom/error.hpp"
#include "mgdom/families.hpp"
#include "mgdom/middle.hpp"

using namespace mgdom;

namespace {

VertexSet labels(const MiddleGraph& mg, std::initializer_list<const char*> names) {
  VertexSet s(mg.graph().order());
  for (const char* name : names) s.insert(mg.resolve(*parse_label(name)));
  return s;
}

MiddleGraph middle_of(const FamilySpec& spec) { return middle_graph(generate(spec)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("total domination check") {
  const auto p4 = middle_of(FamilySpec::path(4));
  CHECK(is_total_dominating(p4.graph(), labels(p4, {"m1_2", "m2_3", "m3_4"})));
  CHECK_FALSE(is_total_dominating(p4.graph(), labels(p4, {"v2", "v3"})));
  CHECK_FALSE(is_total_dominating(p4.graph(), VertexSet(p4.graph().order())));
}

TEST_CASE("outer connectivity check") {
  const auto p4 = middle_of(FamilySpec::path(4));
  const VertexSet d = VertexSet::full(7) - labels(p4, {"v2", "m2_3", "v3"});
  CHECK(is_outer_connected(p4.graph(), d));
  CHECK(is_outer_connected(p4.graph(), VertexSet(7)));

  const auto c4 = middle_of(FamilySpec::cycle(4));
  CHECK_FALSE(is_outer_connected(c4.graph(), labels(c4, {"m1_2", "m2_3", "m3_4", "m1_4"})));
}

TEST_CASE("verify_tocd reports") {
  const auto k4 = middle_of(FamilySpec::complete(4));
  CHECK(verify_tocd(k4.graph(), labels(k4, {"m1_2", "m2_3", "m3_4"})).valid_tocd);

  const auto c5 = middle_of(FamilySpec::cycle(5));
  const VertexSet d = VertexSet::full(10) - labels(c5, {"v1", "v2", "m1_2"});
  CHECK(d.size() == 7);
  CHECK(verify_tocd(c5.graph(), d).valid_tocd);

  const auto p4 = middle_of(FamilySpec::path(4));
  const auto r = verify_tocd(p4.graph(), labels(p4, {"m1_2", "m2_3", "m3_4"}));
  CHECK(r.total_dominating);
  CHECK(r.undominated.empty());
  CHECK_FALSE(r.outer_connected);
  CHECK(r.outside_component_count == 4);
  CHECK_FALSE(r.valid_tocd);

  const auto bad = verify_tocd(p4.graph(), labels(p4, {"v2", "v3"}));
  CHECK(bad.undominated.contains(1));
}

TEST_CASE("solver on known small values") {
  CHECK(gamma_t_exact(middle_of(FamilySpec::path(4)).graph()).value == 3);
  CHECK(gamma_t_exact(middle_of(FamilySpec::complete(5)).graph()).value == 4);
  CHECK(gamma_t_exact(middle_of(FamilySpec::path(2)).graph()).value == 2);
  CHECK(gamma_tc_exact(middle_of(FamilySpec::cycle(5)).graph()).value == 7);
  CHECK(gamma_tc_exact(middle_of(FamilySpec::complete_bipartite(2, 3)).graph()).value == 6);
  CHECK(gamma_tc_exact(middle_of(FamilySpec::friendship(2)).graph()).value == 5);
  CHECK(gamma_tc_exact(middle_of(FamilySpec::complete(4)).graph()).value == 3);
}

TEST_CASE("K4 adjudication by exhaustive search") {
  const auto k4 = middle_of(FamilySpec::complete(4));
  CHECK(oracle::gamma_tc(k4.graph()) == 3);
}

TEST_CASE("solver errors") {
  const Graph isolated = build_graph(3, {{1, 2}});
  CHECK(code_of([&] { gamma_t_exact(isolated); }) == ErrorCode::IsolatedVertex);
  CHECK(code_of([&] { gamma_tc_exact(isolated); }) == ErrorCode::IsolatedVertex);
  CHECK(code_of([&] { gamma_tc_exact(middle_of(FamilySpec::path(1)).graph()); }) ==
        ErrorCode::IsolatedVertex);

  SolverOptions tiny;
  tiny.node_budget = 3;
  CHECK(code_of([&] { gamma_tc_exact(middle_of(FamilySpec::complete(6)).graph(), tiny); }) ==
        ErrorCode::BudgetExhausted);

  CHECK(code_of([&] { gamma_t_exact(middle_of(FamilySpec::complete(12)).graph()); }) ==
        ErrorCode::TooLarge);
}

TEST_CASE("solver witness is a valid minimum and canonical") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const int m = n - 1 + static_cast<int>(seed % 4);
    const Graph g = middle_graph(generate(FamilySpec::random_connected(n, m, seed))).graph();
    CAPTURE(seed);
    for (const auto p : {Parameter::GammaT, Parameter::GammaTc}) {
      const auto rep = solve(g, p);
      const bool outer = p == Parameter::GammaTc;
      CHECK(rep.witness.size() == rep.value);
      CHECK(oracle::accepts(g, rep.witness, outer));
      CHECK(oracle::minimum(g, outer) == rep.value);

      SolverOptions brute;
      brute.method = Method::BruteForce;
      const auto ref = solve(g, p, brute);
      CHECK(ref.value == rep.value);
      CHECK(ref.witness == rep.witness);
    }
  }
}

TEST_CASE("all methods agree") {
  const FamilySpec specs[] = {FamilySpec::cycle(6),       FamilySpec::star(6),
                              FamilySpec::double_star(2, 3), FamilySpec::wheel(5),
                              FamilySpec::complete_bipartite(2, 4), FamilySpec::spider(3)};
  for (const auto& spec : specs) {
    CAPTURE(to_string(spec));
    const Graph g = middle_of(spec).graph();
    SolverOptions opts;
    const auto base = gamma_tc_exact(g, opts);
    for (const auto method : {Method::IterativeDeepening, Method::ComplementSearch}) {
      opts.method = method;
      const auto r = gamma_tc_exact(g, opts);
      CHECK(r.value == base.value);
      CHECK(r.witness == base.witness);
    }
    opts.method = Method::Auto;
    opts.parallel = true;
    const auto par = gamma_tc_exact(g, opts);
    CHECK(par.value == base.value);
    CHECK(par.witness == base.witness);

    opts.parallel = false;
    opts.canonical_witness = false;
    const auto any = gamma_tc_exact(g, opts);
    CHECK(any.value == base.value);
    CHECK(verify_tocd(g, any.witness).valid_tocd);
  }
}

TEST_CASE("values are invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = generate(FamilySpec::random_connected(6, 8, seed));
    const Graph h = relabel(g, oracle::random_permutation(6, rng));
    const auto mg = middle_graph(g).graph();
    const auto mh = middle_graph(h).graph();
    CHECK(gamma_t_exact(mg).value == gamma_t_exact(mh).value);
    CHECK(gamma_tc_exact(mg).value == gamma_tc_exact(mh).value);
  }
}

TEST_CASE("forced members") {
  const auto p4 = middle_of(FamilySpec::path(4));
  CHECK(forced_members(p4, true) == labels(p4, {"m1_2", "m3_4", "v1", "v4"}));
  CHECK(forced_members(p4, false) == labels(p4, {"m1_2", "m3_4"}));
  const auto c5 = middle_of(FamilySpec::cycle(5));
  CHECK(forced_members(c5, true).empty());
  CHECK(forced_members(c5, false).empty());
  const auto k13 = middle_of(FamilySpec::star(4));
  CHECK(forced_members(k13, false) == labels(k13, {"m1_2", "m1_3", "m1_4"}));

  // Every minimum set found by exhaustive search contains the forced members.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto mg = middle_graph(generate(FamilySpec::random_tree(6, seed)));
    const auto rep = gamma_tc_exact(mg.graph());
    const bool big_outside = mg.graph().order() - rep.value >= 2;
    CHECK(forced_members(mg, big_outside).is_subset_of(rep.witness));
    CHECK(forced_members(mg.graph(), big_outside) == forced_members(mg, big_outside));
  }
}

TEST_CASE("spanning path test") {
  CHECK(has_hamiltonian_path(generate(FamilySpec::path(7))));
  CHECK_FALSE(has_hamiltonian_path(generate(FamilySpec::star(4))));
  CHECK(has_hamiltonian_path(generate(FamilySpec::cycle(6))));
  CHECK(has_hamiltonian_path(Graph(1)));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = generate(FamilySpec::random_connected(7, 7 + static_cast<int>(seed % 5), seed));
    CHECK(has_hamiltonian_path(g) == oracle::hamiltonian_by_permutation(g));
  }
  CHECK(code_of([] { has_hamiltonian_path(generate(FamilySpec::path(25))); }) ==
        ErrorCode::TooLarge);
}
