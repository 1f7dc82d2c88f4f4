#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mgdom/graph.hpp"
#include "mgdom/middle.hpp"

namespace mgdom {

enum class Method { Auto, IterativeDeepening, ComplementSearch, BruteForce };
enum class Parameter { GammaT, GammaTc };

std::string_view to_string(Method m);
std::optional<Method> method_from_name(std::string_view name);
/// "gamma_t" / "gamma_tc".
std::string_view to_string(Parameter p);

struct SolverOptions {
  Method method = Method::Auto;
  /// Candidate sets tested before giving up with BudgetExhausted.
  std::uint64_t node_budget = 100'000'000;
  std::optional<double> time_budget_seconds;
  /// Return the lexicographically least minimum set.
  bool canonical_witness = true;
  bool parallel = false;
};

struct SolveReport {
  Parameter parameter = Parameter::GammaT;
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  Method method_used = Method::Auto;
  bool proven_optimal = true;
};

struct VerificationReport {
  bool total_dominating = false;
  VertexSet undominated;
  bool outer_connected = false;
  int outside_component_count = 0;
  bool valid_tocd = false;
};

/// Every vertex, members of d included, has a neighbour in d.
bool is_total_dominating(const Graph& g, const VertexSet& d);
/// G[V \ d] is connected (an empty or single-vertex outside counts).
bool is_outer_connected(const Graph& g, const VertexSet& d);
VerificationReport verify_tocd(const Graph& g, const VertexSet& d);

/// Minimum total dominating set. Throws IsolatedVertex, BudgetExhausted,
/// TooLarge (more than 64 vertices for the search methods).
SolveReport gamma_t_exact(const Graph& g, const SolverOptions& opts = {});
/// Minimum total outer-connected dominating set. Same errors.
SolveReport gamma_tc_exact(const Graph& g, const SolverOptions& opts = {});
SolveReport solve(const Graph& g, Parameter p, const SolverOptions& opts = {});

/// Spanning path test by subset dynamic programming. Throws TooLarge above
/// 24 vertices.
bool has_hamiltonian_path(const Graph& g);

/// Members every minimum set must contain because of leaves of the base
/// graph: the edge-vertex on each leaf edge, plus the leaf itself when the
/// outside is required to have at least two vertices.
VertexSet forced_members(const MiddleGraph& mg, bool complement_at_least_2);

/// The same rule on an arbitrary graph: supports of leaves, plus the leaves
/// themselves when `complement_at_least_2`.
VertexSet forced_members(const Graph& g, bool complement_at_least_2);

}  // namespace mgdom
