#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mgdom/graph.hpp"

namespace mgdom {

enum class Family {
  Path,
  Cycle,
  Complete,
  Wheel,
  CompleteBipartite,
  Star,
  DoubleStar,
  Diam4Tree,
  Spider,
  Friendship,
  RandomTree,
  RandomConnected,
};

/// A named graph family instance.
///
/// `first`/`second` hold the family parameters in the order they are
/// written: Path(n), CompleteBipartite(n1, n2), DoubleStar(p, q),
/// RandomConnected(n, m). `seed` only matters for the random families.
struct FamilySpec {
  Family family = Family::Path;
  int first = 1;
  int second = 0;
  std::uint64_t seed = 0;

  static FamilySpec path(int n) { return {Family::Path, n}; }
  static FamilySpec cycle(int n) { return {Family::Cycle, n}; }
  static FamilySpec complete(int n) { return {Family::Complete, n}; }
  static FamilySpec wheel(int n) { return {Family::Wheel, n}; }
  static FamilySpec complete_bipartite(int n1, int n2) {
    return {Family::CompleteBipartite, n1, n2};
  }
  static FamilySpec star(int n) { return {Family::Star, n}; }
  static FamilySpec double_star(int p, int q) { return {Family::DoubleStar, p, q}; }
  static FamilySpec diam4_tree(int n) { return {Family::Diam4Tree, n}; }
  static FamilySpec spider(int n) { return {Family::Spider, n}; }
  static FamilySpec friendship(int n) { return {Family::Friendship, n}; }
  static FamilySpec random_tree(int n, std::uint64_t seed) {
    return {Family::RandomTree, n, 0, seed};
  }
  static FamilySpec random_connected(int n, int m, std::uint64_t seed) {
    return {Family::RandomConnected, n, m, seed};
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
/// Number of integer parameters the family takes (1 or 2).
int family_arity(Family f);
bool is_random_family(Family f);

/// "cycle(5)", "complete-bipartite(3,4)", "random-tree(7;seed=3)".
std::string to_string(const FamilySpec& spec);
/// Parameter part only: "5", "3,4", "7;seed=3".
std::string params_string(const FamilySpec& spec);

/// Throws BadParameter when the parameters are out of range.
void validate(const FamilySpec& spec);

/// Vertex layout:
///   Wheel      hub 1, rim 2..n in cycle order
///   Spider     center 1, middles 2..n+1, tips n+2..2n+1 (tip n+1+i on middle 1+i)
///   Friendship center 1, triangles {1, 2i, 2i+1}
///   DoubleStar leaves 1..p on center p+q+1, leaves p+1..p+q on center p+q+2
///   Diam4Tree  path 1-2-3-4-5, extra leaves 6..n on vertex 3
///   CompleteBipartite  side one 1..n1, side two n1+1..n1+n2
///
/// RandomTree decodes a Pruefer sequence and RandomConnected rejection-samples
/// uniform m-edge sets until connected; both draw from std::mt19937_64
/// seeded with `seed`.
Graph generate(const FamilySpec& spec);

/// Pendant vertex n+i attached to each vertex i.
Graph corona_k1(const Graph& g);
/// Path i - (n+i) - (2n+i) attached to each vertex i.
Graph corona_p2(const Graph& g);

}  // namespace mgdom
