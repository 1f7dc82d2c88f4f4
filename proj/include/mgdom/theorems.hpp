#pragma once

#include <optional>
#include <string>

#include "mgdom/domination.hpp"
#include "mgdom/families.hpp"
#include "mgdom/middle.hpp"

namespace mgdom {

struct FormulaResult {
  enum class Kind { Exact, Bounds, Inapplicable };

  Kind kind = Kind::Inapplicable;
  int lo = 0;  // Exact: lo == hi == value
  int hi = 0;
  std::string theorem;
  bool disputed = false;
  std::string note;

  static FormulaResult exact(int value, std::string theorem, bool disputed = false,
                             std::string note = {});
  static FormulaResult bounds(int lo, int hi, std::string theorem, std::string note = {});
  static FormulaResult inapplicable(std::string reason);

  bool is_exact() const noexcept { return kind == Kind::Exact; }
  bool is_bounds() const noexcept { return kind == Kind::Bounds; }
  bool applicable() const noexcept { return kind != Kind::Inapplicable; }
  bool admits(int value) const noexcept { return applicable() && lo <= value && value <= hi; }
  /// "11", "[6,8]" or "-".
  std::string value_string() const;
};

/// Closed form for gamma_tc(M(G)) of a named family. Throws BadParameter.
FormulaResult formula_gamma_tc_middle(const FamilySpec& spec);

enum class Corona { K1, P2 };

/// gamma_tc(M(G o K1)) or gamma_tc(M(G o P2)) for a connected base of order
/// >= 2. The P2 lower bound needs gamma_t(M(G)), computed with `opts`.
FormulaResult formula_gamma_tc_corona(const Graph& base, Corona which,
                                      const SolverOptions& opts = {});
FormulaResult formula_gamma_tc_corona(const FamilySpec& base, Corona which,
                                      const SolverOptions& opts = {});

/// Tightest bound the leaf/diameter results give for an arbitrary connected
/// graph; exact for the tree classes with a closed form.
FormulaResult bounds_gamma_tc_middle(const Graph& g);

/// gamma_t(M(G)) = ceil(2n/3) when G has a spanning path and n >= 3.
FormulaResult formula_gamma_t_middle(const Graph& g);

struct Certificate {
  MiddleGraph middle;
  VertexSet set;
  bool valid = false;
  std::string theorem;
};

/// The dominating set written down in the proof for this family, built over
/// M(generate(spec)) and checked with verify_tocd. A literal set that fails
/// the check is returned with valid == false. Throws NotTranscribed when the
/// proof gives no construction for these parameters.
Certificate certificate_for(const FamilySpec& spec);
Certificate certificate_for_corona(const FamilySpec& base, Corona which);

struct NGReport {
  int n = 0;
  int m = 0;
  bool is_tree = false;
  int value_g = 0;
  int value_gbar = 0;
  int sum = 0;
  int lower = 0;
  int upper = 0;
  bool bounds_hold = false;
  bool tight_lower = false;
};

/// gamma_tc of M(G) and M(complement G) against the sum bounds. Throws
/// ComplementDisconnected, BadParameter (n < 4 or G disconnected).
NGReport nordhaus_gaddum_audit(const Graph& g, const SolverOptions& opts = {});

}  // namespace mgdom
