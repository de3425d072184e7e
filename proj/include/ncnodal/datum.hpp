#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncnodal/errors.hpp"

namespace ncnodal {

// ---------------------------------------------------------------------------
// Nodal-order data (Omega, sigma, ~~, wt)
// ---------------------------------------------------------------------------

struct NodalDatum {
  std::vector<std::string> omega;                          // ordered
  std::map<std::string, std::string> sigma;                // total on omega
  std::vector<std::pair<std::string, std::string>> ties;   // sorted pairs, distinct members
  std::set<std::string> reflexives;
  /// Weight keys: plain element id, or id+"+" / id+"-" for reflexive halves.
  std::map<std::string, long long> weights;

  /// wt on Omega: reflexive elements weigh wt(w+) + wt(w-).
  long long weight_of(const std::string& elem) const;
};

enum class ElementClass { simple, reflexive, tied };

struct NodalCheck {
  bool valid = false;
  std::vector<std::string> violations;
  std::map<std::string, ElementClass> classes;
  /// Omega with reflexive elements split into halves (keys id+"+", id+"-").
  std::vector<std::string> omega_ddagger;
  /// Omega-ddagger with each tied pair fused into one key "min~max".
  std::vector<std::string> omega_tilde_ddagger;
};

NodalCheck check_nodal_datum(const NodalDatum& d);

NodalDatum parse_nodal(const std::string& text);

/// Double cyclic shift with ties k~ ~~ tau_c(k); unit weights.
NodalDatum build_cyclic_nodal(int n, int c);

/// Dihedral skew-product datum; unit weights.
NodalDatum build_dihedral_nodal(int n);

// ---------------------------------------------------------------------------
// Tame curve data (p, q, ~~) on the marked-point element set Xi
// ---------------------------------------------------------------------------

/// Canonical element keys: "x:<k>:<j>:+", "x:<k>:<j>:-", "w:<k>:<j>".
std::string x_elem(int comp, int j, int sign);
std::string w_elem(int comp, int j);

struct CurveDatum {
  std::vector<std::pair<int, int>> p_components;  // (p+, p-)
  std::vector<int> q_components;
  std::vector<std::pair<std::string, std::string>> ties;  // sorted element keys
  std::set<std::string> reflexives;

  /// Throws ValidationError on out-of-range indices or double pairings.
  void validate() const;

  bool elem_exists(const std::string& key) const;
  bool is_tied(const std::string& key) const;
  bool is_special(const std::string& key) const;
  std::optional<std::string> tie_partner(const std::string& key) const;

  /// All elements in deterministic order (components in order, + pole, then
  /// - pole, then w chain).
  std::vector<std::string> elements() const;
};

CurveDatum parse_curve(const std::string& text);
std::string render_curve(const CurveDatum& d);

struct WeightAssignment {
  /// Keys: element key, with reflexive halves under key+"+" / key+"-".
  std::map<std::string, long long> weights;
  /// Keys "p<k>" / "q<k>".
  std::map<std::string, long long> component_totals;
};

/// Exact-rational feasibility of the admissibility constraints, scaled to
/// least positive integers; nullopt iff infeasible.
std::optional<WeightAssignment> solve_admissible_weight(const CurveDatum& d);

/// Re-evaluates every point-sum equality of the admissibility system.
bool verify_weight_assignment(const CurveDatum& d, const WeightAssignment& wa);

/// Repaired sufficient condition from the admissible-datum example: every
/// point carrying a tied element also carries a non-tied one.
bool satisfies_admissible_sufficient(const CurveDatum& d);

/// Stacky cycle datum with the lcm weight formula.
std::pair<CurveDatum, WeightAssignment> build_stacky_cycle(
    const std::vector<int>& n, const std::vector<int>& c);

}  // namespace ncnodal
