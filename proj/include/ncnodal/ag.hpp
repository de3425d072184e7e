#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncnodal/datum.hpp"
#include "ncnodal/quiver.hpp"

namespace ncnodal {

enum class ThreadKind { permitted, forbidden };

struct Thread {
  ThreadKind kind;
  std::vector<std::string> arrows;  // application order; empty for trivial
  std::string vertex;               // set for trivial threads

  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  std::string display() const;
};

struct ThreadSystem {
  std::vector<Thread> permitted;
  std::vector<Thread> forbidden;
  /// theta_plus[i] = index into forbidden for permitted[i]; theta_minus maps
  /// forbidden indices to permitted indices. Both bijections.
  std::vector<std::size_t> theta_plus;
  std::vector<std::size_t> theta_minus;
  /// Arrow cycles all of whose compositions lie in the ideal; their arrows
  /// belong to no forbidden thread.
  std::vector<std::vector<std::string>> forbidden_cycles;
};

/// Complete permitted/forbidden thread sets with the theta bijections.
/// Requires a gentle presentation with no relation-free cycle.
ThreadSystem threads(const Presentation& p);

struct AGInvariant {
  std::vector<std::pair<int, int>> cycles;         // kappa per theta-cycle
  std::vector<std::pair<int, int>> special_pairs;  // (0, len) per forbidden cycle
  std::map<std::pair<int, int>, int> phi;
};

/// Direct algorithm: cycle decomposition of theta = theta_plus . theta_minus
/// on the forbidden threads, plus one special pair per forbidden cycle.
AGInvariant ag_invariant(const Presentation& p);

/// Closed form on a curve datum with empty q and no reflexive elements:
/// cycles of sigma.tau on Xi weighted 2 for tied and 1 for free elements.
AGInvariant ag_closed_form(const CurveDatum& d);

/// Exact multiset equality of the two computations' phi.
bool cross_validate(const CurveDatum& d);

}  // namespace ncnodal
