#pragma once

#include <optional>
#include <vector>

#include "ncnodal/rational.hpp"

namespace ncnodal {

/// Exact rational feasibility for  A x = 0,  x_i >= 1 (all variables).
///
/// Equalities are removed by Gauss-Jordan elimination; the remaining
/// inequality system is decided by Fourier-Motzkin elimination. On success
/// returns one feasible point, chosen deterministically (each eliminated
/// variable takes the largest surviving lower bound).
class EqualityFeasibility {
 public:
  explicit EqualityFeasibility(std::size_t num_vars) : n_(num_vars) {}

  /// Adds the equation  sum coeffs[i] * x_i = 0  (coeffs sized num_vars).
  void add_equation(std::vector<Rat> coeffs);

  std::optional<std::vector<Rat>> solve() const;

 private:
  std::size_t n_;
  std::vector<std::vector<Rat>> equations_;
};

}  // namespace ncnodal
