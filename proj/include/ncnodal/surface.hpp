#pragma once

#include <utility>
#include <vector>

#include "ncnodal/quiver.hpp"

namespace ncnodal {

struct SurfaceModel {
  int genus = 0;
  int boundary = 0;
  int euler = 0;
  /// (marked point count m_i, winding number w_i), sorted ascending.
  std::vector<std::pair<int, int>> boundaries;
};

/// Marked-surface invariants of a connected gentle presentation of finite
/// global dimension: chi = |Q0| - |Q1|, one boundary component per theta
/// cycle with m_i marked points and winding m_i - n_i.
SurfaceModel surface_model(const Presentation& p);

}  // namespace ncnodal
