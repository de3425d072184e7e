#include "ncnodal/surface.hpp"

#include <algorithm>

#include "ncnodal/ag.hpp"

namespace ncnodal {

SurfaceModel surface_model(const Presentation& p) {
  if (!p.quiver.connected())
    throw ValidationError("surface model needs a connected quiver");
  AGInvariant inv = ag_invariant(p);  // gates gentleness
  if (!inv.special_pairs.empty())
    throw ValidationError(
        "surface model needs finite global dimension (forbidden cycle found)");

  SurfaceModel s;
  s.euler = static_cast<int>(p.quiver.vertices().size()) -
            static_cast<int>(p.quiver.arrows().size());
  s.boundary = static_cast<int>(inv.cycles.size());
  int twice_genus = 2 - s.boundary - s.euler;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw ValidationError("inconsistent surface data: 2g = " +
                          std::to_string(twice_genus));
  s.genus = twice_genus / 2;
  for (const auto& [m, n] : inv.cycles) s.boundaries.emplace_back(m, m - n);
  std::sort(s.boundaries.begin(), s.boundaries.end());
  return s;
}

}  // namespace ncnodal
