#pragma once

#include <string>

#include "ncnodal/datum.hpp"
#include "ncnodal/quiver.hpp"
#include "ncnodal/rational.hpp"

namespace ncnodal {

/// Affine A-type quiver: two directed chains of lengths p_plus and p_minus
/// from a common source to a common sink; no relations.
Presentation build_gamma(int p_plus, int p_minus);

/// Canonical Gamma(2,2,q): two length-2 arms and one length-q arm with the
/// three-term relation v+u+ + v-u- + w_q...w_1 = 0.
Presentation build_gamma_22q(int q);

/// Glued algebra Lambda(p, q, ~~): disjoint union of the canonical blocks,
/// one glue vertex per tied pair, one blow-up pair per reflexive element.
Presentation build_lambda(const CurveDatum& d);

/// Named transcription fixtures.
Presentation build_upsilon(int n);
Presentation build_deg_tubular();
Presentation build_skew_s();
Presentation build_tubular(const Rat& lambda);

/// Glue/blow-up arrow ids used by build_lambda for a given tie index or
/// reflexive element (handy for tests and the CLI).
std::string glue_vertex_name(int pair_index);
std::string blowup_vertex_name(const std::string& elem, int sign);

}  // namespace ncnodal
