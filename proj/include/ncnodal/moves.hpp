#pragma once

#include <string>
#include <vector>

#include "ncnodal/quiver.hpp"

namespace ncnodal {

/// Local tilting site in a presentation. A glue site is a valence-2 sink j
/// with incoming th1, th2 and zero relations th1*rho1 = 0 = th2*rho2; a
/// blow-up site is a pair of valence-1 sinks fed from one vertex with
/// th_plus*rho = 0 = th_minus*rho. The th arrows occur in no other relation;
/// the rho arrows may additionally occur in multi-term relations (they are
/// substituted by the rewrites).
struct FragmentMatch {
  enum class Kind { glue, blowup };
  Kind kind;

  // glue fields
  std::string j, s1, m1, s2, m2;
  std::string rho1, th1, rho2, th2;

  // blowup fields
  std::string a, b, j_plus, j_minus;
  std::string rho, th_plus, th_minus;

  std::string sort_key() const;
};

std::vector<FragmentMatch> find_fragments(const Presentation& p);

/// Glue rewrite: replaces rho', th', rho'', th'' by the four arrows through
/// j and the crossing zero relations rho'_2 rho''_1 = 0 = rho''_2 rho'_1.
Presentation modify_one(const Presentation& p, const FragmentMatch& at);

/// Blow-up rewrite: replaces rho, th+, th- by the two routes through j+ and
/// j- with the binomial rho(2)+rho(1)+ = rho(2)-rho(1)-.
Presentation modify_two(const Presentation& p, const FragmentMatch& at);

/// Removes an arrow that occurs with nonzero coefficient as a length-1 term
/// of exactly one relation, substituting it from that relation everywhere.
Presentation eliminate_redundant(const Presentation& p,
                                 const std::string& arrow_id);

}  // namespace ncnodal
