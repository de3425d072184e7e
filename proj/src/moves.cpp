#include "ncnodal/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ncnodal {

namespace {

// relation indices in which an arrow occurs, split by relation shape
struct Occurrences {
  std::vector<std::size_t> monomial;
  std::vector<std::size_t> multi;
};

std::map<std::string, Occurrences> occurrences(const Presentation& p) {
  std::map<std::string, Occurrences> occ;
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    std::set<std::string> ids;
    for (const auto& t : p.relations[ri].terms)
      for (const auto& a : t.arrows) ids.insert(a);
    for (const auto& id : ids) {
      if (p.relations[ri].monomial())
        occ[id].monomial.push_back(ri);
      else
        occ[id].multi.push_back(ri);
    }
  }
  return occ;
}

// index of the monomial relation with path exactly [first, second], if any
std::optional<std::size_t> zero_relation_at(const Presentation& p,
                                            const std::string& first,
                                            const std::string& second) {
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    const auto& r = p.relations[ri];
    if (r.monomial() && r.terms.front().arrows.size() == 2 &&
        r.terms.front().arrows[0] == first && r.terms.front().arrows[1] == second)
      return ri;
  }
  return std::nullopt;
}

std::string fresh_id(const Quiver& q, std::string base) {
  while (q.has_arrow(base) || q.has_vertex(base)) base += "_";
  return base;
}

// copies p with the given arrows dropped, new arrows appended, the given
// relation indices dropped, and `subst` applied inside every kept relation
Presentation rebuild(const Presentation& p,
                     const std::set<std::string>& dropped_arrows,
                     const std::vector<Arrow>& new_arrows,
                     const std::set<std::size_t>& dropped_relations,
                     const std::map<std::string, std::vector<std::string>>& subst,
                     std::vector<std::vector<RelTerm>> extra_relations) {
  Presentation out;
  out.name = p.name;
  for (const auto& v : p.quiver.vertices()) out.quiver.add_vertex(v);
  for (const auto& a : p.quiver.arrows())
    if (!dropped_arrows.count(a.id))
      out.quiver.add_arrow(a.id, a.source, a.target);
  for (const auto& a : new_arrows) out.quiver.add_arrow(a.id, a.source, a.target);
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    if (dropped_relations.count(ri)) continue;
    std::vector<RelTerm> terms;
    for (const auto& t : p.relations[ri].terms) {
      RelTerm nt;
      nt.coeff = t.coeff;
      for (const auto& id : t.arrows) {
        auto it = subst.find(id);
        if (it == subst.end())
          nt.arrows.push_back(id);
        else
          nt.arrows.insert(nt.arrows.end(), it->second.begin(),
                           it->second.end());
      }
      terms.push_back(std::move(nt));
    }
    out.add_relation(std::move(terms));
  }
  for (auto& terms : extra_relations) out.add_relation(std::move(terms));
  out.kind = check_gentle(out).is_gentle ? AlgebraKind::gentle
                                         : AlgebraKind::general;
  return out;
}

}  // namespace

std::string FragmentMatch::sort_key() const {
  if (kind == Kind::glue) return j;
  return std::min(j_plus, j_minus);
}

std::vector<FragmentMatch> find_fragments(const Presentation& p) {
  auto occ = occurrences(p);
  auto isolated_th = [&](const std::string& id, std::size_t rel) {
    auto it = occ.find(id);
    return it != occ.end() && it->second.multi.empty() &&
           it->second.monomial.size() == 1 && it->second.monomial[0] == rel;
  };
  auto rho_ok = [&](const std::string& id, std::size_t rel) {
    auto it = occ.find(id);
    return it != occ.end() && it->second.monomial.size() == 1 &&
           it->second.monomial[0] == rel;
  };

  std::vector<FragmentMatch> out;

  // glue sites: valence-2 sinks
  for (const auto& j : p.quiver.vertices()) {
    auto in = p.quiver.arrows_in(j);
    auto out_arrows = p.quiver.arrows_out(j);
    if (in.size() != 2 || !out_arrows.empty()) continue;
    std::sort(in.begin(), in.end());
    const std::string &th1 = in[0], &th2 = in[1];
    std::vector<std::pair<std::string, std::size_t>> c1, c2;
    for (const auto& a : p.quiver.arrows()) {
      if (auto ri = zero_relation_at(p, a.id, th1)) c1.emplace_back(a.id, *ri);
      if (auto ri = zero_relation_at(p, a.id, th2)) c2.emplace_back(a.id, *ri);
    }
    if (c1.size() != 1 || c2.size() != 1) continue;
    auto [rho1, r1v] = c1[0];
    auto [rho2, r2v] = c2[0];
    std::optional<std::size_t> r1 = r1v, r2 = r2v;
    if (rho1 == rho2) continue;
    if (!isolated_th(th1, *r1) || !isolated_th(th2, *r2)) continue;
    if (!rho_ok(rho1, *r1) || !rho_ok(rho2, *r2)) continue;
    FragmentMatch m;
    m.kind = FragmentMatch::Kind::glue;
    m.j = j;
    m.th1 = th1;
    m.th2 = th2;
    m.rho1 = rho1;
    m.rho2 = rho2;
    m.s1 = p.quiver.arrow(rho1).source;
    m.m1 = p.quiver.arrow(rho1).target;
    m.s2 = p.quiver.arrow(rho2).source;
    m.m2 = p.quiver.arrow(rho2).target;
    out.push_back(std::move(m));
  }

  // blow-up sites: pairs of valence-1 sinks over a common rho
  std::map<std::string, std::vector<std::pair<std::string, std::string>>>
      by_rho;  // rho -> [(j, th)]
  for (const auto& j : p.quiver.vertices()) {
    auto in = p.quiver.arrows_in(j);
    auto out_arrows = p.quiver.arrows_out(j);
    if (in.size() != 1 || !out_arrows.empty()) continue;
    const std::string& th = in[0];
    for (const auto& a : p.quiver.arrows()) {
      if (auto ri = zero_relation_at(p, a.id, th)) {
        if (isolated_th(th, *ri)) by_rho[a.id].emplace_back(j, th);
      }
    }
  }
  for (const auto& [rho, sites] : by_rho) {
    if (sites.size() != 2) continue;
    auto it = occ.find(rho);
    if (it == occ.end() || it->second.monomial.size() != 2) continue;
    FragmentMatch m;
    m.kind = FragmentMatch::Kind::blowup;
    m.rho = rho;
    auto [ja, tha] = sites[0];
    auto [jb, thb] = sites[1];
    if (jb < ja) { std::swap(ja, jb); std::swap(tha, thb); }
    m.j_plus = ja;
    m.th_plus = tha;
    m.j_minus = jb;
    m.th_minus = thb;
    m.a = p.quiver.arrow(rho).source;
    m.b = p.quiver.arrow(rho).target;
    out.push_back(std::move(m));
  }

  std::sort(out.begin(), out.end(),
            [](const FragmentMatch& a, const FragmentMatch& b) {
              return a.sort_key() < b.sort_key();
            });
  return out;
}

namespace {

void require_match_current(const Presentation& p, const FragmentMatch& at) {
  for (const auto& m : find_fragments(p)) {
    if (m.kind != at.kind) continue;
    if (at.kind == FragmentMatch::Kind::glue) {
      if (m.j == at.j && m.rho1 == at.rho1 && m.th1 == at.th1 &&
          m.rho2 == at.rho2 && m.th2 == at.th2)
        return;
    } else {
      if (m.j_plus == at.j_plus && m.j_minus == at.j_minus && m.rho == at.rho &&
          m.th_plus == at.th_plus && m.th_minus == at.th_minus)
        return;
    }
  }
  throw ValidationError("stale or invalid fragment match");
}

}  // namespace

Presentation modify_one(const Presentation& p, const FragmentMatch& at) {
  if (at.kind != FragmentMatch::Kind::glue)
    throw ValidationError("modify one needs a glue match");
  require_match_current(p, at);

  auto occ = occurrences(p);
  std::size_t r1 = occ.at(at.th1).monomial[0];
  std::size_t r2 = occ.at(at.th2).monomial[0];

  std::string rho1_1 = fresh_id(p.quiver, at.rho1 + "_1");
  std::string rho1_2 = fresh_id(p.quiver, at.rho1 + "_2");
  std::string rho2_1 = fresh_id(p.quiver, at.rho2 + "_1");
  std::string rho2_2 = fresh_id(p.quiver, at.rho2 + "_2");

  std::vector<Arrow> added{{rho1_1, at.s1, at.j},
                           {rho1_2, at.j, at.m1},
                           {rho2_1, at.s2, at.j},
                           {rho2_2, at.j, at.m2}};
  std::map<std::string, std::vector<std::string>> subst{
      {at.rho1, {rho1_1, rho1_2}}, {at.rho2, {rho2_1, rho2_2}}};
  std::vector<std::vector<RelTerm>> extra;
  extra.push_back({RelTerm{Rat(1), {rho2_1, rho1_2}}});  // rho'_2 rho''_1 = 0
  extra.push_back({RelTerm{Rat(1), {rho1_1, rho2_2}}});  // rho''_2 rho'_1 = 0
  return rebuild(p, {at.rho1, at.rho2, at.th1, at.th2}, added, {r1, r2}, subst,
                 std::move(extra));
}

Presentation modify_two(const Presentation& p, const FragmentMatch& at) {
  if (at.kind != FragmentMatch::Kind::blowup)
    throw ValidationError("modify two needs a blow-up match");
  require_match_current(p, at);

  auto occ = occurrences(p);
  std::set<std::size_t> dropped(occ.at(at.rho).monomial.begin(),
                                occ.at(at.rho).monomial.end());

  std::string r1p = fresh_id(p.quiver, at.rho + "_1p");
  std::string r2p = fresh_id(p.quiver, at.rho + "_2p");
  std::string r1m = fresh_id(p.quiver, at.rho + "_1m");
  std::string r2m = fresh_id(p.quiver, at.rho + "_2m");

  std::vector<Arrow> added{{r1p, at.a, at.j_plus},
                           {r2p, at.j_plus, at.b},
                           {r1m, at.a, at.j_minus},
                           {r2m, at.j_minus, at.b}};
  std::map<std::string, std::vector<std::string>> subst{{at.rho, {r1p, r2p}}};
  std::vector<std::vector<RelTerm>> extra;
  extra.push_back({RelTerm{Rat(1), {r1p, r2p}}, RelTerm{Rat(-1), {r1m, r2m}}});
  Presentation out = rebuild(p, {at.rho, at.th_plus, at.th_minus}, added,
                             dropped, subst, std::move(extra));
  if (out.kind == AlgebraKind::gentle) out.kind = AlgebraKind::general;
  return out;
}

Presentation eliminate_redundant(const Presentation& p,
                                 const std::string& arrow_id) {
  if (!p.quiver.has_arrow(arrow_id))
    throw ValidationError("unknown arrow id: " + arrow_id);
  std::vector<std::size_t> defining;
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri)
    for (const auto& t : p.relations[ri].terms)
      if (t.arrows.size() == 1 && t.arrows[0] == arrow_id)
        defining.push_back(ri);
  if (defining.size() != 1)
    throw ValidationError("arrow " + arrow_id +
                          " is not a length-1 term of exactly one relation");
  std::size_t def = defining[0];

  // arrow = -(1/c) * (other terms)
  Rat c;
  std::vector<RelTerm> replacement;
  for (const auto& t : p.relations[def].terms) {
    if (t.arrows.size() == 1 && t.arrows[0] == arrow_id) {
      c = t.coeff;
    } else {
      for (const auto& a : t.arrows)
        if (a == arrow_id)
          throw ValidationError(
              "defining relation reuses " + arrow_id + " inside a longer path");
      replacement.push_back(t);
    }
  }
  for (auto& t : replacement) t.coeff /= -c;

  Presentation out;
  out.name = p.name;
  for (const auto& v : p.quiver.vertices()) out.quiver.add_vertex(v);
  for (const auto& a : p.quiver.arrows())
    if (a.id != arrow_id) out.quiver.add_arrow(a.id, a.source, a.target);

  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    if (ri == def) continue;
    // expand every occurrence of the arrow through the replacement sum
    std::vector<RelTerm> expanded;
    for (const auto& t : p.relations[ri].terms) {
      std::vector<RelTerm> parts{RelTerm{t.coeff, {}}};
      for (const auto& a : t.arrows) {
        if (a != arrow_id) {
          for (auto& part : parts) part.arrows.push_back(a);
          continue;
        }
        std::vector<RelTerm> next;
        for (const auto& part : parts)
          for (const auto& rep : replacement) {
            RelTerm nt;
            nt.coeff = part.coeff * rep.coeff;
            nt.arrows = part.arrows;
            nt.arrows.insert(nt.arrows.end(), rep.arrows.begin(),
                             rep.arrows.end());
            next.push_back(std::move(nt));
          }
        parts = std::move(next);
      }
      for (auto& part : parts) expanded.push_back(std::move(part));
    }
    if (!expanded.empty()) out.add_relation(std::move(expanded));
  }
  out.kind = check_gentle(out).is_gentle ? AlgebraKind::gentle
                                         : AlgebraKind::general;
  return out;
}

}  // namespace ncnodal
