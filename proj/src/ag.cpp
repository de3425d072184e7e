#include "ncnodal/ag.hpp"

#include <algorithm>
#include <set>

#include "ncnodal/builder.hpp"

namespace ncnodal {

std::string Thread::display() const {
  if (trivial()) return "e_" + vertex;
  return path_display(arrows);
}

namespace {

struct Composition {
  // unique permitted / forbidden successor and predecessor per arrow
  std::map<std::string, std::string> perm_next, perm_prev;
  std::map<std::string, std::string> forb_next, forb_prev;
};

Composition compositions(const Presentation& p) {
  Composition c;
  for (const auto& a : p.quiver.arrows())
    for (const auto& b : p.quiver.arrows()) {
      if (b.source != a.target) continue;
      if (p.in_monomial_ideal(a.id, b.id)) {
        c.forb_next[a.id] = b.id;
        c.forb_prev[b.id] = a.id;
      } else {
        c.perm_next[a.id] = b.id;
        c.perm_prev[b.id] = a.id;
      }
    }
  return c;
}

std::string thread_source(const Presentation& p, const Thread& t) {
  return t.trivial() ? t.vertex : p.quiver.arrow(t.arrows.front()).source;
}

std::string thread_target(const Presentation& p, const Thread& t) {
  return t.trivial() ? t.vertex : p.quiver.arrow(t.arrows.back()).target;
}

}  // namespace

ThreadSystem threads(const Presentation& p) {
  GentleReport report = check_gentle(p);
  if (!report.is_gentle) {
    std::string why = report.violations.empty()
                          ? "not gentle"
                          : report.violations.front().code + ": " +
                                report.violations.front().detail;
    throw ValidationError("thread system needs a gentle presentation (" + why +
                          ")");
  }
  if (report.has_relation_free_cycle)
    throw ValidationError(
        "thread system undefined: relation-free cycle (infinite dimensional)");

  ThreadSystem sys;
  sys.forbidden_cycles = report.forbidden_cycles;
  Composition comp = compositions(p);

  std::set<std::string> on_cycle;
  for (const auto& cyc : sys.forbidden_cycles)
    for (const auto& a : cyc) on_cycle.insert(a);

  // maximal permitted paths: walk from arrows with no permitted predecessor
  for (const auto& a : p.quiver.arrows()) {
    if (comp.perm_prev.count(a.id)) continue;
    Thread t{ThreadKind::permitted, {}, ""};
    std::string cur = a.id;
    for (;;) {
      t.arrows.push_back(cur);
      auto it = comp.perm_next.find(cur);
      if (it == comp.perm_next.end()) break;
      cur = it->second;
    }
    sys.permitted.push_back(std::move(t));
  }
  // maximal forbidden paths: same over the ideal graph, skipping cycles
  for (const auto& a : p.quiver.arrows()) {
    if (on_cycle.count(a.id) || comp.forb_prev.count(a.id)) continue;
    Thread t{ThreadKind::forbidden, {}, ""};
    std::string cur = a.id;
    for (;;) {
      t.arrows.push_back(cur);
      auto it = comp.forb_next.find(cur);
      if (it == comp.forb_next.end()) break;
      cur = it->second;
    }
    sys.forbidden.push_back(std::move(t));
  }
  // trivial threads at vertices of in- and out-degree at most one; with both
  // neighbours present the composition decides the side
  for (const auto& v : p.quiver.vertices()) {
    auto in = p.quiver.arrows_in(v);
    auto out = p.quiver.arrows_out(v);
    if (in.size() > 1 || out.size() > 1) continue;
    bool permitted_side = true, forbidden_side = true;
    if (in.size() == 1 && out.size() == 1) {
      if (p.in_monomial_ideal(in[0], out[0])) {
        permitted_side = false;  // composition dies: the thread is forbidden
      } else {
        forbidden_side = false;
      }
    }
    if (permitted_side)
      sys.permitted.push_back(Thread{ThreadKind::permitted, {}, v});
    if (forbidden_side)
      sys.forbidden.push_back(Thread{ThreadKind::forbidden, {}, v});
  }

  std::sort(sys.permitted.begin(), sys.permitted.end(),
            [](const Thread& a, const Thread& b) { return a.display() < b.display(); });
  std::sort(sys.forbidden.begin(), sys.forbidden.end(),
            [](const Thread& a, const Thread& b) { return a.display() < b.display(); });

  auto unique_hit = [](std::vector<std::size_t>& hits, const std::string& what) {
    if (hits.size() != 1)
      throw ValidationError("theta lookup not unique at " + what);
    return hits.front();
  };

  // theta_plus: permitted -> forbidden (shared target, last arrows alternate)
  sys.theta_plus.assign(sys.permitted.size(), 0);
  for (std::size_t i = 0; i < sys.permitted.size(); ++i) {
    const Thread& pi = sys.permitted[i];
    std::vector<std::size_t> hits;
    if (!pi.trivial()) {
      std::string v = thread_target(p, pi);
      for (std::size_t j = 0; j < sys.forbidden.size(); ++j) {
        const Thread& ph = sys.forbidden[j];
        if (thread_target(p, ph) != v) continue;
        if (ph.trivial() || ph.arrows.back() != pi.arrows.back())
          hits.push_back(j);
      }
    } else {
      auto in = p.quiver.arrows_in(pi.vertex);
      if (!in.empty()) {
        for (std::size_t j = 0; j < sys.forbidden.size(); ++j)
          if (!sys.forbidden[j].trivial() &&
              sys.forbidden[j].arrows.back() == in[0])
            hits.push_back(j);
      } else {
        for (std::size_t j = 0; j < sys.forbidden.size(); ++j)
          if (sys.forbidden[j].trivial() && sys.forbidden[j].vertex == pi.vertex)
            hits.push_back(j);
      }
    }
    sys.theta_plus[i] = unique_hit(hits, pi.display());
  }
  // theta_minus: forbidden -> permitted (shared source, first arrows alternate)
  sys.theta_minus.assign(sys.forbidden.size(), 0);
  for (std::size_t j = 0; j < sys.forbidden.size(); ++j) {
    const Thread& ph = sys.forbidden[j];
    std::vector<std::size_t> hits;
    if (!ph.trivial()) {
      std::string v = thread_source(p, ph);
      for (std::size_t i = 0; i < sys.permitted.size(); ++i) {
        const Thread& pi = sys.permitted[i];
        if (thread_source(p, pi) != v) continue;
        if (pi.trivial() || pi.arrows.front() != ph.arrows.front())
          hits.push_back(i);
      }
    } else {
      auto out = p.quiver.arrows_out(ph.vertex);
      if (!out.empty()) {
        for (std::size_t i = 0; i < sys.permitted.size(); ++i)
          if (!sys.permitted[i].trivial() &&
              sys.permitted[i].arrows.front() == out[0])
            hits.push_back(i);
      } else {
        for (std::size_t i = 0; i < sys.permitted.size(); ++i)
          if (sys.permitted[i].trivial() && sys.permitted[i].vertex == ph.vertex)
            hits.push_back(i);
      }
    }
    sys.theta_minus[j] = unique_hit(hits, ph.display());
  }

  // both maps must be bijections
  if (sys.permitted.size() != sys.forbidden.size())
    throw ValidationError("thread count mismatch: |Pi| != |Phi|");
  std::set<std::size_t> img_plus(sys.theta_plus.begin(), sys.theta_plus.end());
  std::set<std::size_t> img_minus(sys.theta_minus.begin(), sys.theta_minus.end());
  if (img_plus.size() != sys.permitted.size() ||
      img_minus.size() != sys.forbidden.size())
    throw ValidationError("theta maps failed to be bijections");
  return sys;
}

AGInvariant ag_invariant(const Presentation& p) {
  ThreadSystem sys = threads(p);
  AGInvariant inv;

  // theta = theta_plus . theta_minus on forbidden threads
  std::vector<std::size_t> theta(sys.forbidden.size());
  for (std::size_t j = 0; j < sys.forbidden.size(); ++j)
    theta[j] = sys.theta_plus[sys.theta_minus[j]];

  std::vector<bool> seen(sys.forbidden.size(), false);
  struct Cycle {
    std::string key;
    int m;
    int n;
  };
  std::vector<Cycle> cycles;
  for (std::size_t start = 0; start < sys.forbidden.size(); ++start) {
    if (seen[start]) continue;
    Cycle c{std::string(), 0, 0};
    std::size_t cur = start;
    std::string min_key;
    do {
      seen[cur] = true;
      ++c.m;
      c.n += sys.forbidden[cur].length();
      std::string key = sys.forbidden[cur].display();
      if (min_key.empty() || key < min_key) min_key = key;
      cur = theta[cur];
    } while (cur != start);
    c.key = min_key;
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.key < b.key; });
  for (const auto& c : cycles) {
    inv.cycles.emplace_back(c.m, c.n);
    inv.phi[{c.m, c.n}] += 1;
  }

  auto fcycles = sys.forbidden_cycles;
  std::sort(fcycles.begin(), fcycles.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });
  for (const auto& cyc : fcycles) {
    inv.special_pairs.emplace_back(0, static_cast<int>(cyc.size()));
    inv.phi[{0, static_cast<int>(cyc.size())}] += 1;
  }
  return inv;
}

AGInvariant ag_closed_form(const CurveDatum& d) {
  d.validate();
  if (!d.q_components.empty())
    throw ValidationError("closed form needs an empty q-tuple");
  if (!d.reflexives.empty())
    throw ValidationError("closed form needs a datum without reflexive elements");

  std::vector<std::string> xi = d.elements();
  std::map<std::string, std::string> sigma, tau;
  for (const auto& e : xi) sigma[e] = d.tie_partner(e).value_or(e);
  for (std::size_t k = 0; k < d.p_components.size(); ++k) {
    auto dec = [&](int len, int sign) {
      for (int j = 1; j <= len; ++j) {
        int prev = j == 1 ? len : j - 1;
        tau[x_elem(static_cast<int>(k) + 1, j, sign)] =
            x_elem(static_cast<int>(k) + 1, prev, sign);
      }
    };
    dec(d.p_components[k].first, +1);
    dec(d.p_components[k].second, -1);
  }
  auto weight = [&](const std::string& e) { return d.is_tied(e) ? 2 : 1; };

  AGInvariant inv;
  std::set<std::string> seen;
  struct Cycle {
    std::string key;
    int m;
    int n;
  };
  std::vector<Cycle> cycles;
  for (const auto& start : xi) {
    if (seen.count(start)) continue;
    Cycle c{start, 0, 0};
    std::string cur = start;
    do {
      seen.insert(cur);
      ++c.m;
      c.n += weight(cur);
      if (cur < c.key) c.key = cur;
      cur = sigma.at(tau.at(cur));
    } while (cur != start);
    cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cycle& a, const Cycle& b) { return a.key < b.key; });
  for (const auto& c : cycles) {
    inv.cycles.emplace_back(c.m, c.n);
    inv.phi[{c.m, c.n}] += 1;
  }
  return inv;
}

bool cross_validate(const CurveDatum& d) {
  AGInvariant direct = ag_invariant(build_lambda(d));
  AGInvariant closed = ag_closed_form(d);
  return direct.phi == closed.phi;
}

}  // namespace ncnodal
