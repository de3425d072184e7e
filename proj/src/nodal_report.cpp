#include "ncnodal/nodal_report.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ncnodal {

namespace {

std::string tie_class_key(const std::string& a, const std::string& b) {
  return a < b ? a + "~" + b : b + "~" + a;
}

void require_valid(const NodalDatum& d) {
  auto check = check_nodal_datum(d);
  if (!check.valid)
    throw ValidationError("invalid nodal datum: " + check.violations.front());
}

/// sigma-cycles, each rotated to start at its least element, ordered by that
/// marking.
std::vector<std::vector<std::string>> sigma_cycles(const NodalDatum& d) {
  std::set<std::string> seen;
  std::vector<std::vector<std::string>> cycles;
  for (const auto& start : d.omega) {
    if (seen.count(start)) continue;
    std::vector<std::string> cyc;
    std::string cur = start;
    do {
      cyc.push_back(cur);
      seen.insert(cur);
      cur = d.sigma.at(cur);
    } while (cur != start);
    auto least = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), least, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

std::string partner_of(const NodalDatum& d, const std::string& e) {
  for (const auto& [a, b] : d.ties) {
    if (a == e) return b;
    if (b == e) return a;
  }
  return {};
}

}  // namespace

std::string embedding_kind_name(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::identity: return "identity";
    case EmbeddingKind::diagonal_into_product: return "diagonal-into-product";
    default: return "antidiagonal-into-mat2";
  }
}

std::vector<std::pair<std::string, std::vector<long long>>> hereditary_cover(
    const NodalDatum& d) {
  require_valid(d);
  std::vector<std::pair<std::string, std::vector<long long>>> out;
  for (const auto& cyc : sigma_cycles(d)) {
    std::vector<long long> type;
    // the marking orders the cycle as m < sigma(m) < ...
    std::vector<std::string> ordered;
    std::string cur = cyc.front();
    do {
      ordered.push_back(cur);
      cur = d.sigma.at(cur);
    } while (cur != cyc.front());
    for (const auto& e : ordered) type.push_back(d.weight_of(e));
    out.emplace_back(cyc.front(), std::move(type));
  }
  return out;
}

void quotient_diagram(const NodalDatum& d,
                      std::vector<std::pair<std::string, long long>>& aj,
                      std::vector<std::pair<std::string, long long>>& hj,
                      std::vector<std::pair<std::string, EmbeddingKind>>& kinds) {
  require_valid(d);
  auto check = check_nodal_datum(d);
  aj.clear();
  hj.clear();
  kinds.clear();
  for (const auto& e : d.omega) hj.emplace_back(e, d.weight_of(e));
  std::set<std::string> emitted;
  for (const auto& e : d.omega) {
    switch (check.classes.at(e)) {
      case ElementClass::simple:
        aj.emplace_back(e, d.weight_of(e));
        kinds.emplace_back(e, EmbeddingKind::identity);
        break;
      case ElementClass::reflexive:
        aj.emplace_back(e + "+", d.weights.at(e + "+"));
        aj.emplace_back(e + "-", d.weights.at(e + "-"));
        kinds.emplace_back(e, EmbeddingKind::antidiagonal_into_mat2);
        break;
      case ElementClass::tied: {
        std::string key = tie_class_key(e, partner_of(d, e));
        if (emitted.insert(key).second) {
          aj.emplace_back(key, d.weight_of(e));
          kinds.emplace_back(key, EmbeddingKind::diagonal_into_product);
        }
        break;
      }
    }
  }
}

void conductor_quotients(const NodalDatum& d,
                         std::vector<std::pair<std::string, long long>>& aj,
                         std::vector<std::pair<std::string, long long>>& hj) {
  require_valid(d);
  auto check = check_nodal_datum(d);
  aj.clear();
  hj.clear();
  std::set<std::string> emitted;
  for (const auto& e : d.omega) {
    switch (check.classes.at(e)) {
      case ElementClass::simple:
        break;
      case ElementClass::reflexive:
        hj.emplace_back(e, d.weight_of(e));
        aj.emplace_back(e + "+", d.weights.at(e + "+"));
        aj.emplace_back(e + "-", d.weights.at(e + "-"));
        break;
      case ElementClass::tied: {
        hj.emplace_back(e, d.weight_of(e));
        std::string key = tie_class_key(e, partner_of(d, e));
        if (emitted.insert(key).second) aj.emplace_back(key, d.weight_of(e));
        break;
      }
    }
  }
}

std::map<std::pair<std::string, std::string>, int> ext_table(
    const NodalDatum& d) {
  require_valid(d);
  std::map<std::pair<std::string, std::string>, int> out;
  for (const auto& e : d.reflexives) {
    out[{e + "+", d.sigma.at(e)}] += 1;
    out[{e + "-", d.sigma.at(e)}] += 1;
  }
  for (const auto& [a, b] : d.ties) {
    std::string key = tie_class_key(a, b);
    out[{key, d.sigma.at(a)}] += 1;
    out[{key, d.sigma.at(b)}] += 1;
  }
  return out;
}

std::pair<bool, std::string> connectivity_and_center(const NodalDatum& d) {
  require_valid(d);
  auto cycles = sigma_cycles(d);
  int t = static_cast<int>(cycles.size());
  // union-find over cycles joined by ties
  std::map<std::string, int> cycle_of;
  for (int i = 0; i < t; ++i)
    for (const auto& e : cycles[i]) cycle_of[e] = i;
  std::vector<int> parent(t);
  for (int i = 0; i < t; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& [a, b] : d.ties) parent[find(cycle_of[a])] = find(cycle_of[b]);
  std::set<int> roots;
  for (int i = 0; i < t; ++i) roots.insert(find(i));
  bool connected = t <= 1 ? t == 1 : roots.size() == 1;

  std::string center;
  if (t == 0) {
    center = "k";
  } else if (t == 1) {
    center = "k[[w_1]]";
  } else {
    center = "k[[w_1,...,w_" + std::to_string(t) + "]]/(w_i w_j, i != j)";
  }
  return {connected, center};
}

NodalOrderReport nodal_report(const NodalDatum& d) {
  NodalOrderReport r;
  r.cycles = hereditary_cover(d);
  quotient_diagram(d, r.aj_blocks, r.hj_blocks, r.embedding_kinds);
  conductor_quotients(d, r.conductor_aj_blocks, r.conductor_hj_blocks);
  r.ext_table = ext_table(d);
  auto [connected, center] = connectivity_and_center(d);
  r.connected = connected;
  r.center = center;
  r.center_t = static_cast<int>(r.cycles.size());
  return r;
}

}  // namespace ncnodal
