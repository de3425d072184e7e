#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "ncnodal/nodal_report.hpp"

using namespace ncnodal;

namespace {

NodalDatum zhelobenko() {
  NodalDatum d;
  d.omega = {"1", "2", "3"};
  d.sigma = {{"1", "1"}, {"2", "3"}, {"3", "2"}};
  d.ties = {{"1", "2"}};
  d.weights = {{"1", 1}, {"2", 1}, {"3", 1}};
  return d;
}

NodalDatum dyad() {
  NodalDatum d;
  d.omega = {"1", "2"};
  d.sigma = {{"1", "1"}, {"2", "2"}};
  d.ties = {{"1", "2"}};
  d.weights = {{"1", 1}, {"2", 1}};
  return d;
}

NodalDatum auslander() {
  NodalDatum d;
  d.omega = {"1", "2", "3", "4"};
  d.sigma = {{"1", "2"}, {"2", "1"}, {"3", "4"}, {"4", "3"}};
  d.ties = {{"2", "3"}};
  d.weights = {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}};
  return d;
}

NodalDatum gelfand() {
  NodalDatum d;
  d.omega = {"1", "2"};
  d.sigma = {{"1", "2"}, {"2", "1"}};
  d.reflexives = {"2"};
  d.weights = {{"1", 1}, {"2+", 1}, {"2-", 1}};
  return d;
}

NodalDatum orbifolded() {
  NodalDatum d;
  d.omega = {"1"};
  d.sigma = {{"1", "1"}};
  d.reflexives = {"1"};
  d.weights = {{"1+", 1}, {"1-", 1}};
  return d;
}

}  // namespace

TEST_CASE("hereditary cover of the Zhelobenko order") {
  auto cover = hereditary_cover(zhelobenko());
  REQUIRE(cover.size() == 2);
  CHECK(cover[0].first == "1");
  CHECK(cover[0].second == std::vector<long long>{1});
  CHECK(cover[1].first == "2");
  CHECK(cover[1].second == std::vector<long long>{1, 1});
}

TEST_CASE("hereditary cover of the dyad") {
  auto cover = hereditary_cover(dyad());
  REQUIRE(cover.size() == 2);
  CHECK(cover[0].second == std::vector<long long>{1});
  CHECK(cover[1].second == std::vector<long long>{1});
}

TEST_CASE("single cycle with unit weights") {
  NodalDatum d;
  d.omega = {"1", "2", "3", "4"};
  for (std::size_t i = 0; i < 4; ++i)
    d.sigma[d.omega[i]] = d.omega[(i + 1) % 4];
  for (const auto& e : d.omega) d.weights[e] = 1;
  auto cover = hereditary_cover(d);
  REQUIRE(cover.size() == 1);
  CHECK(cover[0].second == std::vector<long long>(4, 1));
}

TEST_CASE("cover entries are the weight multiset") {
  NodalDatum d = auslander();
  d.weights = {{"1", 2}, {"2", 3}, {"3", 3}, {"4", 5}};
  auto cover = hereditary_cover(d);
  std::multiset<long long> seen, expect{2, 3, 3, 5};
  for (const auto& [m, type] : cover)
    for (long long w : type) seen.insert(w);
  CHECK(seen == expect);
}

TEST_CASE("quotient diagram of the dyad") {
  std::vector<std::pair<std::string, long long>> aj, hj;
  std::vector<std::pair<std::string, EmbeddingKind>> kinds;
  quotient_diagram(dyad(), aj, hj, kinds);
  REQUIRE(aj.size() == 1);
  CHECK(aj[0] == std::pair<std::string, long long>{"1~2", 1});
  CHECK(hj.size() == 2);
  REQUIRE(kinds.size() == 1);
  CHECK(kinds[0].second == EmbeddingKind::diagonal_into_product);
}

TEST_CASE("quotient diagram of the orbifolded point") {
  std::vector<std::pair<std::string, long long>> aj, hj;
  std::vector<std::pair<std::string, EmbeddingKind>> kinds;
  quotient_diagram(orbifolded(), aj, hj, kinds);
  REQUIRE(aj.size() == 2);
  CHECK(aj[0] == std::pair<std::string, long long>{"1+", 1});
  CHECK(aj[1] == std::pair<std::string, long long>{"1-", 1});
  REQUIRE(hj.size() == 1);
  CHECK(hj[0].second == 2);
  REQUIRE(kinds.size() == 1);
  CHECK(kinds[0].second == EmbeddingKind::antidiagonal_into_mat2);
}

TEST_CASE("quotient diagram of a heavy simple element") {
  NodalDatum d;
  d.omega = {"1"};
  d.sigma = {{"1", "1"}};
  d.weights = {{"1", 3}};
  std::vector<std::pair<std::string, long long>> aj, hj;
  std::vector<std::pair<std::string, EmbeddingKind>> kinds;
  quotient_diagram(d, aj, hj, kinds);
  CHECK(aj == std::vector<std::pair<std::string, long long>>{{"1", 3}});
  CHECK(hj == std::vector<std::pair<std::string, long long>>{{"1", 3}});
  CHECK(kinds[0].second == EmbeddingKind::identity);
}

TEST_CASE("block-size bookkeeping matches the embedding targets") {
  for (const NodalDatum& d : {zhelobenko(), dyad(), auslander(), gelfand(),
                              orbifolded()}) {
    std::vector<std::pair<std::string, long long>> aj, hj;
    std::vector<std::pair<std::string, EmbeddingKind>> kinds;
    quotient_diagram(d, aj, hj, kinds);
    long long hj_sum = 0, target_sum = 0;
    for (const auto& [o, s] : hj) hj_sum += s;
    for (const auto& [g, k] : kinds) {
      if (k == EmbeddingKind::diagonal_into_product) {
        // product of the two tied blocks
        target_sum += 2 * d.weight_of(g.substr(0, g.find('~')));
      } else {
        target_sum += d.weight_of(g);
      }
    }
    CHECK(hj_sum == target_sum);
  }
}

TEST_CASE("conductor quotients of the Auslander order") {
  std::vector<std::pair<std::string, long long>> aj, hj;
  conductor_quotients(auslander(), aj, hj);
  CHECK(aj == std::vector<std::pair<std::string, long long>>{{"2~3", 1}});
  CHECK(hj == std::vector<std::pair<std::string, long long>>{{"2", 1}, {"3", 1}});
}

TEST_CASE("conductor quotients of the Gelfand order") {
  std::vector<std::pair<std::string, long long>> aj, hj;
  conductor_quotients(gelfand(), aj, hj);
  CHECK(aj == std::vector<std::pair<std::string, long long>>{{"2+", 1}, {"2-", 1}});
  CHECK(hj == std::vector<std::pair<std::string, long long>>{{"2", 2}});
}

TEST_CASE("conductor quotients of an all-simple datum are empty") {
  NodalDatum d;
  d.omega = {"1", "2"};
  d.sigma = {{"1", "2"}, {"2", "1"}};
  d.weights = {{"1", 1}, {"2", 1}};
  std::vector<std::pair<std::string, long long>> aj, hj;
  conductor_quotients(d, aj, hj);
  CHECK(aj.empty());
  CHECK(hj.empty());
  CHECK(ext_table(d).empty());
}

TEST_CASE("ext table of the Auslander order") {
  auto ext = ext_table(auslander());
  std::map<std::pair<std::string, std::string>, int> expect{
      {{"2~3", "1"}, 1}, {{"2~3", "4"}, 1}};
  CHECK(ext == expect);
}

TEST_CASE("ext table of the Gelfand order") {
  auto ext = ext_table(gelfand());
  std::map<std::pair<std::string, std::string>, int> expect{
      {{"2+", "1"}, 1}, {{"2-", "1"}, 1}};
  CHECK(ext == expect);
}

TEST_CASE("ext row sums: 1 per reflexive half, 2 per tied pair") {
  for (const NodalDatum& d : {zhelobenko(), dyad(), auslander(), gelfand()}) {
    auto ext = ext_table(d);
    std::map<std::string, int> row_sum;
    for (const auto& [key, mult] : ext) row_sum[key.first] += mult;
    for (const auto& [gamma, sum] : row_sum) {
      if (gamma.find('~') != std::string::npos)
        CHECK(sum == 2);
      else
        CHECK(sum == 1);
    }
  }
}

TEST_CASE("connectivity and center") {
  auto [conn_z, center_z] = connectivity_and_center(zhelobenko());
  CHECK(conn_z);
  CHECK(center_z == "k[[w_1,...,w_2]]/(w_i w_j, i != j)");

  auto [conn_d, center_d] = connectivity_and_center(dyad());
  CHECK(conn_d);

  NodalDatum two_cycles;
  two_cycles.omega = {"1", "2"};
  two_cycles.sigma = {{"1", "1"}, {"2", "2"}};
  two_cycles.weights = {{"1", 1}, {"2", 1}};
  auto [conn_t, center_t] = connectivity_and_center(two_cycles);
  CHECK_FALSE(conn_t);
  (void)center_t;
}

TEST_CASE("full report of the Zhelobenko order") {
  NodalOrderReport r = nodal_report(zhelobenko());
  CHECK(r.connected);
  CHECK(r.center_t == 2);
  REQUIRE(r.cycles.size() == 2);
  CHECK(r.cycles[0].second == std::vector<long long>{1});
  CHECK(r.cycles[1].second == std::vector<long long>{1, 1});
  CHECK(r.cycles.size() == static_cast<std::size_t>(r.center_t));
}

TEST_CASE("cyclic data: two covered cycles joined into one component") {
  for (auto [n, c] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {5, 2}}) {
    NodalDatum d = build_cyclic_nodal(n, c);
    auto cover = hereditary_cover(d);
    REQUIRE(cover.size() == 2);
    CHECK(cover[0].second == std::vector<long long>(n, 1));
    CHECK(cover[1].second == std::vector<long long>(n, 1));
    auto [connected, center] = connectivity_and_center(d);
    CHECK(connected);
    CHECK(center == "k[[w_1,...,w_2]]/(w_i w_j, i != j)");
  }
}

TEST_CASE("dihedral data live on a single sigma-cycle") {
  for (int n = 1; n <= 6; ++n) {
    NodalDatum d = build_dihedral_nodal(n);
    CHECK(hereditary_cover(d).size() == 1);
    auto [connected, center] = connectivity_and_center(d);
    CHECK(connected);
    CHECK(center == "k[[w_1]]");
  }
}

TEST_CASE("invalid datum is rejected by report operations") {
  NodalDatum d = dyad();
  d.sigma["2"] = "1";
  CHECK_THROWS_AS(hereditary_cover(d), ValidationError);
  CHECK_THROWS_AS(ext_table(d), ValidationError);
}
