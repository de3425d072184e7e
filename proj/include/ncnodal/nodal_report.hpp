#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncnodal/datum.hpp"

namespace ncnodal {

enum class EmbeddingKind { identity, diagonal_into_product, antidiagonal_into_mat2 };

std::string embedding_kind_name(EmbeddingKind k);

struct NodalOrderReport {
  /// sigma-cycles with marking (least element) and type vector of weights.
  std::vector<std::pair<std::string, std::vector<long long>>> cycles;
  std::vector<std::pair<std::string, long long>> aj_blocks;  // over Omega~++
  std::vector<std::pair<std::string, long long>> hj_blocks;  // over Omega
  std::vector<std::pair<std::string, EmbeddingKind>> embedding_kinds;
  std::vector<std::pair<std::string, long long>> conductor_aj_blocks;
  std::vector<std::pair<std::string, long long>> conductor_hj_blocks;
  bool connected = false;
  int center_t = 0;
  std::string center;
  /// Nonzero Ext^1 multiplicities, keyed (gamma in Omega~++_special, delta in
  /// Omega). Multiplicity 2 records a tied pair whose two sigma-images agree.
  std::map<std::pair<std::string, std::string>, int> ext_table;
};

std::vector<std::pair<std::string, std::vector<long long>>> hereditary_cover(
    const NodalDatum& d);

void quotient_diagram(const NodalDatum& d,
                      std::vector<std::pair<std::string, long long>>& aj,
                      std::vector<std::pair<std::string, long long>>& hj,
                      std::vector<std::pair<std::string, EmbeddingKind>>& kinds);

void conductor_quotients(const NodalDatum& d,
                         std::vector<std::pair<std::string, long long>>& aj,
                         std::vector<std::pair<std::string, long long>>& hj);

std::map<std::pair<std::string, std::string>, int> ext_table(
    const NodalDatum& d);

std::pair<bool, std::string> connectivity_and_center(const NodalDatum& d);

NodalOrderReport nodal_report(const NodalDatum& d);

}  // namespace ncnodal
