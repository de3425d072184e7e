#include "ncnodal/feasibility.hpp"

#include <algorithm>
#include <cstddef>

namespace ncnodal {

void EqualityFeasibility::add_equation(std::vector<Rat> coeffs) {
  equations_.push_back(std::move(coeffs));
}

namespace {

// A row means  sum coeffs[i] * y_i >= rhs.
struct Row {
  std::vector<Rat> coeffs;
  Rat rhs;
};

bool row_trivial(const Row& r) {
  return std::all_of(r.coeffs.begin(), r.coeffs.end(),
                     [](const Rat& c) { return c == 0; });
}

}  // namespace

std::optional<std::vector<Rat>> EqualityFeasibility::solve() const {
  // Gauss-Jordan: express pivot variables through free ones. pivot_of[v] is
  // the row index solving for v, or -1 when v stays free.
  std::vector<std::vector<Rat>> eq = equations_;
  std::vector<int> pivot_of(n_, -1);
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < eq.size(); ++col) {
    std::size_t sel = rank;
    while (sel < eq.size() && eq[sel][col] == 0) ++sel;
    if (sel == eq.size()) continue;
    std::swap(eq[rank], eq[sel]);
    Rat inv = Rat(1) / eq[rank][col];
    for (auto& c : eq[rank]) c *= inv;
    for (std::size_t r = 0; r < eq.size(); ++r) {
      if (r == rank || eq[r][col] == 0) continue;
      Rat f = eq[r][col];
      for (std::size_t j = 0; j < n_; ++j) eq[r][j] -= f * eq[rank][j];
    }
    pivot_of[col] = static_cast<int>(rank);
    pivot_col.push_back(col);
    ++rank;
  }
  // Homogeneous system: the dropped all-zero rows are consistent by
  // construction, so only the inequalities can fail.

  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < n_; ++v)
    if (pivot_of[v] < 0) free_vars.push_back(v);
  std::vector<int> free_index(n_, -1);
  for (std::size_t i = 0; i < free_vars.size(); ++i)
    free_index[free_vars[i]] = static_cast<int>(i);

  // x_v >= 1 translated into the free coordinates.
  std::vector<Row> rows;
  for (std::size_t v = 0; v < n_; ++v) {
    Row row;
    row.coeffs.assign(free_vars.size(), Rat(0));
    row.rhs = 1;
    if (pivot_of[v] < 0) {
      row.coeffs[free_index[v]] = 1;
    } else {
      // x_v = -sum_{f free} eq[pivot][f] * x_f
      const auto& prow = eq[pivot_of[v]];
      for (std::size_t f = 0; f < free_vars.size(); ++f)
        row.coeffs[f] = -prow[free_vars[f]];
    }
    rows.push_back(std::move(row));
  }

  // Fourier-Motzkin, eliminating free variable k = m-1 .. 0, keeping the
  // intermediate systems for back-substitution.
  std::size_t m = free_vars.size();
  std::vector<std::vector<Row>> stages;
  stages.push_back(rows);
  for (std::size_t k = m; k-- > 0;) {
    const std::vector<Row>& cur = stages.back();
    std::vector<Row> next;
    std::vector<const Row*> lowers, uppers;
    for (const auto& r : cur) {
      if (r.coeffs[k] > 0)
        lowers.push_back(&r);
      else if (r.coeffs[k] < 0)
        uppers.push_back(&r);
      else
        next.push_back(r);
    }
    for (const Row* lo : lowers)
      for (const Row* up : uppers) {
        // lo: c*y_k >= rhs - rest (c>0);  up: -d*y_k >= rhs - rest (d>0)
        Row comb;
        comb.coeffs.assign(m, Rat(0));
        Rat c = lo->coeffs[k];
        Rat d = -up->coeffs[k];
        for (std::size_t j = 0; j < m; ++j)
          comb.coeffs[j] = lo->coeffs[j] * d + up->coeffs[j] * c;
        comb.rhs = lo->rhs * d + up->rhs * c;
        comb.coeffs[k] = 0;
        if (row_trivial(comb)) {
          if (comb.rhs > 0) return std::nullopt;
        } else {
          next.push_back(std::move(comb));
        }
      }
    // rows with only the eliminated variable become constant constraints
    std::vector<Row> filtered;
    for (auto& r : next) {
      if (row_trivial(r)) {
        if (r.rhs > 0) return std::nullopt;
      } else {
        filtered.push_back(std::move(r));
      }
    }
    stages.push_back(std::move(filtered));
  }
  for (const auto& r : stages.back())
    if (row_trivial(r) && r.rhs > 0) return std::nullopt;  // m == 0 case

  // Back-substitute: free variable k uses the stage where it is still
  // present (stages[m - 1 - k] eliminated var k first... stages[i] has vars
  // 0..m-1-i alive). Assign in increasing k order.
  std::vector<Rat> free_val(m, Rat(1));
  for (std::size_t k = 0; k < m; ++k) {
    const std::vector<Row>& cur = stages[m - 1 - k];
    bool have = false;
    Rat best;
    for (const auto& r : cur) {
      if (r.coeffs[k] == 0) continue;
      Rat rest = r.rhs;
      for (std::size_t j = 0; j < k; ++j) rest -= r.coeffs[j] * free_val[j];
      Rat bound = rest / r.coeffs[k];
      if (r.coeffs[k] > 0) {
        if (!have || bound > best) { have = true; best = bound; }
      }
    }
    free_val[k] = have ? best : Rat(1);
  }

  std::vector<Rat> x(n_, Rat(0));
  for (std::size_t i = 0; i < m; ++i) x[free_vars[i]] = free_val[i];
  for (std::size_t v = 0; v < n_; ++v) {
    if (pivot_of[v] < 0) continue;
    const auto& prow = eq[pivot_of[v]];
    Rat val = 0;
    for (std::size_t f = 0; f < m; ++f)
      val -= prow[free_vars[f]] * free_val[f];
    x[v] = val;
  }
  return x;
}

}  // namespace ncnodal
