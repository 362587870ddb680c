#include "mfan/simplex.hpp"

#include <cstddef>

namespace mfan {

namespace {

// Dense phase-1 tableau.  Columns: x+ (nvars), x- (nvars), one slack per Ge
// row, one artificial per row; the last column is the right-hand side.
struct Tableau {
  std::size_t m, ncols;
  std::vector<Vec> t;      // m rows, ncols + 1 entries each
  Vec cost;                // reduced costs, ncols entries, then -objective
  std::vector<std::size_t> basis;

  void pivot(std::size_t row, std::size_t col) {
    const Rat inv = Rat(1) / t[row][col];
    for (auto& e : t[row]) e *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      const Rat f = t[i][col];
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
    }
    if (cost[col] != 0) {
      const Rat f = cost[col];
      for (std::size_t j = 0; j <= ncols; ++j) cost[j] -= f * t[row][j];
    }
    basis[row] = col;
  }
};

}  // namespace

Feasibility find_feasible(const std::vector<LinearConstraint>& rows, std::size_t nvars) {
  const std::size_t m = rows.size();
  Feasibility out;
  if (m == 0) {
    out.feasible = true;
    out.point.assign(nvars, Rat(0));
    return out;
  }
  for (const auto& r : rows)
    if (r.coeffs.size() != nvars) throw Error("constraint arity mismatch in find_feasible");

  std::size_t n_ge = 0;
  for (const auto& r : rows)
    if (r.rel == Rel::Ge) ++n_ge;

  const std::size_t slack0 = 2 * nvars;
  const std::size_t art0 = slack0 + n_ge;
  Tableau tab;
  tab.m = m;
  tab.ncols = art0 + m;
  tab.t.assign(m, Vec(tab.ncols + 1, Rat(0)));
  tab.basis.resize(m);

  std::vector<bool> flipped(m, false);
  std::vector<std::size_t> slack_col(m, tab.ncols);
  {
    std::size_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const int sign = rows[i].rhs < 0 ? -1 : 1;
      flipped[i] = sign < 0;
      for (std::size_t j = 0; j < nvars; ++j) {
        tab.t[i][j] = sign * rows[i].coeffs[j];
        tab.t[i][nvars + j] = -sign * rows[i].coeffs[j];
      }
      if (rows[i].rel == Rel::Ge) {
        slack_col[i] = slack0 + s;
        tab.t[i][slack0 + s] = -sign;
        ++s;
      }
      tab.t[i][art0 + i] = 1;
      tab.t[i][tab.ncols] = sign * rows[i].rhs;
      tab.basis[i] = art0 + i;
    }
  }

  // Reduced costs for "minimize sum of artificials" with every artificial
  // basic: cost_j = c_j - sum_i t[i][j].
  tab.cost.assign(tab.ncols + 1, Rat(0));
  for (std::size_t j = art0; j < tab.ncols; ++j) tab.cost[j] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= tab.ncols; ++j) tab.cost[j] -= tab.t[i][j];

  while (true) {
    std::size_t enter = tab.ncols;
    for (std::size_t j = 0; j < tab.ncols; ++j)
      if (tab.cost[j] < 0) { enter = j; break; }  // Bland: lowest index
    if (enter == tab.ncols) break;

    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.t[i][enter] <= 0) continue;
      if (leave == m) { leave = i; continue; }
      const Rat cur = tab.t[i][tab.ncols] / tab.t[i][enter];
      const Rat best = tab.t[leave][tab.ncols] / tab.t[leave][enter];
      if (cur < best || (cur == best && tab.basis[i] < tab.basis[leave])) leave = i;
    }
    if (leave == m) throw Error("phase-1 objective unbounded; inconsistent tableau");
    tab.pivot(leave, enter);
  }

  const Rat objective = -tab.cost[tab.ncols];
  if (objective == 0) {
    out.feasible = true;
    Vec value(tab.ncols, Rat(0));
    for (std::size_t i = 0; i < m; ++i) value[tab.basis[i]] = tab.t[i][tab.ncols];
    out.point.resize(nvars);
    for (std::size_t j = 0; j < nvars; ++j) out.point[j] = value[j] - value[nvars + j];
    return out;
  }

  // Farkas witness from the optimal duals: y_i = 1 - reduced cost of the
  // i-th artificial column, undoing the row sign flips.
  out.feasible = false;
  out.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat y = Rat(1) - tab.cost[art0 + i];
    out.dual[i] = flipped[i] ? -y : y;
  }
  // The certificate is checked here once so downstream users can rely on it.
  Vec combo(nvars, Rat(0));
  Rat rhs_combo = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].rel == Rel::Ge && out.dual[i] < 0)
      throw Error("internal: negative Farkas multiplier on inequality row");
    for (std::size_t j = 0; j < nvars; ++j) combo[j] += out.dual[i] * rows[i].coeffs[j];
    rhs_combo += out.dual[i] * rows[i].rhs;
  }
  if (!is_zero(combo) || rhs_combo <= 0) throw Error("internal: Farkas witness failed verification");
  return out;
}

}  // namespace mfan
