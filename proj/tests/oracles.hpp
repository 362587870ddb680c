#pragma once

// Independent brute-force oracles used by the tests.  Nothing here shares
// code with the algorithms under test: the Smith oracle works through minor
// gcds, and the LP oracle is Fourier-Motzkin elimination.

#include <algorithm>
#include <vector>

#include "mfan/exactlin.hpp"

namespace mfan::oracles {

/// Smith diagonal via determinantal divisors: s_k = d_k / d_{k-1} where d_k
/// is the gcd of all k x k minors.  Exponential; keep matrices small.
inline std::vector<Int> snf_by_minor_gcd(const Mat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t n = std::min(r, c);
  std::vector<Int> d(n + 1);
  d[0] = 1;
  std::vector<Int> out(n, Int(0));
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    // All k-subsets of rows and columns.
    std::vector<int> rows_sel(k), cols_sel(k);
    for (std::size_t i = 0; i < k; ++i) rows_sel[i] = static_cast<int>(i);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) cols_sel[i] = static_cast<int>(i);
      while (true) {
        Mat minor(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(rows_sel[a], cols_sel[b]);
        g = gcd(g, to_int(det(minor)));
        // next column subset
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && cols_sel[pos] == static_cast<int>(c - k + pos)) --pos;
        if (pos < 0) break;
        ++cols_sel[pos];
        for (std::size_t q = pos + 1; q < k; ++q) cols_sel[q] = cols_sel[q - 1] + 1;
      }
      int pos = static_cast<int>(k) - 1;
      while (pos >= 0 && rows_sel[pos] == static_cast<int>(r - k + pos)) --pos;
      if (pos < 0) break;
      ++rows_sel[pos];
      for (std::size_t q = pos + 1; q < k; ++q) rows_sel[q] = rows_sel[q - 1] + 1;
    }
    d[k] = g;
    if (g == 0) break;  // all further divisors vanish
    out[k - 1] = d[k] / d[k - 1];
  }
  return out;
}

/// Fourier-Motzkin feasibility for { x : A x >= b }.  Exact and completely
/// independent of the simplex implementation.
inline bool fm_feasible(const Mat& a, const Vec& b) {
  // Rows as (coeffs, rhs): coeffs . x >= rhs.
  std::vector<std::pair<Vec, Rat>> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back({a.row(r), b[r]});
  const std::size_t n = a.cols();

  auto normalize = [](std::pair<Vec, Rat>& row) {
    // Scale so the first nonzero coefficient is +-1; keeps duplicates visible.
    for (const Rat& c : row.first) {
      if (c == 0) continue;
      const Rat s = c < 0 ? -c : c;
      for (Rat& e : row.first) e /= s;
      row.second /= s;
      return;
    }
  };

  for (std::size_t var = 0; var < n; ++var) {
    std::vector<std::pair<Vec, Rat>> lower, upper, rest;
    for (auto& row : rows) {
      const Rat c = row.first[var];
      if (c > 0) lower.push_back(row);        // x_var >= (rhs - other) / c
      else if (c < 0) upper.push_back(row);   // x_var <= ...
      else rest.push_back(row);
    }
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // Eliminate: (1/c_lo) * lo + (-1/c_up) * up.
        const Rat cl = lo.first[var], cu = -up.first[var];
        Vec coeffs(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) coeffs[j] = lo.first[j] / cl + up.first[j] / cu;
        std::pair<Vec, Rat> merged{std::move(coeffs), lo.second / cl + up.second / cu};
        merged.first[var] = 0;
        rest.push_back(std::move(merged));
      }
    for (auto& row : rest) normalize(row);
    std::sort(rest.begin(), rest.end(),
              [](const auto& x, const auto& y) { return x.first == y.first ? x.second < y.second : x.first < y.first; });
    // Keep only the strongest rhs per coefficient vector.
    std::vector<std::pair<Vec, Rat>> dedup;
    for (auto it = rest.rbegin(); it != rest.rend(); ++it)
      if (dedup.empty() || dedup.back().first != it->first) dedup.push_back(*it);
    rows = std::move(dedup);
  }
  for (const auto& row : rows)
    if (row.second > 0) return false;  // 0 >= positive
  return true;
}

}  // namespace mfan::oracles
