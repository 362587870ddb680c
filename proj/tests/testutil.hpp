#pragma once

#include <random>

#include "mfan/exactlin.hpp"

namespace mfan::testutil {

inline Rat q(long long num, long long den = 1) { return Rat(Int(num)) / Rat(Int(den)); }

inline Vec vec(std::initializer_list<long long> values) {
  Vec v;
  for (long long x : values) v.push_back(Rat(Int(x)));
  return v;
}

/// Random rational with small numerator and denominator.
inline Rat random_rat(std::mt19937_64& rng, int bound = 9, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rat(num(rng)) / Rat(den(rng));
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound = 9) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rat(rng, bound);
  return m;
}

inline Mat random_int_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Product of random elementary integer operations; always determinant +-1,
/// entries kept small by bounding the shear coefficients.
inline Mat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 6) {
  Mat u = Mat::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    switch (kind(rng)) {
      case 0: {  // row_i += c * row_j
        const Rat c = coef(rng);
        for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
        break;
      }
      case 1:  // swap rows
        for (std::size_t k = 0; k < n; ++k) std::swap(u(i, k), u(j, k));
        break;
      default:  // negate a row
        for (std::size_t k = 0; k < n; ++k) u(i, k) = -u(i, k);
    }
  }
  return u;
}

}  // namespace mfan::testutil
