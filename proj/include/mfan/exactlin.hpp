#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mfan/errors.hpp"

namespace mfan {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Vec = std::vector<Rat>;

/// Parses "p" or "p/q" with optional sign.  The result is always canonical
/// (positive denominator, gcd(|p|, q) = 1).  Anything else, including float
/// syntax, raises ParseError.
Rat parse_rat(const std::string& text);

/// Canonical "p" / "p/q" form, inverse of parse_rat.
std::string format_rat(const Rat& value);

bool is_integral(const Rat& value);
Int to_int(const Rat& value);  // requires is_integral

/// Dense rational matrix, row-major.  Values are immutable in spirit: every
/// algorithm below returns fresh matrices instead of mutating inputs.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(std::initializer_list<std::initializer_list<int>> rows);
  /// Builds a dim x n matrix whose columns are the given vectors.
  static Mat from_columns(const std::vector<Vec>& columns, std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Vec column(std::size_t j) const;
  Vec row(std::size_t i) const;
  Mat columns(const std::vector<int>& indices) const;
  void append_column(const Vec& v);

  Mat transposed() const;
  Mat operator*(const Mat& other) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& other) const;
  bool operator==(const Mat& other) const = default;

  bool is_integer() const;
  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> entries_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

/// Rank over Q by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
std::size_t rank(const Mat& m);

/// Determinant of a square matrix, Bareiss elimination.
Rat det(const Mat& m);

/// Exact inverse; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Exact solution of M x = v; nullopt when inconsistent.  Free variables of
/// an underdetermined consistent system are set to zero, so the result is
/// deterministic; for square nonsingular M it is the unique solution.
std::optional<Vec> solve(const Mat& m, const Vec& v);

/// Columns form a basis of the right kernel { x : M x = 0 }.  The basis is
/// the reduced-echelon one: unit coordinate in each free column.
Mat kernel_basis(const Mat& m);

/// Reduced row echelon form; pivots collects the pivot column of each row.
Mat rref(const Mat& m, std::vector<int>* pivots = nullptr);

struct HnfResult {
  Mat h;  // column-style Hermite normal form, M * u == h
  Mat u;  // unimodular
};

/// Canonical column-style Hermite normal form of an integer matrix: pivot
/// rows strictly increase column by column, pivots positive, the remaining
/// entries of each pivot row reduced into [0, pivot), zero columns last.
/// The nonzero columns depend only on the column lattice of M.
HnfResult hnf(const Mat& m);

/// Diagonal of the Smith normal form: nonnegative, each entry divides the
/// next, length min(rows, cols).
std::vector<Int> snf_diag(const Mat& m);

// Finitely generated subgroups of Q^n, given by generator columns.

/// Membership of v in the Z-span of the columns of gens.
bool lattice_member(const Mat& gens, const Vec& v);

/// Equality of the Z-spans of two generator matrices with the same ambient
/// dimension.  Decided by comparing canonical HNFs after clearing
/// denominators at a common scale.
bool lattice_equal(const Mat& a, const Mat& b);

}  // namespace mfan
