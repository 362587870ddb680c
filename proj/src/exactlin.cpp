#include "mfan/exactlin.hpp"

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>

namespace mfan {

namespace {

Int parse_int_token(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer in rational literal");
  std::size_t start = 0;
  if (s[0] == '+' || s[0] == '-') start = 1;
  if (start == s.size()) throw ParseError("sign without digits in rational literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid character in rational literal: \"" + s + "\"");
  }
  return Int(s);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int_token(text));
  const Int num = parse_int_token(text.substr(0, slash));
  const Int den = parse_int_token(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: \"" + text + "\"");
  return Rat(num) / Rat(den);  // division canonicalizes
}

std::string format_rat(const Rat& value) { return value.str(); }

bool is_integral(const Rat& value) { return denominator(value) == 1; }

Int to_int(const Rat& value) {
  if (!is_integral(value)) throw Error("expected integer, got " + value.str());
  return numerator(value);
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Mat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error("ragged initializer in Mat::from_rows");
    std::size_t j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& columns, std::size_t dim) {
  Mat m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != dim) throw Error("column length mismatch in Mat::from_columns");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Mat::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Mat Mat::columns(const std::vector<int>& indices) const {
  Mat m(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] < 0 || static_cast<std::size_t>(indices[j]) >= cols_)
      throw Error("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, indices[j]);
  }
  return m;
}

void Mat::append_column(const Vec& v) {
  if (v.size() != rows_) throw Error("column length mismatch in Mat::append_column");
  Mat m(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    m(i, cols_) = v[i];
  }
  *this = std::move(m);
}

Mat Mat::transposed() const {
  Mat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::operator*(const Mat& other) const {
  if (cols_ != other.rows_) throw Error("shape mismatch in Mat multiply");
  Mat m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, j) += a * other(k, j);
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error("shape mismatch in Mat * Vec");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Mat Mat::operator+(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error("shape mismatch in Mat add");
  Mat m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j) + other(i, j);
  return m;
}

bool Mat::is_integer() const {
  for (const Rat& e : entries_)
    if (!is_integral(e)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const Rat& e : entries_)
    if (e != 0) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("length mismatch in Vec add");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("length mismatch in Vec subtract");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rat& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("length mismatch in dot");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const Rat& e : v)
    if (e != 0) return false;
  return true;
}

namespace {

using IntRows = std::vector<std::vector<Int>>;

// Clears denominators row by row; rank and row space are unaffected.
IntRows scale_rows(const Mat& m) {
  IntRows rows(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat scaled = m(i, j) * Rat(l);
      rows[i][j] = numerator(scaled);
    }
  }
  return rows;
}

// Bareiss fraction-free elimination.  Returns rank; when det_out is given the
// matrix must be square and receives the exact determinant of the scaled
// integer rows.
std::size_t bareiss(IntRows& a, Int* det_out) {
  const std::size_t r = a.size();
  const std::size_t c = r == 0 ? 0 : a[0].size();
  Int prev = 1;
  std::size_t row = 0;
  int sign = 1;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t piv = row;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) {
      if (det_out) { *det_out = 0; return row; }
      continue;
    }
    if (piv != row) { std::swap(a[piv], a[row]); sign = -sign; }
    for (std::size_t i = row + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  if (det_out) *det_out = (row == r && r == c) ? Int(sign * prev) : Int(0);
  return row;
}

}  // namespace

std::size_t rank(const Mat& m) {
  IntRows a = scale_rows(m);
  return bareiss(a, nullptr);
}

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("det of non-square matrix");
  if (m.rows() == 0) return 1;
  Rat scale = 1;
  IntRows a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    scale *= Rat(l);
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = numerator(m(i, j) * Rat(l));
  }
  Int d;
  bareiss(a, &d);
  return Rat(d) / scale;
}

Mat rref(const Mat& m, std::vector<int>* pivots) {
  Mat a = m;
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    const Rat inv = Rat(1) / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    if (pivots) pivots->push_back(static_cast<int>(col));
    ++row;
  }
  return a;
}

std::optional<Vec> solve(const Mat& m, const Vec& v) {
  if (v.size() != m.rows()) throw Error("shape mismatch in solve");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  std::vector<int> pivots;
  const Mat r = rref(aug, &pivots);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == static_cast<int>(m.cols())) return std::nullopt;  // 0 = 1 row
  Vec x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots;
  const Mat r = rref(aug, &pivots);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t k = 0; k < n; ++k)
    if (pivots[k] != static_cast<int>(k)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Mat kernel_basis(const Mat& m) {
  std::vector<int> pivots;
  const Mat r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis(m.cols(), 0);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec col(m.cols());
    col[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) col[pivots[k]] = -r(k, f);
    basis.append_column(col);
  }
  return basis;
}

namespace {

struct IntCols {
  std::size_t rows = 0;
  std::vector<std::vector<Int>> cols;  // column-major
};

IntCols to_int_cols(const Mat& m, const char* caller) {
  if (!m.is_integer()) throw Error(std::string(caller) + " requires integer entries");
  IntCols a;
  a.rows = m.rows();
  a.cols.assign(m.cols(), std::vector<Int>(m.rows()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) a.cols[j][i] = numerator(m(i, j));
  return a;
}

Int floor_div_int(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

HnfResult hnf(const Mat& m) {
  IntCols w = to_int_cols(m, "hnf");
  const std::size_t ncols = w.cols.size();
  IntCols u;
  u.rows = ncols;
  u.cols.assign(ncols, std::vector<Int>(ncols));
  for (std::size_t j = 0; j < ncols; ++j) u.cols[j][j] = 1;

  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < w.rows; ++i) w.cols[dst][i] += f * w.cols[src][i];
    for (std::size_t i = 0; i < ncols; ++i) u.cols[dst][i] += f * u.cols[src][i];
  };
  auto swap_col = [&](std::size_t a, std::size_t b) {
    std::swap(w.cols[a], w.cols[b]);
    std::swap(u.cols[a], u.cols[b]);
  };
  auto negate_col = [&](std::size_t j) {
    for (auto& e : w.cols[j]) e = -e;
    for (auto& e : u.cols[j]) e = -e;
  };

  std::size_t next = 0;  // next pivot column
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  for (std::size_t i = 0; i < w.rows && next < ncols; ++i) {
    // Euclid over the entries of row i in columns next..end.
    while (true) {
      std::size_t best = ncols;
      for (std::size_t j = next; j < ncols; ++j) {
        if (w.cols[j][i] == 0) continue;
        if (best == ncols || abs(w.cols[j][i]) < abs(w.cols[best][i])) best = j;
      }
      if (best == ncols) break;
      if (best != next) swap_col(next, best);
      if (w.cols[next][i] < 0) negate_col(next);
      bool clean = true;
      for (std::size_t j = next + 1; j < ncols; ++j) {
        if (w.cols[j][i] == 0) continue;
        add_col(j, next, -floor_div_int(w.cols[j][i], w.cols[next][i]));
        if (w.cols[j][i] != 0) clean = false;
      }
      if (clean) break;
    }
    if (w.cols[next][i] != 0) {
      // Reduce earlier columns in the pivot row into [0, pivot).
      for (std::size_t j = 0; j < next; ++j) {
        const Int q = floor_div_int(w.cols[j][i], w.cols[next][i]);
        if (q != 0) add_col(j, next, -q);
      }
      pivots.emplace_back(i, next);
      ++next;
    }
  }

  HnfResult out;
  out.h = Mat(w.rows, ncols);
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < w.rows; ++i) out.h(i, j) = Rat(w.cols[j][i]);
  out.u = Mat(ncols, ncols);
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < ncols; ++i) out.u(i, j) = Rat(u.cols[j][i]);
  return out;
}

std::vector<Int> snf_diag(const Mat& m) {
  if (!m.is_integer()) throw Error("snf_diag requires integer entries");
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<Int>> a(r, std::vector<Int>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a[i][j] = numerator(m(i, j));

  const std::size_t n = std::min(r, c);
  std::vector<Int> diag(n, Int(0));
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (a[i][j] == 0) continue;
          if (bi == r || abs(a[i][j]) < abs(a[bi][bj])) { bi = i; bj = j; }
        }
      if (bi == r) break;  // trailing block is zero
      std::swap(a[t], a[bi]);
      for (std::size_t i = t; i < r; ++i) std::swap(a[i][t], a[i][bj]);

      bool reduced = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        const Int q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < c; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) reduced = false;
      }
      if (!reduced) continue;
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        const Int q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < r; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) reduced = false;
      }
      if (!reduced) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < c; ++jj) a[t][jj] += a[i][jj];
            divides = false;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) a[t][t] = -a[t][t];
    diag[t] = a[t][t];
    if (diag[t] == 0) break;  // rest of the diagonal stays zero
  }
  return diag;
}

namespace {

// Clears denominators of [gens | extra] with one global scale.
Int common_denominator(const Mat& m, const Vec* extra) {
  Int l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
  if (extra)
    for (const Rat& e : *extra) l = lcm(l, denominator(e));
  return l;
}

Mat scaled_by(const Mat& m, const Int& s) {
  Mat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * Rat(s);
  return out;
}

Mat nonzero_hnf_columns(const Mat& m) {
  const Mat h = hnf(m).h;
  Mat out(h.rows(), 0);
  for (std::size_t j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) { zero = false; break; }
    if (!zero) out.append_column(h.column(j));
  }
  return out;
}

}  // namespace

bool lattice_member(const Mat& gens, const Vec& v) {
  if (v.size() != gens.rows()) throw Error("shape mismatch in lattice_member");
  const Int s = common_denominator(gens, &v);
  const Mat h = hnf(scaled_by(gens, s)).h;
  Vec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * Rat(s);
  // Forward substitution through the lower-triangular pivot structure: each
  // pivot row determines one coefficient, which must come out integral; rows
  // without a pivot must reduce to zero.
  std::vector<Rat> coeff;
  std::size_t col = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Rat rem = w[i];
    for (std::size_t j = 0; j < col; ++j) rem -= h(i, j) * coeff[j];
    if (col < h.cols() && h(i, col) != 0) {
      const Rat c = rem / h(i, col);
      if (!is_integral(c)) return false;
      coeff.push_back(c);
      ++col;
    } else if (rem != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error("ambient dimension mismatch in lattice_equal");
  Int s = lcm(common_denominator(a, nullptr), common_denominator(b, nullptr));
  return nonzero_hnf_columns(scaled_by(a, s)) == nonzero_hnf_columns(scaled_by(b, s));
}

}  // namespace mfan
