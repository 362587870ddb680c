#include "doctest.h"

#include "mfan/simplex.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace mfan;
using namespace mfan::testutil;

namespace {

std::vector<LinearConstraint> ge_rows(const Mat& a, const Vec& b) {
  std::vector<LinearConstraint> rows;
  for (std::size_t r = 0; r < a.rows(); ++r)
    rows.push_back(LinearConstraint{a.row(r), Rel::Ge, b[r]});
  return rows;
}

void check_point(const Mat& a, const Vec& b, const Vec& x) {
  for (std::size_t r = 0; r < a.rows(); ++r) CHECK(dot(a.row(r), x) >= b[r]);
}

void check_farkas(const Mat& a, const Vec& b, const Vec& y) {
  REQUIRE(y.size() == a.rows());
  Vec combo(a.cols(), Rat(0));
  Rat rhs = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    CHECK(y[r] >= 0);
    combo = combo + y[r] * a.row(r);
    rhs += y[r] * b[r];
  }
  CHECK(is_zero(combo));
  CHECK(rhs > 0);
}

}  // namespace

TEST_CASE("feasible systems") {
  const Mat a = Mat::from_rows({{1, 0}, {0, 1}, {-1, -1}});
  const Vec b = vec({0, 0, -3});
  const auto f = find_feasible(ge_rows(a, b), 2);
  REQUIRE(f.feasible);
  check_point(a, b, f.point);
}

TEST_CASE("infeasible systems carry a Farkas witness") {
  // x >= 1 and -x >= 0 cannot hold together.
  const Mat a = Mat::from_rows({{1}, {-1}});
  const Vec b = vec({1, 0});
  const auto f = find_feasible(ge_rows(a, b), 1);
  REQUIRE(!f.feasible);
  check_farkas(a, b, f.dual);
}

TEST_CASE("equality rows") {
  std::vector<LinearConstraint> rows;
  rows.push_back({vec({1, 1}), Rel::Eq, q(2)});
  rows.push_back({vec({1, -1}), Rel::Ge, q(5)});
  const auto f = find_feasible(rows, 2);
  REQUIRE(f.feasible);
  CHECK(f.point[0] + f.point[1] == 2);
  CHECK(f.point[0] - f.point[1] >= 5);

  rows.push_back({vec({0, 1}), Rel::Ge, q(0)});
  rows.push_back({vec({-1, 0}), Rel::Ge, q(0)});
  const auto g = find_feasible(rows, 2);
  CHECK(!g.feasible);
}

TEST_CASE("degenerate inputs") {
  CHECK(find_feasible({}, 3).feasible);

  std::vector<LinearConstraint> rows;
  rows.push_back({Vec{}, Rel::Ge, q(1)});  // 0 >= 1 over no variables
  const auto f = find_feasible(rows, 0);
  CHECK(!f.feasible);
}

TEST_CASE("agreement with Fourier-Motzkin on random systems") {
  std::mt19937_64 rng(23);
  int infeasible_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const std::size_t m = 3 + trial % 4;
    const Mat a = random_int_mat(rng, m, n, 3);
    Vec b(m);
    for (auto& e : b) e = random_rat(rng, 3, 2);
    const auto f = find_feasible(ge_rows(a, b), n);
    CHECK(f.feasible == oracles::fm_feasible(a, b));
    if (f.feasible) check_point(a, b, f.point);
    else { check_farkas(a, b, f.dual); ++infeasible_seen; }
  }
  CHECK(infeasible_seen > 0);  // the sample must exercise both branches
}
