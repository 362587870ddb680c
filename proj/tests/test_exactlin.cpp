#include "doctest.h"

#include "mfan/exactlin.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace mfan;
using namespace mfan::testutil;

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rat("3/6") == q(1, 2));
  CHECK(parse_rat("-5/7") == q(-5, 7));
  CHECK(parse_rat("4") == q(4));
  CHECK(parse_rat("-0") == q(0));
  CHECK(format_rat(q(-5, 7)) == "-5/7");
  CHECK(format_rat(q(8, 2)) == "4");
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("2/"), ParseError);
}

TEST_CASE("rank basics") {
  CHECK(rank(Mat::identity(2)) == 2);
  CHECK(rank(Mat(3, 3)) == 0);
  CHECK(rank(Mat::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basics") {
  CHECK(kernel_basis(Mat::identity(3)).cols() == 0);

  const Mat row = Mat::from_rows({{1, 1}});
  const Mat k = kernel_basis(row);
  REQUIRE(k.cols() == 1);
  // forced up to scale: (1, -1)
  CHECK(k(0, 0) * q(-1) == k(1, 0));
  CHECK((row * k).is_zero());

  // evaluation map of the projective line realization
  const Mat psi = Mat::from_rows({{1, -1, 1}});
  const Mat kp = kernel_basis(psi);
  CHECK(kp.cols() == 2);
  CHECK((psi * kp).is_zero());
}

TEST_CASE("hnf canonical form and transform") {
  SUBCASE("worked example") {
    const Mat m = Mat::from_rows({{2, 1}, {0, 1}});
    const auto [h, u] = hnf(m);
    CHECK(h == Mat::from_rows({{1, 0}, {1, 2}}));
    CHECK(m * u == h);
    const Rat du = det(u);
    CHECK((du == 1 || du == -1));
  }
  SUBCASE("identity") {
    const auto [h, u] = hnf(Mat::identity(3));
    CHECK(h == Mat::identity(3));
    CHECK(u == Mat::identity(3));
  }
  SUBCASE("gcd column") {
    // One column: the only unimodular transforms are +-1, so the canonical
    // form is the primitive direction (2,3) times the content gcd 2.
    const Mat m = Mat::from_rows({{4}, {6}});
    const auto [h, u] = hnf(m);
    CHECK(h == Mat::from_rows({{2}, {3}}) * Mat::from_rows({{2}}));
    CHECK(m * u == h);
    CHECK(snf_diag(m) == std::vector<Int>{2});
  }
}

TEST_CASE("hnf depends only on the column lattice") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Mat m = random_int_mat(rng, n, n + trial % 2, 6);
    const Mat u = random_unimodular(rng, m.cols());
    const auto h1 = hnf(m).h;
    const auto h2 = hnf(m * u).h;
    CHECK(h1 == h2);
    CHECK(m * hnf(m).u == h1);
  }
}

TEST_CASE("snf examples and oracle") {
  CHECK(snf_diag(Mat::identity(4)) == std::vector<Int>{1, 1, 1, 1});
  CHECK(snf_diag(Mat::from_rows({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
  CHECK(snf_diag(Mat::from_rows({{1, 0}, {0, 0}})) == std::vector<Int>{1, 0});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat m = random_int_mat(rng, 3, 3, 5);
    CHECK(snf_diag(m) == oracles::snf_by_minor_gcd(m));
  }
}

TEST_CASE("snf invariant under unimodular multiplication") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat m = random_int_mat(rng, 3, 4, 5);
    const Mat l = random_unimodular(rng, 3);
    const Mat r = random_unimodular(rng, 4);
    CHECK(snf_diag(l * m * r) == snf_diag(m));
  }
}

TEST_CASE("solve examples") {
  const Vec v = vec({5, -3});
  CHECK(solve(Mat::identity(2), v) == v);
  CHECK(solve(Mat::from_rows({{1, 1}, {1, -1}}), vec({2, 0})) == vec({1, 1}));
  CHECK(!solve(Mat::from_rows({{1, 1}, {2, 2}}), vec({1, 3})).has_value());
}

TEST_CASE("rank-nullity and solve round trip on random matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat m = random_mat(rng, 2 + trial % 3, 2 + (trial / 3) % 4);
    const Mat k = kernel_basis(m);
    CHECK((m * k).is_zero());
    CHECK(rank(m) + k.cols() == m.cols());

    Vec x(m.cols());
    for (auto& e : x) e = random_rat(rng);
    const Vec rhs = m * x;
    const auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == rhs);
  }
}

TEST_CASE("lattice membership and equality") {
  const Mat gens = Mat::from_rows({{2, 1}, {0, 1}});
  CHECK(lattice_member(gens, vec({1, 1})));
  CHECK(lattice_member(gens, vec({3, 1})));
  CHECK(!lattice_member(gens, vec({1, 0})));  // (1,0) has odd x - y

  // <1, 5/7> = (1/7) Z
  Mat g17(1, 2);
  g17(0, 0) = 1;
  g17(0, 1) = q(5, 7);
  Mat seventh(1, 1);
  seventh(0, 0) = q(1, 7);
  CHECK(lattice_equal(g17, seventh));
  CHECK(lattice_member(g17, {q(-5, 7)}));
  CHECK(!lattice_member(Mat::identity(1), {q(-1, 2)}));

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 15; ++trial) {
    const Mat m = random_int_mat(rng, 3, 3, 4);
    const Mat u = random_unimodular(rng, 3);
    CHECK(lattice_equal(m, m * u));
  }
}
