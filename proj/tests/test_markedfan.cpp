#include "doctest.h"

#include "mfan/gallery.hpp"
#include "mfan/markedfan.hpp"
#include "testutil.hpp"

using namespace mfan;
using namespace mfan::testutil;

TEST_CASE("projective line marked fan validates") {
  const MarkedFan mf = std::get<MarkedFan>(gallery("cp1"));
  const auto rep = validate_marked_fan(mf);
  CHECK(rep.gamma_spans);
  CHECK(rep.lambda_in_gamma);
  CHECK(rep.fan_ok);
  CHECK(rep.simplicial);
  CHECK(rep.complete);
  CHECK(rep.in_class());
}

TEST_CASE("marking outside the group is flagged") {
  MarkedFan mf = std::get<MarkedFan>(gallery("cp1"));
  mf.lambda(0, 1) = q(-1, 2);
  const auto rep = validate_marked_fan(mf);
  CHECK(!rep.lambda_in_gamma);
  CHECK(!rep.in_class());
}

TEST_CASE("rational Hopf model validates") {
  const MarkedFan mf = std::get<MarkedFan>(gallery("hopf"));
  CHECK(validate_marked_fan(mf).in_class());
}

TEST_CASE("the whole gallery validates") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    GalleryEntry e = gallery(name);
    if (std::holds_alternative<MarkedFan>(e))
      CHECK(validate_marked_fan(std::get<MarkedFan>(e)).in_class());
    MarkedFan mf = gallery_marked_fan(name);
    CHECK(validate_marked_fan(mf).in_class());
  }
}

TEST_CASE("isomorphism with itself returns a verifying witness") {
  for (const char* name : {"cp1", "cp2", "octahedral", "hopf", "point"}) {
    CAPTURE(name);
    const MarkedFan mf = gallery_marked_fan(name);
    const auto iso = are_isomorphic(mf, mf);
    REQUIRE(iso.has_value());
    CHECK(verify_iso(mf, mf, *iso));
  }
}

TEST_CASE("coordinate-permuted copy is isomorphic by a permutation-like map") {
  const MarkedFan a = std::get<MarkedFan>(gallery("cp2"));
  MarkedFan b = a;
  // Swap the two coordinates of every datum.
  for (std::size_t j = 0; j < b.lambda.cols(); ++j) std::swap(b.lambda(0, j), b.lambda(1, j));
  for (std::size_t j = 0; j < b.gamma.cols(); ++j) std::swap(b.gamma(0, j), b.gamma(1, j));
  const auto iso = are_isomorphic(a, b);
  REQUIRE(iso.has_value());
  CHECK(verify_iso(a, b, *iso));
}

TEST_CASE("scaling the markings breaks the isomorphism through the group") {
  const MarkedFan a = std::get<MarkedFan>(gallery("cp1"));
  MarkedFan b = a;
  b.lambda(0, 0) = 2;
  b.lambda(0, 1) = -2;
  // phi is forced to +-2 on the marking condition, but then phi(Z) = 2Z != Z.
  CHECK(!are_isomorphic(a, b).has_value());
}

TEST_CASE("isomorphism is symmetric and witnesses invert") {
  std::mt19937_64 rng(41);
  for (const char* name : {"cp2", "cp1xcp1", "hirzebruch1"}) {
    CAPTURE(name);
    const MarkedFan a = std::get<MarkedFan>(gallery(name));
    MarkedFan b = a;
    const Mat u = random_unimodular(rng, a.dim);
    b.lambda = u * a.lambda;
    b.gamma = u * a.gamma;
    const auto fwd = are_isomorphic(a, b);
    REQUIRE(fwd.has_value());
    CHECK(verify_iso(a, b, *fwd));
    const auto bwd = are_isomorphic(b, a);
    REQUIRE(bwd.has_value());
    CHECK(verify_iso(b, a, *bwd));
    // The forward witness inverts exactly.
    const auto inv = inverse(fwd->matrix);
    REQUIRE(inv.has_value());
    MarkedFanIso back;
    back.matrix = *inv;
    back.ray_map.assign(a.lambda.cols(), 0);
    for (std::size_t i = 0; i < a.lambda.cols(); ++i) back.ray_map[fwd->ray_map[i]] = static_cast<int>(i);
    CHECK(verify_iso(b, a, back));
  }
}

TEST_CASE("fans with different combinatorics are not isomorphic") {
  const MarkedFan a = std::get<MarkedFan>(gallery("cp1xcp1"));
  const MarkedFan b = std::get<MarkedFan>(gallery("cp2"));
  CHECK(!are_isomorphic(a, b).has_value());

  // Same combinatorics, different geometry: the first Hirzebruch surface is
  // not isomorphic to the product of lines as a marked fan.
  const MarkedFan c = std::get<MarkedFan>(gallery("hirzebruch1"));
  CHECK(!are_isomorphic(a, c).has_value());
}

TEST_CASE("unvalidated inputs are rejected") {
  MarkedFan broken = std::get<MarkedFan>(gallery("cp1"));
  broken.maximal_cones = {{0}};
  CHECK_THROWS_AS(are_isomorphic(broken, broken), NotValidated);
}
