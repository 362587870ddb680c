#include "doctest.h"

#include "fixtures.hpp"
#include "mfan/cohomology.hpp"
#include "mfan/gallery.hpp"
#include "testutil.hpp"

using namespace mfan;
using namespace mfan::testutil;

namespace {

MarkedFan g(const char* name) { return gallery_marked_fan(name); }

using I64 = std::vector<std::int64_t>;

Vec random_generic_covector(std::mt19937_64& rng, int dim) {
  Vec xi(dim);
  std::uniform_int_distribution<int> dist(-99, 99);
  for (auto& e : xi) e = dist(rng);
  return xi;
}

}  // namespace

TEST_CASE("graded quotient data") {
  const GradedQuotient gq = graded_quotient(g("cp1"));
  CHECK(gq.m == 2);
  CHECK(gq.theta == Mat::from_rows({{1, -1}}));
}

TEST_CASE("elimination on the small gallery") {
  CHECK(betti_by_elimination(g("cp1")).b == I64{1, 1});
  CHECK(betti_by_elimination(g("cp2")).b == I64{1, 1, 1});
  CHECK(betti_by_elimination(g("point")).b == I64{1});
  CHECK(betti_by_elimination(g("hopf")).b == I64{1, 1});
}

TEST_CASE("classical even Betti numbers of the toric gallery") {
  CHECK(betti_by_elimination(g("cp1xcp1")).b == I64{1, 2, 1});
  CHECK(betti_by_elimination(g("hirzebruch1")).b == I64{1, 2, 1});
  CHECK(betti_by_elimination(g("octahedral")).b == I64{1, 3, 3, 1});
}

TEST_CASE("h-vector transform") {
  CHECK(betti_by_hvector(g("cp2")).h == I64{1, 1, 1});
  CHECK(betti_by_hvector(g("octahedral")).h == I64{1, 3, 3, 1});
  CHECK(betti_by_hvector(g("point")).h == I64{1});
}

TEST_CASE("morse counts on simple polytopes") {
  const MarkedFan tri = g("cp2");
  const Certificate cert = polytopality(tri);
  CHECK(betti_by_morse(tri, cert, vec({1, 2})).b == I64{1, 1, 1});

  const MarkedFan oct = g("octahedral");
  CHECK(betti_by_morse_auto(oct, polytopality(oct)).b == I64{1, 3, 3, 1});

  const MarkedFan seg = g("cp1");
  CHECK(betti_by_morse_auto(seg, polytopality(seg)).b == I64{1, 1});
}

TEST_CASE("degenerate functionals are reported") {
  const MarkedFan oct = g("octahedral");
  const Certificate cert = polytopality(oct);
  CHECK_THROWS_AS(betti_by_morse(oct, cert, vec({0, 0, 0})), DegenerateFunctional);
}

TEST_CASE("hodge table is diagonal") {
  const BettiVector bv = betti_by_elimination(g("cp2"));
  const auto table = hodge_diamond(bv);
  REQUIRE(table.size() == 3);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) CHECK(table[p][q] == (p == q ? bv.b[p] : 0));

  const auto hopf = hodge_diamond(betti_by_elimination(g("hopf")));
  CHECK(hopf == std::vector<I64>{{1, 0}, {0, 1}});

  BettiVector uncertified = betti_by_hvector(g("cp2"));
  CHECK_THROWS_AS(hodge_diamond(uncertified), NotPolytopal);
}

TEST_CASE("forgetful kernel dimensions") {
  const Certificate c1 = polytopality(g("cp1"));
  CHECK(forgetful_kernel_dims(g("cp1"), c1) == I64{0, 1});
  const Certificate c2 = polytopality(g("cp2"));
  CHECK(forgetful_kernel_dims(g("cp2"), c2)[1] == 2);
  const Certificate cp = polytopality(g("point"));
  CHECK(forgetful_kernel_dims(g("point"), cp) == I64{0});
}

TEST_CASE("non-polytopal fans are gated") {
  const MarkedFan tc = fixtures::twisted_cube();
  CHECK_THROWS_AS(betti_by_elimination(tc), NotPolytopal);
  // The raw graded dimensions stay available for auditing.
  const BettiVector raw = betti_unchecked(tc);
  CHECK(raw.b.size() == 4);
  CHECK(!raw.certified);
  // h-vector needs no certificate; the complex is still a sphere.
  CHECK(betti_by_hvector(tc).h == I64{1, 5, 5, 1});
}

TEST_CASE("three oracles agree on the gallery") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    const MarkedFan mf = gallery_marked_fan(name);
    const Certificate cert = polytopality(mf);
    const BettiVector e = betti_by_elimination(mf, cert);
    const BettiVector h = betti_by_hvector(mf);
    const BettiVector m = betti_by_morse_auto(mf, cert);
    CHECK(e == h);
    CHECK(h == m);
  }
}

TEST_CASE("structural invariants of the betti vectors") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    const MarkedFan mf = gallery_marked_fan(name);
    const BettiVector bv = betti_by_hvector(mf);
    const int n = bv.n;
    REQUIRE(bv.h.size() == static_cast<std::size_t>(n + 1));
    for (int d = 0; d <= n; ++d) CHECK(bv.h[d] == bv.h[n - d]);  // duality
    std::int64_t total = 0;
    for (const auto& h : bv.h) total += h;
    std::int64_t cones = 0;
    for (const auto& c : mf.maximal_cones) cones += (c.empty() && mf.dim > 0) ? 0 : 1;
    CHECK(total == cones);  // one critical point per maximal cone
    CHECK(bv.b.front() == 1);
    CHECK(bv.b.back() == 1);
  }
}

TEST_CASE("morse counts do not depend on the certificate or functional") {
  std::mt19937_64 rng(59);
  for (const char* name : {"cp2", "cp1xcp1", "octahedral", "hopf"}) {
    CAPTURE(name);
    const MarkedFan mf = g(name);
    const BettiVector expect = betti_by_hvector(mf);
    const Vec base = fixtures::base_offsets(name);
    int done = 0;
    for (int trial = 0; trial < 24 && done < 3; ++trial) {
      Vec b = base;
      for (auto& e : b) e += random_rat(rng, 1, 5);
      Certificate cert;
      cert.kind = Certificate::Kind::Feasible;
      cert.b = b;
      if (!build_polytope(mf, b).admissible) continue;
      try {
        const BettiVector got = betti_by_morse(mf, cert, random_generic_covector(rng, mf.dim));
        CHECK(got == expect);
        ++done;
      } catch (const DegenerateFunctional&) {
        continue;
      }
    }
    CHECK(done == 3);
  }
}

TEST_CASE("isomorphic marked fans share betti vectors") {
  std::mt19937_64 rng(61);
  for (const char* name : {"cp2", "hirzebruch1", "octahedral"}) {
    CAPTURE(name);
    const MarkedFan a = g(name);
    MarkedFan b = a;
    const Mat u = random_unimodular(rng, a.dim);
    b.lambda = u * a.lambda;
    b.gamma = u * a.gamma;
    REQUIRE(are_isomorphic(a, b).has_value());
    CHECK(betti_by_elimination(a) == betti_by_elimination(b));
  }
}
