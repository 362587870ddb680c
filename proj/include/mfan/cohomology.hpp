#pragma once

#include <cstdint>
#include <vector>

#include "mfan/polytope.hpp"

namespace mfan {

/// Degreewise model of R[x_1..x_m] / (monomial ideal of non-faces + linear
/// forms from the markings).  theta(r, i) = <e_r^*, lambda_i>; the linear
/// forms restrict to a regular system on each maximal cone's variables,
/// which is asserted when the model is built.
struct GradedQuotient {
  int m = 0;
  SimplicialComplexK K;
  Mat theta;  // n x m
};

GradedQuotient graded_quotient(const MarkedFan& fan);

/// Even-degree Betti numbers b_0, b_2, ..., b_2n together with the h-vector;
/// the two sequences agree entrywise by construction, so cross-method
/// comparisons carry the content.  `certified` records whether the producing
/// method verified a polytopality certificate.
struct BettiVector {
  int n = 0;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> h;
  bool certified = false;

  bool operator==(const BettiVector& other) const { return n == other.n && b == other.b; }
};

/// Graded dimension count: monomials supported on faces modulo the span of
/// (linear form) x (lower-degree face monomial), degree by degree, exact
/// rank over Q.  Requires a verified feasibility certificate (NotPolytopal
/// otherwise); the overload without one decides polytopality first.
BettiVector betti_by_elimination(const MarkedFan& fan, const Certificate& cert);
BettiVector betti_by_elimination(const MarkedFan& fan);

/// The same graded dimensions with no polytopality gate, for auditing; the
/// result is not certified.
BettiVector betti_unchecked(const MarkedFan& fan);

/// h-vector transform of the face counts of the underlying complex.
BettiVector betti_by_hvector(const MarkedFan& fan);

/// Vertex count of the certificate's polytope graded by up-degree of a
/// generic linear functional: b_2d = #{vertices with d higher neighbours}.
/// xi must separate adjacent vertex values (DegenerateFunctional otherwise).
BettiVector betti_by_morse(const MarkedFan& fan, const Certificate& cert, const Vec& xi);

/// Retries betti_by_morse along the deterministic schedule
/// xi = (1, t, t^2, ...) with t = 2, 3, 5, ... until no ties occur.
BettiVector betti_by_morse_auto(const MarkedFan& fan, const Certificate& cert);

/// Diagonal Hodge table: H^{p,p} = b_2p, off-diagonal zero.  The input must
/// come from a certified computation (NotPolytopal otherwise).
std::vector<std::vector<std::int64_t>> hodge_diamond(const BettiVector& betti);

/// Per degree, the rank of the linear-form relations inside the degree-d
/// face-monomial space: the graded kernel dimensions of the forgetful map
/// from the equivariant model.  Reported alongside elimination for audit.
std::vector<std::int64_t> forgetful_kernel_dims(const MarkedFan& fan, const Certificate& cert);

}  // namespace mfan
