#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfan/markedfan.hpp"

namespace mfan {

/// One complex direction of the subspace h, stored as the real pair
/// (re, im) ~ re + sqrt(-1) im in R^N.
struct HPair {
  Vec re, im;
};

/// Torus-quotient datum: rank N with lattice Z^N, a nonsingular fan with
/// primitive integer rays, and the subspace h given by l real pairs.
struct C2Triple {
  int N = 0;
  Fan fan;
  std::vector<HPair> h;
};

struct TripleReport {
  bool nonsingular = false;        // axiom (2): Delta is a nonsingular fan
  bool p_injective = false;        // axiom (3): the 2l real vectors are independent
  bool quotient_complete = false;  // axiom (4): q(Delta) is complete
  bool quotient_bijective = false; // axiom (4): sigma -> q(sigma) is bijective
  std::vector<std::string> diagnostics;

  bool ok() const { return nonsingular && p_injective && quotient_complete && quotient_bijective; }
};

TripleReport validate_triple(const C2Triple& t, unsigned seed = kDefaultSeed);

/// The projection matrix q : R^N -> R^(N-2l) whose kernel is the span of the
/// h pairs.  Rows come from the reduced-echelon complement of that span with
/// a fixed pivot rule, so the output is deterministic.
Mat quotient_map(const C2Triple& t);

/// Builds a triple realizing the marked fan: coordinates e_1..e_m map to the
/// markings, extra generators are appended (a minimal prefix of the declared
/// generators, then one repeat for parity) until the group is generated and
/// the kernel dimension is even, the fan becomes the coordinate-subspace fan
/// of the underlying complex, and the kernel basis of the evaluation map is
/// paired off into h.  Throws NotInClass when the input does not validate.
/// Caller-supplied extra generator columns override the automatic choice.
C2Triple realize(const MarkedFan& mf, const std::optional<Mat>& extra_gens = std::nullopt,
                 unsigned seed = kDefaultSeed);

/// The marked fan of a validated triple: ambient space R^(N-2l), group
/// generated by the images of the standard basis, markings the images of the
/// primitive ray generators, cones carried over.  NotValidated when the
/// triple fails its axioms.
MarkedFan quotient(const C2Triple& t, unsigned seed = kDefaultSeed);

struct PrincipalReport {
  bool surjective = false;
  bool cone_morphism = false;     // every cone of the source maps into a cone of the target
  bool h_mapped = false;          // complexified image of h0 lies in h
  bool ray_bijection = false;     // primitive generators correspond one to one
  bool kernel_connected = false;  // dalpha(Z^N0) = Z^N
  std::vector<std::string> diagnostics;

  bool principal() const { return surjective && cone_morphism && h_mapped && ray_bijection; }
};

/// Decides whether the torus homomorphism with differential `dalpha`
/// (an integer N x N0 matrix mapping lattice to lattice) presents the source
/// triple as a principal bundle over the target, and additionally whether
/// its kernel is connected.
PrincipalReport check_principal(const Mat& dalpha, const C2Triple& source, const C2Triple& target);

}  // namespace mfan
