#pragma once

#include <optional>
#include <vector>

#include "mfan/markedfan.hpp"

namespace mfan {

/// Half-space presentation P = { x : <x, mu_i> >= b_i } over a fixed
/// complete simplicial reference fan; the inner normals mu_i are the
/// markings of that fan.  Vertices are derived, one per maximal cone, by
/// solving the active facet equations; `admissible` records whether every
/// off-cone inequality is strict at every vertex (equivalently, the inner
/// normal fan of P is the reference fan).
struct Polytope {
  int dim = 0;
  Mat mus;  // dim x m
  Vec b;
  std::vector<std::vector<int>> cones;
  std::vector<Vec> vertices;  // aligned with cones
  bool admissible = false;
};

Polytope build_polytope(const MarkedFan& fan, const Vec& b);

/// Feasibility certificate for the existence of admissible offsets.
/// Feasible: `b` re-validates through build_polytope.  Infeasible: `farkas`
/// lists one nonnegative multiplier per strictness constraint (maximal cone
/// by maximal cone, off-cone rays in increasing order); the combination of
/// the constraint rows is the zero functional while the combination of the
/// right-hand sides is 1, i.e. the system forces 0 >= 1.
struct Certificate {
  enum class Kind { Feasible, Infeasible };
  Kind kind = Kind::Infeasible;
  Vec b;
  Vec farkas;
};

/// Decides whether some offset vector makes the polytope admissible.  The
/// strict system is linear and homogeneous in b, so strictness is replaced
/// by ">= 1" losslessly and settled by exact phase-1 simplex.
Certificate polytopality(const MarkedFan& fan);

/// Exact re-check of either certificate kind against its fan.
bool verify_certificate(const MarkedFan& fan, const Certificate& cert);

/// The constraint rows of the strict system, exposed for certificate
/// auditing: row r states  sum_j rows[r][j] * b_j >= 1.
Mat polytopality_constraints(const MarkedFan& fan);

/// Minkowski sum over a common reference fan: offsets add, and vertices add
/// cone by cone.  FanMismatch when the reference data differ.
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// The translation y with <y, mu_i> = b_i - b'_i when that system is
/// consistent (then P = Q + y), nullopt otherwise.
std::optional<Vec> translation_offset(const Polytope& p, const Polytope& q);

/// Affine embedding x -> mus_full^T x - b_full evaluated on the vertices.
/// Coordinates beyond the fan's own facets must be strictly positive on
/// every vertex (SlackViolated otherwise); the polytope must be admissible
/// (NotAdmissible).
struct MomentEmbedding {
  Mat map;     // N x dim
  Vec offset;  // length N, equals -b_full
  std::vector<Vec> vertex_images;
};

MomentEmbedding moment_embedding(const Polytope& p, const Mat& mus_full, const Vec& b_full);

}  // namespace mfan
