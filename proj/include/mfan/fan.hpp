#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfan/exactlin.hpp"

namespace mfan {

/// Seed used by every seeded procedure when the caller does not override it.
inline constexpr unsigned kDefaultSeed = 1;

/// Simplicial rational fan: ray generators as columns, maximal cones as
/// 0-based index sets into the rays.  The zero fan of R^0 is represented by
/// dim = 0, no rays and the single empty cone.
struct Fan {
  int dim = 0;
  Mat rays;  // dim x m
  std::vector<std::vector<int>> maximal_cones;

  std::size_t ray_count() const { return rays.cols(); }
};

/// Abstract simplicial complex on {0..vertices-1} given by its facets.
struct SimplicialComplexK {
  int vertices = 0;
  std::vector<std::vector<int>> facets;
};

struct FanReport {
  bool simplicial_independent = false;
  bool pairwise_interiors_disjoint = false;
  bool pure_full_dim = false;
  bool wall_condition = false;
  bool complete = false;
  std::vector<std::string> diagnostics;

  bool ok() const {
    return simplicial_independent && pairwise_interiors_disjoint && pure_full_dim &&
           wall_condition && complete;
  }
};

/// Checks the fan axioms that the rest of the library relies on.
///
/// Interior disjointness of every pair of maximal cones is decided by an
/// exact strict-feasibility LP.  Completeness is certified for pure
/// simplicial fans by the wall condition (every ridge lies in exactly two
/// maximal cones) plus ray shooting: a deterministic probe set (unit vectors,
/// their pairwise sums, and seeded pseudo-random rational directions) must
/// land in exactly one cone interior each; probes that hit a boundary are
/// nudged by a fixed perturbation schedule.
FanReport validate_fan(const Fan& fan, unsigned seed = kDefaultSeed);

/// True when every maximal cone's ray matrix has all elementary divisors
/// equal to one, i.e. its generators extend to a basis of Z^dim.  Rays must
/// be primitive integer vectors (NonPrimitiveRay otherwise).
bool is_nonsingular(const Fan& fan);

/// The underlying complex: facets are the maximal cone index sets.
SimplicialComplexK underlying_complex(const Fan& fan);

/// Face counts (f_-1 = 1, f_0, ..., f_{d-1}) with d the largest facet size.
std::vector<std::int64_t> f_vector(const SimplicialComplexK& complex);

// Shared cone helpers.

/// dim x |cone| matrix of the cone's ray generators.
Mat cone_matrix(const Fan& fan, const std::vector<int>& cone);

/// Exact coordinates of p in the simplicial cone's ray basis; nullopt when p
/// is outside the cone's linear span or the rays are dependent.
std::optional<Vec> cone_coordinates(const Fan& fan, const std::vector<int>& cone, const Vec& p);

/// Membership of p in the (closed) simplicial cone.
bool in_cone(const Fan& fan, const std::vector<int>& cone, const Vec& p);

}  // namespace mfan
