#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfan/fan.hpp"

namespace mfan {

/// Complete simplicial marked fan candidate: a rational vector space of
/// dimension `dim`, a finitely generated group given by the columns of
/// `gamma`, one marking vector per ray as the columns of `lambda` (the
/// markings double as the ray generators), and maximal cones as 0-based
/// index sets.
struct MarkedFan {
  int dim = 0;
  Mat gamma;   // dim x g
  Mat lambda;  // dim x m
  std::vector<std::vector<int>> maximal_cones;
};

/// The fan spanned by the markings.
Fan induced_fan(const MarkedFan& mf);

struct MarkedFanReport {
  bool gamma_spans = false;      // generators span the ambient space over Q
  bool lambda_in_gamma = false;  // every marking lies in the group
  bool fan_ok = false;           // cones pairwise intersect properly
  bool simplicial = false;
  bool complete = false;
  std::vector<std::string> diagnostics;
  FanReport fan_detail;

  /// Admission to the class of complete simplicial marked fans.
  bool in_class() const {
    return gamma_spans && lambda_in_gamma && fan_ok && simplicial && complete;
  }
};

MarkedFanReport validate_marked_fan(const MarkedFan& mf, unsigned seed = kDefaultSeed);

/// Isomorphism witness: an invertible matrix phi with
/// phi * lambda1[i] == lambda2[ray_map[i]] for every ray, carrying maximal
/// cones onto maximal cones bijectively, and phi(Gamma1) == Gamma2.
struct MarkedFanIso {
  Mat matrix;
  std::vector<int> ray_map;
};

/// Searches for an isomorphism by backtracking over ray bijections that
/// respect cone structure; each candidate pins the linear map on a spanning
/// subset of the markings, so most branches die immediately.  Both inputs
/// must validate (NotValidated otherwise).  Returns nullopt when no
/// isomorphism exists.
std::optional<MarkedFanIso> are_isomorphic(const MarkedFan& a, const MarkedFan& b,
                                           unsigned seed = kDefaultSeed);

/// Exactly re-checks a claimed witness; used by tests and the CLI.
bool verify_iso(const MarkedFan& a, const MarkedFan& b, const MarkedFanIso& iso);

}  // namespace mfan
