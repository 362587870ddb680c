#include "mfan/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "mfan/simplex.hpp"

namespace mfan {

namespace {

std::string cone_name(const std::vector<int>& cone) {
  std::string s = "{";
  for (std::size_t k = 0; k < cone.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(cone[k] + 1);
  }
  return s + "}";
}

// Strict-feasibility LP: the relative interiors of two simplicial cones
// intersect iff U a = W b has a solution with every coordinate >= 1 (the
// system is homogeneous, so strict positivity rescales to >= 1).
bool interiors_intersect(const Fan& fan, const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t ka = a.size(), kb = b.size();
  if (ka == 0 || kb == 0) return false;  // relint of the zero cone is {0}, never shared strictly
  std::vector<LinearConstraint> rows;
  for (int i = 0; i < fan.dim; ++i) {
    LinearConstraint row;
    row.coeffs.assign(ka + kb, Rat(0));
    for (std::size_t j = 0; j < ka; ++j) row.coeffs[j] = fan.rays(i, a[j]);
    for (std::size_t j = 0; j < kb; ++j) row.coeffs[ka + j] = -fan.rays(i, b[j]);
    row.rel = Rel::Eq;
    row.rhs = 0;
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < ka + kb; ++j) {
    LinearConstraint row;
    row.coeffs.assign(ka + kb, Rat(0));
    row.coeffs[j] = 1;
    row.rel = Rel::Ge;
    row.rhs = 1;
    rows.push_back(std::move(row));
  }
  return find_feasible(rows, ka + kb).feasible;
}

bool positively_parallel(const Vec& u, const Vec& v) {
  // u = c v with c > 0.
  std::size_t k = 0;
  while (k < v.size() && v[k] == 0) ++k;
  if (k == v.size()) return is_zero(u);
  const Rat c = u[k] / v[k];
  if (c <= 0) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (u[i] != c * v[i]) return false;
  return true;
}

struct ProbeState {
  std::mt19937_64 rng;
  explicit ProbeState(unsigned seed) : rng(seed) {}

  Rat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    return Rat(num(rng)) / Rat(den(rng));
  }

  Vec random_direction(int dim) {
    while (true) {
      Vec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = random_rat();
      if (!is_zero(v)) return v;
    }
  }
};

}  // namespace

Mat cone_matrix(const Fan& fan, const std::vector<int>& cone) {
  return fan.rays.columns(cone);
}

std::optional<Vec> cone_coordinates(const Fan& fan, const std::vector<int>& cone, const Vec& p) {
  return solve(cone_matrix(fan, cone), p);
}

bool in_cone(const Fan& fan, const std::vector<int>& cone, const Vec& p) {
  const Mat m = cone_matrix(fan, cone);
  if (rank(m) != cone.size()) throw RaysDegenerate("cone " + cone_name(cone) + " has dependent rays");
  const auto c = solve(m, p);
  if (!c) return false;
  for (const Rat& x : *c)
    if (x < 0) return false;
  return true;
}

FanReport validate_fan(const Fan& fan, unsigned seed) {
  FanReport rep;
  const std::size_t m = fan.ray_count();
  auto cones = fan.maximal_cones;
  for (auto& cone : cones) std::sort(cone.begin(), cone.end());

  // Structural checks feed the interior-disjointness flag: duplicated rays or
  // nested maximal cones already violate the fan axioms.
  bool structural = true;
  for (std::size_t j = 0; j < m; ++j) {
    if (is_zero(fan.rays.column(j))) {
      rep.diagnostics.push_back("ray " + std::to_string(j + 1) + " is zero");
      structural = false;
    }
  }
  {
    std::vector<bool> used(m, false);
    for (const auto& cone : cones)
      for (int i : cone) used[i] = true;
    for (std::size_t j = 0; j < m; ++j)
      if (!used[j]) {
        rep.diagnostics.push_back("ray " + std::to_string(j + 1) + " lies in no maximal cone");
        structural = false;
      }
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (positively_parallel(fan.rays.column(a), fan.rays.column(b))) {
        rep.diagnostics.push_back("rays " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                                  " span the same 1-cone");
        structural = false;
      }
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = 0; b < cones.size(); ++b) {
      if (a == b) continue;
      if (std::includes(cones[b].begin(), cones[b].end(), cones[a].begin(), cones[a].end())) {
        rep.diagnostics.push_back("maximal cone " + cone_name(cones[a]) + " is contained in " +
                                  cone_name(cones[b]));
        structural = false;
      }
    }

  rep.simplicial_independent = true;
  for (const auto& cone : cones)
    if (rank(cone_matrix(fan, cone)) != cone.size()) {
      rep.simplicial_independent = false;
      rep.diagnostics.push_back("fan axiom: cone " + cone_name(cone) + " has dependent rays");
    }

  rep.pairwise_interiors_disjoint = structural;
  for (std::size_t a = 0; a < cones.size() && rep.pairwise_interiors_disjoint; ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b)
      if (interiors_intersect(fan, cones[a], cones[b])) {
        rep.pairwise_interiors_disjoint = false;
        rep.diagnostics.push_back("fan axiom: interiors of " + cone_name(cones[a]) + " and " +
                                  cone_name(cones[b]) + " intersect");
        break;
      }

  rep.pure_full_dim = !cones.empty();
  for (const auto& cone : cones)
    if (static_cast<int>(cone.size()) != fan.dim) rep.pure_full_dim = false;

  // Wall condition: in a pure simplicial fan every ridge lies in exactly two
  // maximal cones.  For dim 0 there is nothing to check.
  rep.wall_condition = false;
  if (fan.dim == 0) {
    rep.wall_condition = rep.pure_full_dim;
  } else if (rep.pure_full_dim && rep.simplicial_independent) {
    std::map<std::vector<int>, int> ridge_count;
    for (const auto& cone : cones)
      for (std::size_t drop = 0; drop < cone.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t k = 0; k < cone.size(); ++k)
          if (k != drop) ridge.push_back(cone[k]);
        ++ridge_count[ridge];
      }
    rep.wall_condition = true;
    for (const auto& [ridge, count] : ridge_count)
      if (count != 2) {
        rep.wall_condition = false;
        rep.diagnostics.push_back("wall " + cone_name(ridge) + " lies in " + std::to_string(count) +
                                  " maximal cones");
      }
  }

  // Completeness by ray shooting, meaningful only once everything above holds.
  rep.complete = false;
  if (rep.simplicial_independent && rep.pairwise_interiors_disjoint && rep.pure_full_dim &&
      rep.wall_condition) {
    if (fan.dim == 0) {
      rep.complete = cones.size() == 1 && cones[0].empty();
      return rep;
    }
    std::vector<Mat> inverses;
    inverses.reserve(cones.size());
    for (const auto& cone : cones) {
      auto inv = inverse(cone_matrix(fan, cone));
      if (!inv) throw RaysDegenerate("cone " + cone_name(cone) + " has dependent rays");
      inverses.push_back(std::move(*inv));
    }

    std::vector<Vec> probes;
    for (int i = 0; i < fan.dim; ++i)
      for (int s : {1, -1}) {
        Vec v(fan.dim);
        v[i] = s;
        probes.push_back(v);
      }
    const std::size_t units = probes.size();
    for (std::size_t a = 0; a < units; ++a)
      for (std::size_t b = a + 1; b < units; ++b) {
        Vec v = probes[a] + probes[b];
        if (!is_zero(v)) probes.push_back(v);
      }
    ProbeState state(seed);
    for (int k = 0; k < 8; ++k) probes.push_back(state.random_direction(fan.dim));

    rep.complete = true;
    for (Vec probe : probes) {
      int attempts = 0;
      while (true) {
        int strict = 0;
        bool boundary = false;
        for (std::size_t c = 0; c < cones.size(); ++c) {
          const Vec coords = inverses[c] * probe;
          bool inside = true, interior = true;
          for (const Rat& x : coords) {
            if (x < 0) { inside = false; break; }
            if (x == 0) interior = false;
          }
          if (!inside) continue;
          if (interior) ++strict;
          else boundary = true;
        }
        if (!boundary) {
          if (strict != 1) {
            rep.complete = false;
            rep.diagnostics.push_back("probe lies in " + std::to_string(strict) +
                                      " cone interiors; support does not cover the space once");
          }
          break;
        }
        if (++attempts > 32) throw ProbeTie("probe perturbation budget exhausted");
        probe = probe + Rat(1, Int(1) << (attempts + 4)) * state.random_direction(fan.dim);
      }
      if (!rep.complete) break;
    }
  }
  return rep;
}

bool is_nonsingular(const Fan& fan) {
  for (std::size_t j = 0; j < fan.ray_count(); ++j) {
    const Vec ray = fan.rays.column(j);
    Int g = 0;
    for (const Rat& e : ray) {
      if (!is_integral(e)) throw NonPrimitiveRay("ray " + std::to_string(j + 1) + " is not integral");
      g = gcd(g, numerator(e));
    }
    if (g != 1) throw NonPrimitiveRay("ray " + std::to_string(j + 1) + " is not primitive");
  }
  for (const auto& cone : fan.maximal_cones) {
    if (cone.empty()) continue;
    for (const Int& d : snf_diag(cone_matrix(fan, cone)))
      if (d != 1) return false;
  }
  return true;
}

SimplicialComplexK underlying_complex(const Fan& fan) {
  SimplicialComplexK k;
  k.vertices = static_cast<int>(fan.ray_count());
  for (const auto& cone : fan.maximal_cones)
    if (!cone.empty()) k.facets.push_back(cone);
  return k;
}

std::vector<std::int64_t> f_vector(const SimplicialComplexK& complex) {
  std::set<std::vector<int>> faces;
  for (auto facet : complex.facets) {
    std::sort(facet.begin(), facet.end());
    const std::size_t n = facet.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t(1) << i)) face.push_back(facet[i]);
      faces.insert(std::move(face));
    }
  }
  std::size_t top = 0;
  for (const auto& f : faces) top = std::max(top, f.size());
  std::vector<std::int64_t> fv(top + 1, 0);
  fv[0] = 1;  // the empty face
  for (const auto& f : faces) ++fv[f.size()];
  return fv;
}

}  // namespace mfan
