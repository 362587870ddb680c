#include "mfan/polytope.hpp"

#include <algorithm>

#include "mfan/simplex.hpp"

namespace mfan {

namespace {

Polytope build_from(int dim, const Mat& mus, const std::vector<std::vector<int>>& cones,
                    const Vec& b) {
  if (b.size() != mus.cols()) throw DimensionMismatch("offset count differs from facet count");
  Polytope p;
  p.dim = dim;
  p.mus = mus;
  p.b = b;
  p.cones = cones;
  p.admissible = true;
  for (const auto& cone : cones) {
    Mat system(cone.size(), dim);
    Vec rhs(cone.size());
    for (std::size_t k = 0; k < cone.size(); ++k) {
      for (int i = 0; i < dim; ++i) system(k, i) = mus(i, cone[k]);
      rhs[k] = b[cone[k]];
    }
    if (rank(system) != cone.size() || cone.size() != static_cast<std::size_t>(dim))
      throw SingularVertexSystem("vertex system of a maximal cone is singular");
    const auto v = solve(system, rhs);
    if (!v) throw SingularVertexSystem("vertex system of a maximal cone is inconsistent");
    p.vertices.push_back(*v);
  }
  for (std::size_t c = 0; c < cones.size() && p.admissible; ++c) {
    for (std::size_t j = 0; j < mus.cols(); ++j) {
      if (std::find(cones[c].begin(), cones[c].end(), static_cast<int>(j)) != cones[c].end())
        continue;
      if (dot(p.vertices[c], mus.column(j)) <= b[j]) {
        p.admissible = false;
        break;
      }
    }
  }
  return p;
}

bool same_reference(const Polytope& p, const Polytope& q) {
  return p.dim == q.dim && p.mus == q.mus && p.cones == q.cones;
}

}  // namespace

Polytope build_polytope(const MarkedFan& fan, const Vec& b) {
  return build_from(fan.dim, fan.lambda, fan.maximal_cones, b);
}

Mat polytopality_constraints(const MarkedFan& fan) {
  const int n = fan.dim;
  const std::size_t m = fan.lambda.cols();
  std::vector<Vec> rows;
  for (const auto& cone : fan.maximal_cones) {
    // v_sigma(b) = M_sigma^{-1} b|_sigma is linear in b.
    Mat system(cone.size(), n);
    for (std::size_t k = 0; k < cone.size(); ++k)
      for (int i = 0; i < n; ++i) system(k, i) = fan.lambda(i, cone[k]);
    const auto inv = inverse(system);
    if (!inv) throw SingularVertexSystem("vertex system of a maximal cone is singular");
    for (std::size_t j = 0; j < m; ++j) {
      if (std::find(cone.begin(), cone.end(), static_cast<int>(j)) != cone.end()) continue;
      // <v_sigma(b), mu_j> - b_j >= 1
      Vec coeff(m, Rat(0));
      const Vec w = inv->transposed() * fan.lambda.column(j);  // w_k multiplies b_{cone[k]}
      for (std::size_t k = 0; k < cone.size(); ++k) coeff[cone[k]] += w[k];
      coeff[j] -= 1;
      rows.push_back(std::move(coeff));
    }
  }
  Mat out(rows.size(), m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m; ++c) out(r, c) = rows[r][c];
  return out;
}

Certificate polytopality(const MarkedFan& fan) {
  const Mat constraints = polytopality_constraints(fan);
  std::vector<LinearConstraint> rows;
  for (std::size_t r = 0; r < constraints.rows(); ++r)
    rows.push_back(LinearConstraint{constraints.row(r), Rel::Ge, Rat(1)});
  const Feasibility f = find_feasible(rows, fan.lambda.cols());
  Certificate cert;
  if (f.feasible) {
    cert.kind = Certificate::Kind::Feasible;
    cert.b = f.point;
  } else {
    cert.kind = Certificate::Kind::Infeasible;
    // Normalize so the combined right-hand side is exactly 1: "0 >= 1".
    Rat total = 0;
    for (const Rat& y : f.dual) total += y;
    cert.farkas.resize(f.dual.size());
    for (std::size_t i = 0; i < f.dual.size(); ++i) cert.farkas[i] = f.dual[i] / total;
  }
  return cert;
}

bool verify_certificate(const MarkedFan& fan, const Certificate& cert) {
  if (cert.kind == Certificate::Kind::Feasible)
    return build_polytope(fan, cert.b).admissible;
  const Mat constraints = polytopality_constraints(fan);
  if (cert.farkas.size() != constraints.rows()) return false;
  Rat rhs = 0;
  Vec combo(constraints.cols(), Rat(0));
  for (std::size_t r = 0; r < constraints.rows(); ++r) {
    if (cert.farkas[r] < 0) return false;
    combo = combo + cert.farkas[r] * constraints.row(r);
    rhs += cert.farkas[r];
  }
  return is_zero(combo) && rhs > 0;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (!same_reference(p, q)) throw FanMismatch("Minkowski sum over different reference fans");
  return build_from(p.dim, p.mus, p.cones, p.b + q.b);
}

std::optional<Vec> translation_offset(const Polytope& p, const Polytope& q) {
  if (!same_reference(p, q)) throw FanMismatch("translation over different reference fans");
  return solve(p.mus.transposed(), p.b - q.b);
}

MomentEmbedding moment_embedding(const Polytope& p, const Mat& mus_full, const Vec& b_full) {
  if (!p.admissible) throw NotAdmissible("moment embedding needs an admissible polytope");
  const std::size_t m = p.mus.cols();
  const std::size_t n_full = mus_full.cols();
  if (b_full.size() != n_full) throw DimensionMismatch("offset count differs from normal count");
  if (n_full < m || mus_full.rows() != p.mus.rows())
    throw FanMismatch("full normal list must extend the reference fan's markings");
  for (std::size_t j = 0; j < m; ++j)
    if (mus_full.column(j) != p.mus.column(j) || b_full[j] != p.b[j])
      throw FanMismatch("full normal list must extend the reference fan's markings");

  MomentEmbedding out;
  out.map = mus_full.transposed();
  out.offset = Vec(n_full);
  for (std::size_t i = 0; i < n_full; ++i) out.offset[i] = -b_full[i];
  for (const Vec& v : p.vertices) {
    Vec img(n_full);
    for (std::size_t i = 0; i < n_full; ++i) {
      img[i] = dot(v, mus_full.column(i)) - b_full[i];
      if (img[i] < 0) throw Error("internal: admissible vertex violates its own half-space");
      if (i >= m && img[i] <= 0)
        throw SlackViolated("extra half-space touches the polytope at a vertex");
    }
    out.vertex_images.push_back(std::move(img));
  }
  return out;
}

}  // namespace mfan
