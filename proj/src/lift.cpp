#include "mfan/lift.hpp"

#include <algorithm>

namespace mfan {

namespace {

Mat h_pair_matrix(const C2Triple& t) {
  Mat m(t.N, 0);
  for (const auto& pair : t.h) {
    if (pair.re.size() != static_cast<std::size_t>(t.N) ||
        pair.im.size() != static_cast<std::size_t>(t.N))
      throw DimensionMismatch("h pair length differs from N");
    m.append_column(pair.re);
    m.append_column(pair.im);
  }
  return m;
}

}  // namespace

Mat quotient_map(const C2Triple& t) {
  const Mat span = h_pair_matrix(t);
  std::vector<int> pivots;
  const Mat r = rref(span.transposed(), &pivots);
  if (pivots.size() != span.cols())
    throw DimensionMismatch("h pairs are dependent; quotient map undefined");
  std::vector<bool> is_pivot(t.N, false);
  for (int p : pivots) is_pivot[p] = true;
  const std::size_t qdim = t.N - pivots.size();
  Mat q(qdim, t.N);
  std::size_t row = 0;
  for (int f = 0; f < t.N; ++f) {
    if (is_pivot[f]) continue;
    q(row, f) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) q(row, pivots[k]) = -r(k, f);
    ++row;
  }
  return q;
}

TripleReport validate_triple(const C2Triple& t, unsigned seed) {
  TripleReport rep;

  if (t.fan.dim != t.N) {
    rep.diagnostics.push_back("fan ambient dimension differs from N");
    return rep;
  }

  // Axiom (2): the fan must be a fan and nonsingular for the lattice Z^N.
  const FanReport fr = validate_fan(t.fan, seed);
  bool fan_is_fan = fr.simplicial_independent && fr.pairwise_interiors_disjoint;
  try {
    rep.nonsingular = fan_is_fan && is_nonsingular(t.fan);
    if (fan_is_fan && !rep.nonsingular)
      rep.diagnostics.push_back("C2 axiom (2): a maximal cone does not extend to a lattice basis");
  } catch (const NonPrimitiveRay& e) {
    rep.nonsingular = false;
    rep.diagnostics.push_back(std::string("C2 axiom (2): ") + e.what());
  }
  if (!fan_is_fan)
    for (const auto& d : fr.diagnostics) rep.diagnostics.push_back("C2 axiom (2): " + d);

  // Axiom (3): p restricted to h is injective, i.e. the 2l real vectors are
  // linearly independent.
  const Mat span = h_pair_matrix(t);
  rep.p_injective = rank(span) == span.cols() && span.cols() <= static_cast<std::size_t>(t.N);
  if (!rep.p_injective) {
    rep.diagnostics.push_back("C2 axiom (3): p restricted to h is not injective");
    return rep;
  }

  // Axiom (4): the quotient fan is complete and sigma -> q(sigma) bijective.
  const Mat q = quotient_map(t);
  Fan qfan;
  qfan.dim = static_cast<int>(q.rows());
  qfan.rays = q * t.fan.rays;
  qfan.maximal_cones = t.fan.maximal_cones;
  bool rays_survive = true;
  for (std::size_t j = 0; j < qfan.rays.cols(); ++j)
    if (is_zero(qfan.rays.column(j))) rays_survive = false;
  if (!rays_survive) {
    rep.diagnostics.push_back("C2 axiom (4): a ray collapses to zero under q");
    return rep;
  }
  const FanReport qr = validate_fan(qfan, seed);
  rep.quotient_complete = qr.complete;
  if (!rep.quotient_complete)
    rep.diagnostics.push_back("C2 axiom (4): q(Delta) is not complete");
  rep.quotient_bijective = qr.simplicial_independent && qr.pairwise_interiors_disjoint;
  if (!rep.quotient_bijective)
    rep.diagnostics.push_back("C2 axiom (4): sigma -> q(sigma) is not bijective");
  return rep;
}

C2Triple realize(const MarkedFan& mf, const std::optional<Mat>& extra_gens, unsigned seed) {
  if (!validate_marked_fan(mf, seed).in_class())
    throw NotInClass("realize requires a validated complete simplicial marked fan");

  const std::size_t m = mf.lambda.cols();
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < m; ++j) gens.push_back(mf.lambda.column(j));

  if (extra_gens) {
    if (extra_gens->rows() != static_cast<std::size_t>(mf.dim))
      throw DimensionMismatch("extra generators have wrong dimension");
    for (std::size_t j = 0; j < extra_gens->cols(); ++j) {
      if (!lattice_member(mf.gamma, extra_gens->column(j)))
        throw Error("extra generator lies outside the group");
      gens.push_back(extra_gens->column(j));
    }
    if (!lattice_equal(Mat::from_columns(gens, mf.dim), mf.gamma))
      throw Error("markings plus extra generators do not generate the group");
    if ((gens.size() - mf.dim) % 2 != 0)
      throw Error("extra generators leave an odd kernel dimension");
  } else {
    // Minimal prefix of the declared generators until the group is
    // generated, then repeat the first one if the kernel would be odd.
    if (!lattice_equal(Mat::from_columns(gens, mf.dim), mf.gamma)) {
      for (std::size_t j = 0; j < mf.gamma.cols(); ++j) {
        gens.push_back(mf.gamma.column(j));
        if (lattice_equal(Mat::from_columns(gens, mf.dim), mf.gamma)) break;
      }
    }
    if ((gens.size() - mf.dim) % 2 != 0) {
      if (mf.gamma.cols() == 0) throw Error("cannot fix parity without generators");
      gens.push_back(mf.gamma.column(0));
    }
  }

  const std::size_t n2 = gens.size();
  C2Triple t;
  t.N = static_cast<int>(n2);
  t.fan.dim = t.N;
  t.fan.rays = Mat(n2, m);
  for (std::size_t j = 0; j < m; ++j) t.fan.rays(j, j) = 1;
  t.fan.maximal_cones = mf.maximal_cones;

  const Mat psi = Mat::from_columns(gens, mf.dim);
  const Mat kernel = kernel_basis(psi);
  if (kernel.cols() % 2 != 0) throw Error("internal: kernel dimension is odd");
  for (std::size_t j = 0; j + 1 < kernel.cols(); j += 2)
    t.h.push_back(HPair{kernel.column(j), kernel.column(j + 1)});
  return t;
}

MarkedFan quotient(const C2Triple& t, unsigned seed) {
  if (!validate_triple(t, seed).ok())
    throw NotValidated("quotient requires a validated triple");
  const Mat q = quotient_map(t);
  MarkedFan mf;
  mf.dim = static_cast<int>(q.rows());
  mf.gamma = q;  // images of the standard basis generate q(Z^N)
  mf.lambda = q * t.fan.rays;
  mf.maximal_cones = t.fan.maximal_cones;
  if (!validate_marked_fan(mf, seed).in_class())
    throw Error("internal: quotient of a validated triple failed validation");
  return mf;
}

PrincipalReport check_principal(const Mat& dalpha, const C2Triple& source, const C2Triple& target) {
  PrincipalReport rep;
  if (dalpha.rows() != static_cast<std::size_t>(target.N) ||
      dalpha.cols() != static_cast<std::size_t>(source.N))
    throw DimensionMismatch("dalpha must map R^(source N) to R^(target N)");
  if (!dalpha.is_integer()) throw Error("dalpha must have integer entries");

  rep.surjective = rank(dalpha) == static_cast<std::size_t>(target.N);
  if (!rep.surjective) rep.diagnostics.push_back("dalpha is not surjective");

  // Each source cone must land inside one target cone.
  rep.cone_morphism = true;
  for (const auto& cone : source.fan.maximal_cones) {
    std::vector<Vec> images;
    for (int r : cone) images.push_back(dalpha * source.fan.rays.column(r));
    bool contained = false;
    for (const auto& tcone : target.fan.maximal_cones) {
      bool all = true;
      for (const auto& img : images)
        if (!in_cone(target.fan, tcone, img)) { all = false; break; }
      if (all) { contained = true; break; }
    }
    if (images.empty()) contained = true;  // the zero cone maps to the zero cone
    if (!contained) {
      rep.cone_morphism = false;
      rep.diagnostics.push_back("a source cone does not map into any target cone");
      break;
    }
  }

  // Complexified containment of h: (dalpha b, dalpha b') must lie in the
  // real 2N-dimensional model of the target's complex span.
  rep.h_mapped = true;
  {
    Mat span(2 * target.N, 0);
    for (const auto& pair : target.h) {
      Vec v1(2 * target.N), v2(2 * target.N);
      for (int i = 0; i < target.N; ++i) {
        v1[i] = pair.re[i];
        v1[target.N + i] = pair.im[i];
        v2[i] = -pair.im[i];
        v2[target.N + i] = pair.re[i];
      }
      span.append_column(v1);
      span.append_column(v2);
    }
    const std::size_t base_rank = rank(span);
    for (const auto& pair : source.h) {
      const Vec re = dalpha * pair.re;
      const Vec im = dalpha * pair.im;
      Vec z(2 * target.N);
      for (int i = 0; i < target.N; ++i) {
        z[i] = re[i];
        z[target.N + i] = im[i];
      }
      Mat extended = span;
      extended.append_column(z);
      if (rank(extended) != base_rank) {
        rep.h_mapped = false;
        rep.diagnostics.push_back("dalpha does not carry h into the target's h");
        break;
      }
    }
  }

  // One-to-one correspondence of primitive ray generators.
  rep.ray_bijection = true;
  {
    const std::size_t m0 = source.fan.ray_count();
    const std::size_t m1 = target.fan.ray_count();
    std::vector<bool> hit(m1, false);
    for (std::size_t i = 0; i < m0 && rep.ray_bijection; ++i) {
      const Vec img = dalpha * source.fan.rays.column(i);
      bool matched = false;
      for (std::size_t j = 0; j < m1; ++j)
        if (img == target.fan.rays.column(j)) {
          if (hit[j]) rep.ray_bijection = false;
          hit[j] = true;
          matched = true;
          break;
        }
      if (!matched) rep.ray_bijection = false;
    }
    if (m0 != m1) rep.ray_bijection = false;
    for (std::size_t j = 0; j < m1; ++j)
      if (!hit[j]) rep.ray_bijection = false;
    if (!rep.ray_bijection)
      rep.diagnostics.push_back("primitive ray generators do not correspond one to one");
  }

  // Connectivity of the kernel: dalpha(Z^N0) = Z^N.
  rep.kernel_connected = false;
  if (rep.surjective) {
    rep.kernel_connected = true;
    for (const Int& d : snf_diag(dalpha))
      if (d != 1) rep.kernel_connected = false;
  }
  if (!rep.kernel_connected)
    rep.diagnostics.push_back("kernel of alpha is not connected (lattice image is proper)");
  return rep;
}

}  // namespace mfan
