#include "mfan/cohomology.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace mfan {

namespace {

// Faces as bitmasks over at most 63 vertices.
struct FaceTable {
  std::vector<std::uint64_t> facet_masks;

  bool is_face(std::uint64_t mask) const {
    for (std::uint64_t f : facet_masks)
      if ((mask & f) == mask) return true;
    return false;
  }
};

FaceTable face_table(const SimplicialComplexK& k) {
  if (k.vertices > 63) throw Error("cohomology computations limited to 63 rays");
  FaceTable t;
  for (const auto& facet : k.facets) {
    std::uint64_t mask = 0;
    for (int v : facet) mask |= std::uint64_t(1) << v;
    t.facet_masks.push_back(mask);
  }
  if (t.facet_masks.empty()) t.facet_masks.push_back(0);  // the empty complex
  return t;
}

using Monomial = std::vector<int>;  // exponent vector, length m

std::uint64_t support(const Monomial& mono) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (mono[i] > 0) mask |= std::uint64_t(1) << i;
  return mask;
}

// Degree-d monomials whose support is a face, lexicographic order.
void enumerate_face_monomials(const FaceTable& faces, int m, int degree, int var, Monomial& cur,
                              std::uint64_t mask, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.push_back(cur);
    return;
  }
  if (var == m) return;
  for (int e = degree; e >= 0; --e) {
    const std::uint64_t next = e > 0 ? mask | (std::uint64_t(1) << var) : mask;
    if (e > 0 && !faces.is_face(next)) continue;
    cur[var] = e;
    enumerate_face_monomials(faces, m, degree - e, var + 1, cur, next, out);
    cur[var] = 0;
  }
}

std::vector<Monomial> face_monomials(const FaceTable& faces, int m, int degree) {
  std::vector<Monomial> out;
  Monomial cur(m, 0);
  enumerate_face_monomials(faces, m, degree, 0, cur, 0, out);
  return out;
}

// Graded dimensions of the quotient, degrees 0..n.
std::vector<std::int64_t> graded_dimensions(const GradedQuotient& gq) {
  const int n = static_cast<int>(gq.theta.rows());
  const FaceTable faces = face_table(gq.K);
  std::vector<std::int64_t> dims;
  for (int d = 0; d <= n; ++d) {
    const std::vector<Monomial> basis = face_monomials(faces, gq.m, d);
    std::map<Monomial, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::int64_t rel_rank = 0;
    if (d > 0) {
      const std::vector<Monomial> lower = face_monomials(faces, gq.m, d - 1);
      Mat rel(lower.size() * n, basis.size());
      std::size_t row = 0;
      for (const auto& mono : lower)
        for (int r = 0; r < n; ++r, ++row)
          for (int i = 0; i < gq.m; ++i) {
            if (gq.theta(r, i) == 0) continue;
            Monomial prod = mono;
            prod[i] += 1;
            const auto it = index.find(prod);
            if (it == index.end()) continue;  // product falls into the monomial ideal
            rel(row, it->second) += gq.theta(r, i);
          }
      rel_rank = static_cast<std::int64_t>(rank(rel));
    }
    dims.push_back(static_cast<std::int64_t>(basis.size()) - rel_rank);
  }
  return dims;
}

BettiVector from_counts(int n, std::vector<std::int64_t> counts, bool certified) {
  BettiVector bv;
  bv.n = n;
  bv.b = counts;
  bv.h = std::move(counts);
  bv.certified = certified;
  return bv;
}

void require_feasible(const MarkedFan& fan, const Certificate& cert) {
  if (cert.kind != Certificate::Kind::Feasible || !verify_certificate(fan, cert))
    throw NotPolytopal("the marked fan admits no admissible offsets");
}

}  // namespace

GradedQuotient graded_quotient(const MarkedFan& fan) {
  GradedQuotient gq;
  gq.m = static_cast<int>(fan.lambda.cols());
  gq.K = underlying_complex(induced_fan(fan));
  gq.theta = fan.lambda;
  // The linear forms must restrict to a regular system on every maximal
  // cone; without that the degreewise ranks below would not compute the
  // graded quotient they claim to.
  for (const auto& cone : fan.maximal_cones)
    if (rank(fan.lambda.columns(cone)) != cone.size())
      throw RaysDegenerate("linear forms fail to be a regular system on a maximal cone");
  return gq;
}

BettiVector betti_by_elimination(const MarkedFan& fan, const Certificate& cert) {
  require_feasible(fan, cert);
  BettiVector bv = betti_unchecked(fan);
  bv.certified = true;
  return bv;
}

BettiVector betti_by_elimination(const MarkedFan& fan) {
  return betti_by_elimination(fan, polytopality(fan));
}

BettiVector betti_unchecked(const MarkedFan& fan) {
  return from_counts(fan.dim, graded_dimensions(graded_quotient(fan)), false);
}

BettiVector betti_by_hvector(const MarkedFan& fan) {
  const int n = fan.dim;
  const auto fv = f_vector(underlying_complex(induced_fan(fan)));
  auto f = [&](int i) -> std::int64_t {  // f_{i-1}
    return i >= 0 && i < static_cast<int>(fv.size()) ? fv[i] : 0;
  };
  auto binom = [](std::int64_t a, std::int64_t b) -> std::int64_t {
    if (b < 0 || b > a) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  std::vector<std::int64_t> h(n + 1, 0);
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k; ++i)
      h[k] += ((k - i) % 2 == 0 ? 1 : -1) * binom(n - i, k - i) * f(i);
  return from_counts(n, std::move(h), false);
}

BettiVector betti_by_morse(const MarkedFan& fan, const Certificate& cert, const Vec& xi) {
  require_feasible(fan, cert);
  const Polytope p = build_polytope(fan, cert.b);
  const int n = fan.dim;
  if (xi.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("xi has wrong dimension");

  // Vertices correspond to maximal cones; two vertices are adjacent exactly
  // when their cones share a ridge.
  const std::size_t nv = p.vertices.size();
  std::vector<Rat> value(nv);
  for (std::size_t v = 0; v < nv; ++v) value[v] = dot(xi, p.vertices[v]);
  auto cones = p.cones;
  for (auto& c : cones) std::sort(c.begin(), c.end());

  std::vector<std::int64_t> counts(n + 1, 0);
  std::vector<int> updeg(nv, 0);
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = a + 1; b < nv; ++b) {
      std::vector<int> shared;
      std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(), cones[b].end(),
                            std::back_inserter(shared));
      if (static_cast<int>(shared.size()) != n - 1) continue;
      if (value[a] == value[b])
        throw DegenerateFunctional("xi does not separate two adjacent vertices");
      if (value[a] < value[b]) ++updeg[a];
      else ++updeg[b];
    }
  for (std::size_t v = 0; v < nv; ++v) {
    if (updeg[v] > n) throw Error("internal: up-degree exceeds the dimension");
    ++counts[updeg[v]];
  }
  BettiVector bv = from_counts(n, std::move(counts), true);
  return bv;
}

BettiVector betti_by_morse_auto(const MarkedFan& fan, const Certificate& cert) {
  static const int ts[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (int t : ts) {
    Vec xi(fan.dim);
    Rat power = 1;
    for (int i = 0; i < fan.dim; ++i) {
      xi[i] = power;
      power *= t;
    }
    try {
      return betti_by_morse(fan, cert, xi);
    } catch (const DegenerateFunctional&) {
      continue;
    }
  }
  throw DegenerateFunctional("no functional in the schedule separated the vertices");
}

std::vector<std::vector<std::int64_t>> hodge_diamond(const BettiVector& betti) {
  if (!betti.certified)
    throw NotPolytopal("Hodge table requires a certified Betti vector");
  const int n = betti.n;
  std::vector<std::vector<std::int64_t>> table(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (int p = 0; p <= n; ++p) table[p][p] = betti.b[p];
  return table;
}

std::vector<std::int64_t> forgetful_kernel_dims(const MarkedFan& fan, const Certificate& cert) {
  require_feasible(fan, cert);
  const GradedQuotient gq = graded_quotient(fan);
  const FaceTable faces = face_table(gq.K);
  const auto quotient_dims = graded_dimensions(gq);
  std::vector<std::int64_t> out;
  for (int d = 0; d <= fan.dim; ++d) {
    const auto full = static_cast<std::int64_t>(face_monomials(faces, gq.m, d).size());
    out.push_back(full - quotient_dims[d]);
  }
  return out;
}

}  // namespace mfan
