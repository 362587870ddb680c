#include "mfan/markedfan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mfan {

Fan induced_fan(const MarkedFan& mf) {
  Fan fan;
  fan.dim = mf.dim;
  fan.rays = mf.lambda;
  fan.maximal_cones = mf.maximal_cones;
  return fan;
}

MarkedFanReport validate_marked_fan(const MarkedFan& mf, unsigned seed) {
  MarkedFanReport rep;

  rep.gamma_spans = rank(mf.gamma) == static_cast<std::size_t>(mf.dim);
  if (!rep.gamma_spans)
    rep.diagnostics.push_back("marked fan axiom (2): generators do not span the ambient space");

  rep.lambda_in_gamma = true;
  for (std::size_t j = 0; j < mf.lambda.cols(); ++j)
    if (!lattice_member(mf.gamma, mf.lambda.column(j))) {
      rep.lambda_in_gamma = false;
      rep.diagnostics.push_back("marked fan axiom (4): marking " + std::to_string(j + 1) +
                                " lies outside the group");
    }

  rep.fan_detail = validate_fan(induced_fan(mf), seed);
  rep.fan_ok = rep.fan_detail.pairwise_interiors_disjoint;
  rep.simplicial = rep.fan_detail.simplicial_independent;
  rep.complete = rep.fan_detail.complete;
  for (const auto& d : rep.fan_detail.diagnostics) rep.diagnostics.push_back(d);
  return rep;
}

namespace {

// Degree-and-cone-size signature used to prune candidate ray images.
using Signature = std::vector<int>;

std::vector<Signature> ray_signatures(const MarkedFan& mf) {
  std::vector<Signature> sig(mf.lambda.cols());
  for (std::size_t i = 0; i < sig.size(); ++i) {
    Signature s;
    for (const auto& cone : mf.maximal_cones)
      if (std::find(cone.begin(), cone.end(), static_cast<int>(i)) != cone.end())
        s.push_back(static_cast<int>(cone.size()));
    std::sort(s.begin(), s.end());
    sig[i] = std::move(s);
  }
  return sig;
}

std::vector<std::vector<int>> sorted_cones(const std::vector<std::vector<int>>& cones) {
  auto out = cones;
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

struct IsoSearch {
  const MarkedFan& a;
  const MarkedFan& b;
  std::vector<Signature> sig_a, sig_b;
  std::vector<std::vector<int>> cones_a, cones_b;
  std::set<std::vector<int>> cone_set_b;
  std::vector<std::uint64_t> cone_masks_b;
  std::size_t m;

  std::vector<int> order;        // processing order of a's rays
  std::vector<int> image;        // partial map, -1 = unset
  std::vector<bool> used;        // b's rays already taken
  std::vector<int> basis;        // a-ray indices whose markings are independent so far
  std::optional<MarkedFanIso> found;

  IsoSearch(const MarkedFan& a_, const MarkedFan& b_) : a(a_), b(b_) {
    sig_a = ray_signatures(a);
    sig_b = ray_signatures(b);
    cones_a = sorted_cones(a.maximal_cones);
    cones_b = sorted_cones(b.maximal_cones);
    for (const auto& c : cones_b) cone_set_b.insert(c);
    for (const auto& c : cones_b) {
      std::uint64_t mask = 0;
      for (int i : c) mask |= std::uint64_t(1) << i;
      cone_masks_b.push_back(mask);
    }
    m = a.lambda.cols();
    image.assign(m, -1);
    used.assign(b.lambda.cols(), false);
    plan_order();
  }

  // Rays with rare signatures first, then neighbours of already-placed rays,
  // so both the combinatorial and the linear pruning bite early.
  void plan_order() {
    std::map<Signature, int> freq;
    for (const auto& s : sig_b) ++freq[s];
    std::vector<bool> placed(m, false);
    while (order.size() < m) {
      int best = -1;
      bool best_adjacent = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (placed[i]) continue;
        bool adjacent = false;
        for (const auto& cone : cones_a) {
          if (std::find(cone.begin(), cone.end(), static_cast<int>(i)) == cone.end()) continue;
          for (int r : cone)
            if (placed[r]) { adjacent = true; break; }
          if (adjacent) break;
        }
        if (best < 0 || (adjacent && !best_adjacent) ||
            (adjacent == best_adjacent && freq[sig_a[i]] < freq[sig_a[best]])) {
          best = static_cast<int>(i);
          best_adjacent = adjacent;
        }
      }
      placed[best] = true;
      order.push_back(best);
    }
  }

  bool cones_compatible(int i) const {
    for (std::size_t c = 0; c < cones_a.size(); ++c) {
      const auto& cone = cones_a[c];
      if (std::find(cone.begin(), cone.end(), i) == cone.end()) continue;
      bool full = true;
      std::uint64_t mask = 0;
      std::vector<int> img;
      for (int r : cone) {
        if (image[r] < 0) { full = false; continue; }
        mask |= std::uint64_t(1) << image[r];
        img.push_back(image[r]);
      }
      if (full) {
        std::sort(img.begin(), img.end());
        if (!cone_set_b.count(img)) return false;
      } else {
        // Partial images must fit inside some maximal cone of b.
        bool inside = false;
        for (std::uint64_t cm : cone_masks_b)
          if ((mask & cm) == mask) { inside = true; break; }
        if (!inside) return false;
      }
    }
    return true;
  }

  // The markings assigned so far must extend to a linear map; dependent
  // markings pin their image exactly.
  bool linear_consistent(int i) {
    const Mat basis_a = a.lambda.columns(basis);
    const auto coords = solve(basis_a, a.lambda.column(i));
    if (!coords) {
      basis.push_back(i);
      return true;
    }
    Vec expect(b.dim, Rat(0));
    for (std::size_t k = 0; k < basis.size(); ++k)
      expect = expect + (*coords)[k] * b.lambda.column(image[basis[k]]);
    return expect == b.lambda.column(image[i]);
  }

  void search(std::size_t pos) {
    if (found) return;
    if (pos == m) {
      finish();
      return;
    }
    const int i = order[pos];
    for (std::size_t j = 0; j < b.lambda.cols(); ++j) {
      if (used[j] || sig_a[i] != sig_b[j]) continue;
      image[i] = static_cast<int>(j);
      used[j] = true;
      const std::size_t basis_size = basis.size();
      if (cones_compatible(i) && linear_consistent(i)) search(pos + 1);
      basis.resize(basis_size);
      used[j] = false;
      image[i] = -1;
      if (found) return;
    }
  }

  void finish() {
    if (basis.size() != static_cast<std::size_t>(a.dim)) return;
    std::vector<int> basis_images;
    for (int i : basis) basis_images.push_back(image[i]);
    const Mat b1 = a.lambda.columns(basis);
    const Mat b2 = b.lambda.columns(basis_images);
    const auto inv = inverse(b1);
    if (!inv) return;
    const Mat phi = b2 * (*inv);
    if (rank(phi) != static_cast<std::size_t>(a.dim)) return;
    for (std::size_t i = 0; i < m; ++i)
      if (phi * a.lambda.column(i) != b.lambda.column(image[i])) return;
    if (!lattice_equal(phi * a.gamma, b.gamma)) return;
    found = MarkedFanIso{phi, image};
  }
};

}  // namespace

std::optional<MarkedFanIso> are_isomorphic(const MarkedFan& a, const MarkedFan& b, unsigned seed) {
  if (!validate_marked_fan(a, seed).in_class() || !validate_marked_fan(b, seed).in_class())
    throw NotValidated("are_isomorphic requires validated complete simplicial marked fans");
  if (a.dim != b.dim || a.lambda.cols() != b.lambda.cols() ||
      a.maximal_cones.size() != b.maximal_cones.size())
    return std::nullopt;
  {
    auto sizes = [](const MarkedFan& mf) {
      std::vector<std::size_t> s;
      for (const auto& c : mf.maximal_cones) s.push_back(c.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    if (sizes(a) != sizes(b)) return std::nullopt;
    if (f_vector(underlying_complex(induced_fan(a))) != f_vector(underlying_complex(induced_fan(b))))
      return std::nullopt;
  }
  if (a.dim == 0) return MarkedFanIso{Mat(0, 0), {}};
  if (a.lambda.cols() > 63) throw Error("isomorphism search limited to 63 rays");

  IsoSearch search(a, b);
  search.search(0);
  return search.found;
}

bool verify_iso(const MarkedFan& a, const MarkedFan& b, const MarkedFanIso& iso) {
  const std::size_t m = a.lambda.cols();
  if (b.lambda.cols() != m || iso.ray_map.size() != m) return false;
  std::vector<bool> hit(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const int j = iso.ray_map[i];
    if (j < 0 || static_cast<std::size_t>(j) >= m || hit[j]) return false;
    hit[j] = true;
    if (iso.matrix * a.lambda.column(i) != b.lambda.column(j)) return false;
  }
  if (rank(iso.matrix) != static_cast<std::size_t>(a.dim)) return false;
  std::set<std::vector<int>> cones_b;
  for (auto c : b.maximal_cones) {
    std::sort(c.begin(), c.end());
    cones_b.insert(c);
  }
  std::set<std::vector<int>> images;
  for (auto c : a.maximal_cones) {
    for (auto& i : c) i = iso.ray_map[i];
    std::sort(c.begin(), c.end());
    images.insert(c);
  }
  if (images != cones_b) return false;
  // Group equality in both directions.
  if (!lattice_equal(iso.matrix * a.gamma, b.gamma)) return false;
  for (std::size_t j = 0; j < a.gamma.cols(); ++j)
    if (!lattice_member(b.gamma, iso.matrix * a.gamma.column(j))) return false;
  const auto inv = inverse(iso.matrix);
  if (!inv) return false;
  for (std::size_t j = 0; j < b.gamma.cols(); ++j)
    if (!lattice_member(a.gamma, (*inv) * b.gamma.column(j))) return false;
  return true;
}

}  // namespace mfan
