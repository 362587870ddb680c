#pragma once

// Shared non-gallery instances used across the test suites.

#include "mfan/lift.hpp"
#include "mfan/markedfan.hpp"

namespace mfan::fixtures {

/// Complete simplicial fan over the cube's vertices with the side diagonals
/// chosen to rotate around the vertical axis.  The rotation makes the
/// triangulation incoherent, so no offset vector is admissible: the classic
/// complete non-polytopal fan in dimension 3.
inline MarkedFan twisted_cube() {
  MarkedFan mf;
  mf.dim = 3;
  mf.gamma = Mat::identity(3);
  mf.lambda = Mat::from_rows({{1, -1, -1, 1, 1, -1, -1, 1},
                              {1, 1, -1, -1, 1, 1, -1, -1},
                              {1, 1, 1, 1, -1, -1, -1, -1}});
  mf.maximal_cones = {
      {0, 1, 2}, {0, 2, 3},  // top, diagonal 1-3
      {4, 5, 6}, {4, 6, 7},  // bottom, diagonal 5-7
      {0, 1, 4}, {1, 4, 5},  // +y side, rotated diagonal
      {1, 2, 5}, {2, 5, 6},  // -x side
      {2, 3, 6}, {3, 6, 7},  // -y side
      {0, 3, 7}, {0, 4, 7},  // +x side
  };
  return mf;
}

/// Rank-3 torus datum of the rational Hopf model: two coordinate rays and
/// one complex direction spanned by (5,7,0) + i(1,0,-7).
inline C2Triple hopf_triple() {
  C2Triple t;
  t.N = 3;
  t.fan.dim = 3;
  t.fan.rays = Mat::from_rows({{1, 0}, {0, 1}, {0, 0}});
  t.fan.maximal_cones = {{0}, {1}};
  t.h.push_back(HPair{Vec{5, 7, 0}, Vec{1, 0, -7}});
  return t;
}

/// Known-admissible offsets for the polytopal gallery fans.
inline Vec base_offsets(const std::string& name) {
  auto q = [](long long n, long long d = 1) { return Rat(Int(n)) / Rat(Int(d)); };
  if (name == "point" || name == "torus") return {};
  if (name == "cp1") return {q(0), q(-1)};
  if (name == "cp2") return {q(0), q(0), q(-1)};
  if (name == "cp1xcp1") return {q(0), q(0), q(-1), q(-1)};
  if (name == "hirzebruch1") return {q(0), q(0), q(-2), q(-1)};
  if (name == "octahedral") return {q(-1), q(-1), q(-1), q(-1), q(-1), q(-1)};
  if (name == "hopf") return {q(0), q(-1)};
  throw Error("no base offsets for \"" + name + "\"");
}

}  // namespace mfan::fixtures
