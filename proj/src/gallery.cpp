#include "mfan/gallery.hpp"

namespace mfan {

namespace {

MarkedFan dim0_marked_fan() {
  MarkedFan mf;
  mf.dim = 0;
  mf.gamma = Mat(0, 0);
  mf.lambda = Mat(0, 0);
  mf.maximal_cones = {{}};
  return mf;
}

MarkedFan cp1() {
  MarkedFan mf;
  mf.dim = 1;
  mf.gamma = Mat::from_rows({{1}});
  mf.lambda = Mat::from_rows({{1, -1}});
  mf.maximal_cones = {{0}, {1}};
  return mf;
}

MarkedFan cp2() {
  MarkedFan mf;
  mf.dim = 2;
  mf.gamma = Mat::from_rows({{1, 0}, {0, 1}});
  mf.lambda = Mat::from_rows({{1, 0, -1}, {0, 1, -1}});
  mf.maximal_cones = {{0, 1}, {1, 2}, {0, 2}};
  return mf;
}

MarkedFan cp1xcp1() {
  MarkedFan mf;
  mf.dim = 2;
  mf.gamma = Mat::from_rows({{1, 0}, {0, 1}});
  mf.lambda = Mat::from_rows({{1, 0, -1, 0}, {0, 1, 0, -1}});
  mf.maximal_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return mf;
}

MarkedFan hirzebruch1() {
  MarkedFan mf;
  mf.dim = 2;
  mf.gamma = Mat::from_rows({{1, 0}, {0, 1}});
  mf.lambda = Mat::from_rows({{1, 0, -1, 0}, {0, 1, 1, -1}});
  mf.maximal_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return mf;
}

MarkedFan octahedral() {
  MarkedFan mf;
  mf.dim = 3;
  mf.gamma = Mat::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  mf.lambda = Mat::from_rows({{1, 0, 0, -1, 0, 0}, {0, 1, 0, 0, -1, 0}, {0, 0, 1, 0, 0, -1}});
  for (int sx : {0, 3})
    for (int sy : {1, 4})
      for (int sz : {2, 5}) mf.maximal_cones.push_back({sx, sy, sz});
  return mf;
}

// Rational model of a primary Hopf surface: the markings sit inside the
// rank-2 group generated by 1 and 5/7.
MarkedFan hopf() {
  MarkedFan mf;
  mf.dim = 1;
  mf.gamma = Mat(1, 2);
  mf.gamma(0, 0) = 1;
  mf.gamma(0, 1) = Rat(5) / Rat(7);
  mf.lambda = Mat(1, 2);
  mf.lambda(0, 0) = 1;
  mf.lambda(0, 1) = Rat(-5) / Rat(7);
  mf.maximal_cones = {{0}, {1}};
  return mf;
}

// S^3 x S^3 sitting over the product of two projective lines: rank-4 torus,
// coordinate fan with the four mixed 2-cones, one complex direction in h.
C2Triple calabi_eckmann_model() {
  C2Triple t;
  t.N = 4;
  t.fan.dim = 4;
  t.fan.rays = Mat::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  t.fan.maximal_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  Vec re{1, 1, 1, 1};
  Vec im{0, 0, -1, -1};
  t.h.push_back(HPair{re, im});
  return t;
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {
      "point", "torus", "cp1", "cp2", "cp1xcp1", "hirzebruch1", "octahedral", "hopf",
      "calabi-eckmann-model"};
  return names;
}

GalleryEntry gallery(const std::string& name) {
  if (name == "point") return dim0_marked_fan();
  if (name == "torus") return dim0_marked_fan();
  if (name == "cp1") return cp1();
  if (name == "cp2") return cp2();
  if (name == "cp1xcp1") return cp1xcp1();
  if (name == "hirzebruch1") return hirzebruch1();
  if (name == "octahedral") return octahedral();
  if (name == "hopf") return hopf();
  if (name == "calabi-eckmann-model") return calabi_eckmann_model();
  throw UnknownExample("unknown example \"" + name + "\"");
}

MarkedFan gallery_marked_fan(const std::string& name, unsigned seed) {
  GalleryEntry e = gallery(name);
  if (std::holds_alternative<MarkedFan>(e)) return std::get<MarkedFan>(e);
  return quotient(std::get<C2Triple>(e), seed);
}

}  // namespace mfan
