#include "mfan/jsonio.hpp"

#include <algorithm>
#include <fstream>

namespace mfan {

namespace {

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("rational values must be integers or \"p/q\" strings");
}

Json rat_to_json(const Rat& r) {
  return format_rat(r);
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of rationals");
  Vec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const Rat& e : v) out.push_back(rat_to_json(e));
  return out;
}

// Columns of a dim x k matrix written as k vectors.
Mat columns_from_json(const Json& j, int dim, const char* field) {
  if (!j.is_array()) throw SchemaError(std::string("field \"") + field + "\" must be an array");
  std::vector<Vec> cols;
  for (const auto& e : j) {
    Vec v = vec_from_json(e);
    if (v.size() != static_cast<std::size_t>(dim))
      throw SchemaError(std::string("vector length in \"") + field + "\" differs from dim");
    cols.push_back(std::move(v));
  }
  return Mat::from_columns(cols, dim);
}

Json columns_to_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(vec_to_json(m.column(j)));
  return out;
}

std::vector<std::vector<int>> cones_from_json(const Json& j, std::size_t ray_count) {
  if (!j.is_array()) throw SchemaError("field \"cones\" must be an array");
  std::vector<std::vector<int>> cones;
  for (const auto& e : j) {
    if (!e.is_array()) throw SchemaError("each cone must be an array of 1-based ray indices");
    std::vector<int> cone;
    for (const auto& idx : e) {
      if (!idx.is_number_integer()) throw SchemaError("ray indices must be integers");
      const long long v = idx.get<long long>();
      if (v < 1 || v > static_cast<long long>(ray_count))
        throw SchemaError("ray index " + std::to_string(v) + " out of range");
      cone.push_back(static_cast<int>(v - 1));
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw SchemaError("a cone lists the same ray twice");
    cones.push_back(std::move(cone));
  }
  return cones;
}

Json cones_to_json(const std::vector<std::vector<int>>& cones) {
  Json out = Json::array();
  for (const auto& cone : cones) {
    Json c = Json::array();
    for (int i : cone) c.push_back(i + 1);
    out.push_back(c);
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

Json to_json(const MarkedFan& mf) {
  Json j;
  j["dim"] = mf.dim;
  j["gamma"] = columns_to_json(mf.gamma);
  j["lambda"] = columns_to_json(mf.lambda);
  j["cones"] = cones_to_json(mf.maximal_cones);
  return j;
}

MarkedFan marked_fan_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("marked fan must be a JSON object");
  MarkedFan mf;
  const Json& dim = field(j, "dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 0)
    throw SchemaError("\"dim\" must be a nonnegative integer");
  mf.dim = dim.get<int>();
  mf.gamma = columns_from_json(field(j, "gamma"), mf.dim, "gamma");
  mf.lambda = columns_from_json(field(j, "lambda"), mf.dim, "lambda");
  mf.maximal_cones = cones_from_json(field(j, "cones"), mf.lambda.cols());
  return mf;
}

Json to_json(const C2Triple& t) {
  Json j;
  j["N"] = t.N;
  Json rays = Json::array();
  for (std::size_t c = 0; c < t.fan.rays.cols(); ++c) {
    Json ray = Json::array();
    for (int i = 0; i < t.N; ++i) {
      const Rat& e = t.fan.rays(i, c);
      if (!is_integral(e)) throw SchemaError("triple rays must be integral");
      ray.push_back(static_cast<long long>(to_int(e)));
    }
    rays.push_back(ray);
  }
  j["rays"] = rays;
  j["cones"] = cones_to_json(t.fan.maximal_cones);
  Json h = Json::array();
  for (const auto& pair : t.h) {
    Json p;
    p["re"] = vec_to_json(pair.re);
    p["im"] = vec_to_json(pair.im);
    h.push_back(p);
  }
  j["h"] = h;
  return j;
}

C2Triple triple_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("triple must be a JSON object");
  C2Triple t;
  const Json& n = field(j, "N");
  if (!n.is_number_integer() || n.get<long long>() < 0)
    throw SchemaError("\"N\" must be a nonnegative integer");
  t.N = n.get<int>();
  t.fan.dim = t.N;
  const Json& rays = field(j, "rays");
  if (!rays.is_array()) throw SchemaError("field \"rays\" must be an array");
  std::vector<Vec> cols;
  for (const auto& ray : rays) {
    Vec v = vec_from_json(ray);
    if (v.size() != static_cast<std::size_t>(t.N)) throw SchemaError("ray length differs from N");
    for (const Rat& e : v)
      if (!is_integral(e)) throw SchemaError("triple rays must be integers");
    cols.push_back(std::move(v));
  }
  t.fan.rays = Mat::from_columns(cols, t.N);
  t.fan.maximal_cones = cones_from_json(field(j, "cones"), cols.size());
  const Json& h = field(j, "h");
  if (!h.is_array()) throw SchemaError("field \"h\" must be an array");
  for (const auto& p : h) {
    HPair pair;
    pair.re = vec_from_json(field(p, "re"));
    pair.im = vec_from_json(field(p, "im"));
    if (pair.re.size() != static_cast<std::size_t>(t.N) ||
        pair.im.size() != static_cast<std::size_t>(t.N))
      throw SchemaError("h pair length differs from N");
    t.h.push_back(std::move(pair));
  }
  return t;
}

Json to_json(const Certificate& cert) {
  Json j;
  if (cert.kind == Certificate::Kind::Feasible) {
    j["kind"] = "feasible";
    j["b"] = vec_to_json(cert.b);
  } else {
    j["kind"] = "infeasible";
    j["farkas"] = vec_to_json(cert.farkas);
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "feasible") {
    cert.kind = Certificate::Kind::Feasible;
    cert.b = vec_from_json(field(j, "b"));
  } else if (kind == "infeasible") {
    cert.kind = Certificate::Kind::Infeasible;
    cert.farkas = vec_from_json(field(j, "farkas"));
  } else {
    throw SchemaError("certificate kind must be \"feasible\" or \"infeasible\"");
  }
  return cert;
}

Json to_json(const BettiVector& betti, const std::string& method) {
  Json j;
  j["b"] = betti.b;
  j["h"] = betti.h;
  if (betti.certified) j["hodge"] = hodge_diamond(betti);
  j["method"] = method;
  return j;
}

Json to_json(const MarkedFanIso& iso) {
  Json j;
  Json rows = Json::array();
  for (std::size_t i = 0; i < iso.matrix.rows(); ++i) rows.push_back(vec_to_json(iso.matrix.row(i)));
  j["matrix"] = rows;
  Json map = Json::array();
  for (int v : iso.ray_map) map.push_back(v + 1);
  j["ray_bijection"] = map;
  return j;
}

Mat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw SchemaError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rows[i][c];
  }
  return m;
}

GalleryEntry entry_from_json(const Json& j) {
  if (j.is_object() && j.contains("N") && j.contains("rays")) return triple_from_json(j);
  return marked_fan_from_json(j);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in \"" + path + "\": " + e.what());
  }
}

}  // namespace mfan
