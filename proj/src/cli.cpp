#include "mfan/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mfan/jsonio.hpp"

namespace mfan::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string example;
  std::string method = "elimination";
  std::string format = "json";
  std::string output_path;
  std::string b1_text, b2_text;
  unsigned seed = kDefaultSeed;
  unsigned jobs = 1;
  bool unchecked = false;
};

GalleryEntry resolve_input(const std::string& token) {
  const auto& names = gallery_names();
  if (std::find(names.begin(), names.end(), token) != names.end()) return gallery(token);
  return entry_from_json(load_json(token));
}

MarkedFan resolve_marked_fan(const std::string& token, unsigned seed) {
  GalleryEntry e = resolve_input(token);
  if (std::holds_alternative<MarkedFan>(e)) return std::get<MarkedFan>(e);
  return quotient(std::get<C2Triple>(e), seed);
}

MarkedFan require_valid_fan(const std::string& token, unsigned seed) {
  MarkedFan mf = resolve_marked_fan(token, seed);
  const auto rep = validate_marked_fan(mf, seed);
  if (!rep.in_class()) {
    std::string msg = "input \"" + token + "\" is not a complete simplicial marked fan";
    for (const auto& d : rep.diagnostics) msg += "\n  " + d;
    throw NotValidated(msg);
  }
  return mf;
}

Vec parse_offsets(const std::string& text) {
  if (!text.empty() && text[0] == '[') {
    try {
      const Json j = Json::parse(text);
      Vec v;
      for (const auto& e : j) {
        if (e.is_number_integer()) v.push_back(Rat(Int(e.get<long long>())));
        else v.push_back(parse_rat(e.get<std::string>()));
      }
      return v;
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad offset list: ") + e.what());
    }
  }
  Vec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(parse_rat(tok));
  return v;
}

Json validation_json(const GalleryEntry& e, unsigned seed) {
  Json j;
  if (std::holds_alternative<MarkedFan>(e)) {
    const auto rep = validate_marked_fan(std::get<MarkedFan>(e), seed);
    j["kind"] = "marked_fan";
    j["flags"] = {{"gamma_spans", rep.gamma_spans},
                  {"lambda_in_gamma", rep.lambda_in_gamma},
                  {"fan_ok", rep.fan_ok},
                  {"simplicial", rep.simplicial},
                  {"complete", rep.complete}};
    j["valid"] = rep.in_class();
    j["diagnostics"] = rep.diagnostics;
  } else {
    const auto rep = validate_triple(std::get<C2Triple>(e), seed);
    j["kind"] = "c2_triple";
    j["flags"] = {{"nonsingular", rep.nonsingular},
                  {"p_injective", rep.p_injective},
                  {"quotient_complete", rep.quotient_complete},
                  {"quotient_bijective", rep.quotient_bijective}};
    j["valid"] = rep.ok();
    j["diagnostics"] = rep.diagnostics;
  }
  return j;
}

BettiVector betti_by(const std::string& method, const MarkedFan& mf, const Certificate& cert) {
  if (method == "elimination") return betti_by_elimination(mf, cert);
  if (method == "hvector") return betti_by_hvector(mf);
  if (method == "morse") return betti_by_morse_auto(mf, cert);
  throw ParseError("unknown method \"" + method + "\"");
}

void render_text(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object())) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) render_text(e, out, indent);
  } else {
    out << pad << j.dump() << "\n";
  }
}

void emit(const Json& j, const Options& opt, std::ostream& out) {
  if (!opt.output_path.empty()) {
    std::ofstream f(opt.output_path);
    if (!f) throw Error("cannot write \"" + opt.output_path + "\"");
    f << j.dump(2) << "\n";
  }
  if (opt.format == "text") render_text(j, out);
  else out << j.dump(2) << "\n";
}

int cmd_validate(const Options& opt, std::ostream& out) {
  std::vector<std::string> inputs = opt.inputs;
  if (!opt.example.empty()) inputs.push_back(opt.example);
  if (inputs.empty()) throw ParseError("validate needs at least one input");

  std::vector<Json> reports(inputs.size());
  const unsigned jobs = std::max(1u, opt.jobs);
  std::vector<std::future<Json>> futures;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    auto work = [&, i] { return validation_json(resolve_input(inputs[i]), opt.seed); };
    if (jobs > 1) futures.push_back(std::async(std::launch::async, work));
    else reports[i] = work();
  }
  for (std::size_t i = 0; i < futures.size(); ++i) reports[i] = futures[i].get();

  bool all_valid = true;
  Json j;
  if (reports.size() == 1) {
    j = reports[0];
    j["input"] = inputs[0];
    all_valid = j["valid"].get<bool>();
  } else {
    j = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      reports[i]["input"] = inputs[i];
      all_valid = all_valid && reports[i]["valid"].get<bool>();
      j.push_back(reports[i]);
    }
  }
  emit(j, opt, out);
  return all_valid ? 0 : 2;
}

int cmd_realize(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() != 1) throw ParseError("realize needs exactly one input");
  const MarkedFan mf = resolve_marked_fan(opt.inputs[0], opt.seed);
  emit(to_json(realize(mf, std::nullopt, opt.seed)), opt, out);
  return 0;
}

int cmd_quotient(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() != 1) throw ParseError("quotient needs exactly one input");
  GalleryEntry e = resolve_input(opt.inputs[0]);
  if (!std::holds_alternative<C2Triple>(e)) throw SchemaError("quotient expects a triple input");
  emit(to_json(quotient(std::get<C2Triple>(e), opt.seed)), opt, out);
  return 0;
}

int cmd_iso(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() != 2) throw ParseError("iso needs exactly two inputs");
  const MarkedFan a = require_valid_fan(opt.inputs[0], opt.seed);
  const MarkedFan b = require_valid_fan(opt.inputs[1], opt.seed);
  const auto iso = are_isomorphic(a, b, opt.seed);
  Json j;
  j["isomorphic"] = iso.has_value();
  if (iso) {
    Json w = to_json(*iso);
    j["matrix"] = w["matrix"];
    j["ray_bijection"] = w["ray_bijection"];
  }
  emit(j, opt, out);
  return 0;
}

int cmd_betti(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() + (opt.example.empty() ? 0 : 1) != 1)
    throw ParseError("betti needs exactly one input");
  const std::string token = opt.inputs.empty() ? opt.example : opt.inputs[0];
  const MarkedFan mf = require_valid_fan(token, opt.seed);

  if (opt.unchecked) {
    Json j = to_json(betti_unchecked(mf), "elimination");
    j["checked"] = false;
    emit(j, opt, out);
    return 0;
  }

  const Certificate cert = polytopality(mf);
  if (opt.method == "all") {
    const BettiVector e = betti_by("elimination", mf, cert);
    const BettiVector h = betti_by("hvector", mf, cert);
    const BettiVector m = betti_by("morse", mf, cert);
    const bool agree = e == h && h == m;
    Json j;
    j["agreement"] = agree;
    j["results"] = Json::array({to_json(e, "elimination"), to_json(h, "hvector"), to_json(m, "morse")});
    emit(j, opt, out);
    return agree ? 0 : 4;
  }
  emit(to_json(betti_by(opt.method, mf, cert), opt.method), opt, out);
  return 0;
}

int cmd_hodge(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() + (opt.example.empty() ? 0 : 1) != 1)
    throw ParseError("hodge needs exactly one input");
  const std::string token = opt.inputs.empty() ? opt.example : opt.inputs[0];
  const MarkedFan mf = require_valid_fan(token, opt.seed);
  const Certificate cert = polytopality(mf);
  if (cert.kind != Certificate::Kind::Feasible)
    throw NotPolytopal("the marked fan admits no admissible offsets");
  BettiVector bv = betti_by(opt.method == "all" ? "elimination" : opt.method, mf, cert);
  bv.certified = true;  // polytopality was just verified above
  Json j = to_json(bv, opt.method == "all" ? "elimination" : opt.method);
  j["hodge"] = hodge_diamond(bv);
  emit(j, opt, out);
  return 0;
}

int cmd_polytopality(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() + (opt.example.empty() ? 0 : 1) != 1)
    throw ParseError("polytopality needs exactly one input");
  const std::string token = opt.inputs.empty() ? opt.example : opt.inputs[0];
  const MarkedFan mf = require_valid_fan(token, opt.seed);
  const Certificate cert = polytopality(mf);
  Json j = to_json(cert);
  j["verified"] = verify_certificate(mf, cert);
  emit(j, opt, out);
  return 0;
}

Json polytope_json(const Polytope& p) {
  Json j;
  Json b = Json::array();
  for (const Rat& e : p.b) b.push_back(format_rat(e));
  j["b"] = b;
  j["admissible"] = p.admissible;
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json vv = Json::array();
    for (const Rat& e : v) vv.push_back(format_rat(e));
    verts.push_back(vv);
  }
  j["vertices"] = verts;
  return j;
}

int cmd_minkowski(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() + (opt.example.empty() ? 0 : 1) != 1)
    throw ParseError("minkowski needs exactly one fan input");
  const std::string token = opt.inputs.empty() ? opt.example : opt.inputs[0];
  const MarkedFan mf = require_valid_fan(token, opt.seed);
  const Polytope p = build_polytope(mf, parse_offsets(opt.b1_text));
  const Polytope q = build_polytope(mf, parse_offsets(opt.b2_text));
  emit(polytope_json(minkowski_sum(p, q)), opt, out);
  return 0;
}

int cmd_translate(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() + (opt.example.empty() ? 0 : 1) != 1)
    throw ParseError("translate needs exactly one fan input");
  const std::string token = opt.inputs.empty() ? opt.example : opt.inputs[0];
  const MarkedFan mf = require_valid_fan(token, opt.seed);
  const Polytope p = build_polytope(mf, parse_offsets(opt.b1_text));
  const Polytope q = build_polytope(mf, parse_offsets(opt.b2_text));
  const auto offset = translation_offset(p, q);
  Json j;
  if (offset) {
    Json v = Json::array();
    for (const Rat& e : *offset) v.push_back(format_rat(e));
    j["offset"] = v;
  } else {
    j["offset"] = nullptr;
  }
  emit(j, opt, out);
  return 0;
}

int cmd_example(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() != 1) throw ParseError("example needs a name");
  GalleryEntry e = gallery(opt.inputs[0]);
  Json j = std::holds_alternative<MarkedFan>(e) ? to_json(std::get<MarkedFan>(e))
                                                : to_json(std::get<C2Triple>(e));
  emit(j, opt, out);
  return 0;
}

int cmd_principal(const Options& opt, std::ostream& out) {
  if (opt.inputs.size() != 3)
    throw ParseError("principal needs: dalpha.json source target");
  Json dj = load_json(opt.inputs[0]);
  if (dj.is_object() && dj.contains("matrix")) dj = dj["matrix"];
  const Mat dalpha = matrix_from_json(dj);
  auto as_triple = [&](const std::string& token) {
    GalleryEntry e = resolve_input(token);
    if (!std::holds_alternative<C2Triple>(e)) throw SchemaError("principal expects triple inputs");
    return std::get<C2Triple>(e);
  };
  const C2Triple source = as_triple(opt.inputs[1]);
  const C2Triple target = as_triple(opt.inputs[2]);
  const PrincipalReport rep = check_principal(dalpha, source, target);
  Json j;
  j["principal"] = rep.principal();
  j["kernel_connected"] = rep.kernel_connected;
  j["flags"] = {{"surjective", rep.surjective},
                {"cone_morphism", rep.cone_morphism},
                {"h_mapped", rep.h_mapped},
                {"ray_bijection", rep.ray_bijection}};
  j["diagnostics"] = rep.diagnostics;
  emit(j, opt, out);
  return 0;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  Options opt;

  CLI::App app{"exact invariants of marked fans and torus quotient data"};
  app.require_subcommand(0, 1);

  struct Sub {
    CLI::App* app;
    int (*fn)(const Options&, std::ostream&);
  };
  std::vector<Sub> subs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "seed for probe directions and generic covectors");
    sub->add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", opt.output_path, "also write the JSON report to this file");
  };

  auto* validate = app.add_subcommand("validate", "check the axioms of a marked fan or triple");
  validate->add_option("inputs", opt.inputs, "files or example names");
  validate->add_option("--example", opt.example, "built-in example name");
  validate->add_option("--jobs", opt.jobs, "validate inputs in parallel");
  add_common(validate);
  subs.push_back({validate, cmd_validate});

  auto* realize_cmd = app.add_subcommand("realize", "lift a marked fan to a torus quotient datum");
  realize_cmd->add_option("inputs", opt.inputs, "file or example name");
  add_common(realize_cmd);
  subs.push_back({realize_cmd, cmd_realize});

  auto* quotient_cmd = app.add_subcommand("quotient", "marked fan of a validated triple");
  quotient_cmd->add_option("inputs", opt.inputs, "file or example name");
  add_common(quotient_cmd);
  subs.push_back({quotient_cmd, cmd_quotient});

  auto* iso = app.add_subcommand("iso", "search for a marked fan isomorphism");
  iso->add_option("inputs", opt.inputs, "two files or example names");
  add_common(iso);
  subs.push_back({iso, cmd_iso});

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of the basic cohomology ring");
  betti->add_option("inputs", opt.inputs, "file or example name");
  betti->add_option("--example", opt.example, "built-in example name");
  betti->add_option("--method", opt.method, "elimination, hvector, morse, or all")
      ->check(CLI::IsMember({"elimination", "hvector", "morse", "all"}));
  betti->add_flag("--unchecked", opt.unchecked,
                  "report raw graded dimensions without the polytopality gate");
  add_common(betti);
  subs.push_back({betti, cmd_betti});

  auto* hodge = app.add_subcommand("hodge", "diagonal Hodge table of the Betti vector");
  hodge->add_option("inputs", opt.inputs, "file or example name");
  hodge->add_option("--example", opt.example, "built-in example name");
  hodge->add_option("--method", opt.method, "method used for the Betti numbers");
  add_common(hodge);
  subs.push_back({hodge, cmd_hodge});

  auto* poly = app.add_subcommand("polytopality", "feasibility certificate for admissible offsets");
  poly->add_option("inputs", opt.inputs, "file or example name");
  poly->add_option("--example", opt.example, "built-in example name");
  add_common(poly);
  subs.push_back({poly, cmd_polytopality});

  auto* mink = app.add_subcommand("minkowski", "Minkowski sum of two polytopes over one fan");
  mink->add_option("inputs", opt.inputs, "file or example name");
  mink->add_option("--example", opt.example, "built-in example name");
  mink->add_option("--b", opt.b1_text, "offsets of the first polytope")->required();
  mink->add_option("--b2", opt.b2_text, "offsets of the second polytope")->required();
  add_common(mink);
  subs.push_back({mink, cmd_minkowski});

  auto* translate = app.add_subcommand("translate", "translation offset between two polytopes");
  translate->add_option("inputs", opt.inputs, "file or example name");
  translate->add_option("--example", opt.example, "built-in example name");
  translate->add_option("--b", opt.b1_text, "offsets of the first polytope")->required();
  translate->add_option("--b2", opt.b2_text, "offsets of the second polytope")->required();
  add_common(translate);
  subs.push_back({translate, cmd_translate});

  auto* example = app.add_subcommand("example", "print a built-in instance");
  example->add_option("inputs", opt.inputs, "example name");
  add_common(example);
  subs.push_back({example, cmd_example});

  auto* principal = app.add_subcommand("principal", "principal-bundle criterion for a torus map");
  principal->add_option("inputs", opt.inputs, "dalpha.json source target");
  add_common(principal);
  subs.push_back({principal, cmd_principal});

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  std::string prog = "mfan";
  argv.push_back(prog.data());
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream err;
    const int rc = app.exit(e, out, err);
    out << err.str();
    return {rc == 0 ? 0 : 1, out.str()};
  }

  try {
    for (const auto& sub : subs)
      if (sub.app->parsed()) return {sub.fn(opt, out), out.str()};
    out << app.help();
    return {1, out.str()};
  } catch (const NotPolytopal& e) {
    out << Json{{"error", e.what()}, {"code", "NotPolytopal"}}.dump(2) << "\n";
    return {3, out.str()};
  } catch (const NotValidated& e) {
    out << Json{{"error", e.what()}, {"code", "NotValidated"}}.dump(2) << "\n";
    return {2, out.str()};
  } catch (const NotInClass& e) {
    out << Json{{"error", e.what()}, {"code", "NotInClass"}}.dump(2) << "\n";
    return {2, out.str()};
  } catch (const Error& e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    return {1, out.str()};
  } catch (const std::exception& e) {
    out << Json{{"error", e.what()}}.dump(2) << "\n";
    return {1, out.str()};
  }
}

}  // namespace mfan::cli
