#include "dmk/doc.hpp"

#include <sstream>

#include "dmk/fibre.hpp"
#include "dmk/laws.hpp"
#include "dmk/parse.hpp"

namespace dmk {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw DocError(path + ": " + what);
}

WitnessPoint parse_witness(const Json& j, const std::string& path, double tol) {
  if (!j.is_array()) bad(path, "witness must be an array of coordinates");
  bool all_exact = true;
  for (const auto& c : j)
    if (!c.is_string()) all_exact = false;
  if (all_exact) {
    std::vector<Scalar> coords;
    for (const auto& c : j) {
      try {
        mpq_class q(c.get<std::string>());
        q.canonicalize();
        coords.push_back(q);
      } catch (const std::invalid_argument&) {
        bad(path, "bad rational '" + c.get<std::string>() + "'");
      }
    }
    return WitnessPoint::from_exact(std::move(coords));
  }
  std::vector<double> coords;
  for (const auto& c : j) {
    if (c.is_string()) {
      mpq_class q(c.get<std::string>());
      q.canonicalize();
      coords.push_back(q.get_d());
    } else if (c.is_number()) {
      coords.push_back(c.get<double>());
    } else {
      bad(path, "witness coordinate must be a rational string or a number");
    }
  }
  return WitnessPoint::from_float(std::move(coords), tol);
}

std::vector<WitnessPoint> parse_witnesses(const Json& j, const std::string& path, double tol) {
  std::vector<WitnessPoint> v;
  if (!j.is_array()) bad(path, "expected an array of witnesses");
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(parse_witness(j[i], path + "/" + std::to_string(i), tol));
  return v;
}

Poly parse_poly_at(const Json& j, const std::vector<std::string>& vars,
                   const std::string& path) {
  if (!j.is_string()) bad(path, "polynomial must be a string");
  try {
    return parse_poly(j.get<std::string>(), vars);
  } catch (const ParseError& e) {
    bad(path, e.what());
  }
}

std::vector<Poly> parse_polys(const Json& j, const std::vector<std::string>& vars,
                              const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of polynomial strings");
  std::vector<Poly> v;
  for (size_t i = 0; i < j.size(); ++i)
    v.push_back(parse_poly_at(j[i], vars, path + "/" + std::to_string(i)));
  return v;
}

PolyMatrix parse_matrix(const Json& j, const std::vector<std::string>& vars, int rows,
                        int cols, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    bad(path, "expected " + std::to_string(rows) + " rows");
  PolyMatrix m(rows, cols, static_cast<int>(vars.size()));
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      bad(path + "/" + std::to_string(r), "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = parse_poly_at(j[r][c], vars,
                                 path + "/" + std::to_string(r) + "/" + std::to_string(c));
  }
  return m;
}

std::vector<std::pair<double, double>> parse_box(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of [lo, hi] intervals");
  std::vector<std::pair<double, double>> box;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& iv = j[i];
    if (!iv.is_array() || iv.size() != 2)
      bad(path + "/" + std::to_string(i), "interval must be [lo, hi]");
    box.emplace_back(iv[0].get<double>(), iv[1].get<double>());
  }
  return box;
}

Json class_json(const MorClass& c) {
  return Json{{"weakly_injective", c.weakly_injective},
              {"injective", c.injective},
              {"weakly_surjective", c.weakly_surjective},
              {"surjective", c.surjective},
              {"equivalence", c.equivalence},
              {"on_zero_locus", c.on_zero_locus}};
}

Json law_json(const LawReport& r) {
  return Json{{"trials", r.trials},
              {"checks", r.checks},
              {"regenerated", r.regenerated},
              {"failures", r.failures},
              {"ok", r.ok()}};
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << " = " << j.dump() << "\n";
  }
}

}  // namespace

const ModelDecl& Document::model(const std::string& name) const {
  auto it = models.find(name);
  if (it == models.end()) bad("models/" + name, "unknown model");
  return it->second;
}

const MorDecl& Document::mor(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end()) bad("morphisms/" + name, "unknown morphism");
  return it->second;
}

StdMor Document::build_mor(const std::string& name) const {
  const MorDecl& m = mor(name);
  return StdMor(model(m.source).model, model(m.target).model, m.map, m.fhat);
}

Document load_document(const Json& j) {
  if (!j.is_object()) throw DocError("document root must be an object");
  Document d;

  if (j.contains("settings")) {
    const Json& s = j["settings"];
    d.settings.tolerance = s.value("tolerance", d.settings.tolerance);
    d.settings.max_groebner_steps =
        s.value("max_groebner_steps", d.settings.max_groebner_steps);
    d.settings.seed = s.value("seed", d.settings.seed);
  }
  set_groebner_step_cap(d.settings.max_groebner_steps);
  const double tol = d.settings.tolerance;

  const Json models_j = j.value("models", Json::object());
  for (const auto& [name, mj] : models_j.items()) {
    const std::string path = "models/" + name;
    if (!mj.is_object() || !mj.contains("vars")) bad(path, "model needs \"vars\"");
    ModelDecl decl{mj["vars"].get<std::vector<std::string>>(), StdModel(0, 0, {}), {}};
    int n = static_cast<int>(decl.vars.size());
    int k = mj.value("rank", 0);
    std::vector<Poly> section =
        parse_polys(mj.value("section", Json::array()), decl.vars, path + "/section");
    if (static_cast<int>(section.size()) != k)
      bad(path, "section length must equal rank");
    std::vector<Poly> domain =
        parse_polys(mj.value("domain", Json::array()), decl.vars, path + "/domain");
    int orient = mj.value("orient", 1);
    if (orient != 1 && orient != -1) bad(path, "orient must be 1 or -1");
    decl.model = StdModel(n, k, std::move(section), std::move(domain), orient);
    if (mj.contains("witnesses"))
      decl.witnesses = parse_witnesses(mj["witnesses"], path + "/witnesses", tol);
    d.models.emplace(name, std::move(decl));
  }

  const Json mors_j = j.value("morphisms", Json::object());
  for (const auto& [name, mj] : mors_j.items()) {
    const std::string path = "morphisms/" + name;
    MorDecl decl;
    decl.source = mj.value("source", "");
    decl.target = mj.value("target", "");
    const ModelDecl& src = d.model(decl.source);
    const ModelDecl& tgt = d.model(decl.target);
    decl.map = parse_polys(mj.value("map", Json::array()), src.vars, path + "/map");
    if (static_cast<int>(decl.map.size()) != tgt.model.n())
      bad(path, "map must have one component per target variable");
    decl.fhat = parse_matrix(mj.value("fhat", Json::array()), src.vars, tgt.model.k(),
                             src.model.k(), path + "/fhat");
    if (mj.contains("witnesses"))
      decl.witnesses = parse_witnesses(mj["witnesses"], path + "/witnesses", tol);
    d.morphisms.emplace(name, std::move(decl));
  }

  const Json twos_j = j.value("two_morphisms", Json::object());
  for (const auto& [name, mj] : twos_j.items()) {
    const std::string path = "two_morphisms/" + name;
    TwoMorDecl decl;
    decl.from = mj.value("from", "");
    decl.to = mj.value("to", "");
    const MorDecl& a = d.mor(decl.from);
    const MorDecl& b = d.mor(decl.to);
    if (a.source != b.source || a.target != b.target)
      bad(path, "2-morphism endpoints must share source and target");
    const ModelDecl& src = d.model(a.source);
    const ModelDecl& tgt = d.model(a.target);
    decl.lambda = parse_matrix(mj.value("lambda", Json::array()), src.vars, tgt.model.n(),
                               src.model.k(), path + "/lambda");
    d.two_morphisms.emplace(name, std::move(decl));
  }

  const Json fibres_j = j.value("fibre_products", Json::object());
  for (const auto& [name, fj] : fibres_j.items()) {
    const std::string path = "fibre_products/" + name;
    FibreDecl decl;
    decl.x = fj.value("x", "");
    decl.y = fj.value("y", "");
    decl.p = fj.value("p", 0);
    const ModelDecl& X = d.model(decl.x);
    const ModelDecl& Y = d.model(decl.y);
    decl.g = parse_polys(fj.value("g", Json::array()), X.vars, path + "/g");
    decl.h = parse_polys(fj.value("h", Json::array()), Y.vars, path + "/h");
    if (fj.contains("witness_pairs")) {
      const Json& wp = fj["witness_pairs"];
      for (size_t i = 0; i < wp.size(); ++i) {
        const std::string p2 = path + "/witness_pairs/" + std::to_string(i);
        if (!wp[i].is_array() || wp[i].size() != 2) bad(p2, "expected a pair of witnesses");
        decl.witness_pairs.emplace_back(parse_witness(wp[i][0], p2 + "/0", tol),
                                        parse_witness(wp[i][1], p2 + "/1", tol));
      }
    }
    d.fibre_products.emplace(name, std::move(decl));
  }

  const Json counts_j = j.value("counts", Json::object());
  for (const auto& [name, cj] : counts_j.items()) {
    const std::string path = "counts/" + name;
    CountDecl decl;
    decl.box = parse_box(cj.value("box", Json::array()), path + "/box");
    if (cj.contains("epsilons")) decl.epsilons = cj["epsilons"].get<std::vector<double>>();
    if (cj.contains("seeds")) decl.seeds = cj["seeds"].get<std::vector<std::uint64_t>>();
    if (cj.contains("newton")) {
      const Json& nj = cj["newton"];
      decl.newton.max_iterations = nj.value("max_iterations", decl.newton.max_iterations);
      decl.newton.tolerance = nj.value("tolerance", decl.newton.tolerance);
      decl.newton.grid_density = nj.value("grid_density", decl.newton.grid_density);
      decl.newton.dedupe_radius = nj.value("dedupe_radius", decl.newton.dedupe_radius);
      decl.newton.min_jacobian_det =
          nj.value("min_jacobian_det", decl.newton.min_jacobian_det);
    }
    if (cj.contains("model")) {
      decl.model = cj["model"].get<std::string>();
      d.model(decl.model);
    } else {
      decl.x = cj.value("x", "");
      decl.y = cj.value("y", "");
      decl.p = cj.value("p", 0);
      const ModelDecl& X = d.model(decl.x);
      const ModelDecl& Y = d.model(decl.y);
      decl.g = parse_polys(cj.value("g", Json::array()), X.vars, path + "/g");
      decl.h = parse_polys(cj.value("h", Json::array()), Y.vars, path + "/h");
    }
    d.counts.emplace(name, std::move(decl));
  }

  if (j.contains("glue")) {
    const Json& gj = j["glue"];
    const std::string path = "glue";
    GlueData gd;
    gd.vdim = gj.value("vdim", 0);
    gd.out_dim = gj.value("out_dim", 0);
    std::vector<std::string> chart_names =
        gj.value("charts", std::vector<std::string>{});
    std::vector<const ModelDecl*> decls;
    for (const std::string& cn : chart_names) {
      const ModelDecl& md = d.model(cn);
      gd.charts.push_back(md.model);
      decls.push_back(&md);
    }
    gd.chart_witnesses.resize(gd.charts.size());
    if (gj.contains("chart_witnesses")) {
      const Json& cw = gj["chart_witnesses"];
      if (cw.size() != gd.charts.size()) bad(path, "chart_witnesses length mismatch");
      for (size_t i = 0; i < cw.size(); ++i)
        gd.chart_witnesses[i] =
            parse_witnesses(cw[i], path + "/chart_witnesses/" + std::to_string(i), tol);
    }
    const Json overlaps_j = gj.value("overlaps", Json::array());
    for (const auto& oj : overlaps_j) {
      int i = oj.value("i", -1), jj = oj.value("j", -1);
      if (i < 0 || jj <= i || jj >= static_cast<int>(gd.charts.size()))
        bad(path + "/overlaps", "overlap indices must satisfy 0 <= i < j < #charts");
      const std::string op = path + "/overlaps/" + std::to_string(i) + "-" + std::to_string(jj);
      const std::vector<std::string>& vi = decls[i]->vars;
      Overlap ov;
      ov.domain = parse_polys(oj.value("domain", Json::array()), vi, op + "/domain");
      ov.map = parse_polys(oj.value("map", Json::array()), vi, op + "/map");
      ov.bundle = parse_matrix(oj.value("bundle", Json::array()), vi, gd.charts[jj].k(),
                               gd.charts[i].k(), op + "/bundle");
      if (oj.contains("witnesses"))
        ov.witnesses = parse_witnesses(oj["witnesses"], op + "/witnesses", tol);
      ov.denominators =
          parse_polys(oj.value("denominators", Json::array()), vi, op + "/denominators");
      gd.overlaps.emplace(std::make_pair(i, jj), std::move(ov));
    }
    if (gj.contains("out_maps")) {
      const Json& om = gj["out_maps"];
      if (om.size() != gd.charts.size()) bad(path, "out_maps length mismatch");
      for (size_t i = 0; i < om.size(); ++i)
        gd.out_maps.push_back(
            parse_polys(om[i], decls[i]->vars, path + "/out_maps/" + std::to_string(i)));
    }
    d.glue = std::move(gd);
  }

  return d;
}

RunResult run_check(const Document& d) {
  RunResult res;
  Json mors = Json::object(), twos = Json::object();
  for (const auto& [name, m] : d.morphisms) {
    ValidationReport r =
        validate_mor(d.model(m.source).model, d.model(m.target).model, m.map, m.fhat);
    mors[name] = Json{{"valid", r.valid}, {"violations", r.violations}};
    if (!r.valid) res.exit_code = 1;
  }
  for (const auto& [name, t] : d.two_morphisms) {
    Json entry;
    try {
      StdMor a = d.build_mor(t.from);
      StdMor b = d.build_mor(t.to);
      ValidationReport r = validate_2mor(a, b, t.lambda);
      entry = Json{{"valid", r.valid}, {"violations", r.violations}};
      if (!r.valid) res.exit_code = 1;
    } catch (const std::invalid_argument& e) {
      entry = Json{{"valid", false}, {"violations", Json::array({e.what()})}};
      res.exit_code = 1;
    }
    twos[name] = entry;
  }
  res.report = Json{{"command", "check"},
                    {"morphisms", mors},
                    {"two_morphisms", twos},
                    {"pass", res.exit_code == 0}};
  return res;
}

RunResult run_classify(const Document& d) {
  RunResult res;
  Json out = Json::object();
  for (const auto& [name, m] : d.morphisms) {
    Json entry;
    try {
      StdMor f = d.build_mor(name);
      Json pts = Json::array();
      std::vector<MorClassification> cls = classify_mor_at(f, m.witnesses);
      std::vector<EtaleVerdict> et = etale_at(f, m.witnesses);
      for (size_t i = 0; i < m.witnesses.size(); ++i) {
        Json p = class_json(cls[i].cls);
        p["witness_injective"] = cls[i].witness_injective;
        p["etale"] = et[i].etale;
        // The cotangent 1-morphism runs contravariantly, so injectivity of
        // omega corresponds to submersions and surjectivity to immersions.
        p["embedding"] = cls[i].cls.surjective && cls[i].witness_injective;
        p["immersion"] = cls[i].cls.surjective;
        p["w_immersion"] = cls[i].cls.weakly_surjective;
        p["submersion"] = cls[i].cls.injective;
        p["w_submersion"] = cls[i].cls.weakly_injective;
        if (et[i].etale != cls[i].cls.equivalence) res.exit_code = 1;
        p["consistent"] = et[i].etale == cls[i].cls.equivalence;
        pts.push_back(p);
      }
      entry = Json{{"valid", true}, {"witnesses", pts}};
    } catch (const std::invalid_argument& e) {
      entry = Json{{"valid", false}, {"error", e.what()}};
      res.exit_code = 1;
    }
    out[name] = entry;
  }
  res.report =
      Json{{"command", "classify"}, {"morphisms", out}, {"pass", res.exit_code == 0}};
  return res;
}

RunResult run_fibre(const Document& d) {
  RunResult res;
  Json out = Json::object();
  for (const auto& [name, fd] : d.fibre_products) {
    const StdModel& X = d.model(fd.x).model;
    const StdModel& Y = d.model(fd.y).model;
    Json entry;
    try {
      DTransverseVerdict tv = d_transverse_at(X, fd.g, Y, fd.h, fd.witness_pairs);
      FibreData fp = fibre_product(X, fd.g, Y, fd.h, fd.p);
      Json pts = Json::array();
      bool exact_ok = true;
      for (const auto& [v, w] : fd.witness_pairs) {
        bool ex = cotangent_exact_at(fp, v, w);
        exact_ok = exact_ok && ex;
        pts.push_back(Json{{"cotangent_exact", ex}});
      }
      entry = Json{{"n", fp.W.n()},
                   {"rank", fp.W.k()},
                   {"vdim", fp.W.vdim()},
                   {"orient", fp.W.orient()},
                   {"d_transverse", tv.transverse},
                   {"d_transverse_vacuous", tv.vacuous},
                   {"witness_pairs", pts}};
      if (!tv.transverse || !exact_ok) res.exit_code = 1;
    } catch (const std::invalid_argument& e) {
      entry = Json{{"error", e.what()}};
      res.exit_code = 1;
    }
    out[name] = entry;
  }
  res.report =
      Json{{"command", "fibre"}, {"products", out}, {"pass", res.exit_code == 0}};
  return res;
}

RunResult run_glue(const Document& d) {
  RunResult res;
  if (!d.glue) throw DocError("glue: no glue data in document");
  GlueReport r = validate_glue(*d.glue);
  Json entries = Json::array();
  for (const GlueEntry& e : r.entries)
    entries.push_back(Json{{"condition", e.condition},
                           {"indices", e.indices},
                           {"pass", e.pass},
                           {"detail", e.detail}});
  res.exit_code = r.valid ? 0 : 1;
  res.report = Json{{"command", "glue"}, {"entries", entries}, {"pass", r.valid}};
  return res;
}

RunResult run_count(const Document& d) {
  RunResult res;
  Json out = Json::object();
  for (const auto& [name, c] : d.counts) {
    CountReport r;
    if (!c.model.empty()) {
      CountProblem p{d.model(c.model).model, c.box,
                     c.epsilons.empty() ? CountProblem{StdModel(0, 0, {}), {}}.epsilons
                                        : c.epsilons,
                     c.seeds.empty() ? CountProblem{StdModel(0, 0, {}), {}}.seeds : c.seeds,
                     c.newton};
      r = virtual_count(p);
    } else {
      CountProblem defaults{StdModel(0, 0, {}), {}};
      if (!c.epsilons.empty()) defaults.epsilons = c.epsilons;
      if (!c.seeds.empty()) defaults.seeds = c.seeds;
      defaults.newton = c.newton;
      r = intersection_number(d.model(c.x).model, c.g, d.model(c.y).model, c.h, c.p, c.box,
                              defaults);
    }
    Json reps = Json::array();
    for (const Replica& rep : r.replicas) {
      Json zs = Json::array();
      for (const ZeroRecord& z : rep.zeros)
        zs.push_back(Json{{"point", z.point}, {"sign", z.sign}});
      reps.push_back(Json{{"seed", rep.seed},
                          {"epsilon", rep.epsilon},
                          {"count", rep.count},
                          {"zeros", zs}});
    }
    out[name] = Json{{"ok", r.ok}, {"count", r.count}, {"error", r.error},
                     {"replicas", reps}};
    if (!r.ok) res.exit_code = 1;
  }
  res.report =
      Json{{"command", "count"}, {"counts", out}, {"pass", res.exit_code == 0}};
  return res;
}

RunResult run_laws(std::uint64_t seed, int trials) {
  RunResult res;
  LawReport v = vvect_laws(seed, trials);
  LawReport s = std_laws(seed, trials);
  res.exit_code = (v.ok() && s.ok()) ? 0 : 1;
  res.report = Json{{"command", "laws"},
                    {"complexes", law_json(v)},
                    {"standard_models", law_json(s)},
                    {"pass", res.exit_code == 0}};
  return res;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace dmk
