#pragma once

#include <json.hpp>

#include "dmk/count.hpp"
#include "dmk/glue.hpp"

namespace dmk {

using Json = nlohmann::json;

/// Malformed input document (schema violation, bad reference, parse error).
/// Distinct from a mathematical validation failure, which is reported, not
/// thrown.
struct DocError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelDecl {
  std::vector<std::string> vars;
  StdModel model;
  std::vector<WitnessPoint> witnesses;
};

struct MorDecl {
  std::string source, target;
  std::vector<Poly> map;
  PolyMatrix fhat;
  std::vector<WitnessPoint> witnesses;
};

struct TwoMorDecl {
  std::string from, to;
  PolyMatrix lambda;
};

struct FibreDecl {
  std::string x, y;
  std::vector<Poly> g, h;
  int p = 0;
  std::vector<std::pair<WitnessPoint, WitnessPoint>> witness_pairs;
};

struct CountDecl {
  // Either a direct count of `model`, or an intersection pairing when
  // `x` is set.
  std::string model;
  std::string x, y;
  std::vector<Poly> g, h;
  int p = 0;
  std::vector<std::pair<double, double>> box;
  std::vector<double> epsilons;
  std::vector<std::uint64_t> seeds;
  NewtonParams newton;
};

struct Settings {
  double tolerance = 1e-9;
  int max_groebner_steps = 200000;
  std::uint64_t seed = 1;
};

struct Document {
  Settings settings;
  std::map<std::string, ModelDecl> models;
  std::map<std::string, MorDecl> morphisms;
  std::map<std::string, TwoMorDecl> two_morphisms;
  std::map<std::string, FibreDecl> fibre_products;
  std::map<std::string, CountDecl> counts;
  std::optional<GlueData> glue;

  const ModelDecl& model(const std::string& name) const;
  const MorDecl& mor(const std::string& name) const;
  StdMor build_mor(const std::string& name) const;  // throws on invalid data
};

Document load_document(const Json& j);

/// Command runners; each returns a report object plus an exit code
/// (0 pass, 1 violation).
struct RunResult {
  Json report;
  int exit_code = 0;
};

RunResult run_check(const Document& d);
RunResult run_classify(const Document& d);
RunResult run_fibre(const Document& d);
RunResult run_glue(const Document& d);
RunResult run_count(const Document& d);
RunResult run_laws(std::uint64_t seed, int trials);

/// Human-readable rendering of a report object.
std::string render_text(const Json& report);

}  // namespace dmk
