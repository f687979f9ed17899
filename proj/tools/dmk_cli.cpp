#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dmk/doc.hpp"

namespace {

dmk::Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(path);
    if (!in) throw dmk::DocError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  try {
    return dmk::Json::parse(text);
  } catch (const dmk::Json::parse_error& e) {
    throw dmk::DocError(std::string("JSON parse error: ") + e.what());
  }
}

void emit(const dmk::RunResult& res, const std::string& format) {
  if (format == "text")
    std::cout << dmk::render_text(res.report);
  else
    std::cout << res.report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker and calculator for derived manifolds presented by polynomial data"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  double tolerance = -1.0;
  std::int64_t seed = -1;
  int cap = -1;
  int trials = 200;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tolerance", tolerance, "Float witness tolerance override");
  app.add_option("--seed", seed, "Random seed override");
  app.add_option("--max-groebner-steps", cap, "Basis computation step cap");

  std::map<std::string, std::string> doc_paths;
  for (const char* name : {"check", "classify", "fibre", "glue", "count"}) {
    auto* sc = app.add_subcommand(name);
    sc->add_option("document", doc_paths[name], "JSON document path, or - for stdin")
        ->required();
  }
  auto* laws = app.add_subcommand("laws", "Run the seeded randomized law suites");
  laws->add_option("--trials", trials, "Configurations per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cap > 0) dmk::set_groebner_step_cap(cap);
    const std::string cmd = app.get_subcommands().front()->get_name();
    dmk::RunResult res;
    if (cmd == "laws") {
      res = dmk::run_laws(seed >= 0 ? static_cast<std::uint64_t>(seed) : 1, trials);
    } else {
      dmk::Json j = read_document(doc_paths[cmd]);
      if (!j.is_object()) throw dmk::DocError("document root must be an object");
      if (tolerance >= 0) j["settings"]["tolerance"] = tolerance;
      if (seed >= 0) j["settings"]["seed"] = seed;
      if (cap > 0) j["settings"]["max_groebner_steps"] = cap;
      dmk::Document doc = dmk::load_document(j);
      if (cmd == "check")
        res = dmk::run_check(doc);
      else if (cmd == "classify")
        res = dmk::run_classify(doc);
      else if (cmd == "fibre")
        res = dmk::run_fibre(doc);
      else if (cmd == "glue")
        res = dmk::run_glue(doc);
      else
        res = dmk::run_count(doc);
    }
    emit(res, format);
    return res.exit_code;
  } catch (const dmk::DocError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
