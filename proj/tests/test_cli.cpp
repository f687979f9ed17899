#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("DMK_CLI");
  REQUIRE_MESSAGE(p != nullptr, "DMK_CLI must point at the CLI binary");
  return p;
}

struct RunOutput {
  int exit_code = -1;
  std::string stdout_text;
};

RunOutput run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunOutput out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.stdout_text.append(buf, n);
  int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string write_doc(const std::string& name, const json& doc) {
  std::string path = std::string(P_tmpdir) + "/dmk_cli_" + name + ".json";
  std::ofstream(path) << doc.dump(2);
  return path;
}

json identity_doc() {
  return json{
      {"models",
       {{"X", {{"vars", {"x"}}, {"rank", 1}, {"section", {"x^2"}},
               {"witnesses", {{"0"}}}}}}},
      {"morphisms",
       {{"id", {{"source", "X"}, {"target", "X"}, {"map", {"x"}},
                {"fhat", {{"1"}}}, {"witnesses", {{"0"}}}}}}}};
}

}  // namespace

TEST_CASE("check accepts a valid morphism") {
  std::string path = write_doc("ok", identity_doc());
  RunOutput out = run_cli("check " + path);
  CHECK(out.exit_code == 0);
  json rep = json::parse(out.stdout_text);
  CHECK(rep["pass"] == true);
  CHECK(rep["morphisms"]["id"]["valid"] == true);
}

TEST_CASE("check rejects an invalid bundle map with exit code 1") {
  json doc = identity_doc();
  doc["morphisms"]["id"]["fhat"] = {{"0"}};
  std::string path = write_doc("bad_fhat", doc);
  RunOutput out = run_cli("check " + path);
  CHECK(out.exit_code == 1);
  json rep = json::parse(out.stdout_text);
  CHECK(rep["morphisms"]["id"]["valid"] == false);
}

TEST_CASE("classify reports etale identity consistently") {
  std::string path = write_doc("classify", identity_doc());
  RunOutput out = run_cli("classify " + path);
  CHECK(out.exit_code == 0);
  json rep = json::parse(out.stdout_text);
  const json& w = rep["morphisms"]["id"]["witnesses"][0];
  CHECK(w["etale"] == true);
  CHECK(w["equivalence"] == true);
  CHECK(w["consistent"] == true);
}

TEST_CASE("fibre command computes the point-over-line product") {
  json doc{{"models",
            {{"P", {{"vars", json::array()}, {"rank", 0}}}}},
           {"fibre_products",
            {{"pp", {{"x", "P"}, {"y", "P"}, {"p", 1}, {"g", {"0"}}, {"h", {"0"}},
                     {"witness_pairs", {{json::array(), json::array()}}}}}}}};
  std::string path = write_doc("fibre", doc);
  RunOutput out = run_cli("fibre " + path);
  CHECK(out.exit_code == 0);
  json rep = json::parse(out.stdout_text);
  CHECK(rep["products"]["pp"]["vdim"] == -1);
  CHECK(rep["products"]["pp"]["d_transverse"] == true);
}

TEST_CASE("count command reports the signed count") {
  json doc{{"models",
            {{"X", {{"vars", {"x"}}, {"rank", 1}, {"section", {"x^2"}}}}}},
           {"counts", {{"c", {{"model", "X"}, {"box", {{-1, 1}}}}}}}};
  std::string path = write_doc("count", doc);
  RunOutput out = run_cli("count " + path);
  CHECK(out.exit_code == 0);
  json rep = json::parse(out.stdout_text);
  CHECK(rep["counts"]["c"]["ok"] == true);
  CHECK(rep["counts"]["c"]["count"] == 0);
}

TEST_CASE("glue command validates and reports per condition") {
  json doc{{"models",
            {{"C", {{"vars", {"x"}}, {"rank", 1}, {"section", {"x"}}}}}},
           {"glue",
            {{"vdim", 0},
             {"charts", {"C", "C"}},
             {"overlaps",
              {{{"i", 0}, {"j", 1}, {"map", {"x"}}, {"bundle", {{"1"}}},
                {"witnesses", {{"0"}}}}}}}}};
  std::string path = write_doc("glue", doc);
  RunOutput out = run_cli("glue " + path);
  CHECK(out.exit_code == 0);
  json rep = json::parse(out.stdout_text);
  CHECK(rep["pass"] == true);
}

TEST_CASE("malformed documents exit with code 2") {
  std::string path = std::string(P_tmpdir) + "/dmk_cli_malformed.json";
  std::ofstream(path) << "{ not json";
  CHECK(run_cli("check " + path).exit_code == 2);

  json doc = identity_doc();
  doc["morphisms"]["id"]["map"] = {"x", "x"};  // wrong arity
  CHECK(run_cli("check " + write_doc("arity", doc)).exit_code == 2);

  CHECK(run_cli("check /nonexistent/file.json").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("text format flattens the report") {
  std::string path = write_doc("text", identity_doc());
  RunOutput out = run_cli("check " + path + " --format text");
  CHECK(out.exit_code == 0);
  CHECK(out.stdout_text.find("pass = true") != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
  json doc{{"models",
            {{"X", {{"vars", {"x"}}, {"rank", 1}, {"section", {"x^3 - x"}}}}}},
           {"counts", {{"c", {{"model", "X"}, {"box", {{-2, 2}}}}}}}};
  std::string path = write_doc("det", doc);
  RunOutput a = run_cli("count " + path);
  RunOutput b = run_cli("count " + path);
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.stdout_text == b.stdout_text);
}
