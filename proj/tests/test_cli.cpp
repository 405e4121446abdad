#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli.hpp"
#include "steinberg/json_io.hpp"
#include "steinberg/verify.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace steinberg;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

Json load_schema() {
  std::ifstream f(STEINBERG_SCHEMA);
  REQUIRE(f);
  return Json::parse(f);
}

// Enough of JSON Schema for the shipped file: $ref, type, required, properties,
// additionalProperties, items, enum, oneOf, minimum.
bool conforms(const Json& v, const Json& s, const Json& root) {
  if (s.contains("$ref")) {
    const std::string ref = s["$ref"];
    return conforms(v, root["$defs"][ref.substr(ref.rfind('/') + 1)], root);
  }
  if (s.contains("oneOf")) {
    int hits = 0;
    for (const auto& alt : s["oneOf"]) hits += conforms(v, alt, root);
    if (hits != 1) return false;
  }
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) return false;
  }
  if (s.contains("type")) {
    const std::string t = s["type"];
    const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                    (t == "string" && v.is_string()) || (t == "integer" && v.is_number_integer()) ||
                    (t == "boolean" && v.is_boolean()) || (t == "number" && v.is_number());
    if (!ok) return false;
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) return false;
  if (v.is_object()) {
    if (s.contains("required"))
      for (const auto& k : s["required"])
        if (!v.contains(k.get<std::string>())) return false;
    for (const auto& [k, x] : v.items()) {
      if (s.contains("properties") && s["properties"].contains(k)) {
        if (!conforms(x, s["properties"][k], root)) return false;
      } else if (s.value("additionalProperties", true) == false) {
        return false;
      }
    }
  }
  if (v.is_array() && s.contains("items"))
    for (const auto& x : v)
      if (!conforms(x, s["items"], root)) return false;
  return true;
}

void check_schema(const std::string& def, const std::string& text) {
  static const Json root = load_schema();
  INFO(def);
  REQUIRE(root["$defs"].contains(def));
  CHECK(conforms(Json::parse(text), root["$defs"][def], root));
}

std::string tmpfile(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("steinberg_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("series output") {
  auto r = run({"series", "coh", "--class", "0,1", "--cutoff", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"cutoff\":3,\"coeffs\":[1,2,2,2]}\n");
  check_schema("series", r.out);
  CHECK(series_from_json(Json::parse(r.out)) == coh_series({0, 1}, 3));

  r = run({"series", "trunc", "--class", "1,0", "--window", "3", "--cutoff", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "degree,coefficient\n0,1\n2,2\n4,5\n");

  r = run({"series", "stratum", "--entries", "2,3", "--depth", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"top\":-8,\"coeffs\":[1,2,5,10]}\n");
  check_schema("top_series", r.out);
  CHECK(top_series_from_json(Json::parse(r.out)) == stratum_top_series(CMatrix::from_rows({{{2, 3}}}), 4));
}

TEST_CASE("schur and polyrep series") {
  auto r = run({"series", "schur", "--rows", "2,0;2,0", "--cols", "2,0;2,0", "--degree-bound", "2", "--window", "3",
                "--depth", "3"});
  CHECK(r.code == 0);
  check_schema("top_series", r.out);
  CHECK(Json::parse(r.out)["top"] == -16);

  r = run({"series", "polyrep", "--class", "2,1", "--seq", "2,1", "--depth", "3"});
  CHECK(r.code == 0);
  check_schema("top_series", r.out);

  r = run({"series", "polyrep", "--class", "2,1", "--depth", "3"});
  CHECK(r.code == 1);
}

TEST_CASE("wposet output") {
  auto r = run({"wposet", "--alpha", "4,0", "--rows", "2,0;2,0", "--cols", "2,0;2,0", "--degree-bound", "2",
                "--window", "3", "--n0"});
  REQUIRE(r.code == 0);
  check_schema("wposet", r.out);
  const Json j = Json::parse(r.out);
  CHECK(j["hasse"]["nodes"].size() == 11);
  CHECK(j["hasse"]["edges"].size() == 10);
  CHECK(j["n0"] == 3);
  std::vector<CMatrix> got;
  for (const auto& n : j["hasse"]["nodes"]) got.push_back(cmatrix_from_json(n["matrix"]));
  std::sort(got.begin(), got.end());
  auto want = example_chain(2);
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  r = run({"wposet", "--alpha", "4,0", "--rows", "2,0;2,0", "--cols", "2,0;2,0", "--slope-bound", "2", "--format",
           "dot"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("digraph W {", 0) == 0);
  std::size_t arrows = 0;
  for (std::size_t p = r.out.find("->"); p != std::string::npos; p = r.out.find("->", p + 2)) ++arrows;
  CHECK(arrows == 14);

  r = run({"wposet", "--rows", "1,0;1,0", "--cols", "2,0", "--heart", "nu:2"});
  CHECK(r.code == 0);
  check_schema("wposet", r.out);
}

TEST_CASE("other subcommands conform to the schema") {
  auto r = run({"kclass", "--class", "2,-1", "--with", "1,3", "--heart", "nu:3"});
  CHECK(r.code == 0);
  check_schema("kclass", r.out);
  CHECK(Json::parse(r.out)["euler"] == 2 + 6 + 1);

  r = run({"hn", "--class", "1,0", "--window", "2"});
  CHECK(r.code == 0);
  check_schema("hn", r.out);
  CHECK(Json::parse(r.out)["hn_types"].size() == 2);
  r = run({"hn", "--class", "2,0", "--window", "2", "--bundles"});
  CHECK(r.code == 0);
  check_schema("hn", r.out);

  r = run({"pbw-seq", "--entries", "1,0 0,1;0,1 1,0"});
  CHECK(r.code == 0);
  check_schema("pbw", r.out);
  const Json p = Json::parse(r.out);
  CHECK(p["sequence"]["t"] == 4);
  CHECK(cmatrix_from_json(p["matrix"]) == CMatrix::from_rows({{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}));

  r = run({"genmap", "psin", "--n", "3"});
  CHECK(r.code == 0);
  check_schema("genmap", r.out);
  r = run({"genmap", "check-compat", "--n-max", "12"});
  CHECK(r.code == 0);
  check_schema("genmap_check", r.out);

  r = run({"verify", "genmap"});
  CHECK(r.code == 0);
  check_schema("verify", r.out);
}

TEST_CASE("matrix files") {
  const std::string in = tmpfile("matrix.json"), out = tmpfile("out.txt");
  {
    std::ofstream f(in);
    f << to_json(CMatrix::from_rows({{{1, 0}, {0, 1}, {1, 1}}, {{0, 2}, {1, 0}, {0, 1}}, {{1, -1}, {1, 1}, {0, 1}}}))
             .dump();
  }
  auto r = run({"pbw-seq", "--matrix", in, "--format", "text", "--output", out});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const std::string first = slurp(out);
  CHECK(first.rfind("shape 3x3", 0) == 0);
  r = run({"pbw-seq", "--matrix", in, "--format", "text", "-o", out});
  CHECK(slurp(out) == first);
  r = run({"pbw-seq", "--matrix", in, "--format", "dot"});
  CHECK(r.out.rfind("graph regions {", 0) == 0);

  r = run({"pbw-seq", "--matrix", tmpfile("missing.json")});
  CHECK(r.code == 1);
  {
    std::ofstream f(in);
    f << "{not json";
  }
  r = run({"pbw-seq", "--matrix", in});
  CHECK(r.code == 1);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST_CASE("repeat runs are byte-identical") {
  const std::vector<std::vector<std::string>> cmds{
      {"verify", "all", "--seed", "7"},
      {"wposet", "--rows", "2,0;2,0", "--cols", "2,0;2,0", "--slope-bound", "2", "--format", "dot"},
      {"series", "schur", "--rows", "1,0;1,0", "--cols", "2,0", "--degree-bound", "1", "--depth", "5"},
      {"hn", "--class", "3,-1", "--window", "3"}};
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"series", "coh", "--class", "x,y"}).code == 2);
  CHECK(run({"series", "coh", "--class", "1,0", "--cutoff", "-1"}).code == 2);
  CHECK(run({"series", "coh", "--class", "1,0", "--format", "dot"}).code == 2);
  CHECK(run({"series", "nonsense", "--class", "1,0"}).code == 2);
  CHECK(run({"wposet", "--rows", "2,0"}).code == 2);
  CHECK(run({"wposet", "--rows", "1,0", "--cols", "1,0", "--slope-bound", "1", "--degree-bound", "1"}).code == 2);

  auto r = run({"wposet", "--rows", "2,0;2,0", "--cols", "2,0;2,0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("infinitely many") != std::string::npos);
  r = run({"verify", "nosuch"});
  CHECK(r.code == 1);
  CHECK(r.err == "unknown verification suite 'nosuch'\n");
  CHECK(run({"series", "coh", "--class", "0,0"}).code == 1);
  CHECK(run({"hn", "--class", "1,0", "--window", "0"}).code == 1);
  CHECK(run({"kclass", "--class", "1,0", "--heart", "nu:0"}).code == 1);
  CHECK(run({"wposet", "--rows", "1,0;1,0", "--cols", "2,0", "--alpha", "3,0", "--heart", "nu:1"}).code == 1);
  CHECK(run({"wposet", "--rows", "2,0", "--cols", "2,0", "--klr", "--slope-bound", "1"}).code == 1);
  CHECK(run({"genmap", "phi", "--n", "1"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
