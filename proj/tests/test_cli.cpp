#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chebtl/cli.hpp"

using namespace chebtl;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json payload(const Run& r) { return Json::parse(r.out).at("payload"); }

}  // namespace

TEST_CASE("enum") {
  const auto r = run({"enum", "--left", "2", "--right", "2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["schema_version"] == cli::kSchemaVersion);
  CHECK(j["command"] == "enum");
  CHECK(j["status"] == "ok");
  CHECK(j["payload"]["count"] == 2);
  CHECK(j.find("elapsed_ms") == j.end());

  CHECK(payload(run({"enum", "--left", "1", "--right", "3", "--no-left-returns"}))["count"] == 2);
  CHECK(payload(run({"enum", "--left", "1", "--right", "3", "--no-left-returns",
                     "--unnested-right-returns"}))["count"] == 2);
  CHECK(payload(run({"enum", "--left", "4", "--right", "4", "--width-le", "0"}))["count"] == 4);

  const auto csv = run({"enum", "--left", "2", "--right", "2", "--format", "csv"});
  CHECK(csv.out == "index,n,m,width,degree,arcs\n0,2,2,0,2,0-1 2-3\n1,2,2,2,0,0-3 1-2\n");
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::string> args{"resolve", "--module", "M4", "--verify", "--j-max", "6"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["payload"]["exactness"]["exact"] == true);

  const auto t = run({"--timing", "cheb", "expand", "--n", "3"});
  CHECK(Json::parse(t.out).contains("elapsed_ms"));
}

TEST_CASE("compose") {
  const auto r = run({"compose", "--x", R"({"n":2,"m":0,"arcs":[[0,1]]})", "--y",
                      R"({"n":0,"m":2,"arcs":[[0,1]]})"});
  CHECK(r.code == 0);
  const Json p = payload(r);
  CHECK(p["zero"] == false);
  CHECK(p["result"]["n"] == 2);
  CHECK(p["result"]["m"] == 2);

  CHECK(payload(run({"compose", "--x", R"({"n":0,"m":2,"arcs":[[0,1]]})", "--y",
                     R"({"n":2,"m":0,"arcs":[[0,1]]})"}))["zero"] == true);

  const auto bad = run({"compose", "--x", R"({"n":2,"m":2,"arcs":[[0,2],[1,3]]})", "--y",
                        R"({"n":2,"m":0,"arcs":[[0,1]]})"});
  CHECK(bad.code == 2);
  CHECK(Json::parse(bad.out)["status"] == "error");
  CHECK(bad.err.find("Crossing") != std::string::npos);
}

TEST_CASE("cheb") {
  const auto r = run({"cheb", "expand", "--n", "8", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "x^8 - 7x^6 + 15x^4 - 10x^2 + 1\n");
  CHECK(payload(run({"cheb", "product", "--n", "3", "--m", "2"}))["indices"] == Json::array({1, 3, 5}));
  CHECK(run({"cheb", "truncate", "--k", "0", "--power", "2", "--format", "text"}).out == "1\n");
}

TEST_CASE("matrix and ext csv") {
  const auto m = run({"matrix", "--kind", "y", "--n", "2", "--format", "csv"});
  CHECK(m.out == "n,m,Y\n0,0,1\n0,2,-1\n1,1,1\n2,2,1\n");
  CHECK(m.out.find('\r') == std::string::npos);

  const auto e = run({"ext", "--table", "ML", "--k-max", "1", "--max", "3", "--format", "csv"});
  CHECK(e.code == 0);
  CHECK(e.out.rfind("k,n,m0,m1,m2,m3\n", 0) == 0);
  CHECK(e.out.find("\n1,3,0,2,0,0\n") != std::string::npos);

  CHECK(payload(run({"ext", "--x", "L0", "--y", "L0", "--k", "2"}))["dim"] == 1);
}

TEST_CASE("out file") {
  const auto path = std::filesystem::temp_directory_path() / "chebtl_cli_test.json";
  std::filesystem::remove(path);
  const auto r = run({"--out", path.string(), "cheb", "expand", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(Json::parse(buf.str())["payload"].dump().find("x^2 - 1") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("check") {
  const auto r = run({"check", "bgg", "--max", "14"});
  CHECK(r.code == 0);
  CHECK(payload(r)["results"][0]["passed"] == true);

  const auto list = run({"check", "--list"});
  CHECK(payload(list)["checks"].size() == 13);

  CHECK(run({"check", "nope"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enum", "--left", "x"}).code == 2);
  CHECK(run({"--format", "yaml", "enum", "--left", "1", "--right", "1"}).code == 2);
  CHECK(run({"matrix", "--kind", "z", "--n", "2"}).code == 2);
}
