#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli.hpp"
#include "json_io.hpp"

using namespace weyl;

namespace {
Json parse_out(const CliResult& r) { return Json::parse(r.out); }
}  // namespace

TEST_CASE("cli envelopes are valid and echo the input") {
  auto r = run_cli({"parahoric", "--type", "B", "--rank", "2", "--flavor", "sc", "--j", "2"});
  REQUIRE(r.exit_code == 0);
  Json env = parse_out(r);
  CHECK(env["schema_version"] == 1);
  CHECK(env["command"] == "parahoric");
  CHECK(env["input"]["type"] == "B");
  CHECK(env["result"]["levi"] == "A1xA1");
  CHECK(env["result"]["z_j"]["invariant_factors"] == Json::array({2}));
}

TEST_CASE("cli payload equals the library result") {
  // the command is a thin shell over the library operation
  auto r = run_cli({"voronoi", "--type", "A", "--rank", "1", "--flavor", "sc"});
  REQUIRE(r.exit_code == 0);
  Json env = parse_out(r);
  RootDatum a1 = build_root_datum('A', 1, Flavor::SimplyConnected);
  VoronoiCell cell = voronoi_cell(basic_form(a1), IVec{0});
  CHECK(env["result"]["center"] == to_json(cell.center));
  CHECK(env["result"]["facets"].size() == cell.facets.size());
  CHECK(env["result"]["vertices"] == Json::array({Json::array({"-1/2"}), Json::array({"1/2"})}));

  auto r2 = run_cli({"freudenthal", "--type", "A", "--rank", "2", "--flavor", "sc",
                     "--lambda", "[1,1]"});
  REQUIRE(r2.exit_code == 0);
  Json env2 = parse_out(r2);
  auto table = freudenthal_multiplicities(build_root_datum('A', 2, Flavor::SimplyConnected),
                                          IVec{1, 1});
  CHECK(env2["result"] == to_json(table));
}

TEST_CASE("cli determinism: byte-identical output across runs") {
  std::vector<std::vector<std::string>> invocations = {
      {"alcove", "--type", "B", "--rank", "2", "--flavor", "sc"},
      {"voronoi", "--type", "A", "--rank", "1", "--flavor", "sc"},
      {"ltfan", "--gram", "[[2]]", "--window", "4"},
      {"orbits", "--type", "A", "--rank", "2", "--affine"},
      {"cdelta", "--type", "G", "--rank", "2"},
  };
  for (const auto& args : invocations) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    // round trip: the payload re-parses and keeps its schema fields
    Json env = parse_out(a);
    CHECK(env.contains("schema_version"));
    CHECK(env.contains("result"));
    CHECK(env.contains("provenance"));
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"parahoric", "--type", "B", "--rank", "2"}).exit_code == 2);  // missing --j
  CHECK(run_cli({"rootdata"}).exit_code == 2);                                 // no group
  CHECK(run_cli({"rootdata", "--type", "Z", "--rank", "2"}).exit_code == 2);
  CHECK(run_cli({"rootdata", "--type", "A", "--rank", "9"}).exit_code == 3);   // cap
  CHECK(run_cli({"nonsense"}).exit_code == 2);
  CHECK(run_cli({"plot", "--type", "A", "--rank", "1", "--target", "fan"}).exit_code == 2);
  // machine-readable error payloads
  auto err = run_cli({"rootdata", "--type", "A", "--rank", "9"});
  Json payload = parse_out(err);
  CHECK(payload["error"]["kind"] == "unsupported");
}

TEST_CASE("config file with flag override") {
  std::string path = "test_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"type": "B", "rank": 2, "flavor": "sc", "j": 0})";
  }
  auto from_config = run_cli({"parahoric", "--config", path});
  REQUIRE(from_config.exit_code == 0);
  CHECK(parse_out(from_config)["result"]["levi"] == "B2");
  // flags win on conflict
  auto overridden = run_cli({"parahoric", "--config", path, "--j", "2"});
  REQUIRE(overridden.exit_code == 0);
  CHECK(parse_out(overridden)["result"]["levi"] == "A1xA1");
  std::remove(path.c_str());
}

TEST_CASE("output file and svg plot") {
  std::string svg_path = "test_cli_fig.svg";
  auto r = run_cli({"plot", "--gram", "[[2]]", "--window", "3", "--target", "fan",
                    "--output", svg_path});
  REQUIRE(r.exit_code == 0);
  std::ifstream in(svg_path);
  REQUIRE(in.good());
  std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.find("<rect") != std::string::npos);
  std::remove(svg_path.c_str());

  // rank too high for plotting
  CHECK(run_cli({"plot", "--type", "A", "--rank", "3", "--target", "alcove",
                 "--output", svg_path}).exit_code == 3);

  std::string json_path = "test_cli_out.json";
  auto r2 = run_cli({"stackyfan", "--type", "A", "--rank", "2", "--output", json_path});
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.out.empty());
  std::ifstream jin(json_path);
  Json env;
  jin >> env;
  CHECK(env["result"]["z_beta"]["order"] == 3);
  std::remove(json_path.c_str());
}

TEST_CASE("explicit cartan matrix input") {
  auto r = run_cli({"rootdata", "--cartan", "[[2,-1],[-2,2]]", "--flavor", "sc"});
  REQUIRE(r.exit_code == 0);
  Json env = parse_out(r);
  CHECK(env["result"]["type"] == "B");
  CHECK(env["result"]["rank"] == 2);
}
