#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "zktor/complexes.hpp"
#include "zktor/fields.hpp"
#include "zktor/lambda.hpp"
#include "zktor/moment_angle.hpp"
#include "zktor/poincare.hpp"
#include "zktor/vertex_set.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Run the CLI with the given arguments, capturing stdout (and stderr when
// merge_stderr is set).
RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + ZKTOR_CLI_PATH + "\" " + args;
  if (merge_stderr) cmd += " 2>&1";
  else cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string data(const std::string& name) {
  return std::string("\"") + ZKTOR_DATA_DIR + "/" + name + "\"";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("tor tables from the command line") {
  auto res = run("tor " + data("sample5.json"));
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "field: rational"));
  CHECK(contains(res.output, "poincare: 1+4x+5x^2+2x^3"));
  CHECK(contains(res.output, "total: 12"));
  CHECK(contains(res.output, "q=0 sigma={} dim=1"));
  CHECK(contains(res.output, "q=3 sigma={1,2,3,4,5} dim=2"));

  auto gf2 = run("--field gf:2 tor " + data("sample5.json"));
  CHECK(gf2.exit_code == 0);
  CHECK(contains(gf2.output, "field: gf:2"));
  CHECK(contains(gf2.output, "poincare: 1+4x+5x^2+2x^3"));
}

TEST_CASE("series subcommands") {
  auto zk5 = run("zk " + data("sample5.json"));
  CHECK(zk5.exit_code == 0);
  CHECK(contains(zk5.output, "series: 1+2t^3+2t^5+5t^6+2t^7"));
  CHECK(contains(zk5.output, "total: 12"));

  auto zk6 = run("zk " + data("octahedron.json"));
  CHECK(contains(zk6.output, "series: 1+3t^3+3t^6+t^9"));
  CHECK(contains(zk6.output, "total: 8"));

  auto s2 = run("s2s1 " + data("octahedron.json"));
  CHECK(s2.exit_code == 0);
  CHECK(contains(s2.output,
                 "series: 1+6t^2+9t^3+12t^4+36t^5+35t^6+36t^7+54t^8+27t^9"));
  CHECK(contains(s2.output, "total: 216"));
}

TEST_CASE("polyhedral product assembly matches the specialization") {
  auto ma = run("ma " + data("sample5.json") + " --pairs " +
                data("pairs_d2s1_m5.json"));
  CHECK(ma.exit_code == 0);
  CHECK(contains(ma.output, "series: 1+2t^3+2t^5+5t^6+2t^7"));
  CHECK(contains(ma.output, "note: valid when each inclusion"));

  auto swept = run("ma " + data("sample5.json") + " --pairs " +
                   data("pairs_d2s1_m5.json") + " --all-omega");
  CHECK(swept.exit_code == 0);
  CHECK(contains(swept.output, "series: 1+2t^3+2t^5+5t^6+2t^7"));

  auto s2s1 = run("ma " + data("octahedron.json") + " --pairs " +
                  data("pairs_s2s1_m6.json"));
  CHECK(contains(s2s1.output,
                 "series: 1+6t^2+9t^3+12t^4+36t^5+35t^6+36t^7+54t^8+27t^9"));
}

TEST_CASE("product table output") {
  auto res = run("product " + data("sample5.json"));
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "classes: 12"));
  CHECK(contains(res.output,
                 "[1]*[2] -> (q=2, sigma={1,2,4,5}) coords=[1]"));
  CHECK(contains(res.output,
                 "[2]*[1] -> (q=2, sigma={1,2,4,5}) coords=[-1]"));

  // Over GF(2) the sign disappears.
  auto gf2 = run("--field gf:2 product " + data("sample5.json"));
  CHECK(contains(gf2.output,
                 "[2]*[1] -> (q=2, sigma={1,2,4,5}) coords=[1]"));
}

TEST_CASE("link and compress subcommands") {
  auto vertex = run("link " + data("octahedron.json") + " --omega 1");
  CHECK(vertex.exit_code == 0);
  CHECK(contains(vertex.output, "omega: {1}"));
  CHECK(contains(vertex.output, "H^1 dim=1"));

  auto facet = run("link " + data("octahedron.json") + " --omega 1,3,5");
  CHECK(contains(facet.output, "H^-1 dim=1"));

  auto nonface = run("link " + data("octahedron.json") + " --omega 1,2");
  CHECK(contains(nonface.output, "reduced cohomology: 0"));

  auto comp = run("compress " + data("octahedron.json") + " --omega 1");
  CHECK(comp.exit_code == 0);
  CHECK(contains(comp.output, "generator 1: {2}"));
  CHECK(contains(comp.output, "generator 2: {3,4}"));

  auto dead = run("compress " + data("octahedron.json") + " --omega 1,2");
  CHECK(contains(dead.output, "empty generator is present"));
}

TEST_CASE("verification subcommands succeed on small runs") {
  auto hochster = run("verify hochster --trials 3 --seed 5 --m 5");
  CHECK(hochster.exit_code == 0);
  CHECK(contains(hochster.output, "hochster agreement (rational): OK 3/3"));

  auto taylor = run("verify taylor --trials 3 --seed 5");
  CHECK(taylor.exit_code == 0);
  CHECK(contains(taylor.output, "taylor exactness (rational): OK 3/3"));

  auto equiv = run("verify equiv --trials 3 --seed 5");
  CHECK(equiv.exit_code == 0);
  CHECK(contains(equiv.output, "presentation invariance (rational): OK 3/3"));

  // Sweeping the shipped generator document: cap (2,1,2) gives 18 slices.
  auto sweep = run("verify taylor " + data("taylor_sweep.json"));
  CHECK(sweep.exit_code == 0);
  CHECK(contains(sweep.output,
                 "taylor exactness (rational): OK 18 multidegrees"));
}

TEST_CASE("json output parses and is deterministic") {
  auto res = run("--json tor " + data("sample5.json"));
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.output);
  CHECK(doc.at("field") == "rational");
  CHECK(doc.at("total") == 12);
  CHECK(doc.at("entries").size() == 11);
  CHECK(doc.at("poincare").at("text") == "1+4x+5x^2+2x^3");

  auto zk = run("--json zk " + data("octahedron.json"));
  auto zdoc = nlohmann::json::parse(zk.output);
  CHECK(zdoc.at("series").at("text") == "1+3t^3+3t^6+t^9");
  CHECK(zdoc.at("total") == 8);

  auto ma = run("--json ma " + data("sample5.json") + " --pairs " +
                data("pairs_d2s1_m5.json"));
  auto mdoc = nlohmann::json::parse(ma.output);
  CHECK(mdoc.at("unit_term") == 1);
  CHECK(mdoc.at("ledger").is_array());
  CHECK_FALSE(mdoc.at("hypotheses").get<std::string>().empty());

  auto link = run("--json link " + data("octahedron.json") + " --omega 1");
  auto ldoc = nlohmann::json::parse(link.output);
  CHECK(ldoc.at("omega") == nlohmann::json({1}));
  CHECK(ldoc.at("link_cohomology")[0].at("degree") == 1);

  // Byte-identical reruns: no hidden nondeterminism in iteration orders.
  CHECK(run("--json tor " + data("sample5.json")).output == res.output);
  auto v1 = run("verify hochster --trials 5 --seed 42 --m 5");
  auto v2 = run("verify hochster --trials 5 --seed 42 --m 5");
  CHECK(v1.output == v2.output);
  CHECK(run("product " + data("sample5.json")).output ==
        run("product " + data("sample5.json")).output);
}

TEST_CASE("json tables round-trip through the library") {
  using namespace zktor;
  Rationals Q;

  auto res = run("--json tor " + data("sample5.json"));
  REQUIRE(res.exit_code == 0);
  auto doc = nlohmann::json::parse(res.output);
  SimplicialComplement P(5, {VertexSet(5, {1, 5}), VertexSet(5, {2, 4}),
                             VertexSet(5, {1, 2, 3}),
                             VertexSet(5, {3, 4, 5})});
  auto expected = bigraded_betti(P, Q);
  BettiTable reparsed;
  for (const auto& row : doc.at("entries")) {
    auto members = row.at("sigma").get<std::vector<int>>();
    reparsed.entries[BettiKey{row.at("q").get<int>(),
                              VertexSet::from_members(5, members)}] =
        row.at("dim").get<long>();
  }
  CHECK(reparsed.same_entries(expected));
  CHECK(doc.at("total").get<long long>() == expected.total());
  CHECK(doc.at("poincare").at("text").get<std::string>() ==
        expected.poincare().to_string());

  auto zk = run("--json zk " + data("octahedron.json"));
  REQUIRE(zk.exit_code == 0);
  auto zdoc = nlohmann::json::parse(zk.output);
  SimplicialComplement oct(6, {VertexSet(6, {1, 2}), VertexSet(6, {3, 4}),
                               VertexSet(6, {5, 6})});
  PoincarePolynomial series = zk_series(oct, Q);
  CHECK(parse_poincare(zdoc.at("series").at("text").get<std::string>(), 't') ==
        series);
  auto coeffs = zdoc.at("series").at("coefficients");
  REQUIRE(static_cast<int>(coeffs.size()) == series.degree() + 1);
  for (int d = 0; d <= series.degree(); ++d)
    CHECK(coeffs[static_cast<std::size_t>(d)].get<long long>() ==
          series.coeff(d));
}

TEST_CASE("usage problems exit with code 2") {
  CHECK(run("", true).exit_code == 2);                       // no subcommand
  CHECK(run("tor", true).exit_code == 2);                    // missing input
  CHECK(run("frobnicate x.json", true).exit_code == 2);      // bad subcommand
  CHECK(run("tor /nonexistent/input.json", true).exit_code == 2);
  CHECK(run("--field gf:4 tor " + data("sample5.json"), true).exit_code == 2);
  CHECK(run("--field floats tor " + data("sample5.json"), true).exit_code ==
        2);
  CHECK(run("link " + data("octahedron.json") + " --omega 1,1", true)
            .exit_code == 2);
  CHECK(run("ma " + data("sample5.json") + " --pairs " +
                data("pairs_s2s1_m6.json"),
            true)
            .exit_code == 2);  // six records for a five-vertex input

  auto missing = run("tor /nonexistent/input.json", true);
  CHECK(contains(missing.output, "error:"));

  std::string bad_path = "/tmp/zktor_bad_input.json";
  {
    std::ofstream bad(bad_path);
    bad << R"({"m": 3, "complement": [[7]]})";
  }
  auto bad = run("tor " + bad_path, true);
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.output, "outside 1..3"));
  std::remove(bad_path.c_str());

  CHECK(run("--help", true).exit_code == 0);
}
