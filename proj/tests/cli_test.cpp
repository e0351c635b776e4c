#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "evenpoint/finite_field.hpp"
#include "evenpoint/poly_io.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run_cli(const std::string& args, const std::string& env = "") {
  const std::string command = env + (env.empty() ? "" : " ") + "\"" EVENPOINT_CLI_PATH "\" " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("legendre prints a bare sign") {
  const auto r = run_cli("symbols legendre --q 5 --class \"t^2+4*t+1\" --place \"t^2+2*t+3\"");
  CHECK(r.code == 0);
  CHECK(r.out == "+1\n");
  const auto s = run_cli("symbols legendre --q 5 --class \"t^2+4*t+1\" --place \"t^2+2\"");
  CHECK(s.code == 0);
  CHECK(s.out == "-1\n");
}

TEST_CASE("graph build emits the F5 graph as JSON") {
  const auto r = run_cli("graph build --q 5 --max-degree 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["q"] == 5);
  CHECK(j["model"] == "p1");
  CHECK(j["vertices"].size() == 10);
  for (const auto& e : j["edges"]) CHECK(e[0].get<int>() < e[1].get<int>());
}

TEST_CASE("graph build is deterministic") {
  const auto a = run_cli("graph build --q 5 --max-degree 2 --format dot");
  const auto b = run_cli("graph build --q 5 --max-degree 2 --format dot");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run_cli("graph build --q 5 --max-degree 2 --format csv");
  CHECK(c.code == 0);
  CHECK(c.out == run_cli("graph build --q 5 --max-degree 2 --format csv").out);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--q 4 sing").code == 2);
  CHECK(run_cli("--q 5 symbols legendre --class \"t^2+*t\" --place t").code == 2);
  CHECK(run_cli("--q 5 even-check --place \"t^2+1\"").code == 2);
  CHECK(run_cli("--q 5 --f \"x^3-x\" curve analyze", "EVENPOINT_MAX_JACOBIAN=4").code == 3);
  CHECK(run_cli("--q 5 --f \"x^3-x\" curve analyze").code == 0);
}

TEST_CASE("sing reports the expected dimension") {
  const auto r = run_cli("--q 5 sing --remove t --remove inf");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 2);
  CHECK(j["dimension"] == j["expected_dimension"]);
}

TEST_CASE("curve analyze on the elliptic fixture") {
  const auto r = run_cli("--q 5 --f \"x^3-x\" curve analyze --max-degree 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["genus"] == 1);
  CHECK(j["jacobian"]["order"] == 8);
  CHECK(j["jacobian"]["zeta_order"] == 8);
  CHECK(j["sing_dimension"] == 3);
}

TEST_CASE("verify-paper runs single criteria") {
  const auto r = run_cli("verify-paper --criterion A1 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["criteria"][0]["id"] == "A1");
  CHECK(run_cli("verify-paper --criterion A99").code == 2);
}

TEST_CASE("printed polynomials parse back") {
  const auto field = evenpoint::FiniteField::of_order(5);
  const evenpoint::PolyRing ring(field);
  const auto r = run_cli("graph build --q 5 --max-degree 2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& v : j["vertices"]) {
    const std::string place = v["place"];
    CHECK(evenpoint::format_poly(ring, evenpoint::parse_poly(ring, place)) == place);
  }
}
