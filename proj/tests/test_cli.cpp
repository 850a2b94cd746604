#include <filesystem>
#include <fstream>
#include <sstream>

#include "biwave/cli.hpp"
#include "biwave/error.hpp"
#include "biwave/field_io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace biwave;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_execute(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string line_value(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return {};
}

std::filesystem::path temp(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("complex literals") {
  CHECK(parse_complex("2") == Complex{2, 0});
  CHECK(parse_complex("-1i") == Complex{0, -1});
  CHECK(parse_complex("i") == Complex{0, 1});
  CHECK(parse_complex("-i") == Complex{0, -1});
  CHECK(parse_complex("0.5-2e-3i") == Complex{0.5, -2e-3});
  CHECK(parse_complex("1e+2+3i") == Complex{100, 3});
  CHECK(parse_complex("+4") == Complex{4, 0});
  CHECK_THROWS_AS(parse_complex("1+"), Error);
  CHECK_THROWS_AS(parse_complex("abc"), Error);
  CHECK_THROWS_AS(parse_complex(""), Error);

  const CVec3 F = parse_cvec("0,0,-1i");
  CHECK(F.z == Complex{0, -1});
  CHECK_THROWS_AS(parse_cvec("1,2"), Error);
  CHECK(parse_vec("1,2,3") == Vec3{1, 2, 3});

  for (Complex c : {Complex{0, 0.5}, Complex{-1.25, 3}, Complex{2, 0}, Complex{0.1, -0.7}}) {
    CHECK(parse_complex(format_complex(c)) == c);
  }
  CHECK(format_complex({0, 0.5}) == "0+0.5i");
}

TEST_CASE("twistor command writes a dump and reports the invariants") {
  const auto path = temp("biwave_cli_twistor.bin");
  const auto r = run({"twistor", "--xi", "2,0,0", "--F", "0,0,-1i", "--branch", "+", "--grid",
                      "16,16,16,16", "--h", "0.05", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(line_value(r.out, "norm") == "1");
  CHECK(line_value(r.out, "pseudonorm") == "0+0.5i");
  CHECK(std::stod(line_value(r.out, "grid_residual")) < 5e-3);

  const FieldDump d = read_field(path);
  CHECK(d.field.data().size() == 65536);
  CHECK(d.generator["family"] == "xi");

  const auto energy = temp("biwave_cli_energy.csv");
  const auto e = run({"energy", "--in", path.string(), "--out", energy.string()});
  CHECK(e.code == 0);
  const FieldDump xi = read_field(energy);
  CHECK(std::abs(xi.field.data()[0].s - Complex{1.0}) < 1e-12);
  CHECK(xi.generator["source"]["family"] == "xi");
  std::filesystem::remove(path);
  std::filesystem::remove(energy);
}

TEST_CASE("twistor families") {
  CHECK(run({"twistor", "--family", "h", "--F", "0,0,-1i"}).code == 0);
  CHECK(run({"twistor", "--family", "evanescent", "--xi", "0.5,0,0", "--F", "0,0,-1i"}).code ==
        0);
  const auto w = run({"twistor", "--family", "omega", "--omega", "1", "--F", "0,0,1+0.5i",
                      "--grid", "1,5,5,5"});
  CHECK(w.code == 0);
  CHECK(std::stod(line_value(w.out, "grid_residual")) < 5e-3);
  const auto s = run({"twistor", "--family", "static", "--F", "1,0,0.5i"});
  CHECK(s.code == 0);
  CHECK(line_value(s.out, "norm") == "1");
}

TEST_CASE("usage and parameter errors exit 2") {
  CHECK(run({"--no-such-flag"}).code == 2);
  CHECK(run({"twistor", "--family", "bogus"}).code == 2);
  const auto r = run({"twistor", "--xi", "0.5,0,0", "--F", "0,0,-1i"});
  CHECK(r.code == 2);
  CHECK(r.err.find("EvanescentRegime") != std::string::npos);
  CHECK(run({"twistor", "--xi", "2,0,0", "--out", "x.bin"}).code == 2);
  CHECK(run({"solve", "bogus"}).code == 2);
  CHECK(run({"energy", "--in", "/nonexistent/in.bin", "--out", "o.bin"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("solve command") {
  const auto k = run({"solve", "kirchhoff", "--source", "constant", "--F", "0,0,-1.5", "--tau",
                      "1"});
  REQUIRE(k.code == 0);
  CHECK(std::abs(parse_complex(line_value(k.out, "u")) - std::sin(1.5) / 1.5) < 1e-10);

  const auto p = run({"solve", "planewave", "--amp", "1", "--sigma", "0.3", "--kappa", "1,0,0",
                      "--F", "0,1i,0"});
  REQUIRE(p.code == 0);
  CHECK(std::stod(line_value(p.out, "check")) < 1e-12);
}

TEST_CASE("superpose command") {
  const auto r = run({"superpose", "--surface", "cap", "--F", "-0.3,0,-1i", "--grid", "5,5,5,5",
                      "--h", "0.015625"});
  REQUIRE(r.code == 0);
  CHECK(line_value(r.out, "nodes") == "2048");
  CHECK(std::stod(line_value(r.out, "max_surface_residual")) < 1e-12);
  CHECK(std::stod(line_value(r.out, "grid_residual")) < 5e-3);
}

TEST_CASE("job file mirrors flags") {
  const auto job = temp("biwave_cli_job.json");
  std::ofstream(job) << R"({"command": "twistor", "xi": [2, 0, 0], "F": "0,0,-1i"})";
  const auto r = run({"--job", job.string()});
  CHECK(r.code == 0);
  CHECK(line_value(r.out, "pseudonorm") == "0+0.5i");
  std::ofstream(job) << R"({"xi": 1})";
  CHECK(run({"--job", job.string()}).code == 2);
  std::filesystem::remove(job);
}

TEST_CASE("verify command") {
  const auto path = temp("biwave_cli_verify.json");
  const auto r = run({"verify", "--json", path.string(), "--conventions", "HermitianLeft"});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["summary"]["fail"] == 0);

  const auto q = run({"verify", "--claim", "C21", "--conventions", "QuaternionOnly"});
  CHECK(q.code == 1);
  CHECK(run({"verify", "--claim", "NOPE"}).code == 2);
  std::filesystem::remove(path);
}
