#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "qtensor/cli/cli.hpp"
#include "qtensor/cli/export.hpp"
#include "qtensor/dualcheck/dualcheck.hpp"

using namespace qtensor;
using namespace qtensor::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const CliHooks& hooks = {}) {
  args.insert(args.begin(), "qtensor");
  std::ostringstream out, err;
  int code = run_cli(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qtensor_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("walks for n=2 r=2") {
  auto r = run({"walks", "--n", "2", "--r", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "[1,1]\n[1,2]\n");
  auto j = run({"walks", "--n", "2", "--r", "2", "--output", "json"});
  CHECK(j.out == "[[1,1],[1,2]]\n");
}

TEST_CASE("sign vector as json") {
  auto r = run({"vectors", "--n", "3", "--r", "3", "--shape", "1,1,1", "--output", "json"});
  REQUIRE(r.code == 0);
  auto j = tensorspace::Json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["terms"].size() == 6);
  CHECK(j[0]["terms"][5]["idx"] == tensorspace::Json::array({3, 2, 1}));
  CHECK(j[0]["terms"][5]["coeff"] == "1");
  CHECK(j[0]["terms"][0]["coeff"] == "-q^-3");
}

TEST_CASE("shape echoes normalized") {
  auto r = run({"vectors", "--n", "3", "--r", "3", "--shape", "2,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("shape (2,1)") != std::string::npos);
}

TEST_CASE("verify passes at n=3 r=3") {
  auto r = run({"verify", "--n", "3", "--r", "3"});
  CHECK(r.code == 0);
  for (const char* name : {"PASS  orthogonality", "PASS  maximality", "PASS  commuting actions", "PASS  braid"})
    CHECK(r.out.find(name) != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify over a specialized field") {
  CHECK(run({"verify", "--n", "3", "--r", "3", "--q0", "3/2"}).code == 0);
  CHECK(run({"verify", "--n", "2", "--r", "4", "--q0", "-5"}).code == 0);
}

TEST_CASE("corrupted coefficient flips verify") {
  for (std::size_t rec : {0u, 1u, 3u}) {
    CliHooks hooks;
    hooks.corrupt_record = rec;
    auto r = run({"verify", "--n", "3", "--r", "3"}, hooks);
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
  }
}

TEST_CASE("usage errors exit 2") {
  const std::vector<std::vector<std::string>> bad = {
      {"walks", "--r", "2"},
      {"dance", "--n", "2", "--r", "2"},
      {"walks", "--n", "0", "--r", "2"},
      {"walks", "--n", "2", "--r", "-1"},
      {"walks", "--n", "2", "--r", "2", "--q0", "1"},
      {"walks", "--n", "2", "--r", "2", "--q0", "-1"},
      {"walks", "--n", "2", "--r", "2", "--q0", "0"},
      {"walks", "--n", "2", "--r", "2", "--q0", "x"},
      {"walks", "--n", "2", "--r", "2", "--shape", "1,2"},
      {"walks", "--n", "2", "--r", "2", "--shape", "1,1,0,1"},
      {"walks", "--n", "2", "--r", "3", "--shape", "1,1,1"},
      {"walks", "--n", "2", "--r", "2", "--output", "xml"},
      {"psi", "--n", "3", "--r", "2"},
  };
  for (const auto& args : bad) {
    CAPTURE(args.front());
    auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.err.find("usage: qtensor <command> --n <int> --r <int>") != std::string::npos);
  }
}

TEST_CASE("parse_args fields") {
  auto cfg = parse_args({"qtensor", "specht", "--n", "4", "--r", "3", "--shape", "2,1", "--q0", "-4/6", "--output", "json"});
  CHECK(cfg.command == Command::specht);
  CHECK(cfg.n == 4);
  CHECK(cfg.r == 3);
  CHECK(cfg.shape == combinatorics::Partition({2, 1}));
  CHECK(cfg.q0 == coeff::Rational(-2, 3));
  CHECK(cfg.output == Output::json);
  CHECK_FALSE(cfg.out_path);
}

TEST_CASE("psi lists defined and undefined elements") {
  auto r = run({"psi", "--n", "3", "--r", "2", "--shape", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Psi_1^{+(0)} = (q)/(q^2 + 1) * F[1]") != std::string::npos);
  CHECK(r.out.find("Psi_2^{+(0)} undefined") != std::string::npos);
}

TEST_CASE("decompose and specht exit codes") {
  auto d = run({"decompose", "--n", "3", "--r", "3", "--output", "json"});
  CHECK(d.code == 0);
  auto j = tensorspace::Json::parse(d.out);
  CHECK(j["total"] == 27);
  CHECK(j["identity_ok"] == true);
  CHECK(run({"specht", "--n", "3", "--r", "4"}).code == 0);
  CHECK(run({"norms", "--n", "3", "--r", "4"}).code == 0);
  CHECK(run({"invariants", "--n", "3", "--r", "3"}).code == 0);
}

TEST_CASE("export is byte stable and round trips") {
  psiphi::Engine<coeff::GenericField> eng;
  auto basis = dualcheck::maximal_basis(eng, 2, 2);
  auto p1 = temp_file("a.json"), p2 = temp_file("b.json");
  export_json(eng.field(), basis, p1.string());
  export_json(eng.field(), dualcheck::maximal_basis(eng, 2, 2), p2.string());
  const std::string bytes = slurp(p1);
  CHECK(bytes == slurp(p2));
  auto j = tensorspace::Json::parse(bytes);
  REQUIRE(j.size() == 2);
  CHECK(json_bytes(j) == bytes);
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto v = tensorspace::vector_from_json(eng.field(), j[i]);
    CHECK(v == basis[i].vector);
    CHECK(tensorspace::to_json(eng.field(), v).dump() == j[i].dump());
  }

  export_json(dualcheck::decomposition_report(eng, 3, 3), p1.string());
  export_json(dualcheck::decomposition_report(eng, 3, 3), p2.string());
  CHECK(slurp(p1) == slurp(p2));
  auto rep = tensorspace::Json::parse(slurp(p1));
  CHECK(rep["total"] == 27);
  CHECK(rep["identity_ok"] == true);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("--out writes the same bytes as stdout") {
  auto p = temp_file("out.json");
  auto direct = run({"vectors", "--n", "3", "--r", "3", "--output", "json"});
  auto to_file = run({"vectors", "--n", "3", "--r", "3", "--output", "json", "--out", p.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(p) == direct.out);
  std::filesystem::remove(p);
}

TEST_CASE("export failure names the path") {
  psiphi::Engine<coeff::GenericField> eng;
  const std::string bad = "/nonexistent-dir/x.json";
  try {
    export_json(eng.field(), dualcheck::maximal_basis(eng, 2, 2), bad);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(bad) != std::string::npos);
  }
  auto r = run({"walks", "--n", "2", "--r", "2", "--out", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find(bad) != std::string::npos);
}

}  // TEST_SUITE
