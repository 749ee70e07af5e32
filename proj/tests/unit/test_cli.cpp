#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wsp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "wsplab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("thresholds") {
    const Result r = call({"thresholds", "--k", "3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump().find("0.630929753") != std::string::npos);
    CHECK(j.dump().find("-0.793") != std::string::npos);
  }

  TEST_CASE("criterion exit codes") {
    CHECK(call({"criterion", "--alpha", "-1", "--k", "2", "--s0", "2"}).code == 0);
    CHECK(call({"criterion", "--alpha", "-1", "--k", "2", "--s0", "0"}).code == 2);
    CHECK(call({"criterion", "--alpha", "0", "--k", "1", "--test", "concavity"}).code == 0);
    CHECK(call({"criterion", "--weights", "secozk", "--k", "6"}).code == 2);
    CHECK(call({"criterion", "--weights", "z2improved:-0.7", "--k", "2"}).code == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(call({}).code == 64);
    CHECK(call({"nonsense"}).code == 64);
    CHECK(call({"criterion", "--k", "x"}).code == 64);
    CHECK(call({"criterion", "--alpha", "0", "--k", "0"}).code == 64);
    CHECK(call({"decompose", "--blaschke", "zeros=1.5,0", "--f", "1,0"}).code != 0);
    CHECK(call({"thresholds", "--format", "xml"}).code == 64);
    CHECK(call({"wsp-test", scratch("does-not-exist.txt").string()}).code == 64);
    const Result bad_key = call({"wsp-test", write_file("bad.txt", "bogus=1\n").string()});
    CHECK(bad_key.code == 64);
    CHECK_FALSE(bad_key.err.empty());
    CHECK(call({"--help"}).code == 0);
    const Result help = call({"scan", "--help"});
    CHECK(help.code == 0);
  }

  TEST_CASE("decompose groups coefficients for z^2") {
    const Result r = call({"decompose", "--blaschke", "zeros=0,0;0,0", "--f", "1,0;1,0;1,0;1,0"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& layers = j.at("layers");
    REQUIRE(layers.size() == 2);
    for (const auto& layer : layers) {
      const auto& c = layer.at("coefficients");
      REQUIRE(c.size() >= 2);
      CHECK(c[0][0].get<double>() == 1.0);
      CHECK(c[1][0].get<double>() == 1.0);
    }
  }

  TEST_CASE("csv output carries the configuration") {
    const Result r = call({"scan", "--alpha", "-1,-0.5", "--k", "1:2", "--nmax", "200", "--format", "csv"});
    CHECK((r.code == 0 || r.code == 2));
    CHECK(r.out.rfind("# ", 0) == 0);
    CHECK(r.out.find("alpha") != std::string::npos);

    const Result mixed = call({"scan", "--alpha", "-1", "--k", "2", "--s0", "0,k", "--nmax", "200", "--format", "csv"});
    CHECK(mixed.code == 0);
    CHECK(mixed.out.find("-1,2,0,false,0") != std::string::npos);
    CHECK(mixed.out.find("-1,2,2,true,-1") != std::string::npos);
  }

  TEST_CASE("wsp-test descriptor") {
    const auto p = write_file("ex1.txt", "check=wsp\ngenerators=1,0;0.7,0\nblaschke=zeros=0,0;0,0\nip=taylor\n"
                                         "alpha=-1\nN=48\nN_compare=30\n");
    const Result r = call({"wsp-test", p.string()});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("defect").get<double>() <= 1e-6);
    CHECK(j.at("dims").at("W").get<int>() == 1);
    CHECK(j.at("N").get<int>() == 48);
    CHECK(j.at("N_compare").get<int>() == 30);

    const Result overridden = call({"wsp-test", p.string(), "--N", "40", "--Ncompare", "20"});
    REQUIRE(overridden.code == 0);
    CHECK(nlohmann::json::parse(overridden.out).at("N").get<int>() == 40);
  }

  TEST_CASE("operator check") {
    CHECK(call({"operator-check", "--k", "1", "--alpha", "-1", "--N", "32"}).code == 0);
    CHECK(call({"operator-check", "--k", "2", "--alpha", "-1", "--N", "32"}).code == 2);
  }

  TEST_CASE("seeded runs are byte-identical") {
    const std::vector<std::string> args{"bnorm", "--blaschke", "zeros=0.5,0", "--f", "1,0;1,0",
                                        "--alpha", "-1", "--trials", "8", "--N", "12", "--seed", "99"};
    const Result a = call(args);
    const Result b = call(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("99") != std::string::npos);

    const auto desc = write_file("rand.txt", "check=wsp\nrandom_generators=2:2\nz_invariant=true\n"
                                             "blaschke=zeros=0,0;0,0\nip=taylor\nalpha=-1\nN=40\nN_compare=24\n");
    CHECK(call({"wsp-test", desc.string(), "--seed", "5"}).out == call({"wsp-test", desc.string(), "--seed", "5"}).out);
  }

  TEST_CASE("out file") {
    const auto p = scratch("thresholds.json");
    std::filesystem::remove(p);
    const Result r = call({"thresholds", "--out", p.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(p) == call({"thresholds"}).out);
  }
}
