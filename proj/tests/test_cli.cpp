#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modring/cli/cache.hpp"
#include "modring/cli/command.hpp"
#include "modring/cli/parse.hpp"
#include "test_support.hpp"

using namespace modring;
using namespace modring::cli;
using namespace modring::vars;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("modring_test_" + std::to_string(modring::testing::uniform(0, 1 << 30)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(Command cmd) {
  std::ostringstream out, err;
  const int code = run_command(cmd, out, err);
  return {code, out.str(), err.str()};
}

Command make(Verb verb, int genus, Format format = Format::Text) {
  Command cmd;
  cmd.verb = verb;
  cmd.genus = {genus, genus};
  cmd.format = format;
  return cmd;
}

}  // namespace

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("a^2 + b") == a() * a() + b());
  CHECK(parse_poly("-1/2*a*b + c") == a() * b() * make_rational(-1, 2) + c());
  CHECK(parse_poly("alpha^2*beta - 3*gamma") == a() * a() * b() - 3 * c());
  CHECK(parse_poly("  + 2/4 ") == Polynomial(make_rational(1, 2)));
  CHECK(parse_poly("a*a*b^0") == a() * a());
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("a - a").is_zero());
}

TEST_CASE("parse_poly errors carry positions") {
  auto position_of = [](const char* text) -> long {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("a +") == 3);
  CHECK(position_of("a + x") == 4);
  CHECK(position_of("a^") == 2);
  CHECK(position_of("1/0*a") == 2);
  CHECK(position_of("a b") == 2);
  CHECK(position_of("2*") == 2);
  CHECK_THROWS_WITH_AS(parse_poly("a + $"), "parse error at position 4: unexpected character '$'", ParseError);
  CHECK_THROWS_AS(parse_monomial("2*a"), ParseError);
  CHECK(parse_monomial("a^3") == Monomial{3, 0, 0});
}

TEST_CASE("parse(print(p)) == p on random polynomials") {
  for (int i = 0; i < 2000; ++i) {
    const Polynomial p = modring::testing::random_polynomial(8, 20, 1000000);
    REQUIRE(parse_poly(p.to_string()) == p);
  }
}

TEST_CASE("parse_genus_range") {
  CHECK(parse_genus_range("4").first == 4);
  CHECK(parse_genus_range("1..8").last == 8);
  CHECK_THROWS_AS(parse_genus_range("0"), UsageError);
  CHECK_THROWS_AS(parse_genus_range("5..2"), UsageError);
  CHECK_THROWS_AS(parse_genus_range("x"), UsageError);
}

TEST_CASE("relations json golden output") {
  const Run r = run(make(Verb::Relations, 2, Format::Json));
  CHECK(r.code == kOk);
  CHECK(r.out == R"({
  "f1": "a^2 + b",
  "f2": "a*b + c",
  "f3": "a*c",
  "genus": 2,
  "initial_terms": [
    "a^2",
    "a*b",
    "a*c"
  ],
  "paths_agree": true,
  "weighted_degrees": [
    2,
    3,
    4
  ]
}
)");
}

TEST_CASE("verbs") {
  Command nf = make(Verb::Nf, 2);
  nf.poly = "a^2";
  CHECK(run(nf).out == "-b\n");

  nf.poly = "a^";
  CHECK(run(nf).code == kParse);

  Command pairing = make(Verb::Pairing, 2, Format::Json);
  pairing.monomial = "a*b";
  const auto pj = nlohmann::json::parse(run(pairing).out);
  CHECK(pj["ratio"] == "-1");
  pairing.monomial = "a";
  CHECK(run(pairing).code == kUsage);

  const auto basis = nlohmann::json::parse(run(make(Verb::Basis, 2, Format::Json)).out);
  CHECK(basis["monomials"] == nlohmann::json({"1", "a", "b", "c"}));

  const auto hilbert = nlohmann::json::parse(run(make(Verb::Hilbert, 3, Format::Json)).out);
  CHECK(hilbert["coefficients"] == nlohmann::json({1, 1, 2, 2, 2, 1, 1}));
  CHECK(hilbert["complete_intersection"] == true);

  const auto groebner = nlohmann::json::parse(run(make(Verb::Groebner, 2, Format::Json)).out);
  CHECK(groebner["initial_ideal"].size() == 6);
  CHECK(groebner["order_tag"] == "grevlex-abc");

  Command chern = make(Verb::Chern, 3, Format::Json);
  chern.target = ChernTarget::Tangent;
  const auto cj = nlohmann::json::parse(run(chern).out);
  CHECK(cj["components"][1] == "2*a");
  CHECK(cj["components"][2] == "2*a^2 - 2*b");
  CHECK(cj["target"] == "tangent_moduli");
  chern.genus = {1, 1};
  CHECK(run(chern).code == kUsage);

  Command betti = make(Verb::Betti, 2, Format::Json);
  const auto bj = nlohmann::json::parse(run(betti).out);
  CHECK(bj["table"] == nlohmann::json::parse("[[0,1],[1,1],[2,1]]"));
  CHECK(bj["cross_check"] == true);
  CHECK(run(make(Verb::Betti, 1)).code == kUsage);

  Command latex = make(Verb::Relations, 2, Format::Latex);
  CHECK(run(latex).out.find("f_1^{2} &= \\alpha^{2} + \\beta") != std::string::npos);
}

TEST_CASE("relations over a genus range emit a json array") {
  Command cmd = make(Verb::Relations, 1, Format::Json);
  cmd.genus = {1, 3};
  const auto j = nlohmann::json::parse(run(cmd).out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[2]["f1"] == "a^3 + 5*a*b + 4*c");
}

TEST_CASE("verify") {
  Command cmd = make(Verb::Verify, 1, Format::Json);
  cmd.genus = {1, 4};
  const Run r = run(cmd);
  CHECK(r.code == kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["genera"].size() == 4);
  CHECK(j["genera"][3]["genus"] == 4);
  CHECK(j["genera"][3]["checks"].contains("tangent_vanishing"));
  CHECK_FALSE(j["genera"][0]["checks"].contains("betti"));
}

TEST_CASE("cache round trip") {
  TempDir dir;
  for (int g = 1; g <= 5; ++g) {
    const GroebnerBasis fresh = compute_ideal_basis(g);
    save_cache(dir.path, fresh);
    const auto loaded = load_cache(dir.path, g);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == fresh);
    std::ifstream in(cache_path(dir.path, g));
    const auto j = nlohmann::json::parse(in);
    CHECK(j["version"] == kCacheVersion);
    CHECK(j["genus"] == g);
    CHECK(j["order_tag"] == "grevlex-abc");
  }
  CHECK_FALSE(load_cache(dir.path, 9).has_value());
}

TEST_CASE("stale or corrupt cache entries are recomputed") {
  TempDir dir;
  const GroebnerBasis fresh = compute_ideal_basis(3);
  auto write = [&](const std::string& text) {
    std::ofstream(cache_path(dir.path, 3)) << text;
  };

  write("not json");
  CHECK_FALSE(load_cache(dir.path, 3).has_value());

  // A valid Gröbner basis, but of I_2 filed under genus 3.
  CacheEntry wrong = to_cache_entry(compute_ideal_basis(2));
  wrong.genus = 3;
  write(nlohmann::json(wrong).dump());
  CHECK_FALSE(load_cache(dir.path, 3).has_value());

  // Tampered coefficient.
  CacheEntry tampered = to_cache_entry(fresh);
  tampered.elements[0] += " + 1/7*c";
  write(nlohmann::json(tampered).dump());
  CHECK_FALSE(load_cache(dir.path, 3).has_value());

  // The ideal (a, b, c) contains I_3 and passes the S-pair test; the
  // dimension check rejects it.
  CacheEntry too_big;
  too_big.genus = 3;
  too_big.elements = {"a", "b", "c"};
  write(nlohmann::json(too_big).dump());
  CHECK_FALSE(load_cache(dir.path, 3).has_value());

  CacheEntry old_version = to_cache_entry(fresh);
  old_version.version = 0;
  write(nlohmann::json(old_version).dump());
  CHECK_FALSE(load_cache(dir.path, 3).has_value());

  CHECK(cached_ideal_basis(dir.path, 3) == fresh);
  CHECK(load_cache(dir.path, 3).has_value());

  Command nf = make(Verb::Nf, 3);
  nf.cache_dir = dir.path.string();
  nf.poly = "a^3";
  CHECK(run(nf).out == "-5*a*b - 4*c\n");
}

TEST_CASE("command-line tool exit codes") {
  const std::string tool = MODRING_TOOL;
  auto status = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("verify -g 1..3") == 0);
  CHECK(status("nf -g 2 --poly 'a^2'") == 0);
  CHECK(status("nf -g 2 --poly 'a^'") == 3);
  CHECK(status("nf -g 0 --poly a") == 2);
  CHECK(status("relations -g 2 --format yaml") == 2);
  CHECK(status("frobnicate -g 2") == 2);
  CHECK(status("betti -g 1") == 2);
}
