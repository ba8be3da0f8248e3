#include <doctest.h>

#include <fstream>
#include <set>

#include "seeds.hpp"
#include "zshadow/codefile.hpp"
#include "zshadow/error.hpp"
#include "zshadow/report.hpp"

using namespace zshadow;

namespace {

const std::filesystem::path kCorpus = ZSHADOW_CORPUS_DIR;

}  // namespace

TEST_CASE("bundled manifest loads and every seed classifies as stated") {
  const auto manifest = CorpusManifest::load(kCorpus / "manifest.json");
  REQUIRE(manifest.seeds.size() >= 9);
  int type_i = 0;
  for (const auto& spec : manifest.seeds) {
    CAPTURE(spec.name);
    const auto code = read_code_file(manifest.directory / spec.file);
    CHECK(code.params().exponent() == spec.m);
    CHECK(code.length() == spec.n);
    CHECK(classify(code) == spec.expected);
    type_i += spec.expected == TypeVerdict::TypeI;
    for (const auto& text : spec.generalized) {
      CAPTURE(text);
      const auto s = parse_vector(code.params(), text);
      CHECK_NOTHROW(decompose_generalized(code, s));
    }
  }
  CHECK(type_i >= 8);
}

TEST_CASE("bundled corpus covers every length class for m = 1, 2 and an even length for m = 3") {
  const auto manifest = CorpusManifest::load(kCorpus / "manifest.json");
  std::set<std::pair<int, std::size_t>> classes;
  for (const auto& spec : manifest.seeds) {
    if (spec.expected == TypeVerdict::TypeI) classes.insert({spec.m, spec.n % 4});
  }
  for (std::size_t r = 0; r < 4; ++r) CHECK(classes.count({2, r}) == 1);
  CHECK(classes.count({1, 0}) == 1);
  CHECK(classes.count({1, 2}) == 1);
  CHECK((classes.count({3, 0}) + classes.count({3, 2})) >= 1);
}

TEST_CASE("a seed that contradicts its manifest entry fails with a localized error") {
  SeedSpec spec{"mislabeled", "", 1, 2, TypeVerdict::TypeII, {}};
  const auto rep = verify_seed(spec, seeds::code_of(1, 2, {{1, 1}}));
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.errors.size() == 1);
  CHECK(rep.errors[0].find("classified TypeI") != std::string::npos);
}

TEST_CASE("a bad generalized shadow vector is reported on its decomposition") {
  SeedSpec spec{"z4 2I_2", "", 2, 2, TypeVerdict::TypeI, {"2,0"}};
  const auto rep = verify_seed(spec, seeds::repeated_block(2, 2, {{2}}, 1));
  REQUIRE(rep.decompositions.size() == 2);
  CHECK(rep.decompositions[0].passed());
  CHECK_FALSE(rep.decompositions[1].error.empty());
  CHECK_FALSE(rep.passed());
}

TEST_CASE("an empty manifest passes with a warning") {
  CorpusManifest manifest;
  const auto rep = verify_corpus(manifest);
  CHECK(rep.passed());
  CHECK(rep.warnings.size() == 1);
}

TEST_CASE("missing files and malformed manifests are parse errors") {
  CHECK_THROWS_AS(CorpusManifest::load(kCorpus / "no-such-manifest.json"), ParseError);
  const auto path = std::filesystem::temp_directory_path() / "zshadow_bad_manifest.json";
  {
    std::ofstream os(path);
    os << R"({"seeds": [{"name": "x", "file": "x.code", "m": 1}]})";
  }
  CHECK_THROWS_AS(CorpusManifest::load(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("a certified seed passes end to end and its report is stable") {
  SeedSpec spec{"f2 i2^3", "", 1, 6, TypeVerdict::TypeI, {"0,0,0,1,0,1"}};
  const auto code = seeds::repeated_block(1, 3, {{1, 1}}, 2);
  const auto rep = verify_seed(spec, code);
  CHECK(rep.passed());
  bool saw_jacobi = false;
  for (const auto& c : rep.constructions) {
    CAPTURE(c.case_id);
    CHECK(c.cwe.computed);
    CHECK(c.cwe.printed_equal);
    if (c.jacobi.computed) {
      saw_jacobi = true;
      CHECK(c.jacobi.report->passed());
    }
  }
  CHECK(saw_jacobi);
  CHECK(to_json(rep).dump() == to_json(verify_seed(spec, code)).dump());
}

TEST_CASE("weight enumerator JSON lists sorted terms") {
  const auto we = cwe_direct(seeds::code_of(2, 2, {{2, 0}, {0, 2}}));
  const auto j = to_json(we);
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 2);
  REQUIRE(j["terms"].size() == 3);
  CHECK(j["terms"][0]["exp"] == nlohmann::json::array({0, 0, 2, 0}));
  CHECK(j["terms"][0]["count"] == 1);
  CHECK(j["terms"][2]["exp"] == nlohmann::json::array({2, 0, 0, 0}));
}
