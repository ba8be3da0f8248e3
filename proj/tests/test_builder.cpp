#include <doctest.h>

#include <map>

#include "oracle.hpp"
#include "seeds.hpp"
#include "zshadow/builder.hpp"
#include "zshadow/error.hpp"

using namespace zshadow;

namespace {

std::optional<std::string> failed(const std::vector<Check>& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return c.passed ? std::nullopt : std::optional<std::string>(c.detail);
  }
  return "missing check " + name;
}

}  // namespace

TEST_CASE("eta examples") {
  CHECK(eta(3, 2, GlueKind::Klein4) == 1);
  CHECK(eta(1, 1, GlueKind::Cyclic4) == 3);
  CHECK(eta(0, 0, GlueKind::Klein4) == 0);
  CHECK(eta(0, 0, GlueKind::Cyclic4) == 0);
  CHECK(eta(-1, 0, GlueKind::Cyclic4) == 3);
}

TEST_CASE("eta names the coset of i s + j t") {
  for (const auto& seed : seeds::type_i_seeds()) {
    CAPTURE(seed.name);
    const auto dec = decompose_type_i(seed.code);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        const auto x = dec.s.scaled(i) + dec.t.scaled(j);
        CHECK(dec.in_coset(eta(i, j, dec.glue), x));
      }
    }
  }
}

TEST_CASE("validate_p123 examples") {
  const RingParams f2(1), z4(2);
  const auto dec = decompose_type_i(seeds::code_of(1, 2, {{1, 1}}));
  CHECK(dec.s == RingVector(f2, {0, 1}));
  CHECK(all_passed(validate_p123(dec, RingVector(f2, {1, 0}), RingVector(f2, {1, 1}))));

  const auto same = validate_p123(dec, RingVector(f2, {1, 1}), RingVector(f2, {1, 1}));
  CHECK(failed(same, "p1"));

  const auto dec4 = decompose_type_i(seeds::repeated_block(2, 2, {{2}}, 1));
  const auto ok = validate_p123(dec4, RingVector(z4, {1, 1}), RingVector(z4, {2, 0}));
  CHECK_FALSE(failed(ok, "p3"));
  CHECK(all_passed(ok));
  // Cyclic glue needs o(v1) divisible by 4.
  const auto dec1 = decompose_type_i(seeds::code_of(2, 1, {{2}}));
  REQUIRE(dec1.glue == GlueKind::Cyclic4);
  CHECK(failed(validate_p123(dec1, RingVector(z4, {2, 2, 2}), RingVector(z4, {2, 0, 0})), "p3"));
  CHECK_FALSE(failed(validate_p123(dec1, RingVector(z4, {1, 1, 1}), RingVector(z4, {2, 0, 0})), "p3"));
  CHECK_THROWS_AS(validate_p123(dec4, RingVector(z4, {1}), RingVector(z4, {2, 0})), DimensionError);
}

TEST_CASE("C* for <(1,1)> over F2") {
  const RingParams f2(1);
  const auto dec = decompose_type_i(seeds::code_of(1, 2, {{1, 1}}));
  const auto cs = build_cstar(dec, RingVector(f2, {1, 0}), RingVector(f2, {1, 1}));
  CHECK(oracle::span(cs.code) == std::set<oracle::Raw>{{0, 0, 0, 0}, {1, 0, 0, 1}, {1, 1, 1, 1}, {0, 1, 1, 0}});
  CHECK(cs.enumerated);
  CHECK(all_passed(cs.checks));
}

TEST_CASE("C* size formula over Z4") {
  const RingParams z4(2);
  const auto dec = decompose_type_i(seeds::repeated_block(2, 2, {{2}}, 1));
  const auto cs = build_cstar(dec, RingVector(z4, {1, 1}), RingVector(z4, {2, 0}));
  CHECK(cs.order_v1 == 4);
  CHECK(cs.order_v2 == 2);
  CHECK(cs.code.size() == 16);
  CHECK_THROWS_AS(build_cstar(dec, RingVector(z4, {1, 1}), RingVector(z4, {1, 1})), ConstructionIntegrityError);
}

TEST_CASE("C* equals the brute-force union of translates on every seed") {
  for (const auto& seed : seeds::type_i_seeds()) {
    const auto dec = decompose_type_i(seed.code);
    const auto& p = dec.params();
    for (auto variant : {Variant::A, Variant::B}) {
      const auto recipe = recipe_for(dec, variant);
      CAPTURE(seed.name);
      CAPTURE(recipe.case_id);
      const auto cs = build_cstar(dec, recipe.v1, recipe.v2);
      if (cs.code.size_exponent() > 14) continue;

      std::set<oracle::Raw> c0;
      dec.c0.for_each([&](const RingVector& v) { c0.insert(oracle::raw(v)); });
      std::set<oracle::Raw> ref;
      std::size_t total = 0;
      for (std::uint64_t i = 1; i <= additive_order(recipe.v1); ++i) {
        for (std::uint64_t j = 1; j <= additive_order(recipe.v2); ++j) {
          const auto head = oracle::raw(recipe.v1.scaled(i) + recipe.v2.scaled(j));
          const auto rep = oracle::raw(dec.representative(eta(i, j, dec.glue)));
          for (const auto& c : c0) {
            auto tail = oracle::add(p, c, rep);
            auto v = head;
            v.insert(v.end(), tail.begin(), tail.end());
            ref.insert(std::move(v));
            ++total;
          }
        }
      }
      CHECK(ref.size() == total);
      CHECK(oracle::span(cs.code) == ref);
      CHECK(ref.size() == additive_order(recipe.v1) * additive_order(recipe.v2) * c0.size());
      for (const auto& x : ref) {
        for (const auto& y : ref) {
          if (oracle::dot(p, x, y) != 0) {
            FAIL("C* is not self-orthogonal");
          }
        }
      }
    }
  }
}

TEST_CASE("coset sums land in the coset eta names") {
  for (const auto& seed : seeds::type_i_seeds()) {
    if (seed.code.params().exponent() > 2) continue;
    CAPTURE(seed.name);
    const auto dec = decompose_type_i(seed.code);
    const auto report = check_coset_sums(dec);
    CHECK(report.containment_failures.empty());
    CHECK(report.equality_failures.empty());
    // (0, 0) gives only the zero vector, a proper subset of C0 whenever C0 is nontrivial.
    const bool zero_pair = std::find(report.proper_subsets.begin(), report.proper_subsets.end(),
                                     std::pair<int, int>{0, 0}) != report.proper_subsets.end();
    CHECK(zero_pair == (dec.c0.size() > 1));
  }
}

TEST_CASE("recipe examples") {
  const RingParams f2(1), z4(2);
  const auto r1 = recipe_by_id("shadow/n2/a", f2, 2);
  CHECK(r1.v1 == RingVector(f2, {1, 0}));
  CHECK(r1.v2 == RingVector(f2, {1, 1}));
  CHECK(r1.claim == TypeClaim::TypeI);
  CHECK(r1.expected_length == 4);

  const auto r2 = recipe_by_id("shadow/n1/a", z4, 5);
  CHECK(r2.v1 == RingVector(z4, {1, 1, 1}));
  CHECK(r2.v2 == RingVector(z4, {2, 0, 0}));
  REQUIRE(r2.w.size() == 1);
  CHECK(r2.w[0] == RingVector(z4, {2, 2, 0, 0, 0, 0, 0, 0}));
  CHECK(r2.claim == TypeClaim::TypeII);

  const auto r3 = recipe_by_id("shadow/n1/b", z4, 1);
  CHECK(r3.k == 7);
  CHECK(r3.expected_length == 8);
  CHECK(r3.claim == TypeClaim::TypeII);

  CHECK(recipe_by_id("shadow/n2/a", f2, 6).claim == TypeClaim::TypeII);
  CHECK(recipe_by_id("gen0/n2/a", z4, 6).claim == TypeClaim::SelfDualOnly);
  CHECK_THROWS_AS(recipe_by_id("shadow/n3/a", f2, 3), ImpossibleCaseError);
  CHECK_THROWS_AS(recipe_by_id("shadow/n3/a", RingParams(3), 3), ImpossibleCaseError);
  CHECK_THROWS_AS(recipe_by_id("shadow/n5/a", z4, 5), DomainError);
}

TEST_CASE("every recipe is well formed for m = 1..4") {
  for (const auto& id : all_case_ids()) {
    for (int m = 1; m <= 4; ++m) {
      const RingParams p(m);
      const std::size_t n = static_cast<std::size_t>(id[id.find("/n") + 2] - '0') + 4;
      CAPTURE(id);
      CAPTURE(m);
      if (n % 2 == 1 && m % 2 == 1) {
        CHECK_THROWS_AS(recipe_by_id(id, p, n), ImpossibleCaseError);
        continue;
      }
      const auto r = recipe_by_id(id, p, n);
      CHECK(r.v1.size() == r.k);
      CHECK(r.v2.size() == r.k);
      CHECK(r.expected_length == n + r.k);
      for (const auto& w : r.w) {
        CHECK(w.size() == n + r.k);
        for (std::size_t c = r.k; c < w.size(); ++c) CHECK(w[c] == 0);
      }
      CHECK(r.formula.ranges.size() == 2 + r.w.size());
      int degree = 0;
      for (const auto& f : r.formula.factors) {
        degree += f.power;
        CHECK(f.coefficients.size() == r.formula.ranges.size());
      }
      CHECK(degree == static_cast<int>(r.k));
    }
  }
}

TEST_CASE("binary length-6 seed extends to the length-8 Type II code") {
  const auto seed = seeds::repeated_block(1, 3, {{1, 1}}, 2);
  const auto dec = decompose_type_i(seed);
  const auto cert = extend(dec, recipe_for(dec, Variant::A));
  CHECK(cert.recipe.case_id == "shadow/n2/a");
  CHECK(cert.passed());
  REQUIRE(cert.result);
  CHECK(cert.verdict == TypeVerdict::TypeII);

  const RingParams f2(1);
  const auto words = oracle::span(*cert.result);
  CHECK(oracle::classify(f2, 8, words) == TypeVerdict::TypeII);
  std::map<std::uint64_t, int> dist;
  for (const auto& w : words) ++dist[oracle::euclidean_weight(f2, w)];
  CHECK(dist == std::map<std::uint64_t, int>{{0, 1}, {4, 14}, {8, 1}});
}

TEST_CASE("Z4 seed <2> extends to a length-8 Type II code") {
  const auto dec = decompose_type_i(seeds::code_of(2, 1, {{2}}));
  const auto cert = extend(dec, recipe_for(dec, Variant::B));
  CHECK(cert.recipe.case_id == "shadow/n1/b");
  CHECK(cert.passed());
  REQUIRE(cert.result);
  CHECK(cert.result->length() == 8);

  const RingParams z4(2);
  const auto words = oracle::span(*cert.result);
  CHECK(words.size() == 256);
  CHECK(oracle::classify(z4, 8, words) == TypeVerdict::TypeII);
}

TEST_CASE("a redundant glue vector shows up as a failed certificate") {
  const auto dec = decompose_type_i(seeds::repeated_block(2, 4, {{2}}, 1));
  const auto cert = extend(dec, recipe_for(dec, Variant::A));
  CHECK(cert.recipe.case_id == "shadow/n0/a");
  CHECK_FALSE(cert.passed());
  CHECK(failed(cert.checks, "size"));
  CHECK(failed(cert.checks, "self_dual"));
  CHECK_FALSE(failed(cert.checks, "w_orthogonal"));
  CHECK(cert.verdict == TypeVerdict::NotSelfDual);
}

TEST_CASE("certified extensions are self-dual by brute force") {
  for (const auto& seed : seeds::type_i_seeds()) {
    const auto dec = decompose_type_i(seed.code);
    for (auto variant : {Variant::A, Variant::B}) {
      const auto cert = extend(dec, recipe_for(dec, variant));
      if (!cert.passed()) continue;
      const auto& p = dec.params();
      const auto len = cert.result->length();
      // Brute-force duals over at most 2^16 ambient vectors.
      if (static_cast<std::uint64_t>(p.exponent()) * len > 16) continue;
      CAPTURE(seed.name);
      CAPTURE(cert.recipe.case_id);
      const auto words = oracle::span(*cert.result);
      CHECK(oracle::dual(p, len, words) == words);
      const auto expected = cert.recipe.claim == TypeClaim::TypeII ? TypeVerdict::TypeII : TypeVerdict::TypeI;
      CHECK(oracle::classify(p, len, words) == expected);
    }
  }
}
