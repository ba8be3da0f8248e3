#include <doctest.h>

#include "oracle.hpp"
#include "seeds.hpp"
#include "zshadow/error.hpp"
#include "zshadow/shadow.hpp"

using namespace zshadow;

namespace {

using RawSet = std::set<oracle::Raw>;

RawSet filter(const RawSet& in, const std::function<bool(const oracle::Raw&)>& keep) {
  RawSet out;
  for (const auto& x : in) {
    if (keep(x)) out.insert(x);
  }
  return out;
}

RawSet shift(const RingParams& p, const RawSet& in, const oracle::Raw& by) {
  RawSet out;
  for (const auto& x : in) out.insert(oracle::add(p, x, by));
  return out;
}

// Brute-force check of a decomposition: C0, C0^perp and the four cosets.
void check_against_oracle(const CosetDecomposition& dec, const RawSet& c0_ref) {
  const auto& p = dec.params();
  const auto n = dec.length();
  const auto code = oracle::span(dec.code);
  CHECK(oracle::span(dec.c0) == c0_ref);
  const auto c0_dual = oracle::dual(p, n, c0_ref);
  CHECK(oracle::span(dec.c0_dual) == c0_dual);
  CHECK(c0_dual.size() == 4 * c0_ref.size());

  CHECK(code.count(oracle::raw(dec.t)) == 1);
  CHECK(c0_ref.count(oracle::raw(dec.t)) == 0);
  CHECK(c0_dual.count(oracle::raw(dec.s)) == 1);
  CHECK(code.count(oracle::raw(dec.s)) == 0);

  RawSet all;
  for (int i = 0; i < 4; ++i) {
    const auto ci = shift(p, c0_ref, oracle::raw(dec.representative(i)));
    CHECK(ci.size() == c0_ref.size());
    all.insert(ci.begin(), ci.end());
    for (const auto& x : ci) CHECK(dec.in_coset(i, oracle::vec(p, x)));
  }
  CHECK(all == c0_dual);

  const bool klein = std::all_of(c0_dual.begin(), c0_dual.end(),
                                 [&](const oracle::Raw& x) { return c0_ref.count(oracle::add(p, x, x)) == 1; });
  CHECK((dec.glue == GlueKind::Klein4) == klein);
}

// x.y over every pair of the brute-force cosets; nullopt when not constant.
std::array<std::array<std::optional<Element>, 4>, 4> brute_table(const CosetDecomposition& dec,
                                                                   const RawSet& c0_ref) {
  const auto& p = dec.params();
  std::array<RawSet, 4> cosets;
  for (int i = 0; i < 4; ++i) cosets[i] = shift(p, c0_ref, oracle::raw(dec.representative(i)));
  std::array<std::array<std::optional<Element>, 4>, 4> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      std::set<std::uint64_t> seen;
      for (const auto& x : cosets[i]) {
        for (const auto& y : cosets[j]) seen.insert(oracle::dot(p, x, y));
      }
      if (seen.size() == 1) out[i][j] = static_cast<Element>(*seen.begin());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("euclidean kernel and decomposition agree with brute force on every Type I seed") {
  for (const auto& seed : seeds::type_i_seeds()) {
    CAPTURE(seed.name);
    const auto& p = seed.code.params();
    const auto mod = 2 * p.modulus();
    const auto code = oracle::span(seed.code);
    const auto c0_ref = filter(code, [&](const oracle::Raw& x) { return oracle::euclidean_weight(p, x) % mod == 0; });
    CHECK(oracle::span(euclidean_kernel(seed.code)) == c0_ref);
    CHECK(2 * c0_ref.size() == code.size());

    auto dec = decompose_type_i(seed.code);
    check_against_oracle(dec, c0_ref);
    CHECK((dec.glue == GlueKind::Cyclic4) == (seed.code.length() % 2 == 1));

    const auto table = verify_orthogonality(dec);
    CHECK(table.exhaustive);
    CHECK(table.matches);
    CHECK(table.expected.has_value() == (seed.code.length() % 2 == 0 || p.exponent() >= 2));
    const auto ref = brute_table(dec, c0_ref);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        REQUIRE(ref[i][j].has_value());
        CHECK(table.observed[i][j] == ref[i][j]);
        if (table.expected) CHECK(*ref[i][j] == table.expected->values[i][j]);
      }
    }
  }
}

TEST_CASE("printed tables instantiated for small rings") {
  // Z4, n = 1: h = 2, 2^{m-2} = 1, rows C1 = (0, 1, 2, 3), C3 = (0, 3, 2, 1).
  auto dec = decompose_type_i(seeds::code_of(2, 1, {{2}}));
  const auto exp = expected_table(dec);
  REQUIRE(exp);
  CHECK(exp->values[1] == std::array<Element, 4>{0, 1, 2, 3});
  CHECK(exp->values[2] == std::array<Element, 4>{0, 2, 0, 2});
  CHECK(exp->values[3] == std::array<Element, 4>{0, 3, 2, 1});

  // F2, n = 2: C1 row (0, 1, 1, 0).
  auto dec2 = decompose_type_i(seeds::code_of(1, 2, {{1, 1}}));
  CHECK(expected_table(dec2)->values[1] == std::array<Element, 4>{0, 1, 1, 0});
  // F2, n = 4: C1 row (0, 0, 1, 1).
  auto dec4 = decompose_type_i(seeds::repeated_block(1, 2, {{1, 1}}, 2));
  CHECK(expected_table(dec4)->values[1] == std::array<Element, 4>{0, 0, 1, 1});
}

TEST_CASE("printed tables are invariant under the C1 and C3 exchange") {
  for (const auto& seed : seeds::type_i_seeds()) {
    CAPTURE(seed.name);
    auto dec = decompose_type_i(seed.code);
    relabel_c1_c3(dec);
    CHECK(dec.relabeled);
    const auto table = verify_orthogonality(dec);
    CHECK(table.matches);
    CHECK_FALSE(table.relabeled);
  }
}

TEST_CASE("representative-only table agrees with the exhaustive one") {
  auto dec = decompose_type_i(seeds::repeated_block(2, 6, {{2}}, 1));
  auto copy = dec;
  const auto full = verify_orthogonality(dec);
  const auto reps = verify_orthogonality(copy, 1);
  CHECK(full.exhaustive);
  CHECK_FALSE(reps.exhaustive);
  CHECK(full.observed == reps.observed);
  CHECK(reps.matches);
}

TEST_CASE("shadow weight congruence on every shadow vector") {
  for (const auto& seed : seeds::type_i_seeds()) {
    CAPTURE(seed.name);
    const auto dec = decompose_type_i(seed.code);
    const auto& p = dec.params();
    const auto report = shadow_weight_check(dec);
    CHECK(report.exhaustive);
    CHECK(report.vectors_checked == 2 * dec.c0.size());

    // Brute force over C1 u C3 = C0^perp \ C.
    const auto n = seed.code.length();
    const auto shadow = filter(oracle::span(dec.c0_dual),
                               [&](const oracle::Raw& x) { return !dec.code.contains(oracle::vec(p, x)); });
    CHECK(shadow.size() == report.vectors_checked);
    for (const auto& x : shadow) {
      const auto w = oracle::euclidean_weight(p, x);
      if (p.exponent() >= 2) {
        CHECK(w % (2 * p.modulus()) == ((n << p.exponent()) / 4) % (2 * p.modulus()));
      } else {
        CHECK(w % 4 == (n / 2) % 4);
      }
    }
  }
}

TEST_CASE("generalized shadow decomposition agrees with brute force") {
  struct Case {
    LinearCode code;
    std::vector<std::int64_t> s;
    Element ss;
  };
  const std::vector<Case> cases{
      {seeds::code_of(1, 2, {{1, 1}}), {0, 1}, 1},
      {seeds::repeated_block(1, 2, {{1, 1}}, 2), {0, 1, 0, 1}, 0},
      {seeds::extended_hamming(), {0, 0, 0, 0, 0, 0, 1, 1}, 0},
      {seeds::extended_hamming(), {0, 0, 0, 0, 0, 0, 0, 1}, 1},
      {seeds::repeated_block(2, 4, {{2}}, 1), {1, 1, 1, 1}, 0},
      {seeds::repeated_block(2, 5, {{2}}, 1), {0, 0, 0, 1, 1}, 2},
      {seeds::code_of(3, 2, {{2, 2}, {0, 4}}), {0, 2}, 4},
  };
  for (const auto& c : cases) {
    const auto& p = c.code.params();
    const RingVector s(p, std::span<const std::int64_t>(c.s));
    CAPTURE(s.to_string());
    CHECK(dot(s, s) == c.ss);
    const auto c0_ref = filter(oracle::span(c.code), [&](const oracle::Raw& x) {
      return oracle::dot(p, x, oracle::raw(s)) == 0;
    });
    CHECK(oracle::span(psi_kernel(c.code, s)) == c0_ref);
    auto dec = decompose_generalized(c.code, s);
    CHECK(dec.s == s);
    check_against_oracle(dec, c0_ref);
    const auto table = verify_orthogonality(dec);
    CHECK(table.matches);
    const auto ref = brute_table(dec, c0_ref);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) CHECK(table.observed[i][j] == ref[i][j]);
    }
  }
}

TEST_CASE("shadow errors") {
  const RingParams f2(1), z4(2);
  CHECK_THROWS_AS(euclidean_kernel(seeds::extended_hamming()), NotTypeIError);
  CHECK_THROWS_AS(decompose_type_i(seeds::code_of(1, 2, {{1, 0}})), NotTypeIError);

  const auto c = seeds::repeated_block(2, 2, {{2}}, 1);
  CHECK_THROWS_AS(psi_kernel(c, RingVector(z4, {2, 0})), InvalidShadowVector);
  // (1, 0) pairs with (2, 0) to give 2: image {0, 2}, accepted.
  CHECK_NOTHROW(psi_kernel(c, RingVector(z4, {1, 0})));
  const auto z4_len4 = seeds::code_of(2, 4, {{1, 1, 1, 1}, {0, 2, 0, 2}, {0, 0, 2, 2}});
  // (1, 0, 0, 0) pairs with (1, 1, 1, 1) to give 1: image is all of Z4.
  CHECK_THROWS_AS(psi_kernel(z4_len4, RingVector(z4, {1, 0, 0, 0})), ImageShapeError);
  CHECK_THROWS_AS(psi_kernel(c, RingVector(z4, {1, 0, 0})), DimensionError);
  CHECK_THROWS_AS(psi_kernel(seeds::code_of(1, 2, {{1, 0}}), RingVector(f2, {0, 1})), DomainError);
  CHECK_THROWS_AS(shadow_weight_check(decompose_generalized(c, RingVector(z4, {1, 1}))), DomainError);
}
