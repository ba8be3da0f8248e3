#include <doctest.h>

#include "oracle.hpp"
#include "zshadow/error.hpp"
#include "zshadow/lincode.hpp"

using namespace zshadow;

namespace {

LinearCode code_of(const RingParams& p, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<RingVector> v;
  for (auto r : rows) v.emplace_back(p, r);
  return LinearCode::canonicalize(p, n, v);
}

std::vector<RingVector> random_generators(const RingParams& p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, static_cast<int>(n) + 1);
  std::uniform_int_distribution<int> shift(0, p.exponent() - 1);
  auto rows = oracle::random_rows(p, n, static_cast<std::size_t>(count(rng)), rng);
  for (auto& r : rows) r = r.scaled(std::int64_t{1} << shift(rng));
  return rows;
}

std::set<oracle::Raw> enumerated(const LinearCode& c) {
  std::set<oracle::Raw> out;
  c.for_each([&](const RingVector& v) { CHECK(out.insert(oracle::raw(v)).second); });
  return out;
}

}  // namespace

TEST_CASE("canonicalize examples") {
  const RingParams z4(2), f2(1);
  auto c = code_of(z4, 2, {{2, 0}, {0, 2}, {2, 2}});
  REQUIRE(c.generators().size() == 2);
  CHECK(c.generators()[0] == RingVector(z4, {2, 0}));
  CHECK(c.generators()[1] == RingVector(z4, {0, 2}));
  CHECK(c.size() == 4);
  CHECK(code_of(f2, 2, {{1, 1}}).size() == 2);
  CHECK(code_of(z4, 3, {{0, 0, 0}}).size() == 1);
  CHECK(LinearCode::canonicalize(z4, 3, {}).generators().empty());
}

TEST_CASE("saturation keeps the form closed") {
  // <(2,1)> over Z4 also contains (0,2), which must appear as its own row.
  const RingParams z4(2);
  auto c = code_of(z4, 2, {{2, 1}});
  CHECK(c.size() == 4);
  CHECK(c.contains(RingVector(z4, {0, 2})));
  CHECK(enumerated(c) == oracle::span(z4, 2, {{2, 1}}));
}

TEST_CASE("enumeration examples") {
  const RingParams f2(1), z4(2);
  CHECK(enumerated(code_of(f2, 2, {{1, 1}})) == std::set<oracle::Raw>{{0, 0}, {1, 1}});
  CHECK(enumerated(code_of(z4, 2, {{2, 0}, {0, 2}})) == std::set<oracle::Raw>{{0, 0}, {2, 0}, {0, 2}, {2, 2}});
  CHECK(enumerated(LinearCode::zero(z4, 2)) == std::set<oracle::Raw>{{0, 0}});
  CHECK_THROWS_AS(LinearCode::full(z4, 3).for_each([](const RingVector&) {}, 63), EnumerationTooLarge);
  auto first = LinearCode::full(z4, 2).codewords().front();
  CHECK(first.is_zero());
}

TEST_CASE("dual examples") {
  const RingParams f2(1), z4(2);
  auto c = code_of(z4, 2, {{2, 0}, {0, 2}});
  CHECK(dual(c) == c);
  CHECK(dual(LinearCode::zero(z4, 3)) == LinearCode::full(z4, 3));
  auto h = code_of(f2, 2, {{1, 1}});
  CHECK(dual(h) == h);
}

TEST_CASE("membership examples") {
  const RingParams z4(2);
  auto c = code_of(z4, 2, {{2, 0}, {0, 2}});
  CHECK(c.contains(RingVector(z4, {2, 2})));
  CHECK_FALSE(c.contains(RingVector(z4, {1, 0})));
  CHECK(c.contains(RingVector::zero(z4, 2)));
  CHECK_THROWS_AS(c.contains(RingVector::zero(z4, 3)), DimensionError);
}

TEST_CASE("classify examples") {
  const RingParams f2(1), z4(2);
  CHECK(classify(code_of(f2, 2, {{1, 1}})) == TypeVerdict::TypeI);
  CHECK(classify(code_of(z4, 1, {{2}})) == TypeVerdict::TypeI);
  CHECK(classify(code_of(f2, 2, {{1, 0}})) == TypeVerdict::NotSelfDual);
  auto e8 = code_of(f2, 8, {{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1},
                            {1, 0, 1, 0, 1, 0, 1, 0}});
  CHECK(classify(e8) == TypeVerdict::TypeII);
}

TEST_CASE("augment examples") {
  const RingParams f2(1), z4(2);
  std::vector<RingVector> extra{RingVector(f2, {1, 1})};
  CHECK(augment(LinearCode::zero(f2, 2), extra) == code_of(f2, 2, {{1, 1}}));
  auto c = code_of(z4, 2, {{2, 0}, {0, 2}});
  std::vector<RingVector> inside{RingVector(z4, {2, 2})};
  CHECK(augment(c, inside) == c);
  std::vector<RingVector> more{RingVector(z4, {0, 2})};
  auto a = augment(code_of(z4, 2, {{2, 0}}), more);
  CHECK(a == c);
  CHECK(a.size() == 4);
}

TEST_CASE("random codes agree with brute-force span, dual and membership") {
  std::mt19937_64 rng(2024);
  int trials = 0;
  for (int m = 1; m <= 3; ++m) {
    const RingParams p(m);
    for (std::size_t n = 1; n <= 4; ++n) {
      if (m == 3 && n == 4) continue;  // 4096-vector scans per trial; covered by fewer trials below
      const auto space = oracle::ambient(p, n);
      for (int t = 0; t < 8; ++t, ++trials) {
        auto gens = random_generators(p, n, rng);
        auto c = LinearCode::canonicalize(p, n, gens);
        std::vector<oracle::Raw> raw_gens;
        for (const auto& g : gens) raw_gens.push_back(oracle::raw(g));
        const auto ref = oracle::span(p, n, raw_gens);
        CHECK(enumerated(c) == ref);
        CHECK(c.size() == ref.size());
        CHECK(LinearCode::canonicalize(p, n, c.generators()) == c);

        const auto d = dual(c);
        CHECK(enumerated(d) == oracle::dual(p, n, ref));
        CHECK(c.size_exponent() + d.size_exponent() == static_cast<std::uint64_t>(m) * n);
        CHECK(dual(d) == c);

        for (const auto& r : space) CHECK(c.contains(oracle::vec(p, r)) == (ref.count(r) > 0));

        // A different generating set of the same code canonicalizes identically.
        auto shuffled = c.codewords();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(LinearCode::canonicalize(p, n, shuffled) == c);

        const auto verdict = classify(c);
        CHECK(verdict == oracle::classify(p, n, ref));
        if (verdict != TypeVerdict::NotSelfDual) CHECK((m * n) % 2 == 0);
      }
    }
  }
  CHECK(trials >= 50);
}

TEST_CASE("self-dual codes over Z8 and Z4 classify like the brute-force oracle") {
  const RingParams z8(3), z4(2);
  auto a = code_of(z8, 2, {{2, 2}, {0, 4}});
  CHECK(classify(a) == oracle::classify(z8, 2, oracle::span(a)));
  auto b = code_of(z4, 4, {{1, 1, 1, 1}, {0, 2, 0, 2}, {0, 0, 2, 2}});
  CHECK(classify(b) == TypeVerdict::TypeI);
  CHECK(classify(b) == oracle::classify(z4, 4, oracle::span(b)));
}
