#include "zshadow/cwe.hpp"

#include <map>
#include <numeric>

#include "zshadow/builder.hpp"
#include "zshadow/error.hpp"

namespace zshadow {

WeightEnumerator::WeightEnumerator(RingParams p, std::size_t n) : params_(p), n_(n) {}

void WeightEnumerator::add(const Exponents& exps, std::uint64_t count) {
  if (exps.size() != params_.modulus()) throw DimensionError("exponent tuple must have 2^m entries");
  if (std::accumulate(exps.begin(), exps.end(), std::uint64_t{0}) != n_) {
    throw DimensionError("exponent tuple does not sum to the length " + std::to_string(n_));
  }
  if (count) terms_[exps] += count;
}

void WeightEnumerator::add_vector(const RingVector& v) {
  if (v.size() != n_) throw DimensionError("vector length does not match enumerator length");
  terms_[composition(v)] += 1;
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (const auto& [e, c] : terms_) t += c;
  return t;
}

WeightEnumerator WeightEnumerator::negated() const {
  WeightEnumerator out(params_, n_);
  const std::size_t q = params_.modulus();
  for (const auto& [e, c] : terms_) {
    Exponents f(q);
    for (std::size_t mu = 0; mu < q; ++mu) f[(q - mu) % q] = e[mu];
    out.terms_[f] += c;
  }
  return out;
}

WeightEnumerator::Exponents composition(const RingVector& v) {
  WeightEnumerator::Exponents e(v.params().modulus(), 0);
  for (Element x : v.components()) ++e[x];
  return e;
}

WeightEnumerator cwe_direct(const LinearCode& code, std::uint64_t cap) {
  WeightEnumerator out(code.params(), code.length());
  code.for_each([&](const RingVector& v) { out.add_vector(v); }, cap);
  return out;
}

WeightEnumerator cwe_direct(std::span<const RingVector> vectors, const RingParams& p, std::size_t n) {
  WeightEnumerator out(p, n);
  for (const auto& v : vectors) out.add_vector(v);
  return out;
}

std::array<WeightEnumerator, 4> coset_cwe_table(const CosetDecomposition& dec, std::uint64_t cap) {
  std::array<WeightEnumerator, 4> out{WeightEnumerator(dec.params(), dec.length()),
                                      WeightEnumerator(dec.params(), dec.length()),
                                      WeightEnumerator(dec.params(), dec.length()),
                                      WeightEnumerator(dec.params(), dec.length())};
  for (int i = 0; i < 4; ++i) {
    const auto r = dec.representative(i);
    dec.c0.for_each([&](const RingVector& c) { out[i].add_vector(c + r); }, cap);
  }
  return out;
}

namespace {

WeightEnumerator evaluate(const CosetDecomposition& dec, const ConstructionRecipe& recipe,
                          const std::vector<std::uint64_t>& ranges) {
  const auto& p = dec.params();
  const auto& f = recipe.formula;
  const std::size_t q = p.modulus();
  const std::size_t nidx = ranges.size();
  if (nidx < 2) throw DomainError("a printed formula needs at least the indices i and j");

  // Group the summands by (appended-block monomial, coset index) before
  // multiplying with the four coset enumerators.
  std::map<std::pair<WeightEnumerator::Exponents, int>, std::uint64_t> groups;
  std::vector<std::uint64_t> idx(nidx, 1);
  WeightEnumerator::Exponents head(q);
  for (bool done = false; !done;) {
    std::fill(head.begin(), head.end(), 0);
    for (const auto& factor : f.factors) {
      std::int64_t sub = 0;
      for (std::size_t v = 0; v < nidx; ++v) sub += factor.coefficients[v] * static_cast<std::int64_t>(idx[v]);
      const Element mu = p.reduce(sub * static_cast<std::int64_t>(factor.scale));
      head[mu] += static_cast<std::uint32_t>(factor.power);
    }
    const int c = eta(static_cast<std::int64_t>(idx[0]), static_cast<std::int64_t>(idx[1]), dec.glue);
    ++groups[{head, c}];

    std::size_t v = nidx;
    for (;;) {
      if (v == 0) {
        done = true;
        break;
      }
      --v;
      if (++idx[v] <= ranges[v]) break;
      idx[v] = 1;
    }
  }

  const auto table = coset_cwe_table(dec);
  WeightEnumerator out(p, dec.length() + recipe.k);
  WeightEnumerator::Exponents sum(q);
  for (const auto& [key, count] : groups) {
    const auto& [h, c] = key;
    for (const auto& [e, n] : table[c].terms()) {
      for (std::size_t mu = 0; mu < q; ++mu) sum[mu] = h[mu] + e[mu];
      out.add(sum, count * n);
    }
  }
  return out;
}

}  // namespace

WeightEnumerator cwe_formula(const CosetDecomposition& dec, const ConstructionRecipe& recipe) {
  return evaluate(dec, recipe, recipe.formula.ranges);
}

WeightEnumerator cwe_formula_order_ranged(const CosetDecomposition& dec, const ConstructionRecipe& recipe) {
  std::vector<std::uint64_t> ranges{additive_order(recipe.v1), additive_order(recipe.v2)};
  for (const auto& w : recipe.w) ranges.push_back(additive_order(w));
  if (ranges.size() != recipe.formula.ranges.size()) {
    throw DomainError(recipe.case_id + ": printed formula has " + std::to_string(recipe.formula.ranges.size()) +
                      " indices but the recipe has " + std::to_string(ranges.size()) + " vectors");
  }
  return evaluate(dec, recipe, ranges);
}

CweComparison cwe_equal(const WeightEnumerator& a, const WeightEnumerator& b) {
  if (!(a.params() == b.params()) || a.length() != b.length()) {
    throw DimensionError("cannot compare enumerators over different rings or lengths");
  }
  CweComparison out;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      out.diff.push_back({ia->first, ia->second, 0});
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      out.diff.push_back({ib->first, 0, ib->second});
      ++ib;
    } else {
      if (ia->second != ib->second) out.diff.push_back({ia->first, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  out.equal = out.diff.empty();
  return out;
}

}  // namespace zshadow
