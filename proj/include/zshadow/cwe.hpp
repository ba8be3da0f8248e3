#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zshadow/recipe.hpp"

namespace zshadow {

/// Complete weight enumerator: exponent tuple (N_0, ..., N_{2^m - 1}) -> number of vectors.
class WeightEnumerator {
 public:
  using Exponents = std::vector<std::uint32_t>;

  WeightEnumerator(RingParams p, std::size_t n);

  const RingParams& params() const noexcept { return params_; }
  std::size_t length() const noexcept { return n_; }
  const std::map<Exponents, std::uint64_t>& terms() const noexcept { return terms_; }

  void add(const Exponents& exps, std::uint64_t count = 1);
  void add_vector(const RingVector& v);
  /// Sum of all counts, i.e. the value at X_mu = 1.
  std::uint64_t total() const;
  /// X_mu -> X_{-mu}.
  WeightEnumerator negated() const;

  bool operator==(const WeightEnumerator& other) const = default;

 private:
  RingParams params_;
  std::size_t n_;
  std::map<Exponents, std::uint64_t> terms_;
};

WeightEnumerator::Exponents composition(const RingVector& v);

WeightEnumerator cwe_direct(const LinearCode& code, std::uint64_t cap = enumeration_cap());
WeightEnumerator cwe_direct(std::span<const RingVector> vectors, const RingParams& p, std::size_t n);

/// cwe(C_0), ..., cwe(C_3) of a decomposition.
std::array<WeightEnumerator, 4> coset_cwe_table(const CosetDecomposition& dec, std::uint64_t cap = enumeration_cap());

/// The printed multiple sum with the printed index ranges.
WeightEnumerator cwe_formula(const CosetDecomposition& dec, const ConstructionRecipe& recipe);

/// The same summand with every index running over 1..o(vector): i over o(v1),
/// j over o(v2) and k_p over o(w_p).
WeightEnumerator cwe_formula_order_ranged(const CosetDecomposition& dec, const ConstructionRecipe& recipe);

struct CweDifference {
  WeightEnumerator::Exponents exps;
  std::uint64_t left;
  std::uint64_t right;
};

struct CweComparison {
  bool equal = true;
  std::vector<CweDifference> diff;
};

/// Term-by-term comparison; throws DimensionError if ring or length differ.
CweComparison cwe_equal(const WeightEnumerator& a, const WeightEnumerator& b);

}  // namespace zshadow
