#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "zshadow/zring.hpp"

namespace zshadow {

/// Default ceiling on the number of codewords any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// The process-wide enumeration cap: ZSHADOW_ENUM_CAP if set and valid, otherwise the default.
std::uint64_t enumeration_cap();

/// Where a canonical row's leading entry sits and which power of two it is.
struct Pivot {
  std::size_t column;
  int valuation;  // pivot entry is 2^valuation, 0 <= valuation < m
};

/// A linear code (additive subgroup) of Z_{2^m}^n held in canonical echelon form.
///
/// Canonical form: rows ordered by strictly increasing pivot column, each pivot
/// equal to 2^d, entries above a pivot reduced modulo that pivot, and the row set
/// closed in the Howell sense (every codeword vanishing on the first j columns is
/// spanned by the rows whose pivot lies past column j). Two generator sets span
/// the same code iff their canonical forms are identical, and every codeword has
/// exactly one expansion sum a_i * row_i with 0 <= a_i < 2^{m - d_i}.
class LinearCode {
 public:
  /// Canonical form of the span of `rows`. An empty list yields the zero code.
  static LinearCode canonicalize(RingParams p, std::size_t n, std::span<const RingVector> rows);
  static LinearCode zero(RingParams p, std::size_t n);
  static LinearCode full(RingParams p, std::size_t n);

  const RingParams& params() const noexcept { return params_; }
  std::size_t length() const noexcept { return n_; }
  const std::vector<RingVector>& generators() const noexcept { return rows_; }
  const std::vector<Pivot>& pivots() const noexcept { return pivots_; }

  /// e with |C| = 2^e.
  std::uint64_t size_exponent() const noexcept;
  /// |C|; throws EnumerationTooLarge when it does not fit in 63 bits.
  std::uint64_t size() const;

  /// Throws DimensionError on length/modulus mismatch.
  bool contains(const RingVector& v) const;

  /// Visits every codeword exactly once in a fixed order: a mixed-radix counter
  /// over the canonical rows with the last row varying fastest, starting at 0.
  /// Throws EnumerationTooLarge if |C| exceeds `cap`.
  void for_each(const std::function<void(const RingVector&)>& visit, std::uint64_t cap = enumeration_cap()) const;
  /// Like for_each but stops as soon as `visit` returns true; returns whether it stopped.
  bool find_first(const std::function<bool(const RingVector&)>& visit, std::uint64_t cap = enumeration_cap()) const;
  std::vector<RingVector> codewords(std::uint64_t cap = enumeration_cap()) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.params_ == b.params_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  LinearCode(RingParams p, std::size_t n) : params_(p), n_(n) {}

  RingParams params_;
  std::size_t n_;
  std::vector<RingVector> rows_;
  std::vector<Pivot> pivots_;
};

/// C^perp in canonical form.
LinearCode dual(const LinearCode& code);

/// Canonical code spanned by `code` together with `extra`.
LinearCode augment(const LinearCode& code, std::span<const RingVector> extra);

bool is_self_orthogonal(const LinearCode& code);
bool is_self_dual(const LinearCode& code);

enum class TypeVerdict { NotSelfDual, TypeI, TypeII };

std::string_view to_string(TypeVerdict v);

/// NotSelfDual unless C = C^perp; then TypeII iff every codeword's Euclidean
/// weight is divisible by 2^{m+1}, otherwise TypeI. Decided from the generators:
/// on a self-orthogonal code wt_E(c) mod 2^{m+1} is additive, so checking the
/// canonical rows covers every codeword.
TypeVerdict classify(const LinearCode& code);

/// True iff every canonical row has Euclidean weight divisible by 2^{m+1}.
bool generators_doubly_even(const LinearCode& code);

}  // namespace zshadow
