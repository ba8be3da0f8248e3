#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zshadow {

/// A ring element, always stored reduced into [0, 2^m).
using Element = std::uint32_t;

/// The ring Z_{2^m}. Cheap to copy; compares by exponent.
class RingParams {
 public:
  /// Upper bound on m. Keeps 2^{2m} and every Euclidean weight we sum well inside 64 bits.
  static constexpr int kMaxExponent = 16;

  explicit RingParams(int m);

  int exponent() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << m_; }
  /// 2^{m-1}, the non-trivial element of order two.
  std::uint64_t half() const noexcept { return std::uint64_t{1} << (m_ - 1); }
  std::uint64_t mask() const noexcept { return modulus() - 1; }

  Element reduce(std::int64_t a) const noexcept;
  Element reduce_unsigned(std::uint64_t a) const noexcept { return static_cast<Element>(a & mask()); }

  friend bool operator==(const RingParams&, const RingParams&) = default;

 private:
  int m_;
};

/// Mathematical remainder of `a` modulo `r`, always in [0, r). Throws DomainError for r == 0.
std::uint64_t residue(std::int64_t a, std::uint64_t r);

/// Euclidean weight of a single element: min(a^2, (2^m - a)^2).
std::uint64_t euclidean_weight(const RingParams& p, Element a);

/// 2-adic valuation of a nonzero element; returns m for zero.
int valuation(const RingParams& p, Element a);

/// An n-tuple over Z_{2^m}, n >= 1. Immutable value type.
class RingVector {
 public:
  /// Components are reduced modulo 2^m (negative values wrap).
  RingVector(RingParams p, std::span<const std::int64_t> comps);
  RingVector(RingParams p, std::initializer_list<std::int64_t> comps);
  /// Components must already be reduced.
  static RingVector from_elements(RingParams p, std::vector<Element> comps);
  static RingVector zero(RingParams p, std::size_t n);

  const RingParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return comps_.size(); }
  Element operator[](std::size_t i) const { return comps_[i]; }
  std::span<const Element> components() const noexcept { return comps_; }

  bool is_zero() const noexcept;

  RingVector operator+(const RingVector& o) const;
  RingVector operator-(const RingVector& o) const;
  RingVector operator-() const;
  /// k * v, k any integer.
  RingVector scaled(std::int64_t k) const;

  /// "1,0,3"
  std::string to_string() const;

  friend bool operator==(const RingVector& a, const RingVector& b) {
    return a.params_ == b.params_ && a.comps_ == b.comps_;
  }
  /// Lexicographic on components; only meaningful for vectors over the same ring.
  friend std::strong_ordering operator<=>(const RingVector& a, const RingVector& b) {
    return a.comps_ <=> b.comps_;
  }

 private:
  RingVector(RingParams p, std::vector<Element> comps, int);
  RingParams params_;
  std::vector<Element> comps_;
};

struct RingVectorHash {
  std::size_t operator()(const RingVector& v) const noexcept;
};

/// Standard bilinear form, reduced mod 2^m. Throws DimensionError on mismatch.
Element dot(const RingVector& u, const RingVector& v);

/// Sum of per-component Euclidean weights, as an ordinary (unreduced) integer.
std::uint64_t euclidean_weight(const RingVector& v);

/// Smallest r >= 1 with r*v == 0. Always a power of two dividing 2^m.
std::uint64_t additive_order(const RingVector& v);

/// (a, b): a occupies the leading coordinates.
RingVector concat(const RingVector& a, const RingVector& b);

/// Parses "1,0,3" (whitespace around components tolerated). Throws ParseError.
RingVector parse_vector(const RingParams& p, std::string_view text);

}  // namespace zshadow
