#include "zshadow/zring.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "zshadow/error.hpp"

namespace zshadow {

RingParams::RingParams(int m) : m_(m) {
  if (m < 1 || m > kMaxExponent) {
    throw DomainError("ring exponent m=" + std::to_string(m) + " outside [1, " +
                      std::to_string(kMaxExponent) + "]");
  }
}

Element RingParams::reduce(std::int64_t a) const noexcept {
  // Two's complement masking is the nonnegative residue for a power-of-two modulus.
  return static_cast<Element>(static_cast<std::uint64_t>(a) & mask());
}

std::uint64_t residue(std::int64_t a, std::uint64_t r) {
  if (r == 0) throw DomainError("residue modulo zero");
  const auto rr = static_cast<std::int64_t>(r);
  std::int64_t q = a % rr;
  if (q < 0) q += rr;
  return static_cast<std::uint64_t>(q);
}

std::uint64_t euclidean_weight(const RingParams& p, Element a) {
  const std::uint64_t x = a;
  const std::uint64_t y = p.modulus() - x;
  return std::min(x * x, y * y);
}

int valuation(const RingParams& p, Element a) {
  if (a == 0) return p.exponent();
  return std::countr_zero(a);
}

RingVector::RingVector(RingParams p, std::vector<Element> comps, int) : params_(p), comps_(std::move(comps)) {
  if (comps_.empty()) throw DimensionError("ring vectors must have length >= 1");
}

RingVector::RingVector(RingParams p, std::span<const std::int64_t> comps) : params_(p) {
  if (comps.empty()) throw DimensionError("ring vectors must have length >= 1");
  comps_.reserve(comps.size());
  for (auto c : comps) comps_.push_back(p.reduce(c));
}

RingVector::RingVector(RingParams p, std::initializer_list<std::int64_t> comps)
    : RingVector(p, std::span<const std::int64_t>(comps.begin(), comps.size())) {}

RingVector RingVector::from_elements(RingParams p, std::vector<Element> comps) {
  for (auto c : comps) {
    if (c >= p.modulus()) throw DomainError("component " + std::to_string(c) + " not reduced mod 2^m");
  }
  return RingVector(p, std::move(comps), 0);
}

RingVector RingVector::zero(RingParams p, std::size_t n) { return RingVector(p, std::vector<Element>(n, 0), 0); }

bool RingVector::is_zero() const noexcept {
  return std::all_of(comps_.begin(), comps_.end(), [](Element c) { return c == 0; });
}

namespace {

void require_compatible(const RingVector& a, const RingVector& b, const char* op) {
  if (!(a.params() == b.params())) {
    throw DimensionError(std::string(op) + ": modulus mismatch (m=" + std::to_string(a.params().exponent()) +
                         " vs m=" + std::to_string(b.params().exponent()) + ")");
  }
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}

}  // namespace

RingVector RingVector::operator+(const RingVector& o) const {
  require_compatible(*this, o, "add");
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = params_.reduce_unsigned(std::uint64_t{comps_[i]} + o.comps_[i]);
  return RingVector(params_, std::move(out), 0);
}

RingVector RingVector::operator-(const RingVector& o) const {
  require_compatible(*this, o, "subtract");
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = params_.reduce_unsigned(std::uint64_t{comps_[i]} + params_.modulus() - o.comps_[i]);
  }
  return RingVector(params_, std::move(out), 0);
}

RingVector RingVector::operator-() const { return scaled(-1); }

RingVector RingVector::scaled(std::int64_t k) const {
  const std::uint64_t kk = params_.reduce(k);
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = params_.reduce_unsigned(kk * comps_[i]);
  return RingVector(params_, std::move(out), 0);
}

std::string RingVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(comps_[i]);
  }
  return s;
}

std::size_t RingVectorHash::operator()(const RingVector& v) const noexcept {
  // FNV-1a over the components.
  std::size_t h = 1469598103934665603ULL;
  for (auto c : v.components()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Element dot(const RingVector& u, const RingVector& v) {
  require_compatible(u, v, "dot");
  const auto& p = u.params();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc = (acc + std::uint64_t{u[i]} * v[i]) & p.mask();
  }
  return static_cast<Element>(acc);
}

std::uint64_t euclidean_weight(const RingVector& v) {
  std::uint64_t w = 0;
  for (auto c : v.components()) w += euclidean_weight(v.params(), c);
  return w;
}

std::uint64_t additive_order(const RingVector& v) {
  const auto& p = v.params();
  int min_val = p.exponent();
  for (auto c : v.components()) min_val = std::min(min_val, valuation(p, c));
  return std::uint64_t{1} << (p.exponent() - min_val);
}

RingVector concat(const RingVector& a, const RingVector& b) {
  if (!(a.params() == b.params())) throw DimensionError("concat: modulus mismatch");
  std::vector<Element> out(a.components().begin(), a.components().end());
  out.insert(out.end(), b.components().begin(), b.components().end());
  return RingVector::from_elements(a.params(), std::move(out));
}

RingVector parse_vector(const RingParams& p, std::string_view text) {
  std::vector<std::int64_t> comps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    if (tok.empty()) throw ParseError("empty component in vector literal '" + std::string(text) + "'");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("bad component '" + std::string(tok) + "' in vector literal");
    }
    if (value < 0 || static_cast<std::uint64_t>(value) >= p.modulus()) {
      throw ParseError("component " + std::string(tok) + " outside [0, " + std::to_string(p.modulus() - 1) + "]");
    }
    comps.push_back(value);
    pos = next + 1;
  }
  return RingVector(p, comps);
}

}  // namespace zshadow
