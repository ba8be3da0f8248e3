#include "zshadow/lincode.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "zshadow/error.hpp"

namespace zshadow {

std::uint64_t enumeration_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("ZSHADOW_ENUM_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return kDefaultEnumerationCap;
  }();
  return cap;
}

namespace {

using Row = std::vector<std::uint64_t>;

struct Echelon {
  std::vector<Row> rows;
  std::vector<Pivot> pivots;
};

std::uint64_t inverse_odd(std::uint64_t u, std::uint64_t mask) {
  // Newton iteration doubles the number of correct low bits each step.
  std::uint64_t x = u;
  for (int i = 0; i < 6; ++i) x = (x * (2 - u * x)) & mask;
  return x & mask;
}

void axpy(Row& dst, std::uint64_t factor, const Row& src, std::uint64_t mask) {
  // dst -= factor * src
  for (std::size_t c = 0; c < dst.size(); ++c) dst[c] = (dst[c] - factor * src[c]) & mask;
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](std::uint64_t x) { return x == 0; });
}

// Howell form of the row module spanned by `pool` (entries already reduced).
Echelon howell(const RingParams& p, std::size_t width, std::vector<Row> pool) {
  const std::uint64_t mask = p.mask();
  const int m = p.exponent();
  Echelon out;
  std::erase_if(pool, is_zero_row);

  for (std::size_t col = 0; col < width && !pool.empty(); ++col) {
    std::size_t best = pool.size();
    int best_val = m;
    for (std::size_t r = 0; r < pool.size(); ++r) {
      if (pool[r][col] == 0) continue;
      const int v = std::countr_zero(pool[r][col]);
      if (v < best_val) {
        best_val = v;
        best = r;
      }
    }
    if (best == pool.size()) continue;

    Row pivot = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
    const std::uint64_t unit = pivot[col] >> best_val;
    const std::uint64_t inv = inverse_odd(unit, mask);
    for (auto& x : pivot) x = (x * inv) & mask;

    for (auto& r : pool) {
      if (r[col] == 0) continue;
      axpy(r, r[col] >> best_val, pivot, mask);
    }
    // Saturation: 2^{m-d} * pivot vanishes on this column and must stay in the module.
    if (best_val > 0) {
      Row extra(pivot.size());
      for (std::size_t c = 0; c < pivot.size(); ++c) extra[c] = (pivot[c] << (m - best_val)) & mask;
      pool.push_back(std::move(extra));
    }
    std::erase_if(pool, is_zero_row);
    out.rows.push_back(std::move(pivot));
    out.pivots.push_back({col, best_val});
  }

  // Reduce the entries above every pivot modulo that pivot.
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const auto [col, val] = out.pivots[i];
    for (std::size_t r = 0; r < i; ++r) {
      const std::uint64_t q = out.rows[r][col] >> val;
      if (q) axpy(out.rows[r], q, out.rows[i], mask);
    }
  }
  return out;
}

Row to_row(const RingVector& v) { return Row(v.components().begin(), v.components().end()); }

RingVector from_row(const RingParams& p, const Row& r, std::size_t begin, std::size_t end) {
  std::vector<Element> comps;
  comps.reserve(end - begin);
  for (std::size_t c = begin; c < end; ++c) comps.push_back(static_cast<Element>(r[c]));
  return RingVector::from_elements(p, std::move(comps));
}

}  // namespace

LinearCode LinearCode::canonicalize(RingParams p, std::size_t n, std::span<const RingVector> rows) {
  if (n == 0) throw DimensionError("code length must be >= 1");
  std::vector<Row> pool;
  pool.reserve(rows.size());
  for (const auto& r : rows) {
    if (!(r.params() == p)) throw DimensionError("generator over a different ring");
    if (r.size() != n) {
      throw DimensionError("generator length " + std::to_string(r.size()) + " != code length " + std::to_string(n));
    }
    pool.push_back(to_row(r));
  }
  Echelon e = howell(p, n, std::move(pool));
  LinearCode code(p, n);
  for (const auto& r : e.rows) code.rows_.push_back(from_row(p, r, 0, n));
  code.pivots_ = std::move(e.pivots);
  return code;
}

LinearCode LinearCode::zero(RingParams p, std::size_t n) { return canonicalize(p, n, {}); }

LinearCode LinearCode::full(RingParams p, std::size_t n) {
  std::vector<RingVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Element> e(n, 0);
    e[i] = 1;
    rows.push_back(RingVector::from_elements(p, std::move(e)));
  }
  return canonicalize(p, n, rows);
}

std::uint64_t LinearCode::size_exponent() const noexcept {
  std::uint64_t e = 0;
  for (const auto& pv : pivots_) e += static_cast<std::uint64_t>(params_.exponent() - pv.valuation);
  return e;
}

std::uint64_t LinearCode::size() const {
  const auto e = size_exponent();
  if (e >= 63) throw EnumerationTooLarge("code size 2^" + std::to_string(e) + " does not fit in 63 bits");
  return std::uint64_t{1} << e;
}

bool LinearCode::contains(const RingVector& v) const {
  if (!(v.params() == params_)) throw DimensionError("contains: modulus mismatch");
  if (v.size() != n_) {
    throw DimensionError("contains: length " + std::to_string(v.size()) + " != " + std::to_string(n_));
  }
  const std::uint64_t mask = params_.mask();
  Row work = to_row(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto [col, val] = pivots_[i];
    for (std::size_t c = 0; c < col; ++c) {
      if (work[c] != 0) return false;
    }
    const std::uint64_t x = work[col];
    if (x & ((std::uint64_t{1} << val) - 1)) return false;
    if (x) axpy(work, x >> val, to_row(rows_[i]), mask);
  }
  return is_zero_row(work);
}

bool LinearCode::find_first(const std::function<bool(const RingVector&)>& visit, std::uint64_t cap) const {
  const auto e = size_exponent();
  if (e >= 63 || (std::uint64_t{1} << e) > cap) {
    throw EnumerationTooLarge("enumeration of 2^" + std::to_string(e) + " codewords exceeds cap " +
                              std::to_string(cap) + " (set ZSHADOW_ENUM_CAP to raise it)");
  }
  const std::uint64_t mask = params_.mask();
  const std::size_t k = rows_.size();
  std::vector<Row> rows;
  std::vector<Row> wraps;  // radix_i * row_i
  std::vector<std::uint64_t> radix;
  for (std::size_t i = 0; i < k; ++i) {
    rows.push_back(to_row(rows_[i]));
    radix.push_back(std::uint64_t{1} << (params_.exponent() - pivots_[i].valuation));
    Row w(n_);
    for (std::size_t c = 0; c < n_; ++c) w[c] = (rows.back()[c] * radix.back()) & mask;
    wraps.push_back(std::move(w));
  }
  std::vector<std::uint64_t> coeff(k, 0);
  Row current(n_, 0);
  std::vector<Element> buf(n_);
  for (;;) {
    for (std::size_t c = 0; c < n_; ++c) buf[c] = static_cast<Element>(current[c]);
    if (visit(RingVector::from_elements(params_, buf))) return true;
    std::size_t i = k;
    for (;;) {
      if (i == 0) return false;
      --i;
      for (std::size_t c = 0; c < n_; ++c) current[c] = (current[c] + rows[i][c]) & mask;
      if (++coeff[i] < radix[i]) break;
      coeff[i] = 0;
      for (std::size_t c = 0; c < n_; ++c) current[c] = (current[c] - wraps[i][c]) & mask;
    }
  }
}

void LinearCode::for_each(const std::function<void(const RingVector&)>& visit, std::uint64_t cap) const {
  find_first(
      [&](const RingVector& v) {
        visit(v);
        return false;
      },
      cap);
}

std::vector<RingVector> LinearCode::codewords(std::uint64_t cap) const {
  std::vector<RingVector> out;
  for_each([&](const RingVector& v) { out.push_back(v); }, cap);
  return out;
}

LinearCode dual(const LinearCode& code) {
  // Kernel of x -> G x^T: Howell form of [G^T | I_n]; rows vanishing on the
  // first k columns span exactly the kernel by the Howell property.
  const auto& p = code.params();
  const std::size_t n = code.length();
  const std::size_t k = code.generators().size();
  std::vector<Row> pool;
  pool.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Row r(k + n, 0);
    for (std::size_t i = 0; i < k; ++i) r[i] = code.generators()[i][j];
    r[k + j] = 1;
    pool.push_back(std::move(r));
  }
  Echelon e = howell(p, k + n, std::move(pool));
  std::vector<RingVector> kernel;
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i].column >= k) kernel.push_back(from_row(p, e.rows[i], k, k + n));
  }
  return LinearCode::canonicalize(p, n, kernel);
}

LinearCode augment(const LinearCode& code, std::span<const RingVector> extra) {
  std::vector<RingVector> rows = code.generators();
  rows.insert(rows.end(), extra.begin(), extra.end());
  return LinearCode::canonicalize(code.params(), code.length(), rows);
}

bool is_self_orthogonal(const LinearCode& code) {
  const auto& g = code.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      if (dot(g[i], g[j]) != 0) return false;
    }
  }
  return true;
}

bool is_self_dual(const LinearCode& code) {
  const std::uint64_t mn = static_cast<std::uint64_t>(code.params().exponent()) * code.length();
  return mn % 2 == 0 && 2 * code.size_exponent() == mn && is_self_orthogonal(code);
}

bool generators_doubly_even(const LinearCode& code) {
  const std::uint64_t mod = code.params().modulus() * 2;
  return std::all_of(code.generators().begin(), code.generators().end(),
                     [&](const RingVector& g) { return euclidean_weight(g) % mod == 0; });
}

TypeVerdict classify(const LinearCode& code) {
  if (!is_self_dual(code)) return TypeVerdict::NotSelfDual;
  return generators_doubly_even(code) ? TypeVerdict::TypeII : TypeVerdict::TypeI;
}

std::string_view to_string(TypeVerdict v) {
  switch (v) {
    case TypeVerdict::NotSelfDual:
      return "NotSelfDual";
    case TypeVerdict::TypeI:
      return "TypeI";
    case TypeVerdict::TypeII:
      return "TypeII";
  }
  return "?";
}

}  // namespace zshadow
