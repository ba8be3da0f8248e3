#include "zshadow/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "zshadow/error.hpp"

namespace zshadow {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex term(double r, double denom, Complex tau, Complex z) {
  return std::exp(2.0 * std::numbers::pi * kI * (tau * r * r / denom + z * r));
}

}  // namespace

ThetaValue theta(const RingParams& p, Element mu, Complex tau, Complex z, int radius) {
  if (tau.imag() <= 0) throw DomainError("theta needs Im tau > 0");
  const auto q = static_cast<std::int64_t>(p.modulus());
  const double denom = 2.0 * static_cast<double>(q);
  // Smallest r = mu (mod 2^m) with r >= -radius.
  std::int64_t r = -radius + ((static_cast<std::int64_t>(mu) + radius) % q + q) % q;
  Complex sum = 0;
  for (; r <= radius; r += q) sum += term(static_cast<double>(r), denom, tau, z);

  // Every omitted term has |r| >= radius + 1, and on each side consecutive
  // omitted terms are 2^m apart. Past the maximum of -a x^2 + b x the moduli
  // decay faster than a geometric series with the ratio of the first step.
  const double a = 2.0 * std::numbers::pi * tau.imag() / denom;
  const double b = 2.0 * std::numbers::pi * std::abs(z.imag());
  const double x = static_cast<double>(radius) + 1.0;
  const double step = static_cast<double>(q);
  const double lead = std::exp(-a * x * x + b * x);
  const double ratio = std::exp(-a * (2.0 * x * step + step * step) + b * step);
  const bool decreasing = 2.0 * a * x >= b;
  const double tail = decreasing && ratio < 1 ? 2.0 * lead / (1.0 - ratio) : INFINITY;
  return {sum, tail};
}

Complex evaluate_candidate(const WeightEnumerator& we, Complex tau, Complex z, int radius) {
  const auto& p = we.params();
  std::vector<Complex> th(p.modulus());
  for (std::size_t mu = 0; mu < th.size(); ++mu) th[mu] = theta(p, static_cast<Element>(mu), tau, z, radius).value;
  Complex sum = 0;
  for (const auto& [e, count] : we.terms()) {
    Complex prod = static_cast<double>(count);
    for (std::size_t mu = 0; mu < th.size(); ++mu) {
      if (e[mu]) prod *= std::pow(th[mu], static_cast<int>(e[mu]));
    }
    sum += prod;
  }
  return sum;
}

std::vector<SamplePoint> default_sample_points() {
  return {{{0.0, 2.0}, {0.1, 0.2}}, {{1.0, 1.0}, {-0.3, 0.4}}, {{0.5, 1.5}, {0.0, 0.25}}};
}

JacobiCheckSpec JacobiCheckSpec::for_enumerator(const WeightEnumerator& we) {
  if (we.length() % 2) throw DomainError("Jacobi weight length/2 must be integral");
  return {static_cast<int>(we.length() / 2),
          static_cast<double>(we.length()) * static_cast<double>(we.params().half()), default_sample_points()};
}

double ModularityReport::max_residual() const {
  double out = 0;
  for (const auto& r : residuals) out = std::max(out, r.residual);
  return out;
}

double ModularityReport::max_residual(const std::string& transform) const {
  double out = 0;
  for (const auto& r : residuals) {
    if (r.transform == transform) out = std::max(out, r.residual);
  }
  return out;
}

ModularityReport modularity_check(const WeightEnumerator& we, const JacobiCheckSpec& spec) {
  ModularityReport report;
  report.tolerance = spec.tolerance;
  const double u = spec.index;
  const auto phi = [&](Complex tau, Complex z) { return evaluate_candidate(we, tau, z, spec.radius); };
  const auto rel = [](Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); };
  const double two_pi = 2.0 * std::numbers::pi;

  for (const auto& pt : spec.points) {
    if (pt.tau.imag() <= 0) throw DomainError("sample point with Im tau <= 0");
    const Complex tau = pt.tau, z = pt.z;
    const Complex rhs = phi(tau, z);

    report.residuals.push_back({"T", pt, rel(phi(tau + 1.0, z), rhs)});

    const Complex s_lhs = std::pow(tau, -spec.weight) * std::exp(-two_pi * kI * u * z * z / tau) * phi(-1.0 / tau, z / tau);
    report.residuals.push_back({"S", pt, rel(s_lhs, rhs)});

    const Complex e_lhs = std::exp(two_pi * kI * u * (tau + 2.0 * z)) * phi(tau, z + tau);
    report.residuals.push_back({"shift(1,0)", pt, rel(e_lhs, rhs)});

    report.residuals.push_back({"shift(0,1)", pt, rel(phi(tau, z + 1.0), rhs)});
  }
  return report;
}

ExponentReport exponent_check(const WeightEnumerator& we, int shifts) {
  const auto& p = we.params();
  const auto q = static_cast<std::int64_t>(p.modulus());
  const std::int64_t denom = 2 * q;
  const std::int64_t u2 = static_cast<std::int64_t>(we.length()) * q;  // 2u
  ExponentReport report;

  // Per residue mu, the (r^2, r) pairs of the truncated theta series.
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> choices(p.modulus());
  for (std::int64_t mu = 0; mu < q; ++mu) {
    for (int t = -shifts; t <= shifts; ++t) {
      const std::int64_t r = mu + q * t;
      choices[mu].push_back({r * r, r});
    }
  }
  for (const auto& [e, count] : we.terms()) {
    // Distinct (sum r^2, sum r) pairs of the product.
    std::map<std::pair<std::int64_t, std::int64_t>, bool> acc{{{0, 0}, true}};
    for (std::int64_t mu = 0; mu < q; ++mu) {
      for (std::uint32_t rep = 0; rep < e[mu]; ++rep) {
        std::map<std::pair<std::int64_t, std::int64_t>, bool> next;
        for (const auto& [key, unused] : acc) {
          for (const auto& [sq, r] : choices[mu]) next[{key.first + sq, key.second + r}] = true;
        }
        acc = std::move(next);
      }
    }
    for (const auto& [key, unused] : acc) {
      const auto [sq, r] = key;
      ++report.terms_checked;
      if (sq % denom != 0) report.q_integral = false;
      // r^2 <= 4 u v with v = sq / denom, i.e. r^2 denom <= 2 (2u) sq.
      if (r * r * denom > 2 * u2 * sq) report.discriminant_ok = false;
    }
  }
  return report;
}

}  // namespace zshadow
