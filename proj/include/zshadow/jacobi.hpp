#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zshadow/cwe.hpp"

namespace zshadow {

using Complex = std::complex<double>;

struct ThetaValue {
  Complex value;
  /// Upper bound on the modulus of the omitted terms |r| > radius.
  double tail_bound;
};

/// theta_{2^{m-1}, mu}(tau, z) = sum over r = mu (mod 2^m), |r| <= radius, of
/// exp(2 pi i tau r^2 / 2^{m+1}) exp(2 pi i z r). Throws DomainError if Im tau <= 0.
ThetaValue theta(const RingParams& p, Element mu, Complex tau, Complex z, int radius);

/// The enumerator with X_mu replaced by theta_{2^{m-1}, mu}(tau, z).
Complex evaluate_candidate(const WeightEnumerator& we, Complex tau, Complex z, int radius);

struct SamplePoint {
  Complex tau;
  Complex z;
};

std::vector<SamplePoint> default_sample_points();

struct JacobiCheckSpec {
  int weight;    // length / 2
  double index;  // length * 2^{m-1}
  std::vector<SamplePoint> points;
  double tolerance = 1e-6;
  int radius = 40;

  /// Weight and index of a length-l enumerator over Z_{2^m}; requires l even.
  static JacobiCheckSpec for_enumerator(const WeightEnumerator& we);
};

struct TransformResidual {
  std::string transform;  // "T", "S", "shift(1,0)", "shift(0,1)"
  SamplePoint point;
  double residual;  // |lhs - rhs| / max(1, |rhs|)
};

struct ModularityReport {
  std::vector<TransformResidual> residuals;
  double tolerance = 0;

  double max_residual() const;
  double max_residual(const std::string& transform) const;
  bool passed() const { return max_residual() < tolerance; }
};

ModularityReport modularity_check(const WeightEnumerator& we, const JacobiCheckSpec& spec);

/// Exponent bookkeeping on the truncated expansion: with every coordinate
/// running over r = mu + 2^m t, |t| <= shifts, each product term q^v xi^r must
/// have integral v and satisfy r^2 <= 4 u v.
struct ExponentReport {
  std::size_t terms_checked = 0;
  bool q_integral = true;
  bool discriminant_ok = true;
};
ExponentReport exponent_check(const WeightEnumerator& we, int shifts = 1);

}  // namespace zshadow
