#pragma once

// Moment statistics of a gray-level image and the three-moment two-point
// matching problem behind the mean dynamic range.
//
// The image is replaced by a two-valued surrogate {v_low with weight q_low,
// v_high with weight q_high} that preserves the first three statistical
// moments; the mean dynamic range is v_high - v_low. Both the classical
// framework (ordinary moments of the values) and the logarithmic framework
// (the same construction applied to phi(values)) are provided; the
// logarithmic solver is the classical solver conjugated by phi, which is
// exactly what the logarithmic moment system reduces to.

#include <Eigen/Core>
#include <cmath>

#include "lip/errors.hpp"
#include "lip/gray_algebra.hpp"

namespace lip {

enum class Framework { kClassical, kLogarithmic };

inline const char* framework_name(Framework f) {
  return f == Framework::kClassical ? "classical" : "logarithmic";
}

/// First three moments of a value population, in the framework's own units:
/// classical: mean/spread/skew are the ordinary m, sigma, s of the values;
/// logarithmic: mean and spread are gray levels with phi(mean), phi(spread)
/// the ordinary mean and standard deviation of phi(values), and skew holds
/// phi(s), the ordinary skewness of phi(values).
template <typename Scalar>
struct Stats {
  Scalar mean{0};
  Scalar spread{0};
  Scalar skew{0};
  Framework framework{Framework::kClassical};
  Eigen::Index count{0};
  bool degenerate_spread{false};
};

/// Two-point surrogate matching mean, variance and skewness.
/// q_low + q_high == 1; v_low < v_high whenever the spread is positive.
template <typename Scalar>
struct TwoPointSummary {
  Scalar q_low{0};
  Scalar q_high{0};
  Scalar v_low{0};
  Scalar v_high{0};
  Framework framework{Framework::kClassical};
};

/// Dynamic range V(f) = max - min over all pixels.
template <typename Derived>
typename Derived::Scalar classical_dynamic_range(
    const Eigen::ArrayBase<Derived>& values) {
  if (values.size() == 0) throw EmptyImageError("dynamic range of empty image");
  return values.maxCoeff() - values.minCoeff();
}

/// Ordinary population moments, accumulated sequentially in storage order so
/// results are bit-reproducible. Two passes: mean first, then centered
/// second/third powers (algebraically identical to the raw-moment forms
/// sigma^2 = m2 - m1^2 and s = (m3 - 3 m2 m1 + 2 m1^3) / sigma^3).
template <typename Derived>
Stats<typename Derived::Scalar> classical_stats(
    const Eigen::ArrayBase<Derived>& values) {
  using Scalar = typename Derived::Scalar;
  const auto& v = values.derived();
  const Eigen::Index n = v.size();
  if (n == 0) throw EmptyImageError("statistics of empty image");

  Stats<Scalar> out;
  out.framework = Framework::kClassical;
  out.count = n;

  // A constant population is detected exactly; summation round-off must not
  // turn sigma = 0 into a small positive spread.
  const Scalar vmin = v.minCoeff();
  const Scalar vmax = v.maxCoeff();
  if (vmin == vmax) {
    out.mean = vmin;
    out.degenerate_spread = true;
    return out;
  }

  Scalar sum = 0;
  for (Eigen::Index r = 0; r < v.rows(); ++r)
    for (Eigen::Index c = 0; c < v.cols(); ++c) sum += v.coeff(r, c);
  const Scalar mean = sum / Scalar(n);

  Scalar sum2 = 0;
  Scalar sum3 = 0;
  for (Eigen::Index r = 0; r < v.rows(); ++r) {
    for (Eigen::Index c = 0; c < v.cols(); ++c) {
      const Scalar d = v.coeff(r, c) - mean;
      sum2 += d * d;
      sum3 += d * d * d;
    }
  }
  const Scalar var = sum2 / Scalar(n);
  out.mean = mean;
  out.spread = std::sqrt(var);
  if (out.spread > Scalar(0)) {
    out.skew = (sum3 / Scalar(n)) / (out.spread * out.spread * out.spread);
  } else {
    out.degenerate_spread = true;
  }
  return out;
}

/// Solves the classical three-moment system for the two-point surrogate:
///   q_low  = (1 + s / sqrt(s^2 + 4)) / 2
///   q_high = (1 - s / sqrt(s^2 + 4)) / 2
///   v_low  = m - sigma sqrt(q_high / q_low)
///   v_high = m + sigma sqrt(q_low / q_high)
template <typename Scalar>
TwoPointSummary<Scalar> solve_two_point_classical(const Stats<Scalar>& stats) {
  if (stats.framework != Framework::kClassical) {
    throw DomainError("solve_two_point_classical expects classical stats");
  }
  if (stats.degenerate_spread || !(stats.spread > Scalar(0))) {
    throw DegenerateSpreadError(
        "two-point match undefined for zero spread (constant values)");
  }
  const Scalar s = stats.skew;
  const Scalar t = s / std::sqrt(s * s + Scalar(4));
  TwoPointSummary<Scalar> out;
  out.framework = Framework::kClassical;
  out.q_low = (Scalar(1) + t) / Scalar(2);
  out.q_high = (Scalar(1) - t) / Scalar(2);
  out.v_low = stats.mean - stats.spread * std::sqrt(out.q_high / out.q_low);
  out.v_high = stats.mean + stats.spread * std::sqrt(out.q_low / out.q_high);
  return out;
}

/// Mean dynamic range V_m = v_high - v_low. Ordinary difference in both
/// frameworks: the translation objective is the ordinary difference of the
/// translated bounds.
template <typename Scalar>
Scalar mean_dynamic_range(const TwoPointSummary<Scalar>& tp) {
  return tp.v_high - tp.v_low;
}

/// Center of the classical mean dynamic range, v0 = m + (s/2) sigma.
template <typename Scalar>
Scalar classical_center(const Stats<Scalar>& stats) {
  if (stats.framework != Framework::kClassical) {
    throw DomainError("classical_center expects classical stats");
  }
  return stats.mean + stats.skew / Scalar(2) * stats.spread;
}

/// Logarithmic moments: ordinary moments of phi(values), reported with mean
/// and spread mapped back into E.
template <typename Derived>
Stats<typename Derived::Scalar> log_stats(
    const Eigen::ArrayBase<Derived>& values) {
  using Scalar = typename Derived::Scalar;
  const auto& v = values.derived();
  if (v.size() == 0) throw EmptyImageError("statistics of empty image");

  Stats<Scalar> out;
  out.framework = Framework::kLogarithmic;
  out.count = v.size();

  const Scalar vmin = v.minCoeff();
  const Scalar vmax = v.maxCoeff();
  if (vmin == vmax) {
    // Keep the constant value exactly instead of the tanh(arctanh(v)) trip.
    out.mean = vmin;
    out.degenerate_spread = true;
    return out;
  }

  const GrayMap<Scalar> phis = phi(v).eval();
  const Stats<Scalar> ps = classical_stats(phis);
  out.mean = phi_inv(ps.mean);
  out.spread = phi_inv(ps.spread);
  out.skew = ps.skew;
  out.count = ps.count;
  out.degenerate_spread = ps.degenerate_spread;
  return out;
}

/// Logarithmic two-point solver: the classical solver applied to the
/// phi-space moments, with the bounds mapped back into E.
template <typename Scalar>
TwoPointSummary<Scalar> solve_two_point_log(const Stats<Scalar>& stats) {
  if (stats.framework != Framework::kLogarithmic) {
    throw DomainError("solve_two_point_log expects logarithmic stats");
  }
  if (stats.degenerate_spread || !(stats.spread > Scalar(0))) {
    throw DegenerateSpreadError(
        "two-point match undefined for zero spread (constant values)");
  }
  Stats<Scalar> phi_stats;
  phi_stats.framework = Framework::kClassical;
  phi_stats.mean = phi(stats.mean);
  phi_stats.spread = phi(stats.spread);
  phi_stats.skew = stats.skew;
  phi_stats.count = stats.count;
  const TwoPointSummary<Scalar> tp = solve_two_point_classical(phi_stats);
  TwoPointSummary<Scalar> out;
  out.framework = Framework::kLogarithmic;
  out.q_low = tp.q_low;
  out.q_high = tp.q_high;
  out.v_low = phi_inv(tp.v_low);
  out.v_high = phi_inv(tp.v_high);
  return out;
}

/// Center of the logarithmic mean dynamic range,
/// v0 = m <+> (phi(s)/2) <x> sigma = phi_inv(phi(m) + phi(s) phi(sigma) / 2).
template <typename Scalar>
Scalar log_center(const Stats<Scalar>& stats) {
  if (stats.framework != Framework::kLogarithmic) {
    throw DomainError("log_center expects logarithmic stats");
  }
  return phi_inv(phi(stats.mean) + stats.skew * phi(stats.spread) / Scalar(2));
}

}  // namespace lip
