#pragma once

// The real algebra of gray levels on the open interval E = (-1, 1).
//
// E carries an addition, a scalar multiplication and a product that turn it
// into a real algebra isomorphic to the ordinary reals through
//
//   phi(v) = arctanh(v),   phi_inv(x) = tanh(x).
//
// Every operation here is computed in phi-space (arctanh, ordinary
// arithmetic, tanh back): the textbook closed forms, e.g.
// ((1+v)^l - (1-v)^l) / ((1+v)^l + (1-v)^l) for scalar multiplication,
// overflow for large l, while the conjugated form is exact mathematics and
// numerically stable over the whole representable domain.

#include <Eigen/Core>
#include <cmath>
#include <concepts>
#include <sstream>
#include <utility>

#include "lip/errors.hpp"

namespace lip {

/// Dense gray-level raster, row-major to match raster file order.
template <typename Scalar>
using GrayMap =
    Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GrayImage = GrayMap<double>;

/// Column vector of gray levels (used for value multisets such as the
/// positive/negative pixel populations).
template <typename Scalar>
using GrayValues = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// Distance kept between representable gray levels and the open-interval
/// endpoints +-1. Caps |phi| at about 10.7 and keeps every arctanh finite.
inline constexpr double kDomainMargin = 1e-9;

template <std::floating_point Scalar>
constexpr Scalar gray_bound() {
  return Scalar(1) - Scalar(kDomainMargin);
}

/// Clamps a value into the representable domain [-1+margin, 1-margin].
/// NaN is passed through; make_gray rejects it.
template <std::floating_point Scalar>
Scalar clamp_gray(Scalar v) {
  const Scalar bound = gray_bound<Scalar>();
  if (v > bound) return bound;
  if (v < -bound) return -bound;
  return v;
}

/// Constructs a gray level from an arbitrary real, applying the domain
/// margin policy. Throws DomainError for NaN.
template <std::floating_point Scalar>
Scalar make_gray(Scalar v) {
  if (std::isnan(v)) throw DomainError("gray level must be finite, got NaN");
  return clamp_gray(v);
}

/// The fundamental isomorphism phi : E -> R, phi(v) = arctanh(v).
template <std::floating_point Scalar>
Scalar phi(Scalar v) {
  return std::atanh(v);
}

/// Inverse isomorphism, clamped into the representable domain so that
/// saturating arguments (|x| beyond ~10.7) stay strictly inside E.
template <std::floating_point Scalar>
Scalar phi_inv(Scalar x) {
  return clamp_gray(std::tanh(x));
}

/// v <+> w = (v + w) / (1 + v w), the group addition of E.
template <std::floating_point Scalar>
Scalar log_add(Scalar v, Scalar w) {
  return phi_inv(phi(v) + phi(w));
}

/// v <-> w = (v - w) / (1 - v w); log_sub(v, w) == log_add(v, -w).
template <std::floating_point Scalar>
Scalar log_sub(Scalar v, Scalar w) {
  return phi_inv(phi(v) - phi(w));
}

/// The additive opposite <->v. Plain sign flip.
template <std::floating_point Scalar>
Scalar log_negate(Scalar v) {
  return -v;
}

/// lambda <x> v, the scalar multiplication phi_inv(lambda * phi(v)).
template <std::floating_point Scalar>
Scalar log_scalar_mul(Scalar lambda, Scalar v) {
  return phi_inv(lambda * phi(v));
}

/// v <.> w = phi_inv(phi(v) * phi(w)), the internal product of E.
template <std::floating_point Scalar>
Scalar log_product(Scalar v, Scalar w) {
  return phi_inv(phi(v) * phi(w));
}

/// n-fold product power v^(n) = phi_inv(phi(v)^n), n >= 1.
template <std::floating_point Scalar>
Scalar log_power(Scalar v, int n) {
  if (n < 1) throw DomainError("log_power exponent must be >= 1");
  return phi_inv(std::pow(phi(v), Scalar(n)));
}

/// Neutral element of the product: u = tanh(1) (phi(u) = 1).
template <std::floating_point Scalar = double>
Scalar product_neutral() {
  return std::tanh(Scalar(1));
}

/// Product inverse v^-1 = tanh(1 / arctanh(v)). Undefined at v = 0.
template <std::floating_point Scalar>
Scalar product_inverse(Scalar v) {
  if (v == Scalar(0)) {
    throw DomainError("product_inverse undefined at v = 0 (phi(v) = 0)");
  }
  return phi_inv(Scalar(1) / phi(v));
}

// ---------------------------------------------------------------------------
// Pointwise lifts to images. Operations on F(D, E) are the pixelwise
// operations on E, so free functions over Eigen arrays are all that is
// needed; expressions are accepted and results are materialized.
// ---------------------------------------------------------------------------

/// Elementwise phi over an array expression (lazy).
template <typename Derived>
auto phi(const Eigen::ArrayBase<Derived>& a) {
  return a.atanh();
}

/// Elementwise clamped phi_inv over an array expression (lazy).
template <typename Derived>
auto phi_inv(const Eigen::ArrayBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Scalar bound = gray_bound<Scalar>();
  return a.tanh().min(bound).max(-bound);
}

/// Applies a pointwise gray-level function to every pixel. Errors thrown by
/// `op` are re-raised with the offending pixel coordinates attached.
template <typename Scalar, typename Op>
GrayMap<Scalar> map_image(const GrayMap<Scalar>& image, Op&& op) {
  GrayMap<Scalar> out(image.rows(), image.cols());
  for (Eigen::Index r = 0; r < image.rows(); ++r) {
    for (Eigen::Index c = 0; c < image.cols(); ++c) {
      try {
        out(r, c) = op(image(r, c));
      } catch (const DomainError& e) {
        std::ostringstream msg;
        msg << e.what() << " at pixel (x=" << c << ", y=" << r << ")";
        throw DomainError(msg.str());
      }
    }
  }
  return out;
}

/// Image <+> constant: pixelwise log_add of a fixed gray level.
template <typename Derived, std::floating_point Scalar>
GrayMap<Scalar> log_add(const Eigen::ArrayBase<Derived>& image, Scalar w) {
  return phi_inv((phi(image) + phi(w)).eval());
}

/// lambda <x> image: pixelwise scalar multiplication.
template <typename Derived, std::floating_point Scalar>
GrayMap<Scalar> log_scalar_mul(Scalar lambda,
                               const Eigen::ArrayBase<Derived>& image) {
  return phi_inv((lambda * phi(image)).eval());
}

/// Pixelwise sum of two images of identical dimensions.
template <typename DerivedA, typename DerivedB>
GrayMap<typename DerivedA::Scalar> log_add(const Eigen::ArrayBase<DerivedA>& a,
                                           const Eigen::ArrayBase<DerivedB>& b) {
  return phi_inv((phi(a) + phi(b)).eval());
}

/// Pixelwise product of two images of identical dimensions.
template <typename DerivedA, typename DerivedB>
GrayMap<typename DerivedA::Scalar> log_product(
    const Eigen::ArrayBase<DerivedA>& a, const Eigen::ArrayBase<DerivedB>& b) {
  return phi_inv((phi(a) * phi(b)).eval());
}

}  // namespace lip
