// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace igarima {

/// Strictly positive rate-like parameter shared by every family here.
class Theta {
 public:
  explicit Theta(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("Theta: parameter must be a positive real");
    }
  }
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Common surface of the one-parameter lifetime families.
///
/// Conventions: pdf(x) = 0 and cdf(x) = 0 for x <= 0; survival is evaluated
/// from its own closed form, never as 1 - cdf, so it stays accurate deep in
/// the right tail.
class Distribution {
 public:
  virtual ~Distribution() = default;

  virtual const char* family_name() const noexcept = 0;
  virtual double theta() const noexcept = 0;

  virtual double pdf(double x) const = 0;
  virtual double log_pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;
  virtual double survival(double x) const = 0;
  virtual double mean() const = 0;

  /// Inverse cdf; the base implementation brackets and root-finds to
  /// |cdf(x) - p| <= 1e-12. Families with a closed form override it.
  virtual double quantile(double p) const;

  /// Sum of log_pdf over the sample.
  double log_likelihood(const Eigen::ArrayXd& data) const;

  /// n i.i.d. draws, deterministic under seed. The base implementation is
  /// inverse-transform via quantile().
  virtual Eigen::ArrayXd sample(Eigen::Index n, std::uint64_t seed) const;
};

/// Bracketing inverse-cdf used by families without a closed-form quantile.
double generic_quantile(const Distribution& dist, double p);

inline Eigen::ArrayXd sample(const Distribution& dist, Eigen::Index n,
                             std::uint64_t seed) {
  return dist.sample(n, seed);
}

}  // namespace igarima
