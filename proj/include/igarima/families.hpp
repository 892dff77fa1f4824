// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>

#include "igarima/distribution.hpp"

namespace igarima {

enum class Family {
  IGarima,
  Garima,
  Aradhana,
  Sujatha,
  Akash,
  Shanker,
  Lindley,
};

/// All seven families in reporting order.
const std::array<Family, 7>& all_families();

std::string_view family_name(Family f);
Family family_from_string(std::string_view tag);

std::unique_ptr<Distribution> make_distribution(Family f, Theta theta);

/// Density c(θ)(q0 + q1 x + q2 x²) e^{-θx} with c the normalizing constant.
///
/// Every comparison family is of this shape, so pdf, cdf, survival and mean
/// all come from one derivation:
///   S(x) = (1 + L x + Q x²) e^{-θx},  L = c(q1/θ + 2 q2/θ²),  Q = c q2/θ.
class PolyExpDistribution final : public Distribution {
 public:
  PolyExpDistribution(std::string name, Theta theta, double q0, double q1,
                      double q2);

  const char* family_name() const noexcept override { return name_.c_str(); }
  double theta() const noexcept override { return theta_.value(); }

  double pdf(double x) const override;
  double log_pdf(double x) const override;
  double cdf(double x) const override;
  double survival(double x) const override;
  double mean() const override;

 private:
  double log_survival(double x) const;

  std::string name_;
  Theta theta_;
  double q0_, q1_, q2_;
  double norm_;        // c(θ)
  double log_norm_;
  double lin_, quad_;  // survival polynomial coefficients
};

}  // namespace igarima
