// SPDX-License-Identifier: Apache-2.0

#include "igarima/families.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "igarima/igarima.hpp"

namespace igarima {

const std::array<Family, 7>& all_families() {
  static const std::array<Family, 7> order = {
      Family::IGarima, Family::Garima,  Family::Aradhana, Family::Sujatha,
      Family::Akash,   Family::Shanker, Family::Lindley,
  };
  return order;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::IGarima:  return "igarima";
    case Family::Garima:   return "garima";
    case Family::Aradhana: return "aradhana";
    case Family::Sujatha:  return "sujatha";
    case Family::Akash:    return "akash";
    case Family::Shanker:  return "shanker";
    case Family::Lindley:  return "lindley";
  }
  throw std::invalid_argument("family_name: unknown family");
}

Family family_from_string(std::string_view tag) {
  for (Family f : all_families()) {
    if (tag == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown family tag: " + std::string(tag));
}

std::unique_ptr<Distribution> make_distribution(Family f, Theta theta) {
  const double th = theta.value();
  switch (f) {
    case Family::IGarima:
      return std::make_unique<IGarima>(theta);
    case Family::Garima:
      return std::make_unique<PolyExpDistribution>("garima", theta,
                                                   1.0 + th, th, 0.0);
    case Family::Aradhana:
      return std::make_unique<PolyExpDistribution>("aradhana", theta,
                                                   1.0, 2.0, 1.0);
    case Family::Sujatha:
      return std::make_unique<PolyExpDistribution>("sujatha", theta,
                                                   1.0, 1.0, 1.0);
    case Family::Akash:
      return std::make_unique<PolyExpDistribution>("akash", theta,
                                                   1.0, 0.0, 1.0);
    case Family::Shanker:
      return std::make_unique<PolyExpDistribution>("shanker", theta,
                                                   th, 1.0, 0.0);
    case Family::Lindley:
      return std::make_unique<PolyExpDistribution>("lindley", theta,
                                                   1.0, 1.0, 0.0);
  }
  throw std::invalid_argument("make_distribution: unknown family");
}

PolyExpDistribution::PolyExpDistribution(std::string name, Theta theta,
                                         double q0, double q1, double q2)
    : name_(std::move(name)), theta_(theta), q0_(q0), q1_(q1), q2_(q2) {
  if (q0 < 0.0 || q1 < 0.0 || q2 < 0.0 || (q0 == 0.0 && q1 == 0.0 && q2 == 0.0)) {
    throw std::invalid_argument("PolyExpDistribution: invalid coefficients");
  }
  const double th = theta_.value();
  norm_ = 1.0 / (q0_ / th + q1_ / (th * th) + 2.0 * q2_ / (th * th * th));
  log_norm_ = std::log(norm_);
  lin_ = norm_ * (q1_ / th + 2.0 * q2_ / (th * th));
  quad_ = norm_ * q2_ / th;
}

double PolyExpDistribution::pdf(double x) const {
  if (x <= 0.0) return 0.0;
  const double th = theta_.value();
  return norm_ * (q0_ + q1_ * x + q2_ * x * x) * std::exp(-th * x);
}

double PolyExpDistribution::log_pdf(double x) const {
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  const double th = theta_.value();
  return log_norm_ + std::log(q0_ + q1_ * x + q2_ * x * x) - th * x;
}

double PolyExpDistribution::log_survival(double x) const {
  const double th = theta_.value();
  return std::log1p(x * (lin_ + quad_ * x)) - th * x;
}

double PolyExpDistribution::survival(double x) const {
  if (x <= 0.0) return 1.0;
  return std::exp(log_survival(x));
}

double PolyExpDistribution::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  return -std::expm1(log_survival(x));
}

double PolyExpDistribution::mean() const {
  const double th = theta_.value();
  const double t2 = th * th;
  return norm_ * (q0_ / t2 + 2.0 * q1_ / (t2 * th) + 6.0 * q2_ / (t2 * t2));
}

}  // namespace igarima
