// SPDX-License-Identifier: Apache-2.0

#include "igarima/distribution.hpp"

#include <cmath>
#include <string>

#include "igarima/errors.hpp"
#include "igarima/random.hpp"
#include "igarima/special.hpp"

namespace igarima {

double generic_quantile(const Distribution& dist, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile: p must lie in (0, 1)");
  }
  // grow the upper bracket until the cdf passes p
  double hi = std::max(dist.mean(), 1.0 / dist.theta());
  int growth = 0;
  while (dist.cdf(hi) < p) {
    hi *= 2.0;
    if (++growth > 2000) {
      throw NumericError("quantile: failed to bracket p = " + std::to_string(p));
    }
  }
  const double tol = 1e-14 * (1.0 + hi);
  return special::find_root([&](double x) { return dist.cdf(x) - p; }, 0.0, hi,
                            tol);
}

double Distribution::quantile(double p) const { return generic_quantile(*this, p); }

double Distribution::log_likelihood(const Eigen::ArrayXd& data) const {
  if (data.size() == 0) {
    throw std::invalid_argument("log_likelihood: empty sample");
  }
  return data.unaryExpr([this](double x) { return log_pdf(x); }).sum();
}

Eigen::ArrayXd Distribution::sample(Eigen::Index n, std::uint64_t seed) const {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  Rng rng(seed);
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out[i] = quantile(rng.uniform());
  }
  return out;
}

}  // namespace igarima
