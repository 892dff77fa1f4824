// SPDX-License-Identifier: Apache-2.0

#include "igarima/igarima.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "igarima/random.hpp"
#include "igarima/special.hpp"

namespace igarima {

namespace {

// log(1 - exp(s)) for s < 0 without cancellation
double log1mexp(double s) {
  constexpr double kLn2 = 0.6931471805599453;
  return (s > -kLn2) ? std::log(-std::expm1(s)) : std::log1p(-std::exp(s));
}

double log_choose(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double IGarima::pdf(double x) const {
  if (x <= 0.0) return 0.0;
  const double th = theta_.value();
  return th / (th + 3.0) * (2.0 + th + th * x) * std::exp(-th * x);
}

double IGarima::log_pdf(double x) const {
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  const double th = theta_.value();
  return std::log(th) - std::log(th + 3.0) + std::log(2.0 + th + th * x) -
         th * x;
}

double IGarima::log_survival(double x) const {
  if (x <= 0.0) return 0.0;
  const double th = theta_.value();
  return std::log1p(th * x / (th + 3.0)) - th * x;
}

double IGarima::survival(double x) const { return std::exp(log_survival(x)); }

double IGarima::cdf(double x) const {
  if (x <= 0.0) return 0.0;
  return -std::expm1(log_survival(x));
}

double IGarima::mean() const {
  const double th = theta_.value();
  return (th + 4.0) / (th * (th + 3.0));
}

double IGarima::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile: p must lie in (0, 1)");
  }
  const double th = theta_.value();
  const double tp3 = th + 3.0;
  const double z = -(1.0 - p) * tp3 * std::exp(-tp3);
  // tp3 > 3 keeps tp3*e^{-tp3} < 1/e, so z stays inside the branch domain
  assert(z < 0.0 && z >= -0.36787944117144233);
  const double w = special::lambert_wm1(z);
  return std::max(0.0, -1.0 - 3.0 / th - w / th);
}

double IGarima::mixture_weight() const {
  const double th = theta_.value();
  return (th + 2.0) / (th + 3.0);
}

Eigen::ArrayXd IGarima::sample(Eigen::Index n, std::uint64_t seed) const {
  if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
  const double th = theta_.value();
  const double p = mixture_weight();
  Rng rng(seed);
  Eigen::ArrayXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (rng.uniform() < p) {
      out[i] = rng.exponential(th);
    } else {
      out[i] = rng.exponential(th) + rng.exponential(th);
    }
  }
  return out;
}

double IGarima::raw_moment(int r) const {
  if (r < 1) throw std::invalid_argument("raw_moment: order must be >= 1");
  const double th = theta_.value();
  return std::tgamma(r + 1.0) * (th + r + 3.0) /
         (std::pow(th, r) * (th + 3.0));
}

CentralMoments IGarima::central_moments() const {
  const double th = theta_.value();
  const double t2 = th * th;
  const double t3 = t2 * th;
  const double t4 = t3 * th;
  const double s = th + 3.0;
  CentralMoments m;
  m.mean = (th + 4.0) / (th * s);
  m.mu2 = (t2 + 8.0 * th + 14.0) / (t2 * s * s);
  m.mu3 = 2.0 * (t3 + 12.0 * t2 + 42.0 * th + 46.0) / (t3 * s * s * s);
  m.mu4 = 3.0 * (3.0 * t4 + 48.0 * t3 + 260.0 * t2 + 592.0 * th + 488.0) /
          (t4 * s * s * s * s);
  return m;
}

ShapeMeasures IGarima::shape_measures() const {
  const double th = theta_.value();
  const double t2 = th * th;
  const double t3 = t2 * th;
  const double t4 = t3 * th;
  const double v = t2 + 8.0 * th + 14.0;  // θ²(θ+3)² μ₂
  ShapeMeasures s;
  s.cv = std::sqrt(v) / (th + 4.0);
  s.skewness = 2.0 * (t3 + 12.0 * t2 + 42.0 * th + 46.0) / std::pow(v, 1.5);
  s.kurtosis =
      3.0 * (3.0 * t4 + 48.0 * t3 + 260.0 * t2 + 592.0 * th + 488.0) / (v * v);
  s.index_of_dispersion = v / (th * (th + 3.0) * (th + 4.0));
  return s;
}

double IGarima::mgf(double t) const {
  const double th = theta_.value();
  if (!(t < th)) throw std::invalid_argument("mgf: requires t < theta");
  const double factor = 1.0 - (2.0 + th) * t / ((3.0 + th) * th);
  const double pole = 1.0 - t / th;
  return factor / (pole * pole);
}

double IGarima::cumulant(int r) const {
  if (r < 1) throw std::invalid_argument("cumulant: order must be >= 1");
  const double th = theta_.value();
  const double fact = std::tgamma(static_cast<double>(r));  // (r-1)!
  return 2.0 * fact / std::pow(th, r) -
         fact * std::pow((th + 2.0) / (th * (th + 3.0)), r);
}

double IGarima::hazard(double x) const {
  const double th = theta_.value();
  return th * (2.0 + th + th * x) / (3.0 + th + th * x);
}

double IGarima::mean_residual_life(double x) const {
  const double th = theta_.value();
  return (4.0 + th + th * x) / (th * (3.0 + th + th * x));
}

double IGarima::order_stat_pdf(int r, int m, double y) const {
  if (m < 1 || r < 1 || r > m) {
    throw std::invalid_argument("order_stat_pdf: rank out of range");
  }
  if (y <= 0.0) return 0.0;
  const double ls = log_survival(y);
  const double lg = log1mexp(ls);  // log cdf
  double logpdf = std::lgamma(m + 1.0) - std::lgamma(static_cast<double>(r)) -
                  std::lgamma(m - r + 1.0) + log_pdf(y);
  if (r > 1) logpdf += (r - 1.0) * lg;
  if (m > r) logpdf += (m - r) * ls;
  return std::exp(logpdf);
}

double IGarima::order_stat_cdf(int r, int m, double y) const {
  if (m < 1 || r < 1 || r > m) {
    throw std::invalid_argument("order_stat_cdf: rank out of range");
  }
  if (y <= 0.0) return 0.0;
  const double ls = log_survival(y);
  const double lg = log1mexp(ls);
  double total = 0.0;
  for (int j = r; j <= m; ++j) {
    total += std::exp(log_choose(m, j) + j * lg + (m - j) * ls);
  }
  return std::min(total, 1.0);
}

double IGarima::lorenz(double p) const {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("lorenz: p must lie in (0, 1]");
  }
  if (p == 1.0) return 1.0;
  const double th = theta_.value();
  const double q = quantile(p);
  const double poly =
      th * th * q * q + (th * th + 4.0 * th) * q + (th + 4.0);
  return -std::expm1(std::log(poly / (th + 4.0)) - th * q);
}

double IGarima::bonferroni(double p) const { return lorenz(p) / p; }

GiniResult IGarima::gini() const {
  const double th = theta_.value();
  GiniResult g;
  g.closed_form = (2.0 * th * th + 16.0 * th + 29.0) /
                  (4.0 * (th + 3.0) * (th + 4.0));
  const double integral = special::integrate(
      [this](double x) { return std::exp(2.0 * log_survival(x)); }, 0.0,
      std::numeric_limits<double>::infinity(), 1e-10);
  g.numeric = 1.0 - integral / mean();
  return g;
}

double IGarima::renyi_entropy(double eta) const {
  if (!(eta > 0.0) || eta == 1.0) {
    throw std::invalid_argument("renyi_entropy: requires eta > 0, eta != 1");
  }
  const double integral = special::integrate(
      [this, eta](double x) { return std::exp(eta * log_pdf(x)); }, 0.0,
      std::numeric_limits<double>::infinity(), 1e-10);
  return std::log(integral) / (1.0 - eta);
}

double IGarima::shannon_entropy() const {
  return special::integrate(
      [this](double x) {
        const double lp = log_pdf(x);
        return -std::exp(lp) * lp;
      },
      0.0, std::numeric_limits<double>::infinity(), 1e-10);
}

double stress_strength(Theta theta_strength, Theta theta_stress) {
  const double t1 = theta_strength.value();
  const double t2 = theta_stress.value();
  const double s = t1 + t2;
  const double a = t1 * t2 + 3.0 * t1 + 2.0 * t2 + 6.0;
  const double b = 2.0 * t1 * t2 + 3.0 * t1 + 2.0 * t2;
  return 1.0 - t1 * (a * s * s + b * s + 2.0 * t1 * t2) /
                   ((t1 + 3.0) * (t2 + 3.0) * s * s * s);
}

}  // namespace igarima
