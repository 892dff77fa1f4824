// SPDX-License-Identifier: Apache-2.0

#include "igarima/inference.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "igarima/special.hpp"

namespace igarima {

double igarima_score(double theta, const Eigen::ArrayXd& data) {
  if (data.size() == 0) throw std::invalid_argument("igarima_score: empty sample");
  if (!(theta > 0.0)) throw std::invalid_argument("igarima_score: theta must be positive");
  const double n = static_cast<double>(data.size());
  const double term = ((1.0 + data) / (2.0 + theta + theta * data)).sum();
  return 3.0 * n / (theta * theta + 3.0 * theta) + term - n * data.mean();
}

double ks_statistic(const Distribution& dist, const Eigen::ArrayXd& data) {
  const Eigen::Index n = data.size();
  if (n < 1) throw std::invalid_argument("ks_statistic: empty sample");
  std::vector<double> sorted(data.data(), data.data() + n);
  std::sort(sorted.begin(), sorted.end());
  double d = 0.0;
  const double nn = static_cast<double>(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double f = dist.cdf(sorted[i]);
    d = std::max(d, (i + 1.0) / nn - f);
    d = std::max(d, f - i / nn);
  }
  return d;
}

namespace {

// P(D_n < d), Marsaglia-Tsang-Wang matrix method. The (2k-1)x(2k-1) matrix
// power is tracked with a decimal exponent to keep entries in range.
double mtw_cdf(double d, std::size_t n) {
  const double nd = static_cast<double>(n) * d;
  const int k = static_cast<int>(nd) + 1;
  const int m = 2 * k - 1;
  const double h = k - nd;

  Eigen::MatrixXd H(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      H(i, j) = (i - j + 1 < 0) ? 0.0 : 1.0;
    }
  }
  for (int i = 0; i < m; ++i) {
    H(i, 0) -= std::pow(h, i + 1);
    H(m - 1, i) -= std::pow(h, m - i);
  }
  H(m - 1, 0) += (2.0 * h - 1.0 > 0.0) ? std::pow(2.0 * h - 1.0, m) : 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i - j + 1 > 0) {
        for (int g = 1; g <= i - j + 1; ++g) H(i, j) /= g;
      }
    }
  }

  // H^n by binary exponentiation, rescaling by 1e-140 as entries grow
  long exponent = 0;
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd base = H;
  long base_exp = 0;
  std::size_t e = n;
  const auto rescale = [m](Eigen::MatrixXd& mat, long& exp10) {
    if (mat(m / 2, m / 2) > 1e140) {
      mat *= 1e-140;
      exp10 += 140;
    }
  };
  while (e > 0) {
    if (e & 1) {
      result = (result * base).eval();
      exponent += base_exp;
      rescale(result, exponent);
    }
    e >>= 1;
    if (e > 0) {
      base = (base * base).eval();
      base_exp *= 2;
      rescale(base, base_exp);
    }
  }

  double s = result(k - 1, k - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    s *= static_cast<double>(i) / static_cast<double>(n);
    if (s < 1e-140) {
      s *= 1e140;
      exponent -= 140;
    }
  }
  return s * std::pow(10.0, static_cast<double>(exponent));
}

bool has_ties(const Eigen::ArrayXd& data) {
  std::vector<double> sorted(data.data(), data.data() + data.size());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

}  // namespace

double ks_exact_pvalue(double d, std::size_t n) {
  if (n < 1) throw std::invalid_argument("ks_exact_pvalue: n must be >= 1");
  if (d <= 0.5 / static_cast<double>(n)) return 1.0;
  if (d >= 1.0) return 0.0;
  const double p = 1.0 - mtw_cdf(d, n);
  return std::clamp(p, 0.0, 1.0);
}

double ks_asymptotic_pvalue(double d, std::size_t n) {
  if (n < 1) throw std::invalid_argument("ks_asymptotic_pvalue: n must be >= 1");
  const double t = std::sqrt(static_cast<double>(n)) * d;
  if (t <= 0.0) return 1.0;
  if (t < 1.0) {
    // complementary theta-series form, accurate where the direct tail
    // series converges slowly
    const double u = M_PI * M_PI / (8.0 * t * t);
    double cdf = 0.0;
    for (int j = 1; j < 20; j += 2) {
      const double term = std::exp(-j * j * u);
      cdf += term;
      if (term < 1e-18 * cdf) break;
    }
    cdf *= std::sqrt(2.0 * M_PI) / t;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double p = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = 2.0 * std::exp(-2.0 * j * j * t * t);
    p += sign * term;
    sign = -sign;
    if (term < 1e-18) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

KsResult ks_test(const Distribution& dist, const Eigen::ArrayXd& data) {
  KsResult r;
  r.statistic = ks_statistic(dist, data);
  const std::size_t n = static_cast<std::size_t>(data.size());
  if (n <= 100 && !has_ties(data)) {
    r.pvalue = ks_exact_pvalue(r.statistic, n);
  } else {
    r.pvalue = ks_asymptotic_pvalue(r.statistic, n);
  }
  return r;
}

KsResult ks_test(const Distribution& dist, const Dataset& data) {
  return ks_test(dist, data.values());
}

namespace {

struct Bracket {
  double lo, hi;
};

// widen [lo, hi] geometrically until keep_going(lo, hi) is false
template <typename Pred>
Bracket expand_bracket(double lo, double hi, Pred&& keep_going) {
  for (int round = 0; round < 10 && keep_going(lo, hi); ++round) {
    lo = std::max(lo / 10.0, 1e-12);
    hi = std::min(hi * 10.0, 1e12);
  }
  return {lo, hi};
}

double fit_theta_igarima(const Eigen::ArrayXd& x) {
  const auto score = [&x](double th) { return igarima_score(th, x); };
  auto [lo, hi] = expand_bracket(
      kFitBracketLo, kFitBracketHi,
      [&](double l, double h) { return score(l) * score(h) > 0.0; });
  if (score(lo) * score(hi) > 0.0) {
    throw NumericError("fit_mle(igarima): score equation has no root in "
                       "[1e-12, 1e12]; no interior maximum");
  }
  return special::find_root(score, lo, hi, 1e-10);
}

double fit_theta_generic(Family family, const Eigen::ArrayXd& x) {
  // minimize over log(theta): the tolerance becomes relative, so both the
  // optimum and the boundary test behave the same at theta = 1e-10 or 1e2
  const auto nll_log = [&](double u) {
    return -make_distribution(family, Theta(std::exp(u)))->log_likelihood(x);
  };
  const double cap_lo = std::log(1e-12);
  const double cap_hi = std::log(1e12);
  double ulo = std::log(kFitBracketLo);
  double uhi = std::log(kFitBracketHi);
  for (int round = 0; round < 16; ++round) {
    const double u = special::minimize(nll_log, ulo, uhi, 1e-10);
    const bool near_lo = u < ulo + 0.5;
    const bool near_hi = u > uhi - 0.5;
    if (!near_lo && !near_hi) return std::exp(u);
    if (near_lo && ulo > cap_lo) {
      ulo = std::max(ulo - std::log(10.0), cap_lo);
      continue;
    }
    if (near_hi && uhi < cap_hi) {
      uhi = std::min(uhi + std::log(10.0), cap_hi);
      continue;
    }
    throw NumericError("fit_mle(" + std::string(family_name(family)) +
                       "): no interior maximum in [1e-12, 1e12]");
  }
  throw NumericError("fit_mle(" + std::string(family_name(family)) +
                     "): likelihood maximization failed to settle");
}

}  // namespace

FitResult fit_mle(Family family, const Dataset& data) {
  const Eigen::ArrayXd& x = data.values();
  if (x.size() < 2) throw DataError("fit_mle: needs at least 2 observations");

  FitResult fit;
  fit.family = family;
  fit.n = static_cast<std::size_t>(x.size());
  fit.theta_hat = (family == Family::IGarima) ? fit_theta_igarima(x)
                                              : fit_theta_generic(family, x);
  const auto dist = make_distribution(family, Theta(fit.theta_hat));
  fit.neg2_loglik = -2.0 * dist->log_likelihood(x);
  fit.aic = fit.neg2_loglik + 2.0;
  fit.bic = fit.neg2_loglik + std::log(static_cast<double>(fit.n));
  const KsResult ks = ks_test(*dist, x);
  fit.ks_stat = ks.statistic;
  fit.ks_pvalue = ks.pvalue;
  fit.converged = true;
  return fit;
}

ComparisonTable compare_models(const Dataset& data,
                               const std::vector<Family>& families) {
  if (families.empty()) {
    throw std::invalid_argument("compare_models: family list is empty");
  }
  ComparisonTable table;
  table.rows.reserve(families.size());
  for (Family f : families) {
    try {
      table.rows.push_back(fit_mle(f, data));
    } catch (const std::exception& err) {
      FitResult failed;
      failed.family = f;
      failed.n = static_cast<std::size_t>(data.size());
      failed.theta_hat = std::numeric_limits<double>::quiet_NaN();
      failed.neg2_loglik = std::numeric_limits<double>::quiet_NaN();
      failed.aic = std::numeric_limits<double>::quiet_NaN();
      failed.bic = std::numeric_limits<double>::quiet_NaN();
      failed.ks_stat = std::numeric_limits<double>::quiet_NaN();
      failed.ks_pvalue = std::numeric_limits<double>::quiet_NaN();
      failed.converged = false;
      failed.message = err.what();
      table.rows.push_back(std::move(failed));
    }
  }
  for (int i = 0; i < static_cast<int>(table.rows.size()); ++i) {
    const FitResult& r = table.rows[i];
    if (!r.converged) continue;
    if (table.min_aic < 0 || r.aic < table.rows[table.min_aic].aic) table.min_aic = i;
    if (table.min_bic < 0 || r.bic < table.rows[table.min_bic].bic) table.min_bic = i;
    if (table.min_ks < 0 || r.ks_stat < table.rows[table.min_ks].ks_stat) table.min_ks = i;
  }
  return table;
}

}  // namespace igarima
