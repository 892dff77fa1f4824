// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "igarima/igarima.hpp"
#include "igarima/inference.hpp"

using namespace igarima;

TEST_CASE("score matches a finite difference of the log-likelihood") {
  const Dataset data = builtin("vinyl_chloride");
  const double h = 1e-6;
  const double ll_hi = IGarima{Theta(1.0 + h)}.log_likelihood(data.values());
  const double ll_lo = IGarima{Theta(1.0 - h)}.log_likelihood(data.values());
  const double fd = (ll_hi - ll_lo) / (2.0 * h);
  CHECK(igarima_score(1.0, data.values()) == doctest::Approx(fd).epsilon(1e-4));

  CHECK_THROWS_AS(igarima_score(1.0, Eigen::ArrayXd()), std::invalid_argument);
  CHECK_THROWS_AS(igarima_score(0.0, data.values()), std::invalid_argument);
}

TEST_CASE("score is stationary at the published estimate") {
  const Dataset data = builtin("vinyl_chloride");
  const double n = static_cast<double>(data.size());
  CHECK(std::abs(igarima_score(0.674, data.values())) < 1e-2 * n);
}

TEST_CASE("i-Garima fits reproduce the benchmark estimates") {
  const FitResult vinyl = fit_mle(Family::IGarima, builtin("vinyl_chloride"));
  CHECK(vinyl.theta_hat == doctest::Approx(0.674).epsilon(0.0015));
  CHECK(std::abs(vinyl.neg2_loglik - 111.18) < 0.05);

  const FitResult bladder = fit_mle(Family::IGarima, builtin("bladder_cancer"));
  CHECK(std::abs(bladder.theta_hat - 0.143) < 0.001);
  CHECK(std::abs(bladder.neg2_loglik - 825.57) < 0.05);

  const FitResult air = fit_mle(Family::IGarima, builtin("air_conditioning"));
  CHECK(std::abs(air.theta_hat - 0.022) < 0.001);
  CHECK(std::abs(air.neg2_loglik - 306.75) < 0.05);
}

TEST_CASE("fit recovers the generating parameter") {
  const IGarima truth{Theta(1.0)};
  const Eigen::ArrayXd draws = truth.sample(100000, 31337);
  const Dataset synthetic("synthetic", draws);
  const FitResult fit = fit_mle(Family::IGarima, synthetic);
  CHECK(std::abs(fit.theta_hat - 1.0) < 0.02);
}

TEST_CASE("information criteria identities") {
  const Dataset data = builtin("insulating_fluid");
  for (Family f : all_families()) {
    const FitResult fit = fit_mle(f, data);
    CHECK(fit.aic == fit.neg2_loglik + 2.0);
    CHECK(fit.bic == fit.neg2_loglik + std::log(static_cast<double>(fit.n)));
    CHECK(fit.bic - fit.aic ==
          doctest::Approx(std::log(19.0) - 2.0).epsilon(1e-12));
  }
}

TEST_CASE("the fitted theta maximizes the likelihood") {
  const Dataset data = builtin("vinyl_chloride");
  const FitResult fit = fit_mle(Family::IGarima, data);
  const double eps = 1e-4;
  CHECK(igarima_score(fit.theta_hat - eps, data.values()) > 0.0);
  CHECK(igarima_score(fit.theta_hat + eps, data.values()) < 0.0);

  const double ll_hat = IGarima{Theta(fit.theta_hat)}.log_likelihood(data.values());
  for (int i = 0; i < 100; ++i) {
    const double th = fit.theta_hat / 10.0 +
                      (10.0 * fit.theta_hat - fit.theta_hat / 10.0) * i / 99.0;
    CHECK(IGarima{Theta(th)}.log_likelihood(data.values()) <= ll_hat + 1e-9);
  }
}

TEST_CASE("K-S statistic at exact plotting positions") {
  const IGarima d{Theta(1.0)};
  const int n = 25;
  Eigen::ArrayXd data(n);
  for (int i = 0; i < n; ++i) {
    data[i] = d.quantile((i + 0.5) / n);
  }
  CHECK(ks_statistic(d, data) == doctest::Approx(0.5 / n).epsilon(1e-9));
}

TEST_CASE("K-S statistic on a benchmark fit") {
  const Dataset data = builtin("vinyl_chloride");
  const IGarima d{Theta(0.674)};
  CHECK(std::abs(ks_statistic(d, data.values()) - 0.1039) < 0.0005);
}

TEST_CASE("exact small-sample p-values") {
  // n = 1: P(D > d) = 2(1 - d) for d in [1/2, 1]
  CHECK(ks_exact_pvalue(0.6, 1) == doctest::Approx(0.8).epsilon(1e-12));
  // references from an independent implementation of the exact distribution
  CHECK(ks_exact_pvalue(0.5, 10) == doctest::Approx(0.00777741).epsilon(1e-6));
  CHECK(ks_exact_pvalue(0.2, 50) ==
        doctest::Approx(0.03143877776953241).epsilon(1e-10));
  CHECK(ks_exact_pvalue(0.2770, 19) ==
        doctest::Approx(0.08830978580638027).epsilon(1e-10));
  CHECK(ks_exact_pvalue(0.1039, 34) ==
        doctest::Approx(0.8198605487052604).epsilon(1e-10));
  // degenerate edges
  CHECK(ks_exact_pvalue(0.001, 10) == 1.0);
  CHECK(ks_exact_pvalue(1.0, 10) == 0.0);
}

TEST_CASE("asymptotic p-values") {
  // Kolmogorov tail at sqrt(n)*d = 0.5, 1, 2
  CHECK(ks_asymptotic_pvalue(0.5, 1) ==
        doctest::Approx(0.9639452436648751).epsilon(1e-12));
  CHECK(ks_asymptotic_pvalue(1.0, 1) ==
        doctest::Approx(0.26999967167735456).epsilon(1e-12));
  CHECK(ks_asymptotic_pvalue(2.0, 1) ==
        doctest::Approx(0.0006709252557796953).epsilon(1e-10));
  // the two series forms join smoothly at the crossover (slope there is
  // order one, so nearby arguments differ by order 1e-9)
  CHECK(ks_asymptotic_pvalue(1.0 - 1e-9, 1) ==
        doctest::Approx(ks_asymptotic_pvalue(1.0 + 1e-9, 1)).epsilon(1e-7));
}

TEST_CASE("p-value is monotone decreasing in D") {
  for (std::size_t n : {19UL, 128UL}) {
    double prev_exact = 1.1;
    double prev_asym = 1.1;
    for (int i = 1; i <= 60; ++i) {
      const double d = 0.015 * i;
      if (d >= 1.0) break;
      const double pe = ks_exact_pvalue(d, n);
      const double pa = ks_asymptotic_pvalue(d, n);
      CHECK(pe <= prev_exact + 1e-15);
      CHECK(pa <= prev_asym + 1e-15);
      prev_exact = pe;
      prev_asym = pa;
    }
  }
}

TEST_CASE("ks_test picks exact only for small tie-free samples") {
  const IGarima d{Theta(1.0)};
  Eigen::ArrayXd clean(20);
  for (int i = 0; i < 20; ++i) clean[i] = 0.15 * (i + 1);
  const KsResult no_ties = ks_test(d, clean);
  CHECK(no_ties.pvalue ==
        doctest::Approx(ks_exact_pvalue(no_ties.statistic, 20)).epsilon(1e-14));

  Eigen::ArrayXd tied = clean;
  tied[5] = tied[4];
  const KsResult with_ties = ks_test(d, tied);
  CHECK(with_ties.pvalue ==
        doctest::Approx(ks_asymptotic_pvalue(with_ties.statistic, 20)).epsilon(1e-14));

  Eigen::ArrayXd large(128);
  for (int i = 0; i < 128; ++i) large[i] = 0.05 * (i + 1);
  const KsResult big = ks_test(d, large);
  CHECK(big.pvalue ==
        doctest::Approx(ks_asymptotic_pvalue(big.statistic, 128)).epsilon(1e-14));
}

TEST_CASE("D is invariant under the probability integral transform") {
  const Dataset data = builtin("insulating_fluid");
  const IGarima d{Theta(0.089)};
  const double direct = ks_statistic(d, data.values());

  // map the sample through the model cdf and compare against Uniform(0,1)
  std::vector<double> u(data.size());
  for (Eigen::Index i = 0; i < data.size(); ++i) u[i] = d.cdf(data.values()[i]);
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double transformed = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    transformed = std::max(transformed,
                           std::max((i + 1) / n - u[i], u[i] - i / n));
  }
  CHECK(direct == doctest::Approx(transformed).epsilon(1e-15));
}

TEST_CASE("model comparison table") {
  const Dataset data = builtin("insulating_fluid");
  const std::vector<Family> fams(all_families().begin(), all_families().end());
  const ComparisonTable table = compare_models(data, fams);
  REQUIRE(table.rows.size() == 7);

  // the i-Garima row wins on both -2LL and K-S
  CHECK(table.rows[0].family == Family::IGarima);
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    CHECK(table.rows[0].neg2_loglik < table.rows[i].neg2_loglik);
    CHECK(table.rows[0].ks_stat < table.rows[i].ks_stat);
  }
  CHECK(table.min_aic == 0);
  CHECK(table.min_bic == 0);
  CHECK(table.min_ks == 0);
  CHECK(std::abs(table.rows[0].neg2_loglik - 140.54) < 0.05);
  CHECK(std::abs(table.rows[0].ks_stat - 0.2770) < 0.001);

  // a single-family request degenerates to fit_mle
  const ComparisonTable one = compare_models(data, {Family::Garima});
  REQUIRE(one.rows.size() == 1);
  const FitResult direct = fit_mle(Family::Garima, data);
  CHECK(one.rows[0].theta_hat == direct.theta_hat);
  CHECK(one.rows[0].neg2_loglik == direct.neg2_loglik);

  CHECK_THROWS_AS(compare_models(data, {}), std::invalid_argument);
}

TEST_CASE("AIC ranking on the bladder-cancer benchmark") {
  const Dataset data = builtin("bladder_cancer");
  const std::vector<Family> fams(all_families().begin(), all_families().end());
  const ComparisonTable table = compare_models(data, fams);
  const auto aic_of = [&](Family f) {
    for (const FitResult& r : table.rows) {
      if (r.family == f) return r.aic;
    }
    FAIL("missing family");
    return 0.0;
  };
  CHECK(aic_of(Family::IGarima) < aic_of(Family::Garima));
  CHECK(aic_of(Family::Garima) < aic_of(Family::Lindley));
  CHECK(aic_of(Family::Lindley) < aic_of(Family::Shanker));
  CHECK(aic_of(Family::Shanker) < aic_of(Family::Aradhana));
  CHECK(aic_of(Family::Aradhana) < aic_of(Family::Sujatha));
  CHECK(aic_of(Family::Sujatha) < aic_of(Family::Akash));
}

TEST_CASE("fit failures become marked rows, not aborts") {
  // the score root sits far below any admissible bracket for data at this
  // scale, so the fit must report failure
  Eigen::ArrayXd huge(2);
  huge << 1e15, 2e15;
  const Dataset data("degenerate", huge);
  CHECK_THROWS_AS(fit_mle(Family::IGarima, data), NumericError);
  CHECK_THROWS_AS(fit_mle(Family::Garima, data), NumericError);
  CHECK_THROWS_AS(fit_mle(Family::Akash, data), NumericError);

  const ComparisonTable table = compare_models(data, {Family::IGarima});
  REQUIRE(table.rows.size() == 1);
  CHECK_FALSE(table.rows[0].converged);
  CHECK_FALSE(table.rows[0].message.empty());
  CHECK(std::isnan(table.rows[0].theta_hat));
  CHECK(table.min_aic == -1);
}
