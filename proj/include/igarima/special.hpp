// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "igarima/errors.hpp"

namespace igarima::special {

/// Principal real branch of the Lambert W function: the solution w >= -1 of
/// w * exp(w) = z, defined for z >= -1/e.
///
/// Throws std::domain_error outside the branch domain. The result satisfies
/// |w*exp(w) - z| <= 1e-12 * max(1, |z|).
double lambert_w0(double z);

/// Lower real branch of the Lambert W function: the solution w <= -1 of
/// w * exp(w) = z, defined for -1/e <= z < 0.
///
/// Throws std::domain_error outside the branch domain. The result satisfies
/// |w*exp(w) - z| <= 1e-12 * |z|.
double lambert_wm1(double z);

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error bound
  int subdivisions = 0;
  bool converged = false;
};

/// Carries the best available estimate when the error target was not met.
class IntegrationError : public NumericError {
 public:
  IntegrationError(const std::string& what, const IntegralResult& best)
      : NumericError(what), best_(best) {}
  const IntegralResult& best() const noexcept { return best_; }

 private:
  IntegralResult best_;
};

inline constexpr double kDefaultQuadRelTol = 1e-10;
inline constexpr int kDefaultQuadSubdivisions = 4000;

/// Globally adaptive Gauss-Kronrod (7,15) quadrature of f over [a, b].
///
/// b may be +infinity, in which case the integral is mapped onto [0, 1) with
/// x = a + t/(1-t), dx = dt/(1-t)^2 before subdivision. The worst segment is
/// bisected until the summed error estimate drops below
/// rel_tol * |integral| or the subdivision budget runs out.
IntegralResult integrate_result(const std::function<double(double)>& f,
                                double a, double b,
                                double rel_tol = kDefaultQuadRelTol,
                                int max_subdivisions = kDefaultQuadSubdivisions);

/// As integrate_result, but throws IntegrationError (carrying the best
/// estimate and its error bound) when the tolerance cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = kDefaultQuadRelTol,
                 int max_subdivisions = kDefaultQuadSubdivisions);

/// Brent's method for a root of g in [lo, hi]; g(lo) and g(hi) must have
/// opposite signs (a zero-valued endpoint counts). Inverse quadratic /
/// secant steps with a bisection safeguard; cannot leave the bracket.
/// Returns x with final bracket width <= tol + machine slack around x.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol = 1e-12);

/// Brent's derivative-free scalar minimizer on [lo, hi]. Returns the argmin
/// located to an absolute x-tolerance of roughly tol.
double minimize(const std::function<double(double)>& f, double lo, double hi,
                double tol = 1e-10);

}  // namespace igarima::special
