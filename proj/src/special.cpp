// SPDX-License-Identifier: Apache-2.0

#include "igarima/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace igarima::special {

namespace {

constexpr double kInvE = 0.36787944117144232159553;  // 1/e

// Expansion of W about the branch point z = -1/e in p = +-sqrt(2(e*z + 1)):
// positive p gives the principal branch, negative p the lower branch.
double branch_point_series(double p) {
  const double p2 = p * p;
  return -1.0 + p - p2 / 3.0 + (11.0 / 72.0) * p2 * p -
         (43.0 / 540.0) * p2 * p2 + (769.0 / 17280.0) * p2 * p2 * p;
}

// Halley iteration on f(w) = w*exp(w) - z.
double halley(double z, double w) {
  for (int it = 0; it < 80; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w0(double z) {
  if (std::isnan(z)) return z;
  if (z < -kInvE) throw std::domain_error("lambert_w0: z < -1/e");
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return z;

  const double d = z + kInvE;  // distance to the branch point
  if (d <= 0.0) return -1.0;
  const double p = std::sqrt(2.0 * std::exp(1.0) * d);
  if (p < 1e-4) return branch_point_series(p);

  double w;
  if (z < -0.30) {
    w = branch_point_series(p);
  } else if (z < 1.5) {
    w = z / (1.0 + z);  // crude but inside Halley's basin on this range
  } else {
    const double l = std::log(z);
    w = l - std::log(l);
  }
  return halley(z, w);
}

double lambert_wm1(double z) {
  if (!(z < 0.0)) throw std::domain_error("lambert_wm1: z must be negative");
  if (z < -kInvE) {
    if (z >= -kInvE - 4e-17) return -1.0;  // half-ulp below the branch point
    throw std::domain_error("lambert_wm1: z < -1/e");
  }

  const double d = z + kInvE;
  if (d <= 0.0) return -1.0;
  const double p = -std::sqrt(2.0 * std::exp(1.0) * d);
  if (p > -1e-4) return branch_point_series(p);

  if (z <= -0.27) {
    return halley(z, branch_point_series(p));
  }

  // Deeper down the branch, iterate on g(w) = w + log(-w) - log(-z); this
  // form never underflows, no matter how far below -1 the solution lies.
  const double target = std::log(-z);
  double w = target - std::log(-target);
  for (int it = 0; it < 60; ++it) {
    const double g = w + std::log(-w) - target;
    const double step = g / (1.0 + 1.0 / w);
    w -= step;
    if (std::abs(step) <= 1e-16 * std::abs(w)) break;
  }
  return w;
}

namespace {

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkEstimate {
  double integral;
  double error;
};

GkEstimate gauss_kronrod_15(const std::function<double(double)>& f, double a,
                            double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double fv1[7];
  double fv2[7];
  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  double result_abs = std::abs(result_kronrod);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double abscissa = half * kXgk[jtw];
    const double f1 = f(center - abscissa);
    const double f2 = f(center + abscissa);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    result_gauss += kWg[j] * (f1 + f2);
    result_kronrod += kWgk[jtw] * (f1 + f2);
    result_abs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double abscissa = half * kXgk[jtwm1];
    const double f1 = f(center - abscissa);
    const double f2 = f(center + abscissa);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    result_kronrod += kWgk[jtwm1] * (f1 + f2);
    result_abs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }

  const double mean = 0.5 * result_kronrod;
  double result_asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  const double abs_half = std::abs(half);
  result_abs *= abs_half;
  result_asc *= abs_half;
  double err = std::abs((result_kronrod - result_gauss) * half);
  if (result_asc != 0.0 && err != 0.0) {
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (result_abs > uflow / (50.0 * eps)) {
    err = std::max(eps * 50.0 * result_abs, err);
  }
  return {result_kronrod * half, err};
}

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

}  // namespace

IntegralResult integrate_result(const std::function<double(double)>& f,
                                double a, double b, double rel_tol,
                                int max_subdivisions) {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("integrate: rel_tol must be positive");
  if (std::isnan(a) || std::isnan(b) || std::isinf(a)) {
    throw std::invalid_argument("integrate: bad interval");
  }

  std::function<double(double)> g = f;
  double lo = a;
  double hi = b;
  if (std::isinf(b)) {
    // x = a + t/(1-t) maps [0,1) onto [a, inf); t >= 1 contributes nothing
    // for the absolutely integrable f this routine requires.
    g = [f, a](double t) {
      if (t >= 1.0) return 0.0;
      const double om = 1.0 - t;
      return f(a + t / om) / (om * om);
    };
    lo = 0.0;
    hi = 1.0;
  }
  if (!(lo < hi)) throw std::invalid_argument("integrate: requires a < b");

  std::priority_queue<Segment> queue;
  GkEstimate first = gauss_kronrod_15(g, lo, hi);
  queue.push({lo, hi, first.integral, first.error});
  double total_value = first.integral;
  double total_error = first.error;

  IntegralResult out;
  out.subdivisions = 1;
  const double abs_floor = 1e-300;
  while (total_error > std::max(abs_floor, rel_tol * std::abs(total_value))) {
    if (out.subdivisions >= max_subdivisions) {
      out.value = total_value;
      out.error = total_error;
      out.converged = false;
      return out;
    }
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval at machine resolution; accept its estimate as-is
      total_error -= worst.error;
      continue;
    }
    GkEstimate left = gauss_kronrod_15(g, worst.a, mid);
    GkEstimate right = gauss_kronrod_15(g, mid, worst.b);
    total_value += left.integral + right.integral - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.integral, left.error});
    queue.push({mid, worst.b, right.integral, right.error});
    ++out.subdivisions;
  }
  out.value = total_value;
  out.error = total_error;
  out.converged = true;
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_subdivisions) {
  IntegralResult r = integrate_result(f, a, b, rel_tol, max_subdivisions);
  if (!r.converged) {
    throw IntegrationError("integrate: subdivision budget exhausted before "
                           "reaching the requested tolerance", r);
  }
  return r.value;
}

double find_root(const std::function<double(double)>& g, double lo, double hi,
                 double tol) {
  if (!(lo < hi)) throw std::invalid_argument("find_root: requires lo < hi");
  double fa = g(lo);
  double fb = g(hi);
  if (fa == 0.0) return lo;
  if (fb == 0.0) return hi;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw std::invalid_argument("find_root: no sign change over [lo, hi]");
  }

  double a = lo, b = hi;
  double c = a, fc = fa;
  double d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int it = 0; it < 400; ++it) {
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q),
                             std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = g(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  return b;
}

double minimize(const std::function<double(double)>& f, double lo, double hi,
                double tol) {
  if (!(lo < hi)) throw std::invalid_argument("minimize: requires lo < hi");
  const double golden = 0.3819660112501051;
  const double eps = std::sqrt(std::numeric_limits<double>::epsilon());
  double a = lo, b = hi;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = f(x), fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int it = 0; it < 400; ++it) {
    const double m = 0.5 * (a + b);
    const double tol1 = eps * std::abs(x) + tol;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) return x;
    bool golden_step = true;
    if (std::abs(e) > tol1) {
      // parabola through (v, fv), (w, fw), (x, fx)
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double e_old = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = (x < m) ? tol1 : -tol1;
        golden_step = false;
      }
    }
    if (golden_step) {
      e = (x < m) ? b - x : a - x;
      d = golden * e;
    }
    const double u =
        (std::abs(d) >= tol1) ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = f(u);
    if (fu <= fx) {
      if (u < x) b = x; else a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x) a = u; else b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return x;
}

}  // namespace igarima::special
