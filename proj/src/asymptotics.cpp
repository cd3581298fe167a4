#include "qgrowth/asymptotics.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace qgrowth {

namespace {

void check_window(size_t size, int k_min, int k_max, int floor) {
  if (k_min < floor || k_max < k_min || static_cast<size_t>(k_max) >= size)
    throw std::invalid_argument("fit window: need " + std::to_string(floor) +
                                " <= k_min <= k_max < " + std::to_string(size));
  if (k_max - k_min < 1) throw std::invalid_argument("fit window: fewer than two points");
}

struct Line {
  double slope;
  double rms;
};

// Least squares y = a + b x over the points (xs[i], ys[i]).
Line least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
  const size_t n = xs.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  double slope = sxy / sxx;
  double ss = 0;
  for (size_t i = 0; i < n; ++i) {
    double e = ys[i] - (my + slope * (xs[i] - mx));
    ss += e * e;
  }
  return {slope, std::sqrt(ss / static_cast<double>(n))};
}

Line semilog_line(const std::vector<double>& logs, int k_min, int k_max) {
  std::vector<double> xs, ys;
  for (int k = k_min; k <= k_max; ++k) {
    xs.push_back(static_cast<double>(k));
    ys.push_back(logs[static_cast<size_t>(k)]);
  }
  return least_squares(xs, ys);
}

Line loglog_line(const std::vector<double>& logs, int k_min, int k_max) {
  std::vector<double> xs, ys;
  for (int k = k_min; k <= k_max; ++k) {
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(logs[static_cast<size_t>(k)]);
  }
  return least_squares(xs, ys);
}

// logs of a positive integer sequence, filled only inside the window.
std::vector<double> window_logs(const std::vector<Int>& seq, int k_min, int k_max) {
  std::vector<double> logs(seq.size(), 0.0);
  for (int k = k_min; k <= k_max; ++k) {
    const Int& v = seq[static_cast<size_t>(k)];
    if (v <= 0) throw std::domain_error("fit: nonpositive entry at k = " + std::to_string(k));
    logs[static_cast<size_t>(k)] = log_int(v);
  }
  return logs;
}

std::vector<double> window_logs(const std::vector<Rat>& seq, int k_min, int k_max) {
  std::vector<double> logs(seq.size(), 0.0);
  for (int k = k_min; k <= k_max; ++k) {
    const Rat& v = seq[static_cast<size_t>(k)];
    if (v <= 0) throw std::domain_error("fit: nonpositive entry at k = " + std::to_string(k));
    logs[static_cast<size_t>(k)] = log_rat(v);
  }
  return logs;
}

// 2 rho_b - rho_{ceil(b/2)} cancels the leading 1/k drift of the ratios
// rho_k = seq_{k+1}/seq_k when seq_k ~ c r^k k^a.
std::optional<double> richardson_at(const std::vector<double>& logs, int k_min, int b) {
  int h = (b + 1) / 2;
  if (h < k_min || h >= b) return std::nullopt;
  double rb = std::exp(logs[static_cast<size_t>(b) + 1] - logs[static_cast<size_t>(b)]);
  double rh = std::exp(logs[static_cast<size_t>(h) + 1] - logs[static_cast<size_t>(h)]);
  return 2.0 * rb - rh;
}

}  // namespace

std::pair<int, int> default_window(int k_lo, int k_hi) {
  if (k_lo < 0 || k_hi < k_lo) throw std::invalid_argument("default_window: bad range");
  int span = k_hi - k_lo + 1;
  return {k_lo + span / 5, k_hi};
}

FitResult fit_polynomial_exponent(const std::vector<double>& log_seq, int k_min, int k_max) {
  check_window(log_seq.size(), k_min, k_max, 1);
  Line line = loglog_line(log_seq, k_min, k_max);
  return {line.slope, k_min, k_max, line.rms, "loglog_slope"};
}

FitResult fit_polynomial_exponent(const std::vector<Int>& seq, int k_min, int k_max) {
  check_window(seq.size(), k_min, k_max, 1);
  return fit_polynomial_exponent(window_logs(seq, k_min, k_max), k_min, k_max);
}

FitResult fit_polynomial_exponent(const std::vector<Rat>& seq, int k_min, int k_max) {
  check_window(seq.size(), k_min, k_max, 1);
  return fit_polynomial_exponent(window_logs(seq, k_min, k_max), k_min, k_max);
}

FitResult fit_exponential_ratio(const std::vector<double>& log_seq, int k_min, int k_max) {
  check_window(log_seq.size(), k_min, k_max, 0);
  Line full = semilog_line(log_seq, k_min, k_max);
  int mid = (k_min + k_max) / 2;
  Line upper = (k_max - mid >= 1) ? semilog_line(log_seq, mid, k_max) : full;
  double r_semi = std::exp(full.slope);
  double u_semi = std::abs(r_semi - std::exp(upper.slope));

  auto r0 = richardson_at(log_seq, k_min, k_max - 1);
  auto r1 = richardson_at(log_seq, k_min, k_max - 2);
  auto r2 = richardson_at(log_seq, k_min, k_max - 3);
  if (r0 && r1 && r2) {
    double u_rich = std::max(std::abs(*r0 - *r1), std::abs(*r0 - *r2));
    // Prefer the ratio method on a tie, including the both-at-roundoff case.
    if (u_rich <= u_semi || u_rich <= 1e-12 * std::abs(*r0))
      return {*r0, k_min, k_max, u_rich, "ratio_richardson"};
  }
  return {r_semi, k_min, k_max, u_semi, "semilog_slope"};
}

FitResult fit_exponential_ratio(const std::vector<Int>& seq, int k_min, int k_max) {
  check_window(seq.size(), k_min, k_max, 0);
  return fit_exponential_ratio(window_logs(seq, k_min, k_max), k_min, k_max);
}

Regime classify_regime(const std::vector<double>& log_seq, int k_min, int k_max) {
  check_window(log_seq.size(), k_min, k_max, 1);
  double poly_rms = loglog_line(log_seq, k_min, k_max).rms;
  double exp_rms = semilog_line(log_seq, k_min, k_max).rms;
  return poly_rms <= exp_rms ? Regime::polynomial : Regime::exponential;
}

Regime classify_regime(const std::vector<Int>& seq, int k_min, int k_max) {
  check_window(seq.size(), k_min, k_max, 1);
  return classify_regime(window_logs(seq, k_min, k_max), k_min, k_max);
}

double eval_poly(const std::vector<double>& poly, double x) {
  double acc = 0.0;
  for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

PolyRoot root_qn(int n) {
  if (n <= 4)
    throw std::invalid_argument("root_qn: needs n >= 5 (the root degenerates to 1 at n = 4)");
  double m = static_cast<double>(n) - 2.0;
  double v = (m + std::sqrt(m * m - 4.0)) / 2.0;
  return {v, {1.0, -m, 1.0}};
}

PolyRoot root_rn(int n) {
  if (n < 2) throw std::invalid_argument("root_rn: needs n >= 2");
  double nn = static_cast<double>(n) * n;
  std::vector<double> poly = {-2.0, 2.0 * (nn - 1.0), -(2.0 * nn - 1.0), 1.0};
  double lo = 1.0, hi = 2.0 * nn;
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    double mid = 0.5 * (lo + hi);
    (eval_poly(poly, mid) < 0 ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), poly};
}

ConjectureReport conjecture_report(const FitResult& growth_fit, const FitResult& walk_fit,
                                   double tolerance) {
  ConjectureReport rep;
  rep.d_growth = growth_fit.estimate;
  rep.minus_two_walk_slope = -2.0 * walk_fit.estimate;
  rep.difference = rep.d_growth - rep.minus_two_walk_slope;
  rep.tolerance = tolerance;
  rep.applicable =
      growth_fit.method == "loglog_slope" && walk_fit.method == "loglog_slope";
  rep.pass = rep.applicable && std::abs(rep.difference) < tolerance;
  rep.verdict = rep.applicable ? (rep.pass ? "pass" : "fail") : "outside polynomial regime";
  return rep;
}

}  // namespace qgrowth
