#include "ecsc/quadrature.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <fmt/core.h>

#include "ecsc/errors.hpp"

namespace ecsc {

void QuadratureSpec::validate() const {
  if (!(r_max > 0.0) || !(tolerance > 0.0) || max_subdivisions <= 0) {
    throw DomainError(fmt::format("invalid quadrature spec (r_max={}, tolerance={}, max_subdivisions={})",
                                  r_max, tolerance, max_subdivisions));
  }
}

namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;  // Simpson estimate over [a, b]
  double tolerance;
};

double simpson(double width, double fa, double fm, double fb) { return width / 6.0 * (fa + 4.0 * fm + fb); }

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tolerance, long max_subdivisions, int initial_panels) {
  if (!(tolerance > 0.0) || initial_panels < 1) throw DomainError("invalid quadrature controls");
  if (a == b) return {};
  if (b < a) {
    auto flipped = integrate_adaptive(f, b, a, tolerance, max_subdivisions, initial_panels);
    flipped.value = -flipped.value;
    return flipped;
  }

  QuadratureResult result;
  std::vector<Panel> stack;
  const double width = (b - a) / initial_panels;
  double left = a;
  double f_left = f(a);
  for (int i = 0; i < initial_panels; ++i) {
    const double right = (i + 1 == initial_panels) ? b : a + (i + 1) * width;
    const double mid = 0.5 * (left + right);
    const double f_mid = f(mid);
    const double f_right = f(right);
    stack.push_back({left, mid, right, f_left, f_mid, f_right, simpson(right - left, f_left, f_mid, f_right),
                     tolerance / initial_panels});
    left = right;
    f_left = f_right;
  }

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double f_lm = f(lm);
    const double f_rm = f(rm);
    const double half = 0.5 * (p.b - p.a);
    const double left_est = simpson(half, p.fa, f_lm, p.fm);
    const double right_est = simpson(half, p.fm, f_rm, p.fb);
    const double delta = left_est + right_est - p.whole;
    const bool resolved = std::abs(delta) <= 15.0 * p.tolerance;
    const bool exhausted = half <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(p.a), std::abs(p.b));
    if (resolved || exhausted) {
      result.value += left_est + right_est + delta / 15.0;
      result.error_estimate += std::abs(delta) / 15.0;
      continue;
    }
    if (++result.subdivisions > max_subdivisions) {
      for (const auto& pending : stack) result.value += pending.whole;
      result.value += p.whole;
      throw QuadratureFailure(
          fmt::format("adaptive Simpson did not converge on [{}, {}] within {} subdivisions (estimate {})", a, b,
                      max_subdivisions, result.value),
          result.value, result.error_estimate + std::abs(delta));
    }
    stack.push_back({p.m, rm, p.b, p.fm, f_rm, p.fb, right_est, 0.5 * p.tolerance});
    stack.push_back({p.a, lm, p.m, p.fa, f_lm, p.fm, left_est, 0.5 * p.tolerance});
  }
  return result;
}

}  // namespace ecsc
