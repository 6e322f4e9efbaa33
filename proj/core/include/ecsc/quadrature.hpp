#pragma once

#include <functional>

namespace ecsc {

/// Domain truncation and error control for the correction integrals.
struct QuadratureSpec {
  double r_max = 60.0;
  double tolerance = 1e-13;  ///< absolute, summed over all panels
  long max_subdivisions = 1L << 20;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long subdivisions = 0;
};

/// Adaptive composite Simpson rule with interval bisection and Richardson
/// correction. The range is first cut into `initial_panels` equal panels so
/// that narrow features inside a long range are not skipped.
///
/// Throws QuadratureFailure (carrying the partial estimate) when more than
/// max_subdivisions bisections would be needed.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tolerance, long max_subdivisions, int initial_panels = 32);

inline QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                           const QuadratureSpec& spec) {
  spec.validate();
  return integrate_adaptive(f, a, b, spec.tolerance, spec.max_subdivisions);
}

}  // namespace ecsc
