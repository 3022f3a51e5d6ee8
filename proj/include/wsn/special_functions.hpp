#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace wsn {

/// Controls the adaptive quadrature routines. Tolerances must be positive
/// and max_subdivisions >= 1; integrate() rejects anything else.
struct QuadratureSpec {
    double relative_tolerance = 1e-10;
    double absolute_tolerance = 1e-14;
    int max_subdivisions = 2000;
};

/// Thrown when an iterative routine cannot reach the requested accuracy.
/// Carries the best estimate obtained so far and a bound on its error.
class accuracy_error : public std::runtime_error {
  public:
    accuracy_error(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

  private:
    double best_estimate_;
    double error_bound_;
};

/// ln Gamma(a) for a > 0 (Lanczos approximation, reflection below 0.5).
double log_gamma(double a);

/// Regularized lower incomplete gamma P(a,x) = gamma(a,x)/Gamma(a).
/// Series expansion for x < a+1, continued fraction otherwise.
/// Requires a > 0, x >= 0; result lies in [0,1].
double reg_lower_inc_gamma(double a, double x);

/// Regularized incomplete beta I_x(a,b), the Beta(a,b) CDF at x.
/// Continued fraction with the reflection I_x(a,b) = 1 - I_{1-x}(b,a)
/// applied for x above (a+1)/(a+b+2). Requires 0 <= x <= 1, a,b > 0.
double reg_inc_beta(double x, double a, double b);

/// Adaptive Gauss-Kronrod (7-15) integration of f over the finite
/// interval [lo, hi]. Throws accuracy_error when the subdivision budget
/// is exhausted before the tolerances are met.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureSpec& spec = {});

/// Integral of f over (0, inf) via the substitution x = t/(1-t), which
/// maps the half-line onto (0,1), followed by adaptive integration.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSpec& spec = {});

}  // namespace wsn
