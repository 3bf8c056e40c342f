#include "vpsdof/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "vpsdof/errors.hpp"

namespace vpsdof {

void SolverControls::validate() const {
  if (!(residual_tol > 0.0))
    throw ValidationError("integrator.residual_tol", "must be positive");
  if (!(step_tol > 0.0))
    throw ValidationError("integrator.step_tol", "must be positive");
  if (max_iterations < 1)
    throw ValidationError("integrator.max_iterations", "must be >= 1");
}

RootResult solve_bracketed(const ScalarFunction& residual,
                           const ScalarFunction& derivative, double lo,
                           double hi, double guess,
                           const SolverControls& controls) {
  if (lo > hi) std::swap(lo, hi);
  const double r_lo = residual(lo);
  const double r_hi = residual(hi);
  if (r_lo * r_hi > 0.0 || std::isnan(r_lo) || std::isnan(r_hi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "residual has the same sign at both ends of [" << lo << ", " << hi
        << "]: " << r_lo << ", " << r_hi;
    throw NoBracket(msg.str());
  }
  if (r_lo == 0.0) return {lo, 0, true, 0.0};
  if (r_hi == 0.0) return {hi, 0, true, 0.0};

  // Orientation: the residual is negative at `neg` and positive at `pos`.
  double neg = r_lo < 0.0 ? lo : hi;
  double pos = r_lo < 0.0 ? hi : lo;

  double x = std::clamp(guess, lo, hi);
  double r = residual(x);
  double best = x;
  double best_r = r;
  constexpr double tiny = 64.0 * std::numeric_limits<double>::min();

  for (int it = 0;; ++it) {
    if (std::abs(r) < std::abs(best_r)) {
      best = x;
      best_r = r;
    }
    if (std::abs(r) <= controls.residual_tol) return {x, it, true, r};
    if (r < 0.0)
      neg = x;
    else
      pos = x;
    if (std::abs(pos - neg) <= controls.step_tol) return {x, it, true, r};
    if (it == controls.max_iterations) break;

    const double a = std::min(neg, pos);
    const double b = std::max(neg, pos);
    const double d = derivative(x);
    double next = 0.5 * (a + b);
    if (std::abs(d) > tiny) {
      const double newton = x - r / d;
      if (newton > a && newton < b) next = newton;
    }
    x = next;
    r = residual(x);
  }

  std::ostringstream msg;
  msg.precision(17);
  msg << "no convergence after " << controls.max_iterations
      << " iterations; best iterate " << best << " with residual " << best_r;
  throw NotConverged(msg.str(), best, best_r);
}

}  // namespace vpsdof
