#pragma once

#include <functional>

namespace vpsdof {

struct SolverControls {
  double residual_tol = 1e-12;
  double step_tol = 1e-14;
  int max_iterations = 100;

  /// Throws ValidationError naming "integrator.<field>".
  void validate() const;

  friend bool operator==(const SolverControls&, const SolverControls&) = default;
};

struct RootResult {
  double root = 0.0;
  int iterations = 0;
  bool converged = false;
  double final_residual = 0.0;
};

using ScalarFunction = std::function<double(double)>;

/// Newton iteration from `guess`, safeguarded by bisection on [lo, hi].
///
/// A Newton step is accepted only when it stays strictly inside the current
/// bracket and the derivative is not negligible; otherwise the bracket is
/// bisected. Every iterate lies in the initial [lo, hi]. Stops when
/// |residual| <= residual_tol or the bracket is narrower than step_tol.
///
/// Throws NoBracket if residual(lo) and residual(hi) share a strict sign,
/// NotConverged (with the best iterate) after max_iterations.
RootResult solve_bracketed(const ScalarFunction& residual,
                           const ScalarFunction& derivative, double lo,
                           double hi, double guess,
                           const SolverControls& controls);

}  // namespace vpsdof
