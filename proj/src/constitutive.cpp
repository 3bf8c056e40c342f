#include "vpsdof/constitutive.hpp"

#include <cmath>

#include "vpsdof/errors.hpp"

namespace vpsdof {

void DashpotParams::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ValidationError("dashpot.gamma", "must be positive and finite");
  if (!(exponent >= 1.0) || !std::isfinite(exponent))
    throw ValidationError("dashpot.exponent", "must be >= 1");
  if (!(yield_force >= 0.0) || !std::isfinite(yield_force))
    throw ValidationError("dashpot.yield_force", "must be nonnegative");
}

void SystemParams::validate() const {
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw ValidationError("system.mass", "must be positive and finite");
  if (!(stiffness > 0.0) || !std::isfinite(stiffness))
    throw ValidationError("system.stiffness", "must be positive and finite");
}

namespace {

// (x)^N for x >= 0, exact for the integral exponents used in practice.
double power(double x, double n) {
  if (n == 1.0) return x;
  if (n == 2.0) return x * x;
  if (n == 3.0) return x * x * x;
  return std::pow(x, n);
}

}  // namespace

double flow_rate(const DashpotParams& p, double excess) {
  return p.gamma * power(excess, p.exponent);
}

double flow_rate_derivative(const DashpotParams& p, double excess) {
  if (p.exponent == 1.0) return p.gamma;
  if (excess == 0.0) return 0.0;
  return p.gamma * p.exponent * power(excess, p.exponent - 1.0);
}

double phi(const DashpotParams& p, double f) {
  const double excess = std::abs(f) - p.yield_force;
  if (excess <= 0.0) return 0.0;
  return flow_rate(p, excess) * sign(f);
}

double phi_derivative(const DashpotParams& p, double f) {
  const double excess = std::abs(f) - p.yield_force;
  if (excess < 0.0) return 0.0;
  return flow_rate_derivative(p, excess);
}

double invert_phi(const DashpotParams& p, double v) {
  if (v == 0.0) return 0.0;
  const double ratio = std::abs(v) / p.gamma;
  double excess = ratio;
  if (p.exponent == 3.0)
    excess = std::cbrt(ratio);
  else if (p.exponent != 1.0)
    excess = std::pow(ratio, 1.0 / p.exponent);
  return (p.yield_force + excess) * sign(v);
}

}  // namespace vpsdof
