#pragma once

// Bingham/Norton dashpot: velocity as a (nonsmooth, monotone) function of
// the dashpot force.
//
//   phi(f) = 0                                  |f| <= f_y
//   phi(f) = gamma (|f| - f_y)^N sign(f)        |f| >  f_y

namespace vpsdof {

struct DashpotParams {
  double gamma = 1.0;        // flow coefficient, velocity per force^N
  double exponent = 1.0;     // N >= 1
  double yield_force = 0.0;  // f_y >= 0

  /// Throws ValidationError naming "dashpot.<field>".
  void validate() const;

  friend bool operator==(const DashpotParams&, const DashpotParams&) = default;
};

struct SystemParams {
  double mass = 1.0;
  double stiffness = 1.0;

  /// Throws ValidationError naming "system.<field>".
  void validate() const;

  friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// sign(0) == 0.
constexpr double sign(double x) noexcept {
  return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
}

/// gamma * excess^N for a plastic excess |f| - f_y >= 0.
double flow_rate(const DashpotParams& p, double excess);

/// d(flow_rate)/d(excess); the right-hand limit at zero.
double flow_rate_derivative(const DashpotParams& p, double excess);

/// Velocity produced by the dashpot under force `f`.
double phi(const DashpotParams& p, double f);

/// d(phi)/df. At |f| == f_y the plastic-branch limit is returned
/// (gamma for N = 1, zero for N > 1).
double phi_derivative(const DashpotParams& p, double f);

/// Force that produces velocity `v`. For v == 0 any |f| <= f_y qualifies;
/// zero is returned.
double invert_phi(const DashpotParams& p, double v);

}  // namespace vpsdof
