#pragma once

#include <iosfwd>
#include <string>

#include "vpsdof/analysis.hpp"
#include "vpsdof/simulate.hpp"

namespace vpsdof {

/// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

/// Header "t,u,v,f_s,f_d,E_d" and one row per stored sample.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Header "t,u_a,u_b,v_a,v_b,f_d_a,f_d_b,E_d_a,E_d_b". Throws GridMismatch
/// unless both trajectories share the grid.
void write_comparison_csv(std::ostream& out, const Trajectory& a,
                          const Trajectory& b);

/// Header "dt,e_u,e_v,rms_u,rms_v" followed by '#' lines with the fitted
/// orders.
void write_convergence_csv(std::ostream& out, const ConvergenceReport& report);

}  // namespace vpsdof
