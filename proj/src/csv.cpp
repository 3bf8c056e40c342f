#include "vpsdof/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "vpsdof/errors.hpp"

namespace vpsdof {

std::string format_number(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,u,v,f_s,f_d,E_d\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const State& s = traj.states[i];
    out << format_number(s.t) << ',' << format_number(s.u) << ','
        << format_number(s.v) << ',' << format_number(s.f_s) << ','
        << format_number(s.f_d) << ',' << format_number(traj.dissipated[i])
        << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const Trajectory& a,
                          const Trajectory& b) {
  const bool same_dt = std::abs(a.dt - b.dt) <= 1e-9 * std::max(a.dt, b.dt);
  if (a.size() != b.size() || !same_dt) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "cannot pair a grid of " << a.size() << " samples at dt " << a.dt
        << " with " << b.size() << " samples at dt " << b.dt;
    throw GridMismatch(msg.str());
  }
  out << "t,u_a,u_b,v_a,v_b,f_d_a,f_d_b,E_d_a,E_d_b\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    const State& x = a.states[i];
    const State& y = b.states[i];
    out << format_number(x.t) << ',' << format_number(x.u) << ','
        << format_number(y.u) << ',' << format_number(x.v) << ','
        << format_number(y.v) << ',' << format_number(x.f_d) << ','
        << format_number(y.f_d) << ',' << format_number(a.dissipated[i])
        << ',' << format_number(b.dissipated[i]) << '\n';
  }
}

void write_convergence_csv(std::ostream& out,
                           const ConvergenceReport& report) {
  out << "dt,e_u,e_v,rms_u,rms_v\n";
  for (const auto& e : report.entries) {
    out << format_number(e.dt) << ',' << format_number(e.e_u) << ','
        << format_number(e.e_v) << ',' << format_number(e.rms_u) << ','
        << format_number(e.rms_v) << '\n';
  }
  if (report.has_order) {
    out << "# observed_order_u," << format_number(report.observed_order_u)
        << '\n'
        << "# observed_order_v," << format_number(report.observed_order_v)
        << '\n'
        << "# rms_order_u," << format_number(report.rms_order_u) << '\n'
        << "# rms_order_v," << format_number(report.rms_order_v) << '\n';
  }
}

}  // namespace vpsdof
