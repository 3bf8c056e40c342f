#include "vpsdof/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "vpsdof/analysis.hpp"
#include "vpsdof/config.hpp"
#include "vpsdof/csv.hpp"
#include "vpsdof/errors.hpp"

namespace vpsdof::cli {

namespace {

constexpr int kFailure = 1;

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write output file '" + path + "'");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error("failed while writing output file '" + path + "'");
}

void print_final(std::ostream& log, const char* tag, const Trajectory& traj) {
  const State& s = traj.states.back();
  log << "# " << tag << "samples = " << traj.size() << '\n'
      << "# " << tag << "final t = " << format_number(s.t)
      << ", u = " << format_number(s.u) << ", v = " << format_number(s.v)
      << ", f_s = " << format_number(s.f_s)
      << ", f_d = " << format_number(s.f_d) << '\n'
      << "# " << tag << "E_d(T) = " << format_number(dissipated_energy_total(traj))
      << '\n';
}

bool same_step(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(a, b);
}

}  // namespace

RunConfig Source::resolve() const {
  if (config_path.has_value() == preset.has_value())
    throw ValidationError("source",
                          "give exactly one of --config and --preset");
  RunConfig c = config_path ? load_config(*config_path)
                            : find_preset(*preset).config;
  if (t_end) c.t_end = *t_end;
  if (dt) c.ip.dt = *dt;
  if (storage_stride) c.storage_stride = *storage_stride;
  c.validate();
  return c;
}

int cmd_run(const Source& source, const std::string& out_path,
            std::ostream& log, std::ostream& err) {
  try {
    const RunConfig config = source.resolve();
    std::ofstream out = open_output(out_path);
    const Trajectory traj = run(config);
    write_trajectory_csv(out, traj);
    finish_output(out, out_path);
    print_final(log, "", traj);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_converge(const Source& source, const std::vector<double>& dts,
                 double dt_ref, const std::string& out_path, std::ostream& log,
                 std::ostream& err) {
  try {
    const RunConfig config = source.resolve();
    if (dts.empty()) throw ValidationError("dts", "needs at least one step");
    std::ofstream out = open_output(out_path);
    const ConvergenceReport report = convergence_study(config, dts, dt_ref);
    write_convergence_csv(out, report);
    finish_output(out, out_path);
    for (const auto& e : report.entries)
      log << "# dt = " << format_number(e.dt)
          << ": e_u = " << format_number(e.e_u)
          << ", e_v = " << format_number(e.e_v) << '\n';
    if (report.has_order) {
      log << "# observed order u = " << format_number(report.observed_order_u)
          << ", v = " << format_number(report.observed_order_v) << '\n'
          << "# per-sample rms order u = " << format_number(report.rms_order_u)
          << ", v = " << format_number(report.rms_order_v) << '\n';
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_compare(const Source& a, const Source& b, const std::string& out_path,
                std::ostream& log, std::ostream& err) {
  try {
    const RunConfig ca = a.resolve();
    const RunConfig cb = b.resolve();
    std::ofstream out = open_output(out_path);

    const double dta = ca.ip.dt * static_cast<double>(ca.storage_stride);
    const double dtb = cb.ip.dt * static_cast<double>(cb.storage_stride);
    Trajectory ta;
    Trajectory tb;
    try {
      if (same_step(dta, dtb)) {
        ta = run(ca);
        tb = run(cb);
      } else if (dta > dtb) {
        ta = run(ca);
        tb = run_on_grid(cb, dta);
      } else {
        ta = run_on_grid(ca, dtb);
        tb = run(cb);
      }
    } catch (const NotCommensurate&) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "grids are not commensurate: a samples every " << dta
          << ", b samples every " << dtb;
      throw GridMismatch(msg.str());
    }

    write_comparison_csv(out, ta, tb);
    finish_output(out, out_path);

    print_final(log, "a: ", ta);
    print_final(log, "b: ", tb);
    double max_fd = 0.0;
    for (std::size_t i = 0; i < ta.size(); ++i)
      max_fd = std::max(max_fd,
                        std::abs(ta.states[i].f_d - tb.states[i].f_d));
    const ErrorReport e = error_norm(ta, tb);
    log << "# max |f_d_a - f_d_b| = " << format_number(max_fd) << '\n'
        << "# e_u = " << format_number(e.e_u)
        << ", e_v = " << format_number(e.e_v) << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_preset_list(std::ostream& log) {
  for (const auto& p : presets()) log << p.name << "\t" << p.description << '\n';
  return 0;
}

int cmd_preset_show(const std::string& name, std::ostream& log,
                    std::ostream& err) {
  try {
    log << render_config(find_preset(name).config);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError("expected a comma-separated list of numbers, got '" +
                       text + "'");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

}  // namespace vpsdof::cli
