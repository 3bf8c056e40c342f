// Acceptance suite. Prints one PASS/FAIL line per criterion followed by the
// measured quantities, and exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vpsdof/analysis.hpp"
#include "vpsdof/config.hpp"
#include "vpsdof/integrator.hpp"
#include "vpsdof/simulate.hpp"

using namespace vpsdof;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "  violated: " << what << '\n';
    }
  }
};

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

const DampedSineForcing paper_force{2.0, 2.0 * std::numbers::pi, -0.2};

RunConfig problem(double stiffness, double exponent, double dt, double alpha,
                  double beta, double t_end) {
  RunConfig c;
  c.sys = {1.0, stiffness};
  c.dp = {1.0, exponent, 1.0};
  c.ip.dt = dt;
  c.ip.alpha = alpha;
  c.ip.beta = beta;
  c.forcing = paper_force;
  c.t_end = t_end;
  return c;
}

RunConfig bingham(double dt, double alpha, double beta) {
  return problem(100.0, 1.0, dt, alpha, beta, 5.0);
}

RunConfig norton(double dt, double alpha, double beta) {
  return problem(10.0, 3.0, dt, alpha, beta, 5.0);
}

double max_abs_u(const Trajectory& t) {
  double m = 0.0;
  for (const auto& s : t.states) m = std::max(m, std::abs(s.u));
  return m;
}

bool dissipation_nondecreasing(const Trajectory& t) {
  if (t.dissipated.empty() || t.dissipated.front() != 0.0) return false;
  for (std::size_t i = 1; i < t.dissipated.size(); ++i)
    if (t.dissipated[i] < t.dissipated[i - 1]) return false;
  return true;
}

// Every trajectory produced by the suite, for the monotone-dissipation check.
std::vector<const Trajectory*> all_runs;
std::deque<Trajectory> keep_alive;

const Trajectory& keep(Trajectory t) {
  keep_alive.push_back(std::move(t));
  all_runs.push_back(&keep_alive.back());
  return keep_alive.back();
}

Outcome single_step_oracle() {
  Outcome o;
  const SystemParams sys{1.0, 100.0};
  const DashpotParams dp{1.0, 1.0, 1.0};
  IntegratorParams ip;
  ip.dt = 0.01;
  ip.alpha = 1.0;
  ip.beta = 1.0;
  const StepResult r = step(sys, dp, ip, State{}, 0.0, 2.0);
  const double e_fd = rel_diff(r.state.f_d, 103.0 / 102.0);
  const double e_v = rel_diff(r.state.v, 1.0 / 102.0);
  o.detail << "  f_d = " << r.state.f_d << " (rel err " << e_fd
           << "), v = " << r.state.v << " (rel err " << e_v << ")\n";
  o.require(e_fd <= 1e-14, "f_d within 1e-14 of 103/102");
  o.require(e_v <= 1e-14, "v within 1e-14 of 1/102");
  return o;
}

// Presets re-run at dt = 1e-4 over [0, 5].
std::vector<std::pair<std::string, RunConfig>> preset_runs() {
  std::vector<std::pair<std::string, RunConfig>> out;
  for (const auto& p : presets()) {
    RunConfig c = p.config;
    c.ip.dt = 1e-4;
    c.t_end = 5.0;
    out.emplace_back(p.name, c);
  }
  return out;
}

Outcome residual_suite() {
  Outcome o;
  double worst = 0.0;
  for (const auto& [name, c] : preset_runs()) {
    const Trajectory& t = keep(run(c));
    double worst_here = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      const StepResiduals r = discrete_residuals(
          c.sys, c.dp, c.ip, t.states[i], t.states[i + 1],
          eval_forcing(c.forcing, t.states[i].t),
          eval_forcing(c.forcing, t.states[i + 1].t));
      worst_here = std::max({worst_here, std::abs(r.momentum),
                             std::abs(r.spring), std::abs(r.constitutive)});
    }
    o.detail << "  " << name << ": max scaled residual " << worst_here << '\n';
    worst = std::max(worst, worst_here);
  }
  o.require(worst <= 1e-10, "all scaled residuals <= 1e-10");
  return o;
}

Outcome sign_and_sandwich() {
  Outcome o;
  long sign_violations = 0;
  long sandwich_violations = 0;
  long yielded_steps = 0;
  for (const auto& [name, c] : preset_runs()) {
    const Trajectory t = run(c);
    const double fy = c.dp.yield_force;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      const StepDiagnostics& d = t.diagnostics[i];
      const State& s = t.states[i + 1];
      const double f_hat = d.predictor;
      const double expected = std::abs(f_hat) > fy ? sign(f_hat) : 0.0;
      if (sign(s.v) != expected) ++sign_violations;
      if (std::abs(f_hat) > fy) {
        ++yielded_steps;
        if (!(std::abs(s.f_d) >= fy && std::abs(s.f_d) <= std::abs(f_hat)))
          ++sandwich_violations;
      }
    }
  }
  o.detail << "  yielded steps checked " << yielded_steps
           << ", sign violations " << sign_violations
           << ", sandwich violations " << sandwich_violations << '\n';
  o.require(yielded_steps > 0, "at least one yielded step");
  o.require(sign_violations == 0, "sign(v) = sign(f_hat)");
  o.require(sandwich_violations == 0, "f_y <= |f_d| <= |f_hat|");
  return o;
}

Outcome linear_path_equivalence() {
  Outcome o;
  std::mt19937_64 gen(7);
  auto uniform = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  };
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const SystemParams sys{uniform(0.1, 10.0), uniform(1.0, 1000.0)};
    const DashpotParams dp{uniform(0.1, 10.0), 1.0, uniform(0.0, 5.0)};
    IntegratorParams ip;
    ip.dt = std::pow(10.0, uniform(-7.0, -2.0));
    ip.alpha = uniform(0.01, 1.0);
    ip.beta = uniform(0.0, 1.0);
    const double f_hat = (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) *
                         (dp.yield_force + std::pow(10.0, uniform(-8.0, 2.0)));
    const double closed = solve_dashpot_linear(sys, dp, ip, f_hat);
    const double iterative = solve_dashpot_nonlinear(sys, dp, ip, f_hat).force;
    worst = std::max(worst, rel_diff(closed, iterative));
  }
  o.detail << "  max relative difference over 10^4 states: " << worst << '\n';
  o.require(worst <= 1e-10, "closed form and iterative solve within 1e-10");
  return o;
}

Outcome convergence_orders() {
  Outcome o;
  const std::vector<double> dts = {1e-3, 5e-4, 2.5e-4};
  const struct {
    const char* label;
    double alpha, beta;
  } cases[] = {{"alpha=1 beta=1", 1.0, 1.0},
               {"alpha=1 beta=1/2", 1.0, 0.5},
               {"alpha=1 beta=0 (imex)", 1.0, 0.0}};
  for (const auto& c : cases) {
    const ConvergenceReport r =
        convergence_study(bingham(1e-3, c.alpha, c.beta), dts, 1e-5);
    o.detail << "  " << c.label << ": order e_u " << r.observed_order_u
             << ", e_v " << r.observed_order_v << "  [per-sample rms: u "
             << r.rms_order_u << ", v " << r.rms_order_v << "]\n";
    for (const auto& e : r.entries)
      o.detail << "      dt " << e.dt << ": e_u " << e.e_u << ", e_v " << e.e_v
               << '\n';
    const auto in_band = [](double x) { return x >= 0.8 && x <= 1.2; };
    o.require(in_band(r.observed_order_u),
              std::string(c.label) + ": order of e_u in [0.8, 1.2]");
    o.require(in_band(r.observed_order_v),
              std::string(c.label) + ": order of e_v in [0.8, 1.2]");
  }
  return o;
}

Outcome half_alpha_damping() {
  Outcome o;
  const double dt_ref = 1e-5;
  const RunConfig coarse_grid = bingham(1e-4, 1.0, 1.0);
  const Trajectory& bench = keep(run_benchmark(coarse_grid, dt_ref));
  const Trajectory& bench_fine = keep(run(bingham(dt_ref, 1.0, 1.0)));
  const double e_bench = dissipated_energy_total(bench);
  o.detail << "  benchmark E_d(T) = " << e_bench << '\n';

  const struct {
    const char* label;
    double alpha, beta;
  } cases[] = {{"case 2 (alpha=1/2 beta=1)", 0.5, 1.0},
               {"case 3 (alpha=1/2 beta=1/2)", 0.5, 0.5}};
  for (const auto& c : cases) {
    const Trajectory& t4 = keep(run(bingham(1e-4, c.alpha, c.beta)));
    const Trajectory& t5 = keep(run(bingham(1e-5, c.alpha, c.beta)));
    const double ed = dissipated_energy_total(t4);
    const double ev4 = error_norm(t4, bench).e_v;
    const double ev5 = error_norm(t5, bench_fine).e_v;
    const double ratio = std::max(ev4, ev5) / std::min(ev4, ev5);
    o.detail << "  " << c.label << ": E_d(T) = " << ed << " ("
             << 100.0 * ed / e_bench << "% of benchmark); e_v(1e-4) = " << ev4
             << ", e_v(1e-5) = " << ev5 << ", ratio " << ratio << '\n';
    o.require(ed < 0.05 * e_bench,
              std::string(c.label) + ": E_d(T) below 5% of benchmark");
    o.require(ratio < 2.0,
              std::string(c.label) + ": e_v changes by less than 2x");
  }
  return o;
}

Outcome norton_reproduction() {
  Outcome o;
  const double dt = 1e-5;
  const Trajectory& ref = keep(run(norton(dt, 1.0, 1.0)));
  const double ref_max_u = max_abs_u(ref);
  o.detail << "  reference max|u| = " << ref_max_u
           << ", E_d(T) = " << dissipated_energy_total(ref) << '\n';

  const Trajectory& c1 = keep(run(norton(dt, 1.0, 0.5)));
  const ErrorReport e1 = error_norm(c1, ref);
  o.detail << "  case 1: e_u " << e1.e_u << ", e_v " << e1.e_v << '\n';

  const struct {
    const char* label;
    double alpha, beta;
  } cases[] = {{"case 2", 0.5, 1.0}, {"case 3", 0.5, 0.5}};
  for (const auto& c : cases) {
    const Trajectory& t = keep(run(norton(dt, c.alpha, c.beta)));
    const ErrorReport e = error_norm(t, ref);
    const double mu = max_abs_u(t);
    o.detail << "  " << c.label << ": e_u " << e.e_u << ", e_v " << e.e_v
             << ", max|u| " << mu << " (" << 100.0 * mu / ref_max_u
             << "% of reference), E_d(T) " << dissipated_energy_total(t)
             << '\n';
    o.require(10.0 * e1.e_u <= e.e_u,
              std::string("case 1 e_u at least 10x below ") + c.label);
    o.require(10.0 * e1.e_v <= e.e_v,
              std::string("case 1 e_v at least 10x below ") + c.label);
    o.require(mu < 0.01 * ref_max_u,
              std::string(c.label) + ": max|u| below 1% of reference");
  }
  return o;
}

Outcome energy_properties() {
  Outcome o;
  const struct {
    const char* label;
    double alpha, beta;
  } cases[] = {{"alpha=1 beta=1", 1.0, 1.0}, {"alpha=1 beta=1/2", 1.0, 0.5}};
  for (const auto& c : cases) {
    RunConfig free = bingham(1e-3, c.alpha, c.beta);
    free.forcing = ZeroForcing{};
    free.u0 = 0.05;
    free.v0 = 0.0;
    const Trajectory& coarse = keep(run(free));
    free.ip.dt = 5e-4;
    const Trajectory& fine = keep(run(free));
    const double r1 = energy_balance_residual(coarse, free.forcing, free.sys);
    const double r2 = energy_balance_residual(fine, free.forcing, free.sys);
    o.detail << "  free vibration " << c.label << ": residual " << r1 << " -> "
             << r2 << ", ratio " << r1 / r2 << '\n';
    o.require(r1 / r2 >= 1.5 && r1 / r2 <= 2.5,
              std::string(c.label) + ": residual ratio in [1.5, 2.5]");
  }

  std::size_t checked = 0;
  for (const Trajectory* t : all_runs) {
    ++checked;
    o.require(dissipation_nondecreasing(*t), "E_d nondecreasing on every run");
  }
  o.detail << "  E_d monotone on " << checked << " runs\n";
  return o;
}

Outcome stick_regime() {
  Outcome o;
  long moved = 0;
  std::size_t runs = 0;
  for (auto [name, c] : preset_runs()) {
    c.forcing = ConstantForcing{0.5};
    const Trajectory& t = keep(run(c));
    ++runs;
    for (const auto& s : t.states)
      if (s.v != 0.0 || s.u != 0.0) ++moved;
  }
  o.detail << "  " << runs << " runs, samples with v or u nonzero: " << moved
           << '\n';
  o.require(moved == 0, "v and u identically zero");
  return o;
}

}  // namespace

int main() {
  const struct {
    const char* id;
    const char* title;
    std::function<Outcome()> check;
  } criteria[] = {
      {"AC1", "single-step oracle", single_step_oracle},
      {"AC2", "discrete residuals over preset runs", residual_suite},
      {"AC3", "sign and sandwich invariants", sign_and_sandwich},
      {"AC4", "N=1 closed form vs iterative solve", linear_path_equivalence},
      {"AC5", "first-order convergence (alpha=1)", convergence_orders},
      {"AC6", "alpha=1/2 damping pathology, N=1", half_alpha_damping},
      {"AC7", "Norton N=3 qualitative reproduction", norton_reproduction},
      {"AC8", "energy properties", energy_properties},
      {"AC9", "stick regime under sub-yield forcing", stick_regime},
  };

  // The energy check inspects every stored run, so it is evaluated last.
  const std::size_t n = std::size(criteria);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (std::string(criteria[i].id) != "AC8") order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (std::string(criteria[i].id) == "AC8") order.push_back(i);

  std::vector<Outcome> outcomes(n);
  for (std::size_t i : order) {
    try {
      outcomes[i] = criteria[i].check();
    } catch (const std::exception& e) {
      outcomes[i].pass = false;
      outcomes[i].detail << "  exception: " << e.what() << '\n';
    }
  }

  int failed = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Outcome& o = outcomes[i];
    if (!o.pass) ++failed;
    std::printf("[%s] %s %s\n%s", o.pass ? "PASS" : "FAIL", criteria[i].id,
                criteria[i].title, o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
