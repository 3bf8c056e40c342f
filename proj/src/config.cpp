#include "vpsdof/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "vpsdof/csv.hpp"
#include "vpsdof/errors.hpp"

namespace vpsdof {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"system", {"mass", "stiffness"}},
      {"dashpot", {"gamma", "exponent", "yield_force"}},
      {"integrator",
       {"dt", "alpha", "beta", "residual_tol", "step_tol", "max_iterations"}},
      {"forcing", {"type", "amplitude", "angular_frequency", "decay_rate"}},
      {"run", {"t_end", "u0", "v0", "storage_stride"}},
  };
  return keys;
}

class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  bool has(const std::string& key) const {
    return tree_.get_child_optional(pt::ptree::path_type(key, '.'))
        .has_value();
  }

  std::string text(const std::string& key) const {
    auto node = tree_.get_child_optional(pt::ptree::path_type(key, '.'));
    if (!node) throw ParseError(key + ": missing required key");
    return node->data();
  }

  double number(const std::string& key) const {
    const std::string s = text(key);
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      throw ParseError(key + ": expected a number, got '" + s + "'");
    return value;
  }

  double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  long long integer(const std::string& key, long long fallback) const {
    if (!has(key)) return fallback;
    const std::string s = text(key);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw ParseError(key + ": expected an integer, got '" + s + "'");
    return value;
  }

 private:
  const pt::ptree& tree_;
};

void check_keys(const pt::ptree& tree) {
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (body.empty()) {
      throw ParseError("'" + section + "' must appear inside a section");
    }
    if (it == schema().end())
      throw ParseError("unknown section [" + section + "]");
    for (const auto& [key, value] : body) {
      if (!it->second.contains(key))
        throw ParseError("unknown key '" + section + "." + key + "'");
    }
  }
}

ForcingSpec read_forcing(const Reader& in) {
  const std::string type = in.has("forcing.type") ? in.text("forcing.type")
                                                  : std::string("zero");
  const auto reject = [&](const char* key) {
    if (in.has(key))
      throw ParseError(std::string(key) + ": not used by forcing type '" +
                       type + "'");
  };
  if (type == "zero") {
    reject("forcing.amplitude");
    reject("forcing.angular_frequency");
    reject("forcing.decay_rate");
    return ZeroForcing{};
  }
  if (type == "constant") {
    reject("forcing.angular_frequency");
    reject("forcing.decay_rate");
    return ConstantForcing{in.number("forcing.amplitude")};
  }
  if (type == "damped_sine") {
    return DampedSineForcing{in.number("forcing.amplitude"),
                             in.number("forcing.angular_frequency"),
                             in.number("forcing.decay_rate")};
  }
  throw ParseError("forcing.type: unknown forcing type '" + type +
                   "' (expected zero, constant or damped_sine)");
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  pt::ptree tree;
  std::istringstream stream{std::string(text)};
  try {
    pt::read_ini(stream, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.what());
  }
  check_keys(tree);
  const Reader in(tree);

  RunConfig c;
  c.sys.mass = in.number("system.mass");
  c.sys.stiffness = in.number("system.stiffness");
  c.dp.gamma = in.number("dashpot.gamma");
  c.dp.exponent = in.number("dashpot.exponent");
  c.dp.yield_force = in.number("dashpot.yield_force");
  c.ip.dt = in.number("integrator.dt");
  c.ip.alpha = in.number("integrator.alpha");
  c.ip.beta = in.number("integrator.beta");
  c.ip.controls.residual_tol =
      in.number("integrator.residual_tol", c.ip.controls.residual_tol);
  c.ip.controls.step_tol =
      in.number("integrator.step_tol", c.ip.controls.step_tol);
  const long long max_it =
      in.integer("integrator.max_iterations", c.ip.controls.max_iterations);
  if (max_it < 1 || max_it > 1'000'000)
    throw ValidationError("integrator.max_iterations",
                          "must lie in [1, 1000000]");
  c.ip.controls.max_iterations = static_cast<int>(max_it);
  c.forcing = read_forcing(in);
  c.t_end = in.number("run.t_end", c.t_end);
  c.u0 = in.number("run.u0", 0.0);
  c.v0 = in.number("run.v0", 0.0);
  const long long stride = in.integer("run.storage_stride", 1);
  if (stride < 1)
    throw ValidationError("run.storage_stride", "must be >= 1");
  c.storage_stride = static_cast<std::size_t>(stride);

  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string render_config(const RunConfig& c) {
  std::ostringstream out;
  const auto line = [&](const char* key, double value) {
    out << key << " = " << format_number(value) << '\n';
  };
  out << "[system]\n";
  line("mass", c.sys.mass);
  line("stiffness", c.sys.stiffness);
  out << "\n[dashpot]\n";
  line("gamma", c.dp.gamma);
  line("exponent", c.dp.exponent);
  line("yield_force", c.dp.yield_force);
  out << "\n[integrator]\n";
  line("dt", c.ip.dt);
  line("alpha", c.ip.alpha);
  line("beta", c.ip.beta);
  line("residual_tol", c.ip.controls.residual_tol);
  line("step_tol", c.ip.controls.step_tol);
  out << "max_iterations = " << c.ip.controls.max_iterations << '\n';
  out << "\n[forcing]\n";
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, ZeroForcing>) {
          out << "type = zero\n";
        } else if constexpr (std::is_same_v<F, ConstantForcing>) {
          out << "type = constant\n";
          line("amplitude", f.amplitude);
        } else {
          out << "type = damped_sine\n";
          line("amplitude", f.amplitude);
          line("angular_frequency", f.angular_frequency);
          line("decay_rate", f.decay_rate);
        }
      },
      c.forcing);
  out << "\n[run]\n";
  line("t_end", c.t_end);
  line("u0", c.u0);
  line("v0", c.v0);
  out << "storage_stride = " << c.storage_stride << '\n';
  return out.str();
}

namespace {

RunConfig make_preset(double stiffness, double exponent, double dt,
                      double alpha, double beta) {
  RunConfig c;
  c.sys = {1.0, stiffness};
  c.dp = {1.0, exponent, 1.0};
  c.ip.dt = dt;
  c.ip.alpha = alpha;
  c.ip.beta = beta;
  c.forcing = DampedSineForcing{2.0, 2.0 * std::numbers::pi, -0.2};
  c.u0 = 0.0;
  c.v0 = 0.0;
  c.t_end = 10.0;
  return c;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    const double bingham_k = 100.0;
    const double norton_k = 10.0;
    return std::vector<Preset>{
        {"bingham_n1_benchmark", "N = 1, implicit Euler reference, dt = 1e-6",
         make_preset(bingham_k, 1.0, 1e-6, 1.0, 1.0)},
        {"bingham_n1_case1", "N = 1, dt = 1e-4, alpha = 1, beta = 1/2",
         make_preset(bingham_k, 1.0, 1e-4, 1.0, 0.5)},
        {"bingham_n1_case2", "N = 1, dt = 1e-4, alpha = 1/2, beta = 1",
         make_preset(bingham_k, 1.0, 1e-4, 0.5, 1.0)},
        {"bingham_n1_case3", "N = 1, dt = 1e-4, alpha = 1/2, beta = 1/2",
         make_preset(bingham_k, 1.0, 1e-4, 0.5, 0.5)},
        {"norton_n3_benchmark", "N = 3, implicit Euler reference, dt = 1e-7",
         make_preset(norton_k, 3.0, 1e-7, 1.0, 1.0)},
        {"norton_n3_case1", "N = 3, dt = 1e-7, alpha = 1, beta = 1/2",
         make_preset(norton_k, 3.0, 1e-7, 1.0, 0.5)},
        {"norton_n3_case2", "N = 3, dt = 1e-7, alpha = 1/2, beta = 1",
         make_preset(norton_k, 3.0, 1e-7, 0.5, 1.0)},
        {"norton_n3_case3", "N = 3, dt = 1e-7, alpha = 1/2, beta = 1/2",
         make_preset(norton_k, 3.0, 1e-7, 0.5, 0.5)},
        {"imex", "N = 1, dt = 1e-4, alpha = 1, beta = 0 (explicit spring)",
         make_preset(bingham_k, 1.0, 1e-4, 1.0, 0.0)},
    };
  }();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw ValidationError("preset", "unknown preset '" + std::string(name) + "'");
}

}  // namespace vpsdof
