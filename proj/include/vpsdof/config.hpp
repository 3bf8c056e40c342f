#pragma once

// Run configuration files: a flat INI-style text with the sections
// [system], [dashpot], [integrator], [forcing] and [run].
//
//   [system]      mass, stiffness
//   [dashpot]     gamma, exponent, yield_force
//   [integrator]  dt, alpha, beta, residual_tol*, step_tol*, max_iterations*
//   [forcing]     type = zero | constant | damped_sine*
//                 amplitude, angular_frequency, decay_rate
//   [run]         t_end*, u0*, v0*, storage_stride*
//
// Keys marked * are optional. '#' and ';' start comments.

#include <string>
#include <string_view>
#include <vector>

#include "vpsdof/simulate.hpp"

namespace vpsdof {

/// Throws ParseError for malformed text or unknown keys and ValidationError
/// (naming e.g. "integrator.alpha") for out-of-range values.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::string& path);

/// Text that parse_config maps back to an identical RunConfig.
std::string render_config(const RunConfig& config);

struct Preset {
  std::string name;
  std::string description;
  RunConfig config;
};

/// The benchmark and case rows for N = 1 and N = 3 plus the
/// implicit-explicit variant.
const std::vector<Preset>& presets();

/// Throws ValidationError on an unknown name.
const Preset& find_preset(std::string_view name);

}  // namespace vpsdof
