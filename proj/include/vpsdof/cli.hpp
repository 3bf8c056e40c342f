#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vpsdof/simulate.hpp"

namespace vpsdof::cli {

/// Where a run configuration comes from, plus command-line overrides.
struct Source {
  std::optional<std::string> config_path;
  std::optional<std::string> preset;
  std::optional<double> t_end;
  std::optional<double> dt;
  std::optional<std::size_t> storage_stride;

  RunConfig resolve() const;
};

/// Each command writes its artifact to `out_path`, prints '#'-prefixed
/// summary lines to `log`, and diagnostics to `err`. Returns the process
/// exit status.
int cmd_run(const Source& source, const std::string& out_path,
            std::ostream& log, std::ostream& err);

int cmd_converge(const Source& source, const std::vector<double>& dts,
                 double dt_ref, const std::string& out_path, std::ostream& log,
                 std::ostream& err);

int cmd_compare(const Source& a, const Source& b, const std::string& out_path,
                std::ostream& log, std::ostream& err);

int cmd_preset_list(std::ostream& log);

int cmd_preset_show(const std::string& name, std::ostream& log,
                    std::ostream& err);

/// Parses "1e-3,5e-4" into numbers. Throws ParseError.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace vpsdof::cli
