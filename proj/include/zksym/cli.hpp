#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zksym::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kNumericalFailure = 2 };

/// Metric parameters gathered from --params and --t/--u/--v/--w, flags
/// taking precedence per key.
struct ParamSource {
  std::optional<std::string> file;
  std::optional<double> t, u, v, w;
};

/// Reads {t, u, v, w} from a JSON object or from flat `key = value` TOML.
/// Missing keys stay empty. Throws InvalidInput.
ParamSource read_param_file(const std::string& path);

/// Default tolerance after applying the ZKSYM_TOL environment variable.
double default_tolerance();

/// Runs one command. `args` excludes the program name. Returns the exit
/// code; all output goes to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zksym::cli
