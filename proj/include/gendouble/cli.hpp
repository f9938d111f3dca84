#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gendouble/prime_field.hpp"
#include "gendouble/ring.hpp"

namespace gd {

enum class ExportFormat { Json, CasScript, Latex };

/// Settings shared by all subcommands.
struct RunConfig {
  int n = 5;
  std::optional<Parity> parity;  // must agree with n when given
  bool cone = false;
  std::optional<std::string> mode;  // "exact" or "probabilistic"; unset picks per check
  std::size_t trials = 50;
  PrimeFieldConfig field;
  std::string out = "-";
  std::string input;  // verify: JSON bundle to check instead of building

  ExportFormat format = ExportFormat::Json;
  std::vector<std::string> checks;  // empty means every check that applies to n

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Each command writes its artifact to cfg.out ("-" is `out`) and a
/// one-line-per-item summary to `log`. Returns an exit code.
int cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& log);

/// Full command line entry point (subcommand, flags, GENDOUBLE_* variables).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& log);

}  // namespace gd
