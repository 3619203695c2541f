#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace gqkit::cli {

/// 0 verified or feasible, 1 expected negative result, 2 usage error, 3 internal or resource error.
enum ExitCode { ok = 0, negative = 1, usage = 2, internal = 3 };

struct CommandResult {
  int exit_code = ok;
  /// Written to stdout followed by a newline: JSON text, TSV or GQI.
  std::string output;
};

/// Thrown for bad user input; main reports it on stderr with exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CommandResult cmd_construct(const std::string& family, int q, const std::optional<std::string>& out_file,
                            const std::string& format);
CommandResult cmd_verify(const std::string& file);
CommandResult cmd_local2t(const std::string& family, int q, const std::string& group, std::optional<int> arcs);
CommandResult cmd_sieve(long long s_max, long long t_max, const std::string& format);
CommandResult cmd_solve_root(const std::string& t, const std::string& n);
CommandResult cmd_identities();
CommandResult cmd_lie_pipeline(const std::string& alpha, bool finish, const std::string& format);
CommandResult cmd_tables(const std::string& which, const std::string& format);

}  // namespace gqkit::cli
