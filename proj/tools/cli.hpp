#pragma once

// Command dispatch for the cluster-lattice tool, callable in-process.
//
// Exit codes: 0 success, 1 internal failure, 2 validation error (including
// bad command lines), 3 guard exceeded.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cluster_lattice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitGuard = 3;

// Name of the environment variable that replaces every enumeration guard on n.
inline constexpr const char* kGuardEnv = "CLUSTER_LATTICE_GUARD_N";

struct VerifyRequest {
  std::uint64_t seed = 1;
  bool json = false;
};

// `verify` runs whatever is plugged in here; the tool binary plugs in the
// acceptance suite.
struct CliHooks {
  std::function<int(const VerifyRequest&, std::ostream& out)> verify;
};

// The guard from the environment, or `fallback` when unset. Throws
// ValidationError for a value that is not a positive integer.
int guard_from_env(int fallback);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace cluster_lattice::cli
