#ifndef NETGEOM_CLI_HPP
#define NETGEOM_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "netgeom/compiler.hpp"

namespace netgeom::cli {

enum class Command { Compile, Verify, Regions, Poset, GpCheck, Mergers, Plot };

std::optional<Command> parse_command(std::string_view name);

struct RunConfig {
    Command command = Command::Compile;
    std::string input_path;
    double tol = kDefaultTol;
    double margin = 10 * kDefaultTol;
    double box = kDefaultBox;
    double sample_box = 10.0;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    std::optional<std::string> output_path;
    std::optional<std::string> selection_path;  // plot only
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;

/// 2 iff the report has at least one mismatch, else 0.
int verify_exit_code(const VerifyReport& report);

/// Runs one command. Results go to `out` (or the output path), one-line
/// diagnostics to `err`. Returns 0, 1 on validation errors, 2 when verify
/// finds mismatches.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace netgeom::cli

#endif
