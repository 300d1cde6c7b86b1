#ifndef POWOP_TOOLS_CLI_HPP
#define POWOP_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace powop::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kComputation = 3,
    kCheckFailed = 4,
};

struct CliConfig {
    std::string command;
    std::uint64_t p = 0;
    unsigned precision = 64;
    std::optional<long> max_exp;
    std::optional<long> min_floor;
    std::string format = "pretty";
    std::string method = "fixed_point";
    // dcoef
    unsigned i = 0;
    unsigned tau = 1;
    // ranks
    unsigned rank = 1;
    std::optional<unsigned> m;
    std::optional<unsigned> k;
    bool bruteforce = false;
};

/// Default N: POWOP_DEFAULT_PRECISION when set to a positive integer, else 64.
unsigned default_precision();

/// Parses args (without the program name) and runs one command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int dispatch(const CliConfig& config, std::ostream& out, std::ostream& err);

} // namespace powop::cli

#endif
