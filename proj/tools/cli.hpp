#ifndef GPM_CLI_HPP
#define GPM_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gpm::cli
{

enum class Exit : int { ok = 0, verification_failed = 1, usage = 2 };

struct CommandConfig {
    std::string command;
    std::string kind;
    std::optional<std::int64_t> q;
    std::optional<std::string> phi;
    std::size_t size = 16;
    std::string format;
    std::string suite;
    std::string output;
    // eval: N M. convolve: the two series a, b as comma-separated rationals.
    std::vector<std::string> operands;
};

// Parses argv-style arguments (without the program name). Returns nullopt
// and sets status when parsing stops early (help, or a usage error).
std::optional<CommandConfig> parse(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                                   int &status);

int execute(const CommandConfig &config, std::ostream &out, std::ostream &err);

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace gpm::cli

#endif
