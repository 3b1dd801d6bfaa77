#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace enumcount::cli {

enum class Command { nd, triple, genus2, breakdown, gterm, verify };
enum class OutputFormat { text, csv, json };

struct RunConfig {
    Command command = Command::nd;
    long d_max = 0;  // the degree argument; for gterm, d
    long g = 0;      // gterm only
    OutputFormat format = OutputFormat::text;
    std::optional<std::filesystem::path> cache_path;
    bool header = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// --help was given; text is the generated usage.
struct HelpRequested {
    std::string text;
};

/// Parses argv-style arguments (args[0] is the program name).
/// Throws UsageError on bad flags or out-of-range degrees.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes one command, writing the report to out and diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping every failure onto an exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enumcount::cli
