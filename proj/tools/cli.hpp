#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pp7/gf.hpp"
#include "pp7/poly.hpp"

namespace pp7::cli {

enum class Command {
    Classify,
    IsPP,
    Hermite,
    Exceptional,
    Canonical,
    Related,
    VerifyPaper,
    ListFields,
};

enum class Format { Text, Json, Csv };

struct CliConfig {
    Command command = Command::ListFields;
    int q = 0;
    std::optional<std::vector<int>> modulus;
    std::optional<std::uint32_t> generator;
    /// Degree-ascending coefficient list, constant first.
    std::optional<std::string> coeffs;
    /// Normalized tuple a5,a4,a3,a2,a1.
    std::optional<std::string> septic;
    /// Second polynomial for `related`.
    std::optional<std::string> other_coeffs;
    std::optional<std::string> other_septic;
    Format format = Format::Text;
    int jobs = 1;
    bool audit = false;
    std::optional<std::string> output;
};

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kUsage = 2,
};

/// Parses a command line. On failure or --help, returns the exit code after
/// writing a message to `out` or `err`.
struct ParseResult {
    std::optional<CliConfig> config;
    int exit_code = kOk;
};
ParseResult parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Default worker count: $PP7_JOBS if set to a positive integer, else the
/// hardware concurrency.
int default_jobs();

/// Comma-separated coefficients from degree 0 upward. Each token is an
/// integer encoding or an expression in the generator such as `e^5` or
/// `2e^3+1`. Throws ParseError.
Polynomial parse_coeffs(const Field& F, std::string_view text);

int run(const CliConfig& config, std::ostream& out, std::ostream& err);

} // namespace pp7::cli
