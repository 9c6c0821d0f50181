#pragma once

#include "secint/certifier.hpp"
#include "secint/json_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace secint::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1, // runtime failure such as an exceeded search cap
    kInvalidArguments = 2,
    kNotApplicable = 3,
    kInternalError = 4,
};

struct IntRange {
    Integer lo, hi;
};

// Parameters of a certify sweep; read from a JSON document.
struct SweepConfig {
    IntRange g, r1, d1, e, f;
    std::optional<std::vector<std::string>> constraints; // certifier defaults when absent
    std::string format = "json";                         // json | csv
    std::optional<std::string> out;
    unsigned threads = 0; // 0: hardware concurrency
};

// Throws InvalidArgument on schema violations.
SweepConfig parse_sweep_config(const json_io::Json& doc);

// Runs every valid instance of the grid; records come back in grid order
// (g, r1, d1, e, f lexicographic) regardless of thread count.
struct SweepOutcome {
    std::vector<json_io::Json> records;
    std::uint64_t skipped_invalid = 0;
    bool internal_error = false;
};
SweepOutcome run_sweep(const SweepConfig& config, std::uint64_t search_cap);

std::string render_sweep(const SweepOutcome& outcome, std::string_view format);

// RFC 4180 field quoting.
std::string csv_escape(std::string_view field);

// Search cap from CERTIFIER_SEARCH_CAP, or the library default.
std::uint64_t search_cap_from_env();

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace secint::cli
