#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "iterkit/samples.hpp"

namespace iterkit::cli {

enum class Command { interp, diff, integrate, table, convergence };
enum class OutputFormat { text, json, csv };

/// Which convergence study to reproduce.
enum class Study { deriv1, deriv2, quad };

struct RunConfig {
    Command command = Command::interp;
    std::string input_path;
    std::optional<double> x;
    std::optional<std::size_t> derivative_order; // --t
    std::optional<double> step;                  // --h
    std::size_t panels = 1;
    std::optional<std::size_t> prefix_length;    // --r; command-specific default
    Scheme scheme = Scheme::neville;
    OutputFormat format = OutputFormat::text;
    bool check = false;
    bool override_order = false;
    std::optional<Study> study;
};

/// Reads "x,f" rows (decimal literals, optional "x,f" header, '#' comments,
/// LF or CRLF) into a SampleSet; row order defines node order. Validation
/// errors are rethrown with the offending line numbers attached.
SampleSet parse_csv(const std::string& path);
SampleSet parse_csv(std::istream& in, const std::string& name);

/// Executes one command and renders the result. Returns the process exit
/// code: 0 on success, 2 on input errors, 3 on numeric errors; failures
/// get a one-line diagnostic on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Round-trip-safe rendering used for machine formats (17 significant
/// digits) and the human-facing text format (12).
std::string format_number(double value, int significant_digits);

} // namespace iterkit::cli
