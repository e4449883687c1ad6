#ifndef HYPVOL_CLI_HPP
#define HYPVOL_CLI_HPP

#include <string>
#include <vector>

#include "hypvol/numerics.hpp"
#include "hypvol/verify.hpp"

namespace hypvol::cli {

enum class Command { eval, verify, table };
enum class OutputFormat { text, json, csv };

// Exit codes shared by all commands.
inline constexpr int kExitPass = 0;
inline constexpr int kExitThresholdFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitNonConvergence = 4;

struct RunConfig {
  Command command = Command::eval;
  std::string target;
  std::vector<double> args;
  bounds::Mode mode = bounds::Mode::sound;
  int refinement = 1;
  OutputFormat format = OutputFormat::text;
  std::string output_path;  // empty means stdout
  numerics::Tolerances tol;
  int threads = 0;  // <= 0 means hardware concurrency
  bool full = false;
};

// Fixed 17-significant-digit formatting used for every float in JSON
// output, so that parse + re-serialize reproduces the bytes.
std::string format_double17(double x);

// Shortest representation that parses back to the same double; used in CSV.
std::string format_shortest(double x);

// Canonical JSON for a report: keys lemma_id, mode, threshold, min_value,
// min_cell, passed, cell_count, timing_seconds and, when full is set,
// cells.
std::string report_to_json(const verify::VerificationReport& report,
                           bool full);

// Inverse of report_to_json (fields absent from the JSON are defaulted).
verify::VerificationReport report_from_json(const std::string& text);

// One line with the lemma, min_value, min_cell and threshold.
std::string summary_line(const verify::VerificationReport& report);

int cmd_eval(const RunConfig& config);
int cmd_verify(const RunConfig& config);
int cmd_table(const RunConfig& config);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace hypvol::cli

#endif
