#pragma once

// Command implementations behind the ga3 executable. Each command writes data
// to `out`, diagnostics to `err`, and returns the process exit code.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid configuration or
// malformed input (syntax errors included), 3 evaluation error, 4 output
// path not writable.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ga3::cli {

enum class Command { Eval, Verify, Evolve, Project };
enum class Format { Json, Csv };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kEvalError = 3;
inline constexpr int kUnwritable = 4;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::Verify;
  std::uint64_t seed = 42;
  int trials = 1000;
  Format format = Format::Csv;
  std::string out_path;  // empty: stdout
  double hbar = 1.0;
  std::array<double, 4> hamiltonian{0.0, 1.0, 0.0, 0.0};
  double t_max = 3.141592653589793;
  int steps = 101;
  // Multiplies every verify tolerance. Only the harness self-test changes it.
  double tol_scale = 1.0;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws ConfigError when trials < 1, steps < 2, t_max <= 0, hbar <= 0 or
// any number is not finite.
void validate(const RunConfig& cfg);

// "0.10000000000000001": 17 significant digits, '.' decimal point, no locale.
std::string format_real(double x);

// Parses a strict decimal or scientific real; the whole string must be consumed.
bool parse_real(std::string_view text, double& value);

// Parses "s0,s1,s2,s3".
bool parse_hamiltonian(std::string_view text, std::array<double, 4>& h);

int cmd_eval(std::string_view source, std::ostream& out, std::ostream& err);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

inline constexpr std::string_view kEvolveCsvHeader = "t,re_a0,im_a0,re_a1,im_a1,ax,ay,az,p_e,p_mu";
int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Each input row is "re_a0,im_a0,re_a1,im_a1". Blank lines and lines starting
// with '#' are skipped; row numbers in diagnostics count every line from 1.
inline constexpr std::string_view kProjectCsvHeader =
    "re_a0,im_a0,re_a1,im_a1,x,y,ax,ay,az,flag";
int cmd_project(const RunConfig& cfg, const std::vector<std::string>& rows, std::ostream& out,
                std::ostream& err);

// Verification suites, exposed for tests and the acceptance runner.
struct SuiteResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string counterexample;  // inputs of the worst trial when failed
};

std::vector<std::string> suite_names();

// Runs every suite concurrently; results are ordered by suite name.
std::vector<SuiteResult> run_suites(std::uint64_t seed, int trials, double tol_scale = 1.0);

}  // namespace ga3::cli
