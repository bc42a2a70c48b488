#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/cli.hpp"

namespace {

using ga3::cli::Format;
using ga3::cli::RunConfig;

void add_format_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"csv", Format::Csv}}));
  cmd.add_option("--out", cfg.out_path, "Output file (default: stdout)");
}

bool read_lines(const std::string& path, std::vector<std::string>& lines) {
  std::ifstream in(path);
  if (!in) return false;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric algebra of space: Pauli spinors, qubits and two-level evolution"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string expression;
  auto* eval = app.add_subcommand("eval", "Evaluate a multivector expression");
  eval->add_option("expression", expression, "Expression, e.g. \"exp(pi/2 * e12)\"")->required();

  auto* verify = app.add_subcommand("verify", "Run the seeded property suites");
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--trials", cfg.trials, "Trials per suite");
  verify->add_option("--tol-scale", cfg.tol_scale)->group("");

  std::string hamiltonian;
  auto* evolve = app.add_subcommand("evolve", "Write a closed-form trajectory from |0>");
  // --h names the Hamiltonian here, so help is long-form only.
  evolve->set_help_flag("--help", "Print this help message and exit");
  evolve->add_option("--h", hamiltonian, "Hamiltonian s0,s1,s2,s3 (default 0,1,0,0)");
  evolve->add_option("--hbar", cfg.hbar, "Reduced Planck constant");
  evolve->add_option("--t-max", cfg.t_max, "Final time");
  evolve->add_option("--steps", cfg.steps, "Number of grid points including both ends");
  add_format_options(*evolve, cfg);

  std::string points_file;
  std::vector<std::string> inline_points;
  auto* project = app.add_subcommand("project", "Project kets to the plane and the sphere");
  project->add_option("--points", points_file, "File with one re_a0,im_a0,re_a1,im_a1 per line");
  project->add_option("--point", inline_points, "Inline re_a0,im_a0,re_a1,im_a1 (repeatable)")
      ->delimiter(';');
  add_format_options(*project, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ga3::cli::exit_code::kInvalidInput;
  }

  if (*eval) return ga3::cli::cmd_eval(expression, std::cout, std::cerr);
  if (*verify) return ga3::cli::cmd_verify(cfg, std::cout, std::cerr);
  if (*evolve) {
    if (!hamiltonian.empty() && !ga3::cli::parse_hamiltonian(hamiltonian, cfg.hamiltonian)) {
      std::cerr << "error: --h expects four comma-separated reals s0,s1,s2,s3\n";
      return ga3::cli::exit_code::kInvalidInput;
    }
    return ga3::cli::cmd_evolve(cfg, std::cout, std::cerr);
  }

  std::vector<std::string> rows;
  if (!points_file.empty() && !read_lines(points_file, rows)) {
    std::cerr << "error: cannot read '" << points_file << "'\n";
    return ga3::cli::exit_code::kInvalidInput;
  }
  rows.insert(rows.end(), inline_points.begin(), inline_points.end());
  if (rows.empty()) {
    std::cerr << "error: project needs --points FILE or --point re_a0,im_a0,re_a1,im_a1\n";
    return ga3::cli::exit_code::kInvalidInput;
  }
  return ga3::cli::cmd_project(cfg, rows, std::cout, std::cerr);
}
