#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "torsionlab/jobs.hpp"

using torsionlab::JobConfig;
using torsionlab::JobResult;

namespace {

void add_common(CLI::App* cmd, JobConfig& cfg, std::string& s_text) {
  cmd->add_option("--n", cfg.n, "twist parameter n (nonzero; 1 = trefoil, -1 = figure-eight)");
  cmd->add_option("--s", s_text, "meridian eigenvalue as re,im");
  cmd->add_option("--tol", cfg.tol, "tolerance for verification comparisons")
      ->default_val(1e-8);
  cmd->add_option("-o,--output", cfg.output, "output format: text, json or csv")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--seed", cfg.seed, "RNG seed for solver starts")->default_val(0);
  cmd->add_option("--max-iter", cfg.max_iter, "iteration cap for the solvers")->default_val(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reidemeister torsion of twist-knot complements and Dehn surgeries"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string s_text;

  CLI::App* roots = app.add_subcommand("riley-roots", "solve the Riley polynomial at fixed s");
  add_common(roots, cfg, s_text);

  CLI::App* torsion = app.add_subcommand("torsion", "torsion of the knot complement");
  add_common(torsion, cfg, s_text);
  torsion->add_flag("--verify", cfg.with_oracle, "also run the Fox-calculus oracle");
  torsion->add_option("--relator", cfg.relator, "relator word for the oracle (word grammar)");
  torsion->add_option("--define", cfg.defines, "extra word macro, name=word (repeatable)");

  CLI::App* surgery = app.add_subcommand("surgery", "solve and evaluate a p/q surgery");
  add_common(surgery, cfg, s_text);
  int p = 0, q = 0;
  CLI::Option* p_opt = surgery->add_option("--p", p, "surgery numerator");
  CLI::Option* q_opt = surgery->add_option("--q", q, "surgery denominator");
  surgery->add_option("--starts", cfg.starts, "cap on Newton starts (0 = full grid)");

  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
  add_common(verify, cfg, s_text);
  verify->add_option("--trials", cfg.trials, "randomized trials per identity")->default_val(200);
  verify->add_option("--n-max", cfg.n_max, "twist-parameter range for root checks")
      ->default_val(3);

  CLI::App* table = app.add_subcommand("table", "sweep x and tabulate torsions");
  add_common(table, cfg, s_text);
  table->add_option("--sweep-x", cfg.sweep, "sweep of the meridian trace, start:end:count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return torsionlab::kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!s_text.empty()) {
    try {
      cfg.s = torsionlab::parse_complex_arg(s_text);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return torsionlab::kExitUsage;
    }
  }
  if (p_opt->count() > 0) cfg.p = p;
  if (q_opt->count() > 0) cfg.q = q;

  const JobResult result = torsionlab::run_job(cfg);
  if (result.exit_code == torsionlab::kExitUsage) {
    std::fputs(result.output.c_str(), stderr);
  } else {
    std::fputs(result.output.c_str(), stdout);
  }
  return result.exit_code;
}
