// toric: Hilbert bases, Nash blowup charts and their iteration for affine
// toric varieties given by semigroup generators.
//
// Exit status: 0 success, 1 verification mismatch, 2 input error,
// 3 iteration inconclusive at the depth limit.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "input.hpp"
#include "report.hpp"
#include "toric/errors.hpp"

namespace {

using namespace toric;
using namespace toric::cli;

constexpr int exit_mismatch = 1;
constexpr int exit_input = 2;
constexpr int exit_inconclusive = 3;

SemigroupInput load(const std::string& file) {
  SemigroupInput in = read_input(file);
  if (in.pointed == PointedPolicy::check && !in.semigroup.is_pointed())
    std::cerr << "toric: warning: " << file << ": cone contains a line\n";
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash blowups of affine toric varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, file_b, relations_file, follow;
  std::uint64_t p = 0;
  std::optional<std::uint64_t> verify_p;
  bool normalized = false;
  std::size_t max_depth = 1;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the semigroup");
  hilbert->add_option("file", file)->required();

  auto* charts = app.add_subcommand("charts", "Charts of the (normalized) Nash blowup");
  charts->add_option("file", file)->required();
  charts->add_option("--char", p, "Characteristic of the base field")->required();
  charts->add_flag("--normalized", normalized);

  auto* iterate_cmd = app.add_subcommand("iterate", "Iterate the blowup and look for cycles");
  iterate_cmd->add_option("file", file)->required();
  iterate_cmd->add_option("--char", p, "Characteristic of the base field")->required();
  iterate_cmd->add_flag("--normalized", normalized);
  iterate_cmd->add_option("--max-depth", max_depth)->check(CLI::PositiveNumber);
  iterate_cmd->add_option("--follow", follow,
                          "Subsets to expand per depth, 1-based Hilbert basis indices "
                          "(e.g. 1,2,3,5;1,2,4,6)");

  auto* iso = app.add_subcommand("iso", "Unimodular isomorphism between two semigroups");
  iso->add_option("fileA", file)->required();
  iso->add_option("fileB", file_b)->required();

  auto* verify = app.add_subcommand("verify-paper", "Recheck the embedded counterexamples");
  verify->add_option("--char", verify_p, "Characteristic compared against char 0");

  auto* binomials = app.add_subcommand("binomials", "Check binomial relations");
  binomials->add_option("file", file)->required();
  binomials->add_option("relations", relations_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  const Format fmt = format == "json" ? Format::json : Format::text;
  const BlowupMode mode = normalized ? BlowupMode::normalized : BlowupMode::nash;
  int status = 0;
  try {
    json report;
    if (*hilbert) {
      report = hilbert_report(load(file).semigroup);
    } else if (*charts) {
      report = charts_report(load(file).semigroup, Characteristic(p), mode);
    } else if (*iterate_cmd) {
      RunConfig cfg{Characteristic(p), mode, max_depth, {}};
      if (!follow.empty()) cfg.follow = parse_follow(follow);
      IterationTree tree = toric::iterate(load(file).semigroup, cfg);
      report = iteration_report(tree, cfg);
      if (tree.outcome == IterationOutcome::inconclusive) status = exit_inconclusive;
    } else if (*iso) {
      SemigroupInput a = load(file), b = load(file_b);
      report = iso_report(find_iso(a.semigroup, b.semigroup));
    } else if (*verify) {
      std::vector<std::uint64_t> primes{5, 7, 11};
      if (verify_p) primes = {Characteristic(*verify_p).value()};
      VerificationReport r = verify_counterexamples(reference_data(), primes);
      report = verification_report(r);
      if (!r.all_passed()) status = exit_mismatch;
    } else if (*binomials) {
      SemigroupInput in = load(file);
      auto rels = read_relations(relations_file, in.generators.size());
      report = binomials_report(rels, check_binomials(in.generators, rels));
    }
    std::cout << render(report, fmt);
  } catch (const toric::Error& e) {
    std::cerr << "toric: error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "toric: internal error: " << e.what() << '\n';
    return exit_input;
  }
  return status;
}
