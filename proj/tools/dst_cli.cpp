#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dst/cli.hpp"

namespace {

int env_threads() {
  const char* raw = std::getenv("DST_THREADS");
  if (!raw) return 1;
  int t = std::atoi(raw);
  return t > 0 ? t : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dst: exact invariants of the irreducible components of the "
      "Delta-Springer fibers Y_{n,(1^{n-1}),s}"};
  app.require_subcommand(1);

  struct Options {
    int n = 0;
    int s = -1;
    int i = 0;
    int j = -1;
    int p = 0;
    std::vector<std::string> pair_tokens;
    std::vector<int> word;
    std::string format = "json";
    long long budget = 100000000;
  } opt;

  auto add_common = [&](CLI::App* sub, bool needs_n = true) {
    auto* n_opt = sub->add_option("--n", opt.n, "size parameter n (>= 2)");
    if (needs_n) n_opt->required();
    sub->add_option("--s", opt.s, "parameter s (defaults to n-1)");
    sub->add_option("--format", opt.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--budget", opt.budget,
                    "cap on enumerated candidate lines in point counts");
    return sub;
  };

  auto* components = add_common(app.add_subcommand(
      "components", "list the component tableaux and their words"));
  auto* fillings = add_common(app.add_subcommand(
      "fillings", "list the row-increasing partial fillings (permutation flags)"));

  auto* classify = add_common(app.add_subcommand(
      "classify", "classify fillings into a component, with the flag-membership cross-check"));
  classify->add_option("--i", opt.i, "component index")->required();
  classify->add_option("--w", opt.word, "classify a single word instead of all fillings");

  auto* poincare = add_common(app.add_subcommand(
      "poincare", "Poincare polynomial, dimension and bundle type of K^{i,j}"));
  poincare->add_option("--i", opt.i, "first index")->required();
  poincare->add_option("--j", opt.j, "second index (defaults to i)");

  auto* union_cmd = add_common(app.add_subcommand(
      "union", "Poincare polynomial of a union of K^{i,j} via Dyck cells"));
  union_cmd->add_option("--pairs", opt.pair_tokens, "pair tokens like 2,3 4,4 or bare i")
      ->required()
      ->expected(-1);

  auto* intersect_cmd = add_common(app.add_subcommand(
      "intersect", "intersection of a list of K^{i,j}"));
  intersect_cmd->add_option("--pairs", opt.pair_tokens, "pair tokens")
      ->required()
      ->expected(-1);

  auto* poset = add_common(app.add_subcommand(
      "poset", "containment relation between two intersections"));
  poset->add_option("--pairs", opt.pair_tokens, "exactly two pair tokens")
      ->required()
      ->expected(-1);

  auto* hilbert = add_common(app.add_subcommand(
      "hilbert", "Hilbert function of the cohomology presentation of K^i"));
  hilbert->add_option("--i", opt.i, "component index")->required();

  auto* pointcount = add_common(app.add_subcommand(
      "pointcount", "brute-force point counts over F_p vs Poincare evaluations"));
  pointcount->add_option("--p", opt.p, "prime (2 or 3)")->required();
  pointcount->add_option("--pairs", opt.pair_tokens, "pair tokens (defaults to all)")
      ->expected(-1);

  auto* verify = add_common(app.add_subcommand(
      "verify", "run the full cross-oracle suite for the given n"));
  verify->add_option("--p", opt.p, "prime for the point-count check (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  dst::cli::CommandRequest req;
  try {
    if (components->parsed()) req.verb = dst::cli::Verb::Components;
    if (fillings->parsed()) req.verb = dst::cli::Verb::Fillings;
    if (classify->parsed()) req.verb = dst::cli::Verb::Classify;
    if (poincare->parsed()) req.verb = dst::cli::Verb::Poincare;
    if (union_cmd->parsed()) req.verb = dst::cli::Verb::Union;
    if (intersect_cmd->parsed()) req.verb = dst::cli::Verb::Intersect;
    if (poset->parsed()) req.verb = dst::cli::Verb::Poset;
    if (hilbert->parsed()) req.verb = dst::cli::Verb::Hilbert;
    if (pointcount->parsed()) req.verb = dst::cli::Verb::PointCount;
    if (verify->parsed()) req.verb = dst::cli::Verb::Verify;

    req.n = opt.n;
    if (opt.s >= 0) req.s = opt.s;
    if (classify->parsed() || poincare->parsed() || hilbert->parsed()) req.i = opt.i;
    if (poincare->parsed() && opt.j >= 0) req.j = opt.j;
    if (pointcount->parsed() || (verify->parsed() && opt.p > 0)) req.p = opt.p;
    if (!opt.word.empty()) req.word = opt.word;
    for (const auto& token : opt.pair_tokens) {
      req.pairs.push_back(dst::cli::parse_pair_token(token));
    }
    req.format = opt.format == "table" ? dst::cli::Format::Table
                                       : dst::cli::Format::Json;
    req.budget = opt.budget;
    req.threads = env_threads();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  dst::cli::CommandResult result = dst::cli::run(req);
  std::cout << result.output;
  return result.exit_code;
}
