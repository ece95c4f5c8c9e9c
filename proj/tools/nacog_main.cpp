// nacog: batch front end for the structure-constant checks.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nacog/commands.hpp"

int main(int argc, char** argv) {
  using namespace nacog::cli;

  CLI::App app{"Exact checks for nonassociative algebras and coalgebras given by structure constants"};
  app.require_subcommand(1);

  CheckOptions check_opts;
  std::optional<std::uint64_t> seed;
  std::string path, algebra_path, coalgebra_path, out_path, vector_text, compat = "lie-admissible";

  auto* check = app.add_subcommand("check", "Evaluate the predicate table of a structure file");
  check->add_option("file", path, "Structure file (JSON)")->required();
  check->add_option("--relation", check_opts.relation,
                    "g1..g6 | lie-admissible | power3 | g1!..g6! | all")
      ->capture_default_str();
  check->add_flag("--strict-shriek", check_opts.strict_shriek,
                  "Coalgebra G_i^! uses the literal unnormalized Phi_{u_i} X = X");
  check->add_option("--seed", seed, "Also cross-check relations on seeded random vectors");

  auto* dualize = app.add_subcommand("dualize", "Write the dual structure (algebra <-> coalgebra)");
  dualize->add_option("file", path, "Structure file (JSON)")->required();
  dualize->add_option("--out", out_path, "Output path (stdout when omitted)");

  auto* convolve = app.add_subcommand("convolve", "Write the convolution algebra Hom(C, A)");
  convolve->add_option("algebra", algebra_path, "Algebra file")->required();
  convolve->add_option("coalgebra", coalgebra_path, "Coalgebra file")->required();
  convolve->add_option("--out", out_path, "Output path (stdout when omitted)");

  auto* sigma3 = app.add_subcommand("sigma3", "Analyze a vector of the group algebra of S3");
  sigma3->add_option("vector", vector_text, "Six comma-separated rationals (Id,t12,t13,t23,c1,c2)")
      ->required();

  auto* bialgebra = app.add_subcommand("bialgebra", "Check a bialgebra compatibility law");
  bialgebra->add_option("algebra", algebra_path, "Algebra file")->required();
  bialgebra->add_option("coalgebra", coalgebra_path, "Coalgebra file")->required();
  bialgebra->add_option("--compat", compat, "lie-admissible | pre-lie")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  if (*check) {
    check_opts.seed = seed;
    return cmd_check(path, check_opts, std::cout, std::cerr);
  }
  if (*dualize) return cmd_dualize(path, out_path, std::cout, std::cerr);
  if (*convolve) return cmd_convolve(algebra_path, coalgebra_path, out_path, std::cout, std::cerr);
  if (*sigma3) return cmd_sigma3(vector_text, std::cout, std::cerr);
  return cmd_bialgebra(algebra_path, coalgebra_path, compat, std::cout, std::cerr);
}
