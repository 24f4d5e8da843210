#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cotrans/cli.hpp"
#include "cotrans/error.hpp"

int main(int argc, char** argv) {
  using namespace cotrans::cli;

  CLI::App app{"Transversal matroids, strict gammoids and their duality"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig config;
  std::string subset;
  app.add_option("--input", config.input, "presentation or digraph file")->required()->check(CLI::ExistingFile);
  app.add_option("--field", config.field, "fp | rational")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, FieldMode>{{"fp", FieldMode::fp}, {"rational", FieldMode::rational}}));
  app.add_option("--seed", config.seed, "64-bit seed for generic weights")->capture_default_str();
  app.add_option("--format", config.format, "text | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"text", OutputFormat::text}, {"json", OutputFormat::json}}));
  app.add_option("--max-retries", config.max_retries, "reseeds on a singular I - W")->capture_default_str();

  app.add_subcommand("bases", "print the bases of M[H] or L(G, A)");
  app.add_subcommand("dualize", "print the dual matroid");
  auto* rank = app.add_subcommand("rank", "rank of a subset");
  rank->add_option("--subset", subset, "comma-separated elements, e.g. 1,2,5")->required();
  auto* represent = app.add_subcommand("represent", "print X (presentation) or Y (digraph)");
  represent->add_flag("--normalize", config.normalize, "unit entries on the lexicographic matching");
  app.add_subcommand("convert", "digraph with sinks <-> presentation with a complete matching");
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--check", config.check, "exchange | lgv | orthogonal | duality | all")
      ->transform(CLI::CheckedTransformer(std::map<std::string, CheckTarget>{
          {"exchange", CheckTarget::exchange},
          {"lgv", CheckTarget::lgv},
          {"orthogonal", CheckTarget::orthogonal},
          {"duality", CheckTarget::duality},
          {"all", CheckTarget::all}}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!subset.empty()) {
    try {
      config.subset = parse_subset(subset);
    } catch (const cotrans::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  const RunResult result = run(config);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
