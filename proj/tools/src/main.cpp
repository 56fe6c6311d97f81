#include <iostream>

#include <CLI11.hpp>

#include "sftglue_cli/run.hpp"

using sftglue::cli::Command;
using sftglue::cli::Format;
using sftglue::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Analyses of shifts of finite type: gluing, tracing, shadowing, hyperspace refutation"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"analyze", "irreducibility, period, mixing, entropy, space class, gluing-orbit"},
      {"trace", "build and verify a tracing point for an orbit sequence"},
      {"shadow", "shadow a finite pseudo-orbit"},
      {"cantor", "finite-depth Cantor set inside a local unstable set"},
      {"census", "count left extensions in the local stable set"},
      {"hyper-refute", "search for gluing failures of the induced hyperspace map"},
      {"entropy", "spectral and word-count entropy"},
      {"example31", "the 4-vertex path example with a full report"},
  };
  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    if (std::string(s.name) == "example31") continue;
    sub->add_option("-i,--input", config.input, "graph file {\"states\": n, \"matrix\": [...]}")
        ->required();
    sub->add_option("-N,--resolution", config.resolution, "resolution N (1..8)")
        ->capture_default_str();
    sub->add_option("-k,--depth", config.depth, "depth (cantor, census) or k (hyper-refute)")
        ->capture_default_str();
    sub->add_option("-M,--max-gap", config.max_gap, "largest candidate constant M (hyper-refute)")
        ->capture_default_str();
    sub->add_option("--terms", config.terms, "word-count horizon (analyze, entropy)")
        ->capture_default_str();
    sub->add_option("--seed", config.seed, "seed for a random orbit sequence (trace)")
        ->capture_default_str();
    sub->add_option("--point", config.point, "point literal, inline JSON or a file");
    sub->add_option("--blocks", config.blocks, "orbit sequence [{\"point\": ..., \"m\": 3}, ...]");
    sub->add_option("--pseudo-orbit", config.pseudo_orbit, "JSON array of point literals");
  }

  CLI11_PARSE(app, argc, argv);

  config.command = sftglue::cli::parse_command(app.get_subcommands().front()->get_name());
  config.format = format == "text" ? Format::kText : Format::kJson;

  const auto result = sftglue::cli::run(config);
  (result.exit_code == sftglue::cli::kExitInputError ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
