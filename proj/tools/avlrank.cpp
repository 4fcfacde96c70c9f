// avlrank: generate expensive AVL trees, replay delete/reinsert pairs, and
// benchmark amortized rotation cost.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "avlrank/harness.hpp"

namespace h = avlrank::harness;

int main(int argc, char** argv) {
  CLI::App app{"Rank-balanced AVL trees and the expensive deletion family"};
  app.require_subcommand(1);

  const std::map<std::string, avlrank::EType> etypes{{"L", avlrank::EType::L},
                                                     {"R", avlrank::EType::R}};
  const std::map<std::string, avlrank::BPolicy> policies{
      {"minimal", avlrank::BPolicy::MinimalAVL}, {"perfect", avlrank::BPolicy::Perfect}};
  const std::map<std::string, h::DumpFormat> formats{{"text", h::DumpFormat::Text},
                                                     {"dot", h::DumpFormat::Dot}};

  h::GenOptions gen;
  std::string etype = "L";
  std::string policy = "minimal";
  auto* gen_cmd = app.add_subcommand("gen", "Write a member of the expensive family");
  gen_cmd->add_option("--rank", gen.rank, "Even tree rank")->required();
  gen_cmd->add_option("--etype", etype, "Top-level type (L or R)")
      ->check(CLI::IsMember(etypes));
  gen_cmd->add_option("--b-policy", policy, "Subtree B shape (minimal or perfect)")
      ->check(CLI::IsMember(policies));
  gen_cmd->add_option("-o,--out", gen.out_path, "Output file (default stdout)");

  h::PairsOptions pairs;
  auto* pairs_cmd = app.add_subcommand("pairs", "Run shallow-leaf delete/reinsert pairs");
  pairs_cmd->add_option("input,--in", pairs.in_path, "Tree file")
      ->required()
      ->check(CLI::ExistingFile);
  pairs_cmd->add_option("-m,--count", pairs.count, "Number of pairs");
  pairs_cmd->add_option("--csv", pairs.csv_path, "CSV output file (default stdout)");
  pairs_cmd->add_flag("--verify", pairs.verify, "Fail unless every pair has the exact costs");

  h::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Build-then-pairs rotation benchmark");
  bench_cmd->add_option("--max-rank", bench.max_rank, "Largest even rank");
  bench_cmd->add_option("--csv", bench.csv_path, "CSV output file (default stdout)");

  std::string build_in;
  auto* build_cmd =
      app.add_subcommand("build-seq", "Print and replay the promotion-only insertion order");
  build_cmd->add_option("input,--in", build_in, "Tree file")
      ->required()
      ->check(CLI::ExistingFile);

  std::string validate_in;
  auto* validate_cmd = app.add_subcommand("validate", "Check the AVL rank rule");
  validate_cmd->add_option("input,--in", validate_in, "Tree file")
      ->required()
      ->check(CLI::ExistingFile);

  std::string dump_in;
  std::string dump_format = "text";
  auto* dump_cmd = app.add_subcommand("dump", "Print a tree as text or Graphviz DOT");
  dump_cmd->add_option("input,--in", dump_in, "Tree file")
      ->required()
      ->check(CLI::ExistingFile);
  dump_cmd->add_option("--format", dump_format, "text or dot")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return h::kExitUsage;
  }

  if (*gen_cmd) {
    gen.etype = etypes.at(etype);
    gen.policy = policies.at(policy);
    return h::cmd_gen(gen, std::cout, std::cerr);
  }
  if (*pairs_cmd) return h::cmd_pairs(pairs, std::cout, std::cerr);
  if (*bench_cmd) return h::cmd_bench(bench, std::cout, std::cerr);
  if (*build_cmd) return h::cmd_build_seq(build_in, std::cout, std::cerr);
  if (*validate_cmd) return h::cmd_validate(validate_in, std::cout, std::cerr);
  if (*dump_cmd) return h::cmd_dump(dump_in, formats.at(dump_format), std::cout, std::cerr);
  return h::kExitUsage;
}
