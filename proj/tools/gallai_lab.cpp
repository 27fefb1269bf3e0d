// gallai_lab: longest-path intersection checks from the command line.
//
// Exit status: 0 when every check holds (vacuous findings count as holding),
// 1 when at least one violation was found, 2 on usage, parse or I/O errors.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "gallai/campaign.hpp"
#include "gallai/dot.hpp"
#include "gallai/error.hpp"
#include "gallai/generate.hpp"
#include "gallai/graph6.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

std::set<gallai::CheckKind> parse_open(const std::string& text) {
  if (text.empty()) return {};
  const auto list = gallai::parse_check_list(text);
  return {list.begin(), list.end()};
}

int finish(const gallai::CampaignSummary& summary, const std::set<gallai::CheckKind>& expected_open) {
  std::cerr << summary.to_text();
  return summary.has_violation(expected_open) ? kExitViolation : kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact longest-path enumeration and intersection checks for small graphs"};
  app.require_subcommand(1);

  gallai::EvalOptions eval;
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--path-cap", eval.path_cap, "Longest paths kept per graph")->check(CLI::PositiveNumber);
    cmd->add_option("--triple-cap", eval.triple_cap, "Triples examined per graph")->check(CLI::PositiveNumber);
    cmd->add_option("--node-budget", eval.node_budget, "Search nodes before a graph is skipped (0 = unlimited)");
  };

  std::string config_path, output, open_checks;
  int workers = 0;
  auto* campaign = app.add_subcommand("campaign", "Run a seeded campaign described by a config file");
  campaign->add_option("--config", config_path, "Config file (key = value lines)")->required();
  campaign->add_option("--output", output, "Findings file, overrides the config ('-' for stdout)");
  campaign->add_option("--workers", workers, "Worker threads, overrides the config");
  campaign->add_option("--expected-open", open_checks, "Checks whose violations do not fail the run");

  std::string verify_path, checks_text = "pairwise,triple,gallai";
  auto* verify = app.add_subcommand("verify", "Check every graph6 line of a file");
  verify->add_option("file", verify_path, "graph6 file, one graph per line")->required();
  verify->add_option("--checks", checks_text, "Comma-separated checks");
  verify->add_option("--output", output, "Findings file ('-' for stdout)");
  verify->add_option("--workers", workers, "Worker threads");
  verify->add_option("--expected-open", open_checks, "Checks whose violations do not fail the run");
  add_limits(verify);

  std::string g6, dot_path;
  auto* inspect = app.add_subcommand("inspect", "Describe one graph's longest paths");
  inspect->add_option("graph6", g6, "graph6 text")->required();
  inspect->add_option("--dot", dot_path, "Write Graphviz source with up to 3 longest paths highlighted");
  inspect->add_option("--expected-open", open_checks, "Checks whose violations do not fail the run");
  add_limits(inspect);

  std::string family_name, probability_text = "1/2";
  gallai::GeneratorSpec spec;
  auto* gen = app.add_subcommand("gen", "Print the graph6 line of a generated graph");
  gen->add_option("--family", family_name, "path|cycle|star|spider|complete|random_tree|random_connected")->required();
  gen->add_option("--order", spec.order, "Vertex count");
  gen->add_option("--seed", spec.seed, "Seed for random families");
  gen->add_option("--legs", spec.legs, "Spider leg count");
  gen->add_option("--leg-length", spec.leg_length, "Spider leg length");
  gen->add_option("--p", probability_text, "Edge probability, e.g. 1/4 or 0.25");

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-run every finding of a JSON Lines file and confirm its verdict");
  replay->add_option("findings", replay_path, "Findings file")->required();
  add_limits(replay);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (campaign->parsed()) {
      auto config = gallai::load_config(config_path);
      gallai::apply_env_overrides(config);
      if (!output.empty()) config.output = output;
      if (workers > 0) config.workers = workers;
      if (!open_checks.empty()) config.expected_open = parse_open(open_checks);
      return finish(gallai::run_campaign(config), config.expected_open);
    }

    if (verify->parsed()) {
      const auto checks = gallai::parse_check_list(checks_text);
      const auto open = parse_open(open_checks);
      int threads = workers > 0 ? workers : 1;
      if (const char* env = std::getenv(std::string(gallai::kWorkersEnv).c_str()); env && *env && workers == 0) {
        threads = std::max(1, std::atoi(env));
      }
      if (output.empty() || output == "-") {
        return finish(gallai::verify_file(verify_path, checks, eval, std::cout, threads), open);
      }
      std::ofstream file(output);
      if (!file) throw gallai::Error(gallai::ErrorKind::OutputUnwritable, "cannot write " + output);
      return finish(gallai::verify_file(verify_path, checks, eval, file, threads), open);
    }

    if (inspect->parsed()) {
      const auto g = gallai::parse_graph6(g6);
      const auto open = parse_open(open_checks);
      std::cout << gallai::inspect(g, eval);
      if (!dot_path.empty()) {
        auto report = gallai::enumerate_longest_paths(g, 3, {.prune = true, .node_budget = eval.node_budget});
        std::ofstream dot(dot_path);
        if (!dot) throw gallai::Error(gallai::ErrorKind::OutputUnwritable, "cannot write " + dot_path);
        dot << gallai::to_dot(g, report.paths);
      }
      gallai::CampaignSummary summary;
      for (const auto& f : gallai::evaluate_graph(g, gallai::all_checks(), eval)) summary.add(f);
      return summary.has_violation(open) ? kExitViolation : kExitHolds;
    }

    if (gen->parsed()) {
      const auto family = gallai::family_from_string(family_name);
      if (!family) throw gallai::Error(gallai::ErrorKind::InvalidParams, "unknown family '" + family_name + "'");
      const auto p = gallai::parse_probability(probability_text);
      if (!p) throw gallai::Error(gallai::ErrorKind::InvalidParams, "bad probability '" + probability_text + "'");
      spec.family = *family;
      spec.edge_probability = *p;
      std::cout << gallai::to_graph6(gallai::generate(spec)) << "\n";
      return kExitHolds;
    }

    if (replay->parsed()) {
      std::ifstream in(replay_path);
      if (!in) throw gallai::Error(gallai::ErrorKind::FileUnreadable, "cannot read " + replay_path);
      std::string line;
      int line_no = 0, failed = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto finding = gallai::finding_from_json(nlohmann::json::parse(line));
        if (!gallai::replay_finding(finding, eval)) {
          std::cerr << "line " << line_no << ": finding did not replay\n";
          ++failed;
        }
      }
      std::cerr << line_no << " findings, " << failed << " failed to replay\n";
      return failed == 0 ? kExitHolds : kExitViolation;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
