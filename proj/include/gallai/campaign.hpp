#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gallai/generate.hpp"
#include "gallai/intersect.hpp"
#include "gallai/longest.hpp"

namespace gallai {

enum class CheckKind { Pairwise, Lemma2Vertex, Lemma2Edge, Alignment, InterleaveSurgery, Triple, Gallai };

std::string_view to_string(CheckKind check);
std::optional<CheckKind> check_from_string(std::string_view name);
/// "pairwise,triple" -> {Pairwise, Triple}; throws InvalidConfig on unknown or empty lists.
std::vector<CheckKind> parse_check_list(std::string_view text);
/// Every check, in a fixed order.
std::vector<CheckKind> all_checks();

inline constexpr int kFindingSchemaVersion = 1;
inline constexpr std::string_view kWorkersEnv = "GALLAI_LAB_WORKERS";

/// Search limits shared by every per-graph evaluation.
struct EvalOptions {
  std::size_t path_cap = kDefaultPathCap;
  std::size_t triple_cap = kDefaultTripleCap;
  std::uint64_t node_budget = kDefaultNodeBudget;
  bool record_timing = false;
};

struct CampaignConfig {
  GeneratorSpec generator;  // order and seed are filled in per instance
  int order_min = 0;
  int order_max = 0;
  int instance_count = 1;  // per order
  std::vector<CheckKind> checks;
  EvalOptions eval;
  int workers = 1;
  std::string output = "-";  // "-" is stdout
  std::set<CheckKind> expected_open;
};

/// Reads the key = value config format ('#' starts a comment). Throws InvalidConfig.
CampaignConfig parse_config(std::istream& in);
CampaignConfig load_config(const std::string& path);
void validate_config(const CampaignConfig& config);
/// Applies GALLAI_LAB_WORKERS when it is set.
void apply_env_overrides(CampaignConfig& config);

/// One (graph, check) record of a campaign.
struct Finding {
  std::string graph6;
  std::string check;
  bool holds = true;
  bool vacuous = false;
  bool capped = false;
  std::optional<Witness> witness;
  int order_L = 0;
  std::size_t longest_path_count = 0;
  std::int64_t elapsed_micros = 0;
  std::string note;
};

nlohmann::ordered_json to_json(const Finding& finding);
Finding finding_from_json(const nlohmann::json& j);
/// One JSON Lines record, without the trailing newline.
std::string to_json_line(const Finding& finding);

/// Runs every requested check on g from a single enumeration.
///
/// Disconnected graphs, graphs exceeding the node budget, and checks that
/// need a complete report when the path cap was hit yield vacuous findings
/// with an explanatory note.
std::vector<Finding> evaluate_graph(const Graph& g, std::span<const CheckKind> checks, const EvalOptions& options);

/// Re-runs the finding's check on its decoded graph; true iff holds and
/// vacuous agree and, for violations, the stored witness replays.
bool replay_finding(const Finding& finding, const EvalOptions& options);

struct CheckTally {
  std::size_t holds = 0;
  std::size_t violations = 0;
  std::size_t vacuous = 0;
  std::size_t capped = 0;
};

struct CampaignSummary {
  std::size_t graphs = 0;
  std::map<std::string, CheckTally> per_check;

  void add(const Finding& finding);
  /// True iff some check outside `expected_open` has a violation.
  bool has_violation(const std::set<CheckKind>& expected_open = {}) const;
  std::string to_text() const;
};

/// The seed used for instance `index` at `order`, derived from the template seed.
std::uint64_t instance_seed(std::uint64_t base, int order, int index);

/// Generates the configured instances and writes one JSON line per finding.
/// With one worker the output is byte-identical across runs.
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out);
/// As above, writing to config.output. Throws OutputUnwritable.
CampaignSummary run_campaign(const CampaignConfig& config);

/// Evaluates each graph6 line of a file (blank lines skipped).
/// Throws ParseError naming the 1-based line, or FileUnreadable.
CampaignSummary verify_file(const std::string& path, std::span<const CheckKind> checks, const EvalOptions& options,
                            std::ostream& out, int workers = 1);

/// Human-readable summary of one graph: order_L, longest paths, Gallai set
/// and every check verdict. Throws DisconnectedGraph.
std::string inspect(const Graph& g, const EvalOptions& options);

}  // namespace gallai
