#include "gallai/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gallai/error.hpp"
#include "gallai/graph6.hpp"
#include "gallai/prng.hpp"
#include "gallai/surgery.hpp"

namespace gallai {
namespace {

constexpr std::array<std::pair<CheckKind, std::string_view>, 7> kCheckNames{{
    {CheckKind::Pairwise, "pairwise"},
    {CheckKind::Lemma2Vertex, "lemma2_vertex"},
    {CheckKind::Lemma2Edge, "lemma2_edge"},
    {CheckKind::Alignment, "alignment"},
    {CheckKind::InterleaveSurgery, "interleave_surgery"},
    {CheckKind::Triple, "triple"},
    {CheckKind::Gallai, "gallai"},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value) {
  Int out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw Error(ErrorKind::InvalidConfig, "key '" + std::string(key) + "' expects an integer, got '" + std::string(value) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw Error(ErrorKind::InvalidConfig, "key '" + std::string(key) + "' expects on/off");
}

CheckVerdict run_check(CheckKind check, const Graph& g, const LongestPathReport& report, const EvalOptions& options) {
  switch (check) {
    case CheckKind::Pairwise: return pairwise_check(g, report);
    case CheckKind::Lemma2Vertex: return lemma2_check(g, report, ParityConvention::VertexCount);
    case CheckKind::Lemma2Edge: return lemma2_check(g, report, ParityConvention::EdgeCount);
    case CheckKind::Alignment: return index_alignment_check(g, report);
    case CheckKind::InterleaveSurgery: return interleave_surgery_check(g, report, options.triple_cap);
    case CheckKind::Triple: return triple_check(g, report, options.triple_cap);
    case CheckKind::Gallai: return gallai_check(g, report);
  }
  throw std::logic_error("unhandled check");
}

nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["paths"] = nlohmann::ordered_json::array();
  for (const auto& p : w.paths) j["paths"].push_back(p.vertices());
  j["vertices"] = w.vertices;
  j["indices"] = w.indices;
  j["detail"] = w.detail;
  return j;
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  for (const auto& p : j.at("paths")) w.paths.emplace_back(p.get<std::vector<Vertex>>());
  w.vertices = j.at("vertices").get<std::vector<Vertex>>();
  w.indices = j.at("indices").get<std::vector<int>>();
  w.detail = j.at("detail").get<std::string>();
  return w;
}

class FindingSink {
 public:
  explicit FindingSink(std::ostream& out) : out_(out) {}

  void write(const std::vector<Finding>& findings) {
    std::lock_guard lock(mutex_);
    ++summary_.graphs;
    for (const auto& f : findings) {
      out_ << to_json_line(f) << '\n';
      summary_.add(f);
    }
    out_.flush();
  }

  CampaignSummary summary() const { return summary_; }

 private:
  std::ostream& out_;
  std::mutex mutex_;
  CampaignSummary summary_;
};

// Calls work(i) for i in [0, count). A single worker runs in order on the
// calling thread; otherwise threads pull indices from a shared counter.
void for_each_index(std::size_t count, int workers, const std::function<void(std::size_t)>& work) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Finding skipped(const std::string& g6, CheckKind check, std::string note) {
  Finding f;
  f.graph6 = g6;
  f.check = std::string(to_string(check));
  f.vacuous = true;
  f.note = std::move(note);
  return f;
}

}  // namespace

std::string_view to_string(CheckKind check) {
  for (const auto& [c, name] : kCheckNames) {
    if (c == check) return name;
  }
  return "unknown";
}

std::optional<CheckKind> check_from_string(std::string_view name) {
  for (const auto& [c, n] : kCheckNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::vector<CheckKind> all_checks() {
  std::vector<CheckKind> out;
  for (const auto& [c, name] : kCheckNames) out.push_back(c);
  return out;
}

std::vector<CheckKind> parse_check_list(std::string_view text) {
  std::vector<CheckKind> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) {
      auto check = check_from_string(item);
      if (!check) throw Error(ErrorKind::InvalidConfig, "unknown check '" + std::string(item) + "'");
      if (std::find(out.begin(), out.end(), *check) == out.end()) out.push_back(*check);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidConfig, "check list is empty");
  return out;
}

CampaignConfig parse_config(std::istream& in) {
  CampaignConfig config;
  bool have_min = false, have_max = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));

    if (key == "family") {
      auto family = family_from_string(value);
      if (!family) throw Error(ErrorKind::InvalidConfig, "unknown family '" + std::string(value) + "'");
      config.generator.family = *family;
    } else if (key == "order") {
      config.order_min = config.order_max = parse_int<int>(key, value);
      have_min = have_max = true;
    } else if (key == "order_min") {
      config.order_min = parse_int<int>(key, value);
      have_min = true;
    } else if (key == "order_max") {
      config.order_max = parse_int<int>(key, value);
      have_max = true;
    } else if (key == "instances") {
      config.instance_count = parse_int<int>(key, value);
    } else if (key == "seed") {
      config.generator.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "legs") {
      config.generator.legs = parse_int<int>(key, value);
    } else if (key == "leg_length") {
      config.generator.leg_length = parse_int<int>(key, value);
    } else if (key == "edge_probability") {
      auto p = parse_probability(value);
      if (!p) throw Error(ErrorKind::InvalidConfig, "edge_probability must be a fraction in [0, 1]");
      config.generator.edge_probability = *p;
    } else if (key == "checks") {
      config.checks = parse_check_list(value);
    } else if (key == "expected_open") {
      const auto open = parse_check_list(value);
      config.expected_open = {open.begin(), open.end()};
    } else if (key == "path_cap") {
      config.eval.path_cap = parse_int<std::size_t>(key, value);
    } else if (key == "triple_cap") {
      config.eval.triple_cap = parse_int<std::size_t>(key, value);
    } else if (key == "node_budget") {
      config.eval.node_budget = parse_int<std::uint64_t>(key, value);
    } else if (key == "workers") {
      config.workers = parse_int<int>(key, value);
    } else if (key == "output") {
      config.output = std::string(value);
    } else if (key == "timing") {
      config.eval.record_timing = parse_bool(key, value);
    } else {
      throw Error(ErrorKind::InvalidConfig, "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (config.generator.family != Family::Spider && (!have_min || !have_max)) {
    throw Error(ErrorKind::InvalidConfig, "order (or order_min and order_max) is required");
  }
  validate_config(config);
  return config;
}

CampaignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileUnreadable, "cannot read config " + path);
  return parse_config(in);
}

void validate_config(const CampaignConfig& c) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::InvalidConfig, what);
  };
  require(!c.checks.empty(), "checks must be nonempty");
  require(c.instance_count >= 1, "instances must be at least 1");
  require(c.eval.path_cap >= 1 && c.eval.triple_cap >= 1, "caps must be at least 1");
  require(c.workers >= 1, "workers must be at least 1");
  if (c.generator.family != Family::Spider) {
    require(c.order_min >= 1 && c.order_min <= c.order_max && c.order_max <= kGraph6MaxOrder,
            "order range must satisfy 1 <= order_min <= order_max <= 62");
  }
}

void apply_env_overrides(CampaignConfig& config) {
  const char* raw = std::getenv(std::string(kWorkersEnv).c_str());
  if (raw == nullptr || *raw == '\0') return;
  config.workers = parse_int<int>(kWorkersEnv, raw);
  validate_config(config);
}

nlohmann::ordered_json to_json(const Finding& f) {
  nlohmann::ordered_json j;
  j["schema"] = kFindingSchemaVersion;
  j["graph6"] = f.graph6;
  j["check"] = f.check;
  j["holds"] = f.holds;
  j["vacuous"] = f.vacuous;
  j["capped"] = f.capped;
  j["witness"] = f.witness ? witness_to_json(*f.witness) : nlohmann::ordered_json(nullptr);
  j["order_L"] = f.order_L;
  j["longest_path_count"] = f.longest_path_count;
  j["elapsed_micros"] = f.elapsed_micros;
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

Finding finding_from_json(const nlohmann::json& j) {
  Finding f;
  f.graph6 = j.at("graph6").get<std::string>();
  f.check = j.at("check").get<std::string>();
  f.holds = j.at("holds").get<bool>();
  f.vacuous = j.at("vacuous").get<bool>();
  f.capped = j.value("capped", false);
  if (!j.at("witness").is_null()) f.witness = witness_from_json(j.at("witness"));
  f.order_L = j.at("order_L").get<int>();
  f.longest_path_count = j.at("longest_path_count").get<std::size_t>();
  f.elapsed_micros = j.at("elapsed_micros").get<std::int64_t>();
  f.note = j.value("note", std::string{});
  return f;
}

std::string to_json_line(const Finding& finding) { return to_json(finding).dump(); }

std::vector<Finding> evaluate_graph(const Graph& g, std::span<const CheckKind> checks, const EvalOptions& options) {
  using Clock = std::chrono::steady_clock;
  const std::string g6 = to_graph6(g);
  std::vector<Finding> out;
  auto skip_all = [&](const std::string& note) {
    for (CheckKind c : checks) out.push_back(skipped(g6, c, note));
    return out;
  };
  if (g.empty() || !is_connected(g)) return skip_all("disconnected graph skipped");

  const auto start = Clock::now();
  LongestPathReport report;
  try {
    report = enumerate_longest_paths(g, options.path_cap, {.prune = true, .node_budget = options.node_budget});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NodeBudgetExceeded) throw;
    return skip_all("node budget exceeded");
  }
  const auto enumerated = Clock::now();

  for (CheckKind c : checks) {
    const auto check_start = Clock::now();
    Finding f;
    f.graph6 = g6;
    f.check = std::string(to_string(c));
    f.order_L = report.order_L;
    f.longest_path_count = report.paths.size();
    try {
      const CheckVerdict v = run_check(c, g, report, options);
      f.holds = v.holds;
      f.vacuous = v.vacuous;
      f.capped = v.capped;
      f.witness = v.witness;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TruncatedReport) throw;
      f.vacuous = true;
      f.capped = true;
      f.note = "path cap reached; check needs every longest path";
    }
    if (options.record_timing) {
      const auto spent = (enumerated - start) + (Clock::now() - check_start);
      f.elapsed_micros = std::chrono::duration_cast<std::chrono::microseconds>(spent).count();
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool replay_finding(const Finding& finding, const EvalOptions& options) {
  const auto check = check_from_string(finding.check);
  if (!check) return false;
  const Graph g = parse_graph6(finding.graph6);
  const std::array<CheckKind, 1> one{*check};
  const auto again = evaluate_graph(g, one, options);
  const Finding& f = again.front();
  if (f.holds != finding.holds || f.vacuous != finding.vacuous) return false;
  if (finding.holds) return !finding.witness.has_value();
  if (!finding.witness) return false;
  CheckVerdict stored{.property = finding.check, .holds = false, .witness = finding.witness};
  return *check == CheckKind::InterleaveSurgery ? replay_interleave_witness(g, stored) : replay_witness(g, stored);
}

void CampaignSummary::add(const Finding& f) {
  auto& tally = per_check[f.check];
  if (!f.holds) {
    ++tally.violations;
  } else if (f.vacuous) {
    ++tally.vacuous;
  } else {
    ++tally.holds;
  }
  if (f.capped) ++tally.capped;
}

bool CampaignSummary::has_violation(const std::set<CheckKind>& expected_open) const {
  for (const auto& [name, tally] : per_check) {
    const auto check = check_from_string(name);
    if (tally.violations > 0 && !(check && expected_open.contains(*check))) return true;
  }
  return false;
}

std::string CampaignSummary::to_text() const {
  std::ostringstream out;
  out << "graphs: " << graphs << "\n";
  for (const auto& [name, t] : per_check) {
    out << name << ": holds=" << t.holds << " violations=" << t.violations << " vacuous=" << t.vacuous
        << " capped=" << t.capped << "\n";
  }
  return out.str();
}

std::uint64_t instance_seed(std::uint64_t base, int order, int index) {
  std::uint64_t state = base ^ (static_cast<std::uint64_t>(order) << 32) ^ static_cast<std::uint64_t>(index);
  return splitmix64(state);
}

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream& out) {
  validate_config(config);
  std::vector<GeneratorSpec> specs;
  const bool ordered_family = config.generator.family != Family::Spider;
  const int lo = ordered_family ? config.order_min : 0;
  const int hi = ordered_family ? config.order_max : 0;
  for (int order = lo; order <= hi; ++order) {
    for (int i = 0; i < config.instance_count; ++i) {
      GeneratorSpec spec = config.generator;
      if (ordered_family) spec.order = order;
      spec.seed = instance_seed(config.generator.seed, order, i);
      specs.push_back(spec);
    }
  }

  FindingSink sink(out);
  for_each_index(specs.size(), config.workers, [&](std::size_t i) {
    const Graph g = generate(specs[i]);
    sink.write(evaluate_graph(g, config.checks, config.eval));
  });
  return sink.summary();
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  if (config.output.empty() || config.output == "-") return run_campaign(config, std::cout);
  std::ofstream file(config.output);
  if (!file) throw Error(ErrorKind::OutputUnwritable, "cannot write findings to " + config.output);
  auto summary = run_campaign(config, file);
  if (!file) throw Error(ErrorKind::OutputUnwritable, "write to " + config.output + " failed");
  return summary;
}

CampaignSummary verify_file(const std::string& path, std::span<const CheckKind> checks, const EvalOptions& options,
                            std::ostream& out, int workers) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileUnreadable, "cannot read " + path);
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      graphs.push_back(parse_graph6(trim(line)));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, path + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  FindingSink sink(out);
  for_each_index(graphs.size(), workers, [&](std::size_t i) { sink.write(evaluate_graph(graphs[i], checks, options)); });
  return sink.summary();
}

std::string inspect(const Graph& g, const EvalOptions& options) {
  if (g.empty() || !is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "inspect requires a connected graph");
  const auto report = enumerate_longest_paths(g, options.path_cap, {.prune = true, .node_budget = options.node_budget});
  std::ostringstream out;
  out << "graph6: " << to_graph6(g) << "\n";
  out << "order: " << g.order() << "  edges: " << g.edge_count() << "\n";
  out << "order_L: " << report.order_L << "\n";
  out << "longest paths: " << report.paths.size() << (report.truncated ? " (truncated)" : "") << "\n";
  for (std::size_t i = 0; i < report.paths.size() && i < 10; ++i) out << "  " << report.paths[i].to_string() << "\n";
  if (report.paths.size() > 10) out << "  ...\n";
  if (!report.truncated) {
    out << "gallai set: {";
    const auto common = gallai_set(report);
    for (std::size_t i = 0; i < common.size(); ++i) out << (i ? "," : "") << common[i];
    out << "}\n";
  }
  out << "checks:\n";
  for (const auto& f : evaluate_graph(g, all_checks(), options)) {
    out << "  " << f.check << ": " << (f.holds ? "holds" : "VIOLATED") << (f.vacuous ? " (vacuous)" : "")
        << (f.capped ? " (capped)" : "");
    if (f.witness) out << "  witness: " << witness_to_json(*f.witness).dump();
    out << "\n";
  }
  return out.str();
}

}  // namespace gallai
