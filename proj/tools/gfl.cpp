// gfl: build, verify and decompose fan-free Gallai colorings, and re-run the
// finite searches.
//
// Exit codes: 0 ok / Exhausted, 2 violation / Witness, 3 BudgetExceeded,
// 1 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gfl/coloring.hpp"
#include "gfl/constructions.hpp"
#include "gfl/detect.hpp"
#include "gfl/errors.hpp"
#include "gfl/gallai.hpp"
#include "gfl/report.hpp"
#include "gfl/search.hpp"

using namespace gfl;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_violation = 2;
constexpr int exit_budget = 3;

struct Common {
  std::string command;
  bool deterministic = false;
};

struct BudgetFlags {
  std::optional<std::uint64_t> nodes;
  std::optional<double> seconds;
  unsigned threads = 0;
  std::string edge_order = "lex";
  unsigned split_depth = 4;

  [[nodiscard]] auto budget() const -> SearchBudget {
    if (!nodes && !seconds)
      return SearchBudget::none();
    return {nodes, seconds, false};
  }

  [[nodiscard]] auto options(bool deterministic) const -> SearchOptions {
    SearchOptions o;
    o.deterministic = deterministic;
    o.threads = threads;
    o.split_depth = split_depth;
    o.order = edge_order == "vertex" ? EdgeOrder::VertexIncremental : EdgeOrder::Lexicographic;
    return o;
  }
};

void add_budget_flags(CLI::App *cmd, BudgetFlags &f) {
  cmd->add_option("--budget-nodes", f.nodes, "stop after this many search nodes");
  cmd->add_option("--timeout-secs", f.seconds, "stop after this many seconds");
  cmd->add_option("--threads", f.threads, "worker threads (default: GFL_THREADS or all cores)");
  cmd->add_option("--edge-order", f.edge_order, "edge order: lex or vertex")
      ->check(CLI::IsMember({"lex", "vertex"}));
  cmd->add_option("--split-depth", f.split_depth, "variables fixed per parallel task");
}

auto verdict_exit(Verdict v) -> int {
  switch (v) {
  case Verdict::Exhausted:
    return exit_ok;
  case Verdict::Witness:
    return exit_violation;
  case Verdict::BudgetExceeded:
    return exit_budget;
  }
  return exit_usage;
}

auto read_bytes(const std::string &path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

auto header(const Common &c) -> Json { return {{"command", c.command}}; }

void emit(const Json &j) { std::cout << j.dump(2) << '\n'; }

auto certificates_of(const VerifyReport &r) -> Json {
  auto certs = Json::array();
  if (r.rainbow)
    certs.push_back(to_json(*r.rainbow));
  for (const auto &f : r.fans)
    if (f.fan)
      certs.push_back(to_json(*f.fan));
  return certs;
}

auto timed_seconds(std::chrono::steady_clock::time_point t0) -> double {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

auto cmd_construct(const Common &c, const ConstructionSpec &spec, bool verify_flag,
                   const std::string &out) -> int {
  auto t0 = std::chrono::steady_clock::now();
  auto g = construct(spec);
  auto text = serialize_gcg(g);
  {
    std::ofstream os(out, std::ios::binary);
    if (!os)
      throw Error("cannot write " + out);
    os << text;
  }
  auto j = header(c);
  j["family"] = family_name(spec.family);
  j["k"] = spec.k;
  if (spec.family == Family::FnGeneral)
    j["n"] = spec.n;
  j["output"] = out;
  j["output_digest"] = sha256_digest(text);
  j["order"] = g.order();
  j["palette"] = g.palette();
  int code = exit_ok;
  if (verify_flag) {
    auto m = fan_target(spec);
    auto r = verify(g, m, true);
    j["fan_order"] = m;
    j["verdict"] = r.ok() ? "ok" : "violation";
    j["certificates"] = certificates_of(r);
    code = r.ok() ? exit_ok : exit_violation;
  } else {
    j["verdict"] = "unchecked";
  }
  if (!c.deterministic)
    j["elapsed_seconds"] = timed_seconds(t0);
  emit(j);
  return code;
}

auto cmd_verify(const Common &c, const std::string &path, unsigned m, bool rainbow,
                bool max_order) -> int {
  auto t0 = std::chrono::steady_clock::now();
  auto bytes = read_bytes(path);
  auto g = parse_gcg(bytes);
  auto r = verify(g, m, rainbow, max_order);
  auto j = header(c);
  j["input"] = path;
  j["input_digest"] = sha256_digest(bytes);
  j["order"] = g.order();
  j["palette"] = g.palette();
  j["fan_order"] = m;
  j["verdict"] = r.ok() ? "ok" : "violation";
  j["certificates"] = certificates_of(r);
  j["report"] = to_json(r);
  if (!c.deterministic)
    j["elapsed_seconds"] = timed_seconds(t0);
  emit(j);
  return r.ok() ? exit_ok : exit_violation;
}

auto cmd_partition(const Common &c, const std::string &path) -> int {
  auto t0 = std::chrono::steady_clock::now();
  auto bytes = read_bytes(path);
  auto g = parse_gcg(bytes);
  auto j = header(c);
  j["input"] = path;
  j["input_digest"] = sha256_digest(bytes);
  j["order"] = g.order();
  int code = exit_ok;
  try {
    auto p = find_gallai_partition(g);
    j["verdict"] = "ok";
    j["partition"] = to_json(p);
    j["reduced"] = serialize_gcg(quotient(g, p));
  } catch (const RainbowPresent &e) {
    j["verdict"] = "violation";
    j["certificates"] = Json::array({to_json(e.triangle())});
    code = exit_violation;
  }
  if (!c.deterministic)
    j["elapsed_seconds"] = timed_seconds(t0);
  emit(j);
  return code;
}

auto cmd_table(const std::string &family, unsigned n, unsigned k_max, const std::string &format,
               const Common &c) -> int {
  BoundFamily f = family == "f2" ? BoundFamily::F2 : family == "f3" ? BoundFamily::F3 : BoundFamily::Fn;
  auto t = bound_table(f, k_max, n);
  if (format == "text") {
    std::cout << format_table_text(t);
  } else {
    auto j = header(c);
    j["table"] = to_json(t);
    emit(j);
  }
  return exit_ok;
}

auto emit_outcome(const Common &c, Json j, const SearchOutcome &o) -> int {
  j["outcome"] = to_json(o, !c.deterministic);
  j["verdict"] = verdict_name(o.verdict);
  emit(j);
  return verdict_exit(o.verdict);
}

auto cmd_search(const Common &c, unsigned m, unsigned n, const BudgetFlags &f) -> int {
  auto o = ramsey2_decide(m, n, f.budget(), f.options(c.deterministic));
  auto j = header(c);
  j["fan_order"] = m;
  j["order"] = n;
  return emit_outcome(c, j, o);
}

auto cmd_check(const Common &c, const std::string &name, const BudgetFlags &f) -> int {
  auto budget = f.budget();
  auto opts = f.options(c.deterministic);
  SearchOutcome o;
  if (name == "fact-k7")
    o = check_fact_k7();
  else if (name == "claim-f1")
    o = check_claim_f1(budget);
  else if (name == "f2k8")
    o = check_claim_f2k8(budget, opts);
  else if (name == "r-f1")
    o = check_ramsey_value(1, 6, budget, opts);
  else if (name == "r-f2")
    o = check_ramsey_value(2, 9, budget, opts);
  else
    o = check_ramsey_value(3, 13, budget, opts);
  auto j = header(c);
  j["claim"] = name;
  return emit_outcome(c, j, o);
}

} // namespace

auto main(int argc, char **argv) -> int {
  CLI::App app{"Gallai colorings without monochromatic fans"};
  app.require_subcommand(1);
  Common common;
  for (int i = 0; i < argc; ++i)
    common.command += (i ? " " : "") + std::string(i ? argv[i] : "gfl");

  auto *construct_cmd = app.add_subcommand("construct", "build an extremal coloring");
  std::string family;
  ConstructionSpec spec;
  bool verify_flag = false;
  std::string out_path;
  construct_cmd->add_option("--family", family, "f2-odd, f2-even, f2-useful, f3 or fn")
      ->required()
      ->check(CLI::IsMember({"f2-odd", "f2-even", "f2-useful", "f3", "fn"}));
  construct_cmd->add_option("--k", spec.k, "colors (iterations for f2-useful)")->required();
  construct_cmd->add_option("--n", spec.n, "fan order for fn");
  construct_cmd->add_flag("--verify", verify_flag, "check freeness after building");
  construct_cmd->add_option("-o,--output", out_path, "output .gcg file")->required();

  auto *verify_cmd = app.add_subcommand("verify", "detect rainbow triangles and fans");
  std::string in_path;
  unsigned fan = 2;
  bool rainbow = false, max_order = false;
  verify_cmd->add_option("file", in_path, "input .gcg file")->required();
  verify_cmd->add_option("--fan", fan, "fan order m")->required()->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--rainbow", rainbow, "also look for a rainbow triangle");
  verify_cmd->add_flag("--max-order", max_order, "report the largest fan per color");

  auto *partition_cmd = app.add_subcommand("partition", "find a Gallai partition");
  partition_cmd->add_option("file", in_path, "input .gcg file")->required();

  auto *table_cmd = app.add_subcommand("table", "closed-form bound table");
  std::string table_family, format = "json";
  unsigned table_n = 0, k_max = 0;
  table_cmd->add_option("--family", table_family, "f2, f3 or fn")
      ->required()
      ->check(CLI::IsMember({"f2", "f3", "fn"}));
  table_cmd->add_option("--n", table_n, "fan order for fn");
  table_cmd->add_option("--k-max", k_max, "largest k")->required();
  table_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto *search_cmd = app.add_subcommand("search", "exhaustive searches");
  search_cmd->require_subcommand(1);
  auto *ramsey_cmd = search_cmd->add_subcommand("ramsey", "decide R(F_m, F_m) <= n");
  unsigned order = 0;
  BudgetFlags flags;
  ramsey_cmd->add_option("--fan", fan, "fan order m")->required()->check(CLI::PositiveNumber);
  ramsey_cmd->add_option("--order", order, "number of vertices")->required();
  add_budget_flags(ramsey_cmd, flags);

  auto *check_cmd = app.add_subcommand("check", "re-verify a finite claim");
  check_cmd->require_subcommand(1);
  auto *claim_cmd = check_cmd->add_subcommand("claim", "run one claim check");
  std::string claim;
  claim_cmd->add_option("--name", claim, "f2k8, fact-k7, claim-f1, r-f1, r-f2 or r-f3")
      ->required()
      ->check(CLI::IsMember({"f2k8", "fact-k7", "claim-f1", "r-f1", "r-f2", "r-f3"}));
  add_budget_flags(claim_cmd, flags);

  for (auto *cmd : {construct_cmd, verify_cmd, partition_cmd, table_cmd, ramsey_cmd, claim_cmd})
    cmd->add_flag("--deterministic", common.deterministic,
                  "single-threaded search and no timing in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*construct_cmd) {
      spec.family = parse_family(family);
      return cmd_construct(common, spec, verify_flag, out_path);
    }
    if (*verify_cmd)
      return cmd_verify(common, in_path, fan, rainbow, max_order);
    if (*partition_cmd)
      return cmd_partition(common, in_path);
    if (*table_cmd)
      return cmd_table(table_family, table_n, k_max, format, common);
    if (*ramsey_cmd)
      return cmd_search(common, fan, order, flags);
    if (*claim_cmd)
      return cmd_check(common, claim, flags);
  } catch (const Error &e) {
    std::cerr << "gfl: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
