// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcount/counters.h"
#include "pcount/errors.h"
#include "pcount/graph.h"
#include "pcount/reductions.h"
#include "pcount/trace_json.h"
#include "pcount/verify.h"

namespace pcount::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream text;
    text << std::cin.rdbuf();
    return text.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteOutput(const RunConfig& cfg, const std::string& text,
                 std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw ParseError("cannot write '" + cfg.output + "'");
  file << text;
}

void RequireK(const RunConfig& cfg) {
  if (cfg.k < 0) throw std::invalid_argument("--k is required");
}

void Emit(Json doc, const RunConfig& cfg, std::ostream& out) {
  doc["sigma"] = cfg.sigma;
  doc["seed"] = cfg.seed;
  out << doc.dump() << '\n';
}

ApexWeightedGraph ApexInput(const GraphFile& file, const RunConfig& cfg) {
  ApexWeightedGraph g = file.apex
                            ? ApexWeightedGraph{file.graph, *file.apex,
                                                file.weight}
                            : AddApex(file.graph);
  if (cfg.z >= 0) g.z = static_cast<std::uint64_t>(cfg.z);
  return g;
}

int CmdCount(const RunConfig& cfg, std::ostream& out) {
  const GraphFile file = ParseGraph(ReadInput(cfg.input));
  Json doc;
  doc["problem"] = cfg.problem;
  if (cfg.problem == "forest-poly") {
    std::optional<int> degree;
    if (cfg.k >= 0) degree = cfg.k;
    const IntPoly p = ForestPolynomial(file.graph, degree);
    doc["k"] = cfg.k >= 0 ? Json(cfg.k) : Json(nullptr);
    doc["coefficients"] = TraceValueToJson(p);
    Emit(std::move(doc), cfg, out);
    return kOk;
  }
  RequireK(cfg);
  doc["k"] = cfg.k;
  Count count;
  if (cfg.problem == "matchings") {
    count = CountKMatchings(file.graph, cfg.k);
  } else if (cfg.problem == "trees") {
    count = CountKTrees(file.graph, cfg.k);
  } else if (cfg.problem == "forests") {
    count = CountKForests(file.graph, cfg.k);
  } else if (cfg.problem == "wtrees") {
    const ApexWeightedGraph g = ApexInput(file, cfg);
    doc["z"] = g.z;
    count = WeightedTreeSum(g, cfg.k);
  } else {
    throw std::invalid_argument("unknown problem '" + cfg.problem + "'");
  }
  doc["count"] = count.str();
  Emit(std::move(doc), cfg, out);
  return kOk;
}

BaseCountMethod ParseMethod(const std::string& method) {
  if (method == "fpt") return BaseCountMethod::kFpt;
  if (method == "brute") return BaseCountMethod::kBrute;
  if (method == "auto") return BaseCountMethod::kAuto;
  throw std::invalid_argument("unknown method '" + method + "'");
}

int CmdMatroid(const RunConfig& cfg, std::ostream& out) {
  const std::string text = ReadInput(cfg.input);
  if (cfg.action == "from-graph") {
    WriteOutput(cfg, FormatMatroid(FromIncidence(ParseGraph(text).graph)), out);
    return kOk;
  }
  const LinearMatroid m = ParseMatroid(text);
  if (cfg.action == "rref") {
    WriteOutput(cfg, FormatMatroid(Normalize(m)), out);
  } else if (cfg.action == "dual") {
    WriteOutput(cfg, FormatMatroid(Dualize(m)), out);
  } else if (cfg.action == "truncate") {
    RequireK(cfg);
    const LinearMatroid t = Truncate(m, cfg.k, cfg.sigma, cfg.seed);
    WriteOutput(cfg,
                "# truncation k " + std::to_string(cfg.k) + " sigma " +
                    std::to_string(cfg.sigma) + " seed " +
                    std::to_string(cfg.seed) + "\n" + FormatMatroid(t),
                out);
  } else if (cfg.action == "count-bases") {
    const Count bases = CountBases(m, ParseMethod(cfg.method), cfg.limits);
    const int rank = MatroidRank(m);
    Json doc;
    doc["rank"] = rank;
    doc["nullity"] = m.size() - rank;
    doc["bases"] = bases.str();
    doc["method"] = cfg.method;
    Emit(std::move(doc), cfg, out);
  } else {
    throw std::invalid_argument("unknown matroid action '" + cfg.action + "'");
  }
  return kOk;
}

int CmdReduce(const RunConfig& cfg, std::ostream& out) {
  RequireK(cfg);
  const GraphFile file = ParseGraph(ReadInput(cfg.input));
  PipelineResult result;
  Json doc;
  doc["pipeline"] = cfg.action;
  doc["k"] = cfg.k;
  if (cfg.action == "matchings-via-wtrees") {
    result = MatchingsViaWeightedTrees(file.graph, cfg.k,
                                       ExactWeightedTreeOracle());
  } else if (cfg.action == "wtrees-via-trees") {
    const ApexWeightedGraph g = ApexInput(file, cfg);
    doc["z"] = g.z;
    result = WeightedTreesViaTrees(g, cfg.k, g.z, ExactTreeOracle());
  } else if (cfg.action == "matchings-via-forest-prefix") {
    result = MatchingsViaForestPrefix(file.graph, cfg.k,
                                      ExactForestPrefixOracle());
  } else if (cfg.action == "forests-via-bases") {
    BasesPipelineOptions options;
    if (cfg.param == "rank") {
      options.param = BaseParameter::kRank;
    } else if (cfg.param == "nullity") {
      options.param = BaseParameter::kNullity;
    } else {
      throw std::invalid_argument("--param must be rank or nullity");
    }
    doc["param"] = cfg.param;
    options.sigma = cfg.sigma;
    options.seed = cfg.seed;
    options.verify_limits = cfg.limits;
    result = ForestsViaBases(file.graph, cfg.k, ExactBaseCountOracle(cfg.limits),
                             options);
  } else {
    throw std::invalid_argument("unknown pipeline '" + cfg.action + "'");
  }
  doc["count"] = result.count.str();
  doc["oracle_calls"] = result.trace.oracle_calls.size();
  if (!cfg.trace.empty()) {
    std::ofstream trace(cfg.trace);
    if (!trace) throw ParseError("cannot write '" + cfg.trace + "'");
    trace << TraceToJson(result.trace).dump(2) << '\n';
  }
  Emit(std::move(doc), cfg, out);
  return kOk;
}

int CmdVerify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.max_n = cfg.max_n;
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  if (options.max_n < 1 || options.max_n > 6) {
    throw std::invalid_argument("--max-n must be in 1..6");
  }
  if (options.trials < 0) throw std::invalid_argument("--trials must be >= 0");
  std::vector<SuiteReport> reports;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "poly") reports.push_back(VerifyPoly(options));
  if (all || cfg.suite == "matroid") reports.push_back(VerifyMatroid(options));
  if (all || cfg.suite == "pipelines") {
    reports.push_back(VerifyPipelines(options));
  }
  if (reports.empty()) {
    throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  }
  bool ok = true;
  Json doc;
  for (const SuiteReport& r : reports) {
    ok = ok && r.ok();
    if (cfg.json) {
      doc["suites"][r.name] = {{"passed", r.passed},
                               {"failed", r.failed},
                               {"failures", r.failures}};
      continue;
    }
    out << r.name << ": " << r.passed << " passed, " << r.failed
        << " failed\n";
    for (const std::string& f : r.failures) out << "  FAIL " << f << '\n';
  }
  if (cfg.json) {
    doc["ok"] = ok;
    Emit(std::move(doc), cfg, out);
  } else {
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kOk : kVerifyFailed;
}

void AddInput(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("input", cfg.input, "graph, matrix or matroid file ('-' for stdin)")
      ->required();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact counting of matchings, trees, forests and matroid bases",
               "pcount"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-subsets", cfg.limits.max_subsets,
                 "cap on subset checks per scan");
  app.add_option("--max-column-values", cfg.limits.max_column_values,
                 "cap on s^k for distinct-column base counting");
  app.add_flag("--json", cfg.json, "JSON output for verify");

  auto* count = app.add_subcommand("count", "exact counters");
  count->add_option("--problem", cfg.problem)
      ->required()
      ->check(CLI::IsMember(
          {"matchings", "trees", "forests", "wtrees", "forest-poly"}));
  count->add_option("--k", cfg.k, "edge count (max degree for forest-poly)");
  count->add_option("--z", cfg.z, "apex weight for wtrees")->check(CLI::NonNegativeNumber);
  AddInput(count, cfg);

  auto* matroid = app.add_subcommand("matroid", "linear matroid operations");
  matroid->require_subcommand(1);
  for (const char* action : {"from-graph", "rref", "dual", "truncate",
                             "count-bases"}) {
    auto* sub = matroid->add_subcommand(action);
    sub->add_option("--output,-o", cfg.output, "write the result here");
    AddInput(sub, cfg);
    if (std::string(action) == "truncate") {
      sub->add_option("--k", cfg.k)->required();
      sub->add_option("--sigma", cfg.sigma)->check(CLI::NonNegativeNumber);
      sub->add_option("--seed", cfg.seed);
    }
    if (std::string(action) == "count-bases") {
      sub->add_option("--method", cfg.method)
          ->check(CLI::IsMember({"fpt", "brute", "auto"}));
    }
  }

  auto* reduce = app.add_subcommand("reduce", "oracle reduction pipelines");
  reduce->require_subcommand(1);
  for (const char* action : {"matchings-via-wtrees", "wtrees-via-trees",
                             "matchings-via-forest-prefix",
                             "forests-via-bases"}) {
    auto* sub = reduce->add_subcommand(action);
    sub->add_option("--k", cfg.k)->required();
    sub->add_option("--trace", cfg.trace, "write the pipeline trace as JSON");
    AddInput(sub, cfg);
    if (std::string(action) == "wtrees-via-trees") {
      sub->add_option("--z", cfg.z)->check(CLI::NonNegativeNumber);
    }
    if (std::string(action) == "forests-via-bases") {
      sub->add_option("--param", cfg.param)
          ->check(CLI::IsMember({"rank", "nullity"}));
      sub->add_option("--sigma", cfg.sigma)->check(CLI::NonNegativeNumber);
      sub->add_option("--seed", cfg.seed);
    }
  }

  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember({"pipelines", "matroid", "poly", "all"}));
  verify->add_option("--max-n", cfg.max_n);
  verify->add_option("--trials", cfg.trials);
  verify->add_option("--seed", cfg.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (auto* inner : sub->get_subcommands()) cfg.action = inner->get_name();
  }

  try {
    if (cfg.command == "count") return CmdCount(cfg, out);
    if (cfg.command == "matroid") return CmdMatroid(cfg, out);
    if (cfg.command == "reduce") return CmdReduce(cfg, out);
    return CmdVerify(cfg, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapError;
  } catch (const RankTooSmall& e) {
    err << "error: precondition failed: " << e.what() << '\n';
    return kCapError;
  } catch (const OracleInconsistency& e) {
    err << "error: " << e.what() << '\n';
    return kOracleInconsistent;
  } catch (const ArithmeticError& e) {
    err << "error: " << e.what() << '\n';
    return kOracleInconsistent;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace pcount::cli
