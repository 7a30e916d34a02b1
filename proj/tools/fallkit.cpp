// fallkit: exact solving, verification, generation, and checked reductions
// for fall coloring (partition into independent dominating sets).
//
// Exit codes: 0 = feasible/valid, 1 = infeasible/invalid certificate,
// 2 = usage, IO, or guard error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fallkit/classify.hpp"
#include "fallkit/generators.hpp"
#include "fallkit/harness.hpp"
#include "fallkit/io.hpp"
#include "fallkit/reductions.hpp"
#include "fallkit/solvers.hpp"
#include "fallkit/transforms.hpp"
#include "fallkit/verifier.hpp"

namespace {

using nlohmann::json;
using namespace fallkit;

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file_atomic(out_path, text);
}

json result_to_json(const char* problem, const FallResult& r) {
  json j;
  j["problem"] = problem;
  j["k"] = r.k;
  j["feasible"] = r.feasible;
  if (r.count) j["count"] = *r.count;
  if (r.witness) j["witness"] = to_coloring_text(*r.witness);
  j["stats"] = {{"nodes", r.stats.nodes}};
  return j;
}

int cmd_solve(const std::string& graph_path, int k, const std::string& problem,
              const std::string& algorithm, const std::string& format,
              const SolverLimits& limits, const std::string& witness_out) {
  Graph g = parse_dimacs(read_file(graph_path));

  if (problem == "two-ids") {
    auto pair = two_disjoint_ids(g, limits);
    if (format == "json") {
      json j;
      j["problem"] = "two-ids";
      j["feasible"] = pair.has_value();
      if (pair) {
        j["s1"] = pair->first.to_vector();
        j["s2"] = pair->second.to_vector();
      }
      std::cout << j.dump() << "\n";
    } else if (pair) {
      std::cout << "two disjoint independent dominating sets found\n";
      std::cout << "s1:";
      for (int v : pair->first.to_vector()) std::cout << " " << v;
      std::cout << "\ns2:";
      for (int v : pair->second.to_vector()) std::cout << " " << v;
      std::cout << "\n";
    } else {
      std::cout << "no two disjoint independent dominating sets\n";
    }
    return pair ? kExitFeasible : kExitInfeasible;
  }

  FallResult r;
  if (algorithm == "oracle") {
    r = oracle_fall(g, k, limits);
  } else if (algorithm == "backtrack") {
    r = fall_decide_backtrack(g, k);
  } else if (algorithm == "incexc") {
    r = fall_count_incexc(g, k, limits);
  } else if (algorithm == "polyspace") {
    r = fall_decide_polyspace(g, k, limits);
  } else {  // auto: polynomial special cases first, then backtracking
    auto special = special_case_dispatch(g, k, limits);
    r = special ? *special : fall_decide_backtrack(g, k);
  }

  if (format == "json") {
    std::cout << result_to_json("fall", r).dump() << "\n";
  } else {
    std::cout << "fall " << k << "-coloring: "
              << (r.feasible ? "feasible" : "infeasible");
    if (r.count) std::cout << " (count " << *r.count << ")";
    std::cout << "\n";
    if (r.witness) std::cout << to_coloring_text(*r.witness);
  }
  if (!witness_out.empty() && r.witness)
    write_file_atomic(witness_out, to_coloring_text(*r.witness));
  return r.feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_fallset(const std::string& graph_path, const std::string& format,
                const SolverLimits& limits) {
  Graph g = parse_dimacs(read_file(graph_path));
  FallSet fs = fall_set(g, limits);
  if (format == "json") {
    json j;
    j["members"] = fs.members;
    j["probed_range"] = {fs.probed_lo, fs.probed_hi};
    if (fs.chi_fall()) j["chi_fall"] = *fs.chi_fall();
    if (fs.psi_fall()) j["psi_fall"] = *fs.psi_fall();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "fall(G) = {";
    for (std::size_t i = 0; i < fs.members.size(); ++i)
      std::cout << (i ? "," : "") << fs.members[i];
    std::cout << "}\n";
  }
  return kExitFeasible;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path,
               const std::string& kind, int k_override,
               const std::string& format) {
  Graph g = parse_dimacs(read_file(graph_path));
  Coloring c = parse_coloring(read_file(cert_path), g.vertex_count());
  if (k_override > 0) c.k = k_override;

  if (kind == "proper") {
    bool ok = is_proper_coloring(g, c);
    if (format == "json")
      std::cout << json{{"valid", ok}, {"k", c.k}}.dump() << "\n";
    else
      std::cout << (ok ? "proper" : "not proper") << "\n";
    return ok ? kExitFeasible : kExitInfeasible;
  }

  VerifyReport report = is_fall_coloring(g, c);
  if (format == "json") {
    json j;
    j["valid"] = report.valid;
    j["k"] = c.k;
    j["violations"] = json::array();
    for (const auto& v : report.violations) j["violations"].push_back(v.describe());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (report.valid ? "valid fall coloring"
                               : "invalid fall coloring") << "\n";
    for (const auto& v : report.violations) std::cout << "  " << v.describe() << "\n";
  }
  return report.valid ? kExitFeasible : kExitInfeasible;
}

int cmd_generate(const std::string& kind, int n, int k, std::uint64_t seed,
                 const std::string& format, const std::string& out) {
  Graph g;
  if (kind == "cycle") g = cycle(n);
  else if (kind == "complete") g = complete(n);
  else if (kind == "path") g = path(n);
  else if (kind == "fk") g = f_k(k);
  else if (kind == "petersen") g = petersen();
  else if (kind == "regular") g = gen_random_regular(n, k, seed);
  else if (kind == "ktree") g = gen_chordal_ktree(n, k, seed);
  else if (kind == "mop") g = gen_maximal_outerplanar(n, seed);
  else throw CLI::ValidationError("unknown generator kind: " + kind);

  emit(format == "json" ? graph_to_json(g) + "\n" : to_dimacs(g), out);
  return kExitFeasible;
}

int cmd_reduce(const std::string& kind, const std::string& input_path, int k,
               bool box_k2, const std::string& out, const std::string& trace_out) {
  Graph target;
  ReductionTrace trace;
  if (kind == "3col-fall3") {
    std::tie(target, trace) = reduce_3col_to_fall3(parse_dimacs(read_file(input_path)));
  } else if (kind == "kcol-fallk") {
    std::tie(target, trace) = reduce_kcol_to_fallk(parse_dimacs(read_file(input_path)), k);
  } else if (kind == "edgecol-fallk") {
    std::tie(target, trace) =
        reduce_edgecol_to_fallk(parse_dimacs(read_file(input_path)), k, box_k2);
  } else if (kind == "sat-2ids") {
    std::tie(target, trace) = reduce_sat_to_2ids(parse_dimacs_cnf(read_file(input_path)));
  } else {
    throw CLI::ValidationError("unknown reduction kind: " + kind);
  }
  emit(to_dimacs(target), out);
  if (!trace_out.empty()) write_file_atomic(trace_out, trace.to_json());
  return kExitFeasible;
}

int cmd_lift(const std::string& trace_path, const std::string& to,
             const std::string& source_path, const std::string& target_path,
             const std::string& cert_path, const std::string& cnf_path,
             const std::string& out) {
  ReductionTrace trace = ReductionTrace::from_json(read_file(trace_path));
  Graph target = parse_dimacs(read_file(target_path));

  try {
    if (to == "fall") {
      Graph source = parse_dimacs(read_file(source_path));
      Coloring c = parse_coloring(read_file(cert_path), source.vertex_count());
      c.k = trace.k;
      Coloring lifted = lift_coloring_to_fall(source, target, trace, c);
      emit(to_coloring_text(lifted), out);
    } else if (to == "coloring") {
      Coloring c = parse_coloring(read_file(cert_path), target.vertex_count());
      c.k = trace.k;
      Coloring restricted = lift_fall_to_coloring(target, trace, c);
      emit(to_coloring_text(restricted), out);
    } else if (to == "ids") {
      CnfFormula phi = parse_dimacs_cnf(read_file(cnf_path));
      json j = json::parse(read_file(cert_path));
      std::vector<bool> tau;
      for (const auto& b : j.at("assignment")) tau.push_back(b.get<int>() != 0);
      auto [s1, s2] = lift_assignment_to_ids(target, trace, tau, phi);
      json outj{{"s1", s1.to_vector()}, {"s2", s2.to_vector()}};
      emit(outj.dump() + "\n", out);
    } else if (to == "assignment") {
      CnfFormula phi = parse_dimacs_cnf(read_file(cnf_path));
      json j = json::parse(read_file(cert_path));
      auto as_set = [&](const char* key) {
        VertexSet s(target.vertex_count());
        for (const auto& v : j.at(key)) s.insert(v.get<int>());
        return s;
      };
      auto tau = lift_ids_to_assignment(target, trace, as_set("s1"), as_set("s2"), phi);
      json outj;
      outj["assignment"] = json::array();
      for (bool b : tau) outj["assignment"].push_back(b ? 1 : 0);
      emit(outj.dump() + "\n", out);
    } else {
      throw CLI::ValidationError("unknown lift direction: " + to);
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invalid certificate: " << ex.what() << "\n";
    return kExitInfeasible;
  }
  return kExitFeasible;
}

int cmd_harness(const std::string& family_name, int trials, int max_n,
                std::uint64_t seed, const std::string& format) {
  HarnessFamily family = harness_family_from_name(family_name);
  if (max_n == 0) {
    switch (family) {
      case HarnessFamily::kThreeColToFall3: max_n = 8; break;
      case HarnessFamily::kKColToFallK: max_n = 6; break;
      case HarnessFamily::kEdgeColToFallK: max_n = 10; break;
      case HarnessFamily::kSatToTwoIds: max_n = 6; break;
    }
  }
  HarnessReport report = equivalence_harness(family, trials, max_n, seed);
  if (format == "json") {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << harness_family_name(family) << ": " << trials << " trials, "
              << report.failures.size() << " failures\n";
    for (const auto& f : report.failures) {
      std::cout << "trial " << f.trial << ": " << f.reason << "\n"
                << f.instance;
    }
  }
  return report.all_passed() ? kExitFeasible : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fallkit: exact fall coloring toolkit"};
  app.require_subcommand(1);

  std::string graph_path, cert_path, input_path, out, trace_out, cnf_path;
  std::string trace_path;
  std::string kind, format = "text", algorithm = "auto", problem = "fall";
  std::string lift_to, source_path, target_path, witness_out;
  int k = 3, n = 0, k_override = 0, trials = 25, max_n = 0;
  std::uint64_t seed = 0;
  bool box_k2 = false;
  SolverLimits limits;

  auto* solve = app.add_subcommand("solve", "decide fall k-colorability");
  solve->add_option("graph", graph_path)->required();
  solve->add_option("--k", k);
  solve->add_option("--problem", problem)->check(CLI::IsMember({"fall", "two-ids"}));
  solve->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"auto", "oracle", "backtrack", "incexc", "polyspace"}));
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--max-n-oracle", limits.oracle_max_n);
  solve->add_option("--max-n-incexc", limits.incexc_max_n);
  solve->add_option("--max-n-mis", limits.mis_max_n);
  solve->add_option("--max-n-chromatic", limits.chromatic_max_n);
  solve->add_option("--witness-out", witness_out);

  auto* fallset = app.add_subcommand("fallset", "compute the fall set");
  fallset->add_option("graph", graph_path)->required();
  fallset->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  fallset->add_option("--max-n-chromatic", limits.chromatic_max_n);

  auto* verify = app.add_subcommand("verify", "check a coloring certificate");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("certificate", cert_path)->required();
  verify->add_option("--kind", kind = "fall")->check(CLI::IsMember({"fall", "proper"}));
  verify->add_option("--k", k_override);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* generate = app.add_subcommand("generate", "write a generated graph");
  generate->add_option("kind", kind)->required();
  generate->add_option("--n", n);
  generate->add_option("--k", k);
  generate->add_option("--seed", seed);
  generate->add_option("--format", format)->check(CLI::IsMember({"dimacs", "json"}));
  generate->add_option("--out", out);

  auto* reduce = app.add_subcommand("reduce", "materialize a reduction");
  reduce->add_option("kind", kind)->required();
  reduce->add_option("input", input_path)->required();
  reduce->add_option("--k", k);
  reduce->add_flag("--box-k2", box_k2);
  reduce->add_option("--out", out);
  reduce->add_option("--trace", trace_out);

  auto* lift = app.add_subcommand("lift", "lift a certificate through a trace");
  lift->add_option("trace", trace_path)->required();
  lift->add_option("--to", lift_to)
      ->check(CLI::IsMember({"fall", "coloring", "ids", "assignment"}))
      ->required();
  lift->add_option("--source", source_path);
  lift->add_option("--target", target_path)->required();
  lift->add_option("--cert", cert_path)->required();
  lift->add_option("--cnf", cnf_path);
  lift->add_option("--out", out);

  auto* harness = app.add_subcommand("harness", "run the equivalence harness");
  harness->add_option("family", kind)->required();
  harness->add_option("--trials", trials);
  harness->add_option("--max-n", max_n);
  harness->add_option("--seed", seed);
  harness->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve)
      return cmd_solve(graph_path, k, problem, algorithm,
                       format == "dimacs" ? "text" : format, limits, witness_out);
    if (*fallset) return cmd_fallset(graph_path, format, limits);
    if (*verify) return cmd_verify(graph_path, cert_path, kind, k_override, format);
    if (*generate) return cmd_generate(kind, n, k, seed, format, out);
    if (*reduce) return cmd_reduce(kind, input_path, k, box_k2, out, trace_out);
    if (*lift)
      return cmd_lift(trace_path, lift_to, source_path, target_path,
                      cert_path, cnf_path, out);
    if (*harness) return cmd_harness(kind, trials, max_n, seed, format);
  } catch (const GuardExceeded& ex) {
    std::cerr << "guard exceeded: " << ex.what() << "\n";
    return kExitError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
