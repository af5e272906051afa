// Command-line surface for the planted-clique laboratory.
//
// Subcommands: gen, detect, recover, oracle-check, sweep.
// Exit codes: 0 success, 1 invalid parameters, 2 infeasible scale,
// 3 I/O or format error, 4 oracle-check mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <pclique.hpp>

namespace {

using namespace pclique;

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::fwrite(body.data(), 1, body.size(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw format_error("cannot open " + out_path + " for writing");
  f.write(body.data(), static_cast<std::streamsize>(body.size()));
  if (!f) throw format_error("write failed: " + out_path);
}

struct CommonOpts {
  std::string algo;
  std::string in_path;
  std::string out_path;
  std::string format = "text";
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  bool has_n = false, has_k = false;
  Seed seed = 0;
  bool planted = false;
  double constant_c = 8.0;
  double epsilon = 0.1;
  std::uint32_t cap = 12;
  std::uint64_t threshold = 0;
};

struct LoadedGraph {
  Graph graph;
  std::optional<std::vector<Vertex>> truth;
};

// Graph from --in when given, otherwise sampled from --n/--seed; --planted
// picks the alternative hypothesis (requires --k).
LoadedGraph load_graph(const CommonOpts& o) {
  if (!o.in_path.empty()) {
    StoredInstance s = read_graph(o.in_path);
    return {std::move(s.graph), std::move(s.truth)};
  }
  if (!o.has_n) throw invalid_parameter_error("need --in or --n");
  if (o.planted) {
    if (!o.has_k) throw invalid_parameter_error("--planted needs --k");
    PlantedInstance inst = sample_planted(o.n, o.k, o.seed);
    return {std::move(inst.graph), std::move(inst.clique)};
  }
  return {sample_er(o.n, o.seed), std::nullopt};
}

std::uint64_t pick_k(const CommonOpts& o, const LoadedGraph& lg) {
  if (o.has_k) return o.k;
  if (lg.truth) return lg.truth->size();
  throw invalid_parameter_error("need --k or a stored ground truth");
}

int run_gen(const CommonOpts& o) {
  if (o.has_k) {
    PlantedInstance inst = sample_planted(o.n, o.k, o.seed);
    write_graph(o.out_path, inst.graph, inst.clique);
  } else {
    write_graph(o.out_path, sample_er(o.n, o.seed));
  }
  return 0;
}

int run_detect(const CommonOpts& o) {
  const LoadedGraph lg = load_graph(o);
  WorkspaceLedger ledger;
  DetectionReport rep;
  std::uint64_t k = 0;
  if (o.algo == "edge") {
    k = pick_k(o, lg);
    rep = edge_count_detect(lg.graph, k, ledger);
  } else {
    rep = exhaustive_detect(lg.graph, o.epsilon, o.cap, ledger);
  }
  const std::string verdict = rep.verdict == DetectionVerdict::planted ? "H1" : "H0";
  if (o.format == "json") {
    nlohmann::json j{{"algo", o.algo},
                     {"n", lg.graph.vertex_count()},
                     {"verdict", verdict},
                     {"statistic", rep.statistic},
                     {"threshold", rep.threshold},
                     {"peak_working_bits", ledger.peak_bits()}};
    if (o.algo == "edge") j["k"] = k;
    emit(o.out_path, j.dump(2) + "\n");
  } else {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s statistic=%.10g threshold=%.10g\n",
                  verdict.c_str(), rep.statistic, rep.threshold);
    emit(o.out_path, buf);
  }
  return 0;
}

int run_recover(const CommonOpts& o) {
  const LoadedGraph lg = load_graph(o);
  const std::uint64_t k = pick_k(o, lg);
  WorkspaceLedger ledger;
  std::vector<Vertex> got;
  if (o.algo == "pipeline") {
    got = recover_large_clique(lg.graph, k, PipelineConfig{o.constant_c}, ledger);
  } else if (o.algo == "degree") {
    got = degree_count_recover(lg.graph, k, ledger);
  } else {
    if (lg.graph.vertex_count() > 128)
      throw infeasible_scale_error("exact-detector reduction is limited to n <= 128");
    const std::uint64_t bar =
        o.threshold ? o.threshold
                    : static_cast<std::uint64_t>(
                          std::ceil(static_cast<double>(k) / 4.0));
    got = alon_reduction_recover(lg.graph, max_clique_detector(bar), ledger);
  }
  if (o.format == "json") {
    nlohmann::json j{{"algo", o.algo},
                     {"n", lg.graph.vertex_count()},
                     {"k", k},
                     {"recovered", got},
                     {"peak_working_bits", ledger.peak_bits()}};
    if (lg.truth) {
      TrialReport r;
      score_against_truth(*lg.truth, got, r);
      j["exact_recovery"] = r.exact_recovery;
      j["false_positives"] = r.false_positives;
      j["false_negatives"] = r.false_negatives;
    }
    emit(o.out_path, j.dump(2) + "\n");
  } else {
    std::string body;
    for (Vertex v : got) body += std::to_string(v) + "\n";
    emit(o.out_path, body);
  }
  return 0;
}

int run_oracle_check(const CommonOpts& o, std::uint64_t trials) {
  const OracleCheckResult res = oracle_check(o.n, o.k, trials, o.seed);
  if (o.format == "json") {
    nlohmann::json j{{"n", o.n},
                     {"k", o.k},
                     {"trials", res.trials},
                     {"pairs_checked", res.pairs_checked},
                     {"mismatches", res.mismatches}};
    emit(o.out_path, j.dump(2) + "\n");
  } else {
    emit(o.out_path, "checked " + std::to_string(res.pairs_checked) +
                         " membership pairs over " + std::to_string(res.trials) +
                         " trials: " + std::to_string(res.mismatches) +
                         " mismatches\n");
  }
  return res.mismatches == 0 ? 0 : 4;
}

std::string sweep_text(const SweepResult& res) {
  std::string body = "algo=" + res.config.algo +
                     " constant_c=" + std::to_string(res.config.constant_c) + "\n";
  for (const PointResult& pr : res.points) {
    body += "n=" + std::to_string(pr.point.n) + " k=" + std::to_string(pr.k);
    if (pr.status != "ok") {
      body += " skipped: " + pr.reason + "\n";
      continue;
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  " trials=%zu success_rate=%.10g mean_peak_bits=%.10g"
                  " max_peak_bits=%llu mean_ms=%.10g\n",
                  pr.reports.size(), pr.success_rate, pr.mean_peak_bits,
                  static_cast<unsigned long long>(pr.max_peak_bits), pr.mean_ms);
    body += buf;
  }
  return body;
}

int run_sweep(const CommonOpts& o, const std::vector<std::uint64_t>& ns,
              const std::vector<std::uint64_t>& ks, const std::string& rule_name,
              std::uint64_t trials, std::uint32_t threads, bool no_timing) {
  SweepConfig cfg;
  cfg.algo = o.algo;
  cfg.trials = trials;
  cfg.seed_base = o.seed;
  cfg.constant_c = o.constant_c;
  cfg.epsilon = o.epsilon;
  cfg.cap = o.cap;
  cfg.reduction_threshold = o.threshold;
  cfg.threads = threads;
  cfg.include_timing = !no_timing;

  KRule rule = KRule::absolute;
  if (rule_name == "c-sqrt-n") rule = KRule::c_sqrt_n;
  else if (rule_name == "c-sqrt-nlogn") rule = KRule::c_sqrt_nlogn;

  if (rule == KRule::absolute) {
    if (ks.empty())
      throw invalid_parameter_error("absolute k-rule needs --k");
    if (ks.size() != 1 && ks.size() != ns.size())
      throw invalid_parameter_error("--k must have one value or match --n");
    for (std::size_t i = 0; i < ns.size(); ++i)
      cfg.points.push_back({ns[i], rule, ks.size() == 1 ? ks[0] : ks[i]});
  } else {
    if (!ks.empty())
      throw invalid_parameter_error("--k conflicts with a derived k-rule");
    for (std::uint64_t n : ns) cfg.points.push_back({n, rule, 0});
  }

  const SweepResult res = run_trials(cfg);
  for (const std::string& w : res.warnings)
    std::fprintf(stderr, "warning: %s\n", w.c_str());
  if (o.format == "json")
    emit(o.out_path, to_json(res).dump(2) + "\n");
  else if (o.format == "csv")
    emit(o.out_path, to_csv(res));
  else
    emit(o.out_path, sweep_text(res));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planted-clique detection and recovery laboratory"};
  app.require_subcommand(1);

  CommonOpts o;
  std::uint64_t trials = 1;
  std::uint32_t threads = 1;
  bool no_timing = false;
  std::vector<std::uint64_t> sweep_n, sweep_k;
  std::string krule = "absolute";

  auto add_common = [&](CLI::App* cmd, bool with_model) {
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--format", o.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    if (with_model) {
      cmd->add_option("--in", o.in_path, "PCG1 input file");
      cmd->add_option("--seed", o.seed, "base seed");
      cmd->add_flag("--planted", o.planted, "sample the planted hypothesis");
    }
  };

  CLI::App* gen = app.add_subcommand("gen", "sample a graph and write a PCG1 file");
  CLI::Option* gen_n = gen->add_option("--n", o.n, "vertex count")->required();
  CLI::Option* gen_k = gen->add_option("--k", o.k, "planted clique size");
  gen->add_option("--seed", o.seed, "sampling seed");
  gen->add_option("--out", o.out_path, "output PCG1 path")->required();

  CLI::App* detect = app.add_subcommand("detect", "hypothesis test on one graph");
  detect->add_option("--algo", o.algo, "edge|exhaustive")
      ->required()
      ->check(CLI::IsMember({"edge", "exhaustive"}));
  CLI::Option* det_n = detect->add_option("--n", o.n, "vertex count when sampling");
  CLI::Option* det_k = detect->add_option("--k", o.k, "planted clique size");
  detect->add_option("--epsilon", o.epsilon, "witness-size margin");
  detect->add_option("--cap", o.cap, "witness-size cap");
  add_common(detect, true);

  CLI::App* recover = app.add_subcommand("recover", "recover the planted set");
  recover->add_option("--algo", o.algo, "pipeline|degree|reduction")
      ->required()
      ->check(CLI::IsMember({"pipeline", "degree", "reduction"}));
  CLI::Option* rec_n = recover->add_option("--n", o.n, "vertex count when sampling");
  CLI::Option* rec_k = recover->add_option("--k", o.k, "clique size");
  recover->add_option("--constant-c", o.constant_c, "pipeline floor constant");
  recover->add_option("--threshold", o.threshold,
                      "reduction detector clique size (0 = k/4)");
  add_common(recover, true);

  CLI::App* oc = app.add_subcommand(
      "oracle-check", "recursive vs reference filter equivalence");
  oc->add_option("--n", o.n, "vertex count")->required();
  oc->add_option("--k", o.k, "planted clique size")->required();
  oc->add_option("--trials", trials, "seeds to check")->required();
  oc->add_option("--seed", o.seed, "base seed");
  add_common(oc, false);

  CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo grid run");
  sweep->add_option("--algo", o.algo, "pipeline|degree|reduction|edge|exhaustive")
      ->required()
      ->check(CLI::IsMember({"pipeline", "degree", "reduction", "edge", "exhaustive"}));
  sweep->add_option("--n", sweep_n, "vertex counts")->required()->delimiter(',');
  sweep->add_option("--k", sweep_k, "clique sizes (absolute rule)")->delimiter(',');
  sweep->add_option("--k-rule", krule, "absolute|c-sqrt-n|c-sqrt-nlogn")
      ->check(CLI::IsMember({"absolute", "c-sqrt-n", "c-sqrt-nlogn"}));
  sweep->add_option("--trials", trials, "trials per point");
  sweep->add_option("--seed", o.seed, "seed base");
  sweep->add_option("--constant-c", o.constant_c, "constant C for derived k");
  sweep->add_option("--epsilon", o.epsilon, "exhaustive witness margin");
  sweep->add_option("--cap", o.cap, "exhaustive witness cap");
  sweep->add_option("--threshold", o.threshold, "reduction detector threshold");
  sweep->add_option("--threads", threads, "concurrent trials");
  sweep->add_flag("--no-timing", no_timing, "report wall_time_ms as 0");
  sweep->add_option("--out", o.out_path, "output path (default stdout)");
  CLI::Option* sweep_fmt =
      sweep->add_option("--format", o.format, "csv|json|text (default csv)")
          ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  o.has_n = gen_n->count() || det_n->count() || rec_n->count() || oc->parsed();
  o.has_k = gen_k->count() || det_k->count() || rec_k->count() || oc->parsed();

  try {
    if (gen->parsed()) return run_gen(o);
    if (detect->parsed()) return run_detect(o);
    if (recover->parsed()) return run_recover(o);
    if (oc->parsed()) return run_oracle_check(o, trials);
    if (!sweep_fmt->count()) o.format = "csv";
    return run_sweep(o, sweep_n, sweep_k, krule, trials, threads, no_timing);
  } catch (const invalid_parameter_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const infeasible_scale_error& e) {
    std::fprintf(stderr, "infeasible: %s\n", e.what());
    return 2;
  } catch (const format_error& e) {
    std::fprintf(stderr, "format error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
