#pragma once

// Seeded Monte Carlo harness: runs detection/recovery trials over a grid of
// (n, k) points, aggregates per point, and serializes results as CSV (one
// aggregate row per completed point) or JSON (aggregates plus every trial).
// Trial i of a point always uses seed base + i; detection points sample both
// hypotheses with the same seed, so the null graph is the planted graph minus
// its forced clique edges.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <future>
#include <string>
#include <vector>

#include <json.hpp>

#include "baselines.hpp"
#include "completion.hpp"
#include "errors.hpp"
#include "filter.hpp"
#include "graph.hpp"
#include "ledger.hpp"
#include "report.hpp"

namespace pclique {

enum class KRule { absolute, c_sqrt_n, c_sqrt_nlogn };

inline std::string krule_name(KRule r) {
  switch (r) {
    case KRule::absolute: return "absolute";
    case KRule::c_sqrt_n: return "c_sqrt_n";
    default: return "c_sqrt_nlogn";
  }
}

struct SweepPoint {
  std::uint64_t n = 0;
  KRule rule = KRule::absolute;
  std::uint64_t k = 0;  // used when rule == absolute
};

inline std::uint64_t resolve_k(const SweepPoint& p, double c) {
  switch (p.rule) {
    case KRule::absolute:
      return p.k;
    case KRule::c_sqrt_n:
      return static_cast<std::uint64_t>(
          std::ceil(c * std::sqrt(static_cast<double>(p.n))));
    default:
      return static_cast<std::uint64_t>(std::ceil(
          c * std::sqrt(static_cast<double>(p.n) *
                        std::log2(static_cast<double>(p.n)))));
  }
}

struct SweepConfig {
  std::vector<SweepPoint> points;
  std::uint64_t trials = 1;
  Seed seed_base = 0;
  std::string algo = "pipeline";  // pipeline|degree|reduction|edge|exhaustive
  double constant_c = 8.0;
  double epsilon = 0.1;            // exhaustive detection witness margin
  std::uint32_t cap = 12;          // exhaustive detection witness-size cap
  std::uint64_t reduction_threshold = 0;  // 0 = ceil(k/4)
  std::uint32_t threads = 1;
  bool include_timing = true;      // false pins wall_time_ms to 0 everywhere
};

inline bool is_detection_algo(const std::string& algo) {
  return algo == "edge" || algo == "exhaustive";
}

inline bool is_known_algo(const std::string& algo) {
  return is_detection_algo(algo) || algo == "pipeline" || algo == "degree" ||
         algo == "reduction";
}

struct PointResult {
  SweepPoint point;
  std::uint64_t k = 0;
  std::string status = "ok";  // or "skipped"
  std::string reason;
  std::vector<TrialReport> reports;
  double success_rate = 0.0;
  double mean_peak_bits = 0.0;
  std::uint64_t max_peak_bits = 0;
  double mean_ms = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<PointResult> points;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::uint64_t reduction_bar(const SweepConfig& cfg, std::uint64_t k) {
  return cfg.reduction_threshold ? cfg.reduction_threshold
                                 : static_cast<std::uint64_t>(
                                       std::ceil(static_cast<double>(k) / 4.0));
}

// Empty string means the point runs; otherwise the reason it is skipped.
inline std::string point_skip_reason(const SweepConfig& cfg, std::uint64_t n,
                                     std::uint64_t k) {
  if (n < 1) return "n must be at least 1";
  if (k < 1 || k > n) return "k outside 1..n";
  try {
    if (cfg.algo == "pipeline") {
      check_clique_floor(n, k, PipelineConfig{cfg.constant_c});
      make_schedule(n, k);
    } else if (cfg.algo == "exhaustive") {
      if (n < 2) return "exhaustive detection needs n >= 2";
      const std::uint64_t s = static_cast<std::uint64_t>(
          std::ceil((2.0 + cfg.epsilon) * std::log2(static_cast<double>(n))));
      if (s > cfg.cap)
        return "witness size " + std::to_string(s) + " exceeds search cap " +
               std::to_string(cfg.cap);
    } else if (cfg.algo == "reduction") {
      if (n > 128) return "exact-detector reduction is limited to n <= 128";
    }
  } catch (const schedule_infeasible_error& e) {
    return "guard " + e.guard + ": " + e.what();
  } catch (const infeasible_scale_error& e) {
    return e.what();
  }
  return "";
}

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

inline TrialReport run_recovery_trial(const SweepConfig& cfg, std::uint64_t n,
                                      std::uint64_t k, Seed seed) {
  TrialReport r;
  r.algo = cfg.algo;
  r.n = n;
  r.k = k;
  r.seed = seed;
  r.hypothesis = "planted";
  const PlantedInstance inst = sample_planted(n, k, seed);
  WorkspaceLedger ledger;
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.algo == "pipeline") {
    r.recovered =
        recover_large_clique(inst.graph, k, PipelineConfig{cfg.constant_c}, ledger);
  } else if (cfg.algo == "degree") {
    r.recovered = degree_count_recover(inst.graph, k, ledger);
  } else {
    r.recovered = alon_reduction_recover(
        inst.graph, max_clique_detector(reduction_bar(cfg, k)), ledger);
  }
  if (cfg.include_timing) r.wall_time_ms = elapsed_ms(t0);
  r.peak_working_bits = ledger.peak_bits();
  score_against_truth(inst.clique, r.recovered, r);
  return r;
}

inline TrialReport run_detection_trial(const SweepConfig& cfg, std::uint64_t n,
                                       std::uint64_t k, Seed seed, bool planted) {
  TrialReport r;
  r.algo = cfg.algo;
  r.n = n;
  r.k = k;
  r.seed = seed;
  r.hypothesis = planted ? "planted" : "null";
  const Graph g = planted ? sample_planted(n, k, seed).graph : sample_er(n, seed);
  WorkspaceLedger ledger;
  const auto t0 = std::chrono::steady_clock::now();
  const DetectionReport d = cfg.algo == "edge"
                                ? edge_count_detect(g, k, ledger)
                                : exhaustive_detect(g, cfg.epsilon, cfg.cap, ledger);
  if (cfg.include_timing) r.wall_time_ms = elapsed_ms(t0);
  r.peak_working_bits = ledger.peak_bits();
  r.verdict = d.verdict == DetectionVerdict::planted ? "H1" : "H0";
  const bool said_planted = d.verdict == DetectionVerdict::planted;
  r.false_positives = (!planted && said_planted) ? 1 : 0;
  r.false_negatives = (planted && !said_planted) ? 1 : 0;
  r.exact_recovery = r.false_positives == 0 && r.false_negatives == 0;
  return r;
}

// All reports of trial index i, in emission order.
inline std::vector<TrialReport> run_trial_bundle(const SweepConfig& cfg,
                                                 std::uint64_t n, std::uint64_t k,
                                                 std::uint64_t i) {
  const Seed seed = cfg.seed_base + i;
  if (is_detection_algo(cfg.algo))
    return {run_detection_trial(cfg, n, k, seed, false),
            run_detection_trial(cfg, n, k, seed, true)};
  return {run_recovery_trial(cfg, n, k, seed)};
}

inline void aggregate(PointResult& pr) {
  std::uint64_t good = 0;
  double peak_sum = 0.0, ms_sum = 0.0;
  for (const TrialReport& r : pr.reports) {
    good += r.exact_recovery ? 1 : 0;
    peak_sum += static_cast<double>(r.peak_working_bits);
    ms_sum += r.wall_time_ms;
    if (r.peak_working_bits > pr.max_peak_bits)
      pr.max_peak_bits = r.peak_working_bits;
  }
  const double cnt = static_cast<double>(pr.reports.size());
  pr.success_rate = static_cast<double>(good) / cnt;
  pr.mean_peak_bits = peak_sum / cnt;
  pr.mean_ms = ms_sum / cnt;
}

}  // namespace detail

inline SweepResult run_trials(const SweepConfig& cfg) {
  if (!is_known_algo(cfg.algo))
    throw invalid_parameter_error("unknown algorithm: " + cfg.algo);
  if (cfg.trials < 1) throw invalid_parameter_error("trials must be >= 1");
  SweepResult out;
  out.config = cfg;
  std::uint64_t feasible = 0;
  for (const SweepPoint& p : cfg.points) {
    PointResult pr;
    pr.point = p;
    pr.k = resolve_k(p, cfg.constant_c);
    const std::string reason = detail::point_skip_reason(cfg, p.n, pr.k);
    if (!reason.empty()) {
      pr.status = "skipped";
      pr.reason = reason;
      out.warnings.push_back("skipped point n=" + std::to_string(p.n) +
                             " k=" + std::to_string(pr.k) + ": " + reason);
      out.points.push_back(std::move(pr));
      continue;
    }
    ++feasible;

    std::vector<std::vector<TrialReport>> bundles(cfg.trials);
    if (cfg.threads <= 1) {
      for (std::uint64_t i = 0; i < cfg.trials; ++i)
        bundles[i] = detail::run_trial_bundle(cfg, p.n, pr.k, i);
    } else {
      for (std::uint64_t base = 0; base < cfg.trials; base += cfg.threads) {
        const std::uint64_t stop = std::min<std::uint64_t>(base + cfg.threads,
                                                           cfg.trials);
        std::vector<std::future<std::vector<TrialReport>>> window;
        for (std::uint64_t i = base; i < stop; ++i)
          window.push_back(std::async(std::launch::async, [&cfg, &p, &pr, i] {
            return detail::run_trial_bundle(cfg, p.n, pr.k, i);
          }));
        for (std::uint64_t i = base; i < stop; ++i)
          bundles[i] = window[i - base].get();
      }
    }
    for (auto& b : bundles)
      for (TrialReport& r : b) pr.reports.push_back(std::move(r));
    detail::aggregate(pr);
    out.points.push_back(std::move(pr));
  }
  if (feasible == 0)
    out.warnings.push_back("no feasible points; nothing was run");
  return out;
}

namespace detail {

inline std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

inline std::uint64_t id_digest(const std::vector<Vertex>& xs) {
  std::uint64_t h = 1469598103934665603ull;
  for (Vertex v : xs) h = (h ^ v) * 1099511628211ull;
  return h;
}

}  // namespace detail

// Aggregate rows for completed points only; skipped points go to JSON and the
// warning stream (the fixed schema has no status column).
inline std::string to_csv(const SweepResult& res) {
  std::string out = "algo,n,k,trials,success_rate,mean_peak_bits,max_peak_bits,mean_ms\n";
  for (const PointResult& pr : res.points) {
    if (pr.status != "ok") continue;
    out += res.config.algo;
    out += ',' + std::to_string(pr.point.n);
    out += ',' + std::to_string(pr.k);
    out += ',' + std::to_string(pr.reports.size());
    out += ',' + detail::fmt_double(pr.success_rate);
    out += ',' + detail::fmt_double(pr.mean_peak_bits);
    out += ',' + std::to_string(pr.max_peak_bits);
    out += ',' + detail::fmt_double(pr.mean_ms);
    out += '\n';
  }
  return out;
}

inline nlohmann::json to_json(const TrialReport& r) {
  nlohmann::json j{{"algo", r.algo},
                   {"n", r.n},
                   {"k", r.k},
                   {"seed", r.seed},
                   {"hypothesis", r.hypothesis},
                   {"exact_recovery", r.exact_recovery},
                   {"false_positives", r.false_positives},
                   {"false_negatives", r.false_negatives},
                   {"peak_working_bits", r.peak_working_bits},
                   {"wall_time_ms", r.wall_time_ms},
                   {"status", r.status}};
  if (!r.verdict.empty()) j["verdict"] = r.verdict;
  if (r.hypothesis == "planted" && r.verdict.empty()) {
    j["recovered_size"] = r.recovered.size();
    j["recovered_digest"] = detail::id_digest(r.recovered);
    if (r.recovered.size() <= 64) j["recovered"] = r.recovered;
  }
  return j;
}

inline nlohmann::json to_json(const SweepResult& res) {
  nlohmann::json points = nlohmann::json::array();
  for (const PointResult& pr : res.points) {
    nlohmann::json p{{"n", pr.point.n},
                     {"k", pr.k},
                     {"k_rule", krule_name(pr.point.rule)},
                     {"status", pr.status}};
    if (pr.status != "ok") {
      p["reason"] = pr.reason;
    } else {
      p["trials"] = pr.reports.size();
      p["success_rate"] = pr.success_rate;
      p["mean_peak_bits"] = pr.mean_peak_bits;
      p["max_peak_bits"] = pr.max_peak_bits;
      p["mean_ms"] = pr.mean_ms;
      nlohmann::json reports = nlohmann::json::array();
      for (const TrialReport& r : pr.reports) reports.push_back(to_json(r));
      p["reports"] = std::move(reports);
    }
    points.push_back(std::move(p));
  }
  return nlohmann::json{{"algo", res.config.algo},
                        {"constant_c", res.config.constant_c},
                        {"seed_base", res.config.seed_base},
                        {"trials_per_point", res.config.trials},
                        {"points", std::move(points)},
                        {"warnings", res.warnings}};
}

inline nlohmann::json trace_to_json(const FilterTrace& trace) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& s : trace.sets) sets.push_back(s);
  return nlohmann::json{{"V", std::move(sets)}};
}

struct OracleCheckResult {
  std::uint64_t trials = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t mismatches = 0;
};

// Compares the recursive membership filter against the explicit-set trace on
// every (round, vertex) pair of seeded planted instances. Uses the clamped
// schedule so small diagnostic sizes stay runnable.
inline OracleCheckResult oracle_check(std::uint64_t n, std::uint64_t k,
                                      std::uint64_t trials, Seed seed_base) {
  OracleCheckResult res;
  const FilterSchedule s = make_schedule_clamped(n, k);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const PlantedInstance inst = sample_planted(n, k, seed_base + i);
    const FilterTrace trace = reference_filter_trace(inst.graph, s, s.rounds);
    WorkspaceLedger ledger;
    for (std::uint32_t t = 1; t <= s.rounds; ++t) {
      const auto& set = trace.sets[t - 1];
      for (Vertex v = static_cast<Vertex>(s.band_lo(t)) + 1; v <= s.band_hi(t);
           ++v) {
        const bool want = std::binary_search(set.begin(), set.end(), v);
        const bool got = vt_membership(inst.graph, s, t, v, ledger);
        ++res.pairs_checked;
        if (want != got) ++res.mismatches;
      }
    }
    ++res.trials;
  }
  return res;
}

}  // namespace pclique
