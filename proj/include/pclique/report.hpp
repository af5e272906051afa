#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace pclique {

// One Monte Carlo trial. Detection trials fill verdict; recovery trials fill
// recovered plus the scoring fields. status stays "ok" unless the trial was
// skipped, in which case it carries the reason.
struct TrialReport {
  std::string algo;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t seed = 0;
  std::string hypothesis;  // "planted" or "null"
  std::string verdict;
  bool exact_recovery = false;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
  std::uint64_t peak_working_bits = 0;
  double wall_time_ms = 0.0;
  std::vector<Vertex> recovered;
  std::string status = "ok";
};

// Compares a recovered vertex set against the planted truth; both inputs may
// arrive unsorted. exact means set equality.
inline void score_against_truth(const std::vector<Vertex>& truth,
                                const std::vector<Vertex>& recovered,
                                TrialReport& r) {
  std::vector<Vertex> t = truth, got = recovered;
  std::sort(t.begin(), t.end());
  std::sort(got.begin(), got.end());
  std::vector<Vertex> fp, fn;
  std::set_difference(got.begin(), got.end(), t.begin(), t.end(),
                      std::back_inserter(fp));
  std::set_difference(t.begin(), t.end(), got.begin(), got.end(),
                      std::back_inserter(fn));
  r.false_positives = fp.size();
  r.false_negatives = fn.size();
  r.exact_recovery = fp.empty() && fn.empty();
}

}  // namespace pclique
