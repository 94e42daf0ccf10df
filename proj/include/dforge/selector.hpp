#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dforge/expectation.hpp"
#include "dforge/instance.hpp"
#include "dforge/unipoly.hpp"

namespace dforge {

/// One step of the greedy walk: the branch polynomials q_{t,r} for every
/// support value r of the current variable, their largest roots, and the
/// chosen branch.
struct StepRecord {
  int var_index = 0;
  std::vector<double> branch_outcomes;
  std::vector<double> branch_roots;
  std::vector<UniPoly> branch_polys;
  int chosen = -1;
  double parent_root = 0.0;  // largest root of q_t before this step
};

struct GreedyResult {
  Assignment assignment;
  DiscrepancyReport report;
  std::vector<StepRecord> trace;
  UniPoly q_empty;  // the unconditioned expected polynomial
};

/// Walks the conditional-polynomial tree; at each variable fixes the
/// outcome minimizing the largest root of q_{t,r} (ties broken by the
/// smallest support value). Every branch polynomial must pass the
/// real-rootedness test; a failure aborts with a RootednessError naming
/// the step.
GreedyResult greedy_select(const Instance& inst, const EngineCaps& caps = {},
                           double root_tol = kRealRootTol);

inline constexpr std::uint64_t kBruteForceCap = std::uint64_t{1} << 16;

/// Exhaustive minimum of discrepancy_norm over all complete assignments,
/// enumerated in lexicographic outcome order (first variable most
/// significant, supports ascending); the first minimizer wins ties.
std::pair<Assignment, double> brute_force_min(const Instance& inst,
                                              std::uint64_t cap = kBruteForceCap);

struct BaselineSummary {
  int trials = 0;
  double min = 0.0;
  double q10 = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double q90 = 0.0;
  double max = 0.0;
};

/// Samples outcome vectors from the product distribution (inverse-CDF
/// draws from a seeded mt19937_64) and summarizes the discrepancy norms.
BaselineSummary random_baseline(const Instance& inst, int trials, std::uint64_t seed);

struct VerifyResult {
  double disc = 0.0;
  double sigma = 0.0;
  double bound = 0.0;  // 4 sigma
  double tol = 0.0;    // 1e-8 * (1 + 4 sigma)
  bool ok = false;
};

/// Recomputes both sides of disc <= 4 sigma from scratch for a complete
/// assignment.
VerifyResult verify_bound(const Instance& inst, const Assignment& a);

}  // namespace dforge
