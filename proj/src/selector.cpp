#include "dforge/selector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dforge/errors.hpp"
#include "dforge/rng.hpp"

namespace dforge {

GreedyResult greedy_select(const Instance& inst, const EngineCaps& caps, double root_tol) {
  inst.validate();
  const std::size_t n = inst.size();

  GreedyResult result;
  result.report.method = SelectMethod::kGreedy;
  result.report.sigma = compute_sigma(inst);
  result.report.bound = 4.0 * result.report.sigma;

  const ConditionalNode root = expected_poly_enum(inst, Assignment{}, /*condense=*/true, caps);
  result.q_empty = root.qpoly;
  double parent_root;
  try {
    parent_root = largest_root(root.qpoly, root_tol);
  } catch (const RootednessError& e) {
    throw RootednessError(std::string("greedy_select: q_empty failed real-rootedness: ") + e.what());
  }
  result.report.lambda_max_root = parent_root;

  std::vector<double> chosen;
  chosen.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const FiniteRV& rv = inst.rvs[k];
    StepRecord step;
    step.var_index = static_cast<int>(k);
    step.parent_root = parent_root;

    for (std::size_t r = 0; r < rv.size(); ++r) {
      std::vector<double> branch = chosen;
      branch.push_back(rv.support()[r]);
      const ConditionalNode node =
          expected_poly_enum(inst, make_assignment(inst, std::move(branch)), true, caps);
      double broot;
      try {
        broot = largest_root(node.qpoly, root_tol);
      } catch (const RootednessError& e) {
        throw RootednessError("greedy_select: branch polynomial at step " + std::to_string(k) +
                              ", outcome " + std::to_string(rv.support()[r]) +
                              " failed real-rootedness: " + e.what());
      }
      step.branch_outcomes.push_back(rv.support()[r]);
      step.branch_roots.push_back(broot);
      step.branch_polys.push_back(node.qpoly);
      // Strict comparison keeps the first (smallest) support value on ties.
      if (step.chosen < 0 || broot < step.branch_roots[static_cast<std::size_t>(step.chosen)]) {
        step.chosen = static_cast<int>(r);
      }
    }

    chosen.push_back(step.branch_outcomes[static_cast<std::size_t>(step.chosen)]);
    parent_root = step.branch_roots[static_cast<std::size_t>(step.chosen)];
    result.trace.push_back(std::move(step));
  }

  result.assignment = make_assignment(inst, std::move(chosen));
  result.report.disc = discrepancy_norm(inst, result.assignment);
  return result;
}

std::pair<Assignment, double> brute_force_min(const Instance& inst, std::uint64_t cap) {
  inst.validate();
  const std::size_t n = inst.size();

  std::uint64_t total = 1;
  for (const auto& rv : inst.rvs) {
    total *= rv.size();
    if (total > cap) {
      throw CapExceededError("brute_force_min: assignment count exceeds the cap");
    }
  }

  std::vector<std::size_t> idx(n, 0);
  std::vector<double> outcomes(n);
  Assignment best;
  double best_disc = std::numeric_limits<double>::infinity();

  for (std::uint64_t step = 0; step < total; ++step) {
    for (std::size_t i = 0; i < n; ++i) outcomes[i] = inst.rvs[i].support()[idx[i]];
    Assignment a = make_assignment(inst, outcomes);
    const double disc = discrepancy_norm(inst, a);
    if (disc < best_disc) {
      best_disc = disc;
      best = std::move(a);
    }
    // Odometer, last variable fastest: lexicographic outcome order.
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < inst.rvs[i].size()) break;
      idx[i] = 0;
    }
  }
  return {best, best_disc};
}

BaselineSummary random_baseline(const Instance& inst, int trials, std::uint64_t seed) {
  inst.validate();
  if (trials < 1) throw ContractError("random_baseline: trials must be >= 1");

  std::mt19937_64 rng(seed);
  std::vector<double> discs;
  discs.reserve(static_cast<std::size_t>(trials));
  std::vector<double> outcomes(inst.size());
  for (int t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const FiniteRV& rv = inst.rvs[i];
      const double u = uniform01(rng);
      double cdf = 0.0;
      std::size_t pick = rv.size() - 1;
      for (std::size_t r = 0; r < rv.size(); ++r) {
        cdf += rv.probs()[r];
        if (u < cdf) {
          pick = r;
          break;
        }
      }
      outcomes[i] = rv.support()[pick];
    }
    discs.push_back(discrepancy_norm(inst, make_assignment(inst, outcomes)));
  }
  std::sort(discs.begin(), discs.end());

  const auto quantile = [&](double p) {
    const std::size_t k = std::min(discs.size() - 1,
                                   static_cast<std::size_t>(p * static_cast<double>(discs.size())));
    return discs[k];
  };
  BaselineSummary s;
  s.trials = trials;
  s.min = discs.front();
  s.q10 = quantile(0.10);
  s.q25 = quantile(0.25);
  s.q75 = quantile(0.75);
  s.q90 = quantile(0.90);
  s.max = discs.back();
  const std::size_t h = discs.size() / 2;
  s.median = (discs.size() % 2 == 1) ? discs[h] : 0.5 * (discs[h - 1] + discs[h]);
  return s;
}

VerifyResult verify_bound(const Instance& inst, const Assignment& a) {
  VerifyResult v;
  v.disc = discrepancy_norm(inst, a);
  v.sigma = compute_sigma(inst);
  v.bound = 4.0 * v.sigma;
  v.tol = 1e-8 * (1.0 + v.bound);
  v.ok = v.disc <= v.bound + v.tol;
  return v;
}

}  // namespace dforge
