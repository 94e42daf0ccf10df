#include "dforge/finite_rv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dforge/errors.hpp"

namespace dforge {

namespace {
constexpr double kProbSumTol = 1e-12;
}

FiniteRV::FiniteRV(std::vector<double> support, std::vector<double> probs) {
  if (support.empty()) {
    throw ValidationError("FiniteRV: empty support");
  }
  if (support.size() != probs.size()) {
    throw ValidationError("FiniteRV: support/probs size mismatch");
  }
  for (double s : support) {
    if (!std::isfinite(s)) throw ValidationError("FiniteRV: non-finite support value");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw ValidationError("FiniteRV: probabilities must be finite and >= 0");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw ValidationError("FiniteRV: probabilities must sum to 1 within 1e-12");
  }

  // Canonical order: ascending by support value. Zero-mass points carry no
  // outcome and are dropped.
  std::vector<std::size_t> order(support.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
  for (std::size_t r : order) {
    if (probs[r] == 0.0) continue;
    support_.push_back(support[r]);
    probs_.push_back(probs[r]);
  }
  if (support_.empty()) {
    throw ValidationError("FiniteRV: all support points have zero probability");
  }
  for (std::size_t i = 1; i < support_.size(); ++i) {
    if (support_[i] == support_[i - 1]) {
      throw ValidationError("FiniteRV: support values must be pairwise distinct");
    }
  }

  for (std::size_t i = 0; i < support_.size(); ++i) mean_ += probs_[i] * support_[i];
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const double d = support_[i] - mean_;
    variance_ += probs_[i] * d * d;
  }
  if (variance_ < 0.0) variance_ = 0.0;
}

FiniteRV FiniteRV::uniform(std::vector<double> support) {
  if (support.empty()) throw ValidationError("FiniteRV: empty support");
  std::vector<double> probs(support.size(), 1.0 / static_cast<double>(support.size()));
  return FiniteRV(std::move(support), std::move(probs));
}

FiniteRV FiniteRV::point(double value) { return FiniteRV({value}, {1.0}); }

FiniteRV FiniteRV::rademacher() { return FiniteRV({-1.0, 1.0}, {0.5, 0.5}); }

FiniteRV FiniteRV::bernoulli(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw ValidationError("bernoulli: mean must lie in [0,1]");
  return FiniteRV({0.0, 1.0}, {1.0 - t, t});
}

FiniteRV FiniteRV::biased_sign(double mu) {
  if (!(mu >= -1.0 && mu <= 1.0)) throw ValidationError("biased_sign: mean must lie in [-1,1]");
  return FiniteRV({-1.0, 1.0}, {(1.0 - mu) / 2.0, (1.0 + mu) / 2.0});
}

double FiniteRV::stddev() const { return std::sqrt(variance_); }

bool FiniteRV::in_support(double value) const {
  return std::find(support_.begin(), support_.end(), value) != support_.end();
}

std::size_t FiniteRV::support_index(double value) const {
  auto it = std::find(support_.begin(), support_.end(), value);
  if (it == support_.end()) {
    throw ContractError("FiniteRV: value is not a stored support point");
  }
  return static_cast<std::size_t>(it - support_.begin());
}

FiniteRV condense_to_two_point(const FiniteRV& rv) {
  const double mu = rv.mean();
  const double tau = rv.stddev();
  if (tau == 0.0) return FiniteRV::point(mu);
  return FiniteRV({mu - tau, mu + tau}, {0.5, 0.5});
}

}  // namespace dforge
