#pragma once

#include <cstddef>
#include <vector>

namespace dforge {

/// One scalar random variable with finite support.
///
/// Canonical form: support values sorted ascending, pairwise distinct,
/// zero-mass points dropped, probabilities nonnegative and summing to 1
/// within 1e-12. Mean and variance are computed once at construction.
class FiniteRV {
 public:
  /// Validates and canonicalizes. Throws ValidationError on bad input.
  FiniteRV(std::vector<double> support, std::vector<double> probs);

  /// Uniform probabilities over the given support.
  static FiniteRV uniform(std::vector<double> support);

  /// Degenerate one-point variable.
  static FiniteRV point(double value);

  /// Symmetric +/-1 signs, probability 1/2 each.
  static FiniteRV rademacher();

  /// {0,1}-valued with mean t.
  static FiniteRV bernoulli(double t);

  /// {-1,+1}-valued with mean mu (P[+1] = (1+mu)/2).
  static FiniteRV biased_sign(double mu);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  double mean() const { return mean_; }
  double variance() const { return variance_; }
  double stddev() const;
  std::size_t size() const { return support_.size(); }
  bool deterministic() const { return support_.size() == 1; }

  /// True iff `value` equals one of the stored support values exactly.
  bool in_support(double value) const;

  /// Index of `value` in the stored support; throws ContractError if absent.
  std::size_t support_index(double value) const;

  bool operator==(const FiniteRV& other) const = default;

 private:
  std::vector<double> support_;
  std::vector<double> probs_;
  double mean_ = 0.0;
  double variance_ = 0.0;
};

/// Replaces a variable by the two-point variable {mean - sd, mean + sd}
/// with weights 1/2 each (one point {mean} when the variance vanishes).
/// The first two moments match the input exactly.
FiniteRV condense_to_two_point(const FiniteRV& rv);

}  // namespace dforge
