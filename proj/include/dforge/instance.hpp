#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <string>
#include <vector>

#include "dforge/finite_rv.hpp"

namespace dforge {

/// A rank-one matrix discrepancy problem: n vectors u_i in R^m paired with
/// independent finite-support random variables xi_i.
struct Instance {
  int m = 0;
  std::vector<Eigen::VectorXd> vectors;
  std::vector<FiniteRV> rvs;

  std::size_t size() const { return vectors.size(); }

  /// Throws ValidationError unless shapes agree, entries are finite and
  /// m, n >= 1.
  void validate() const;

  bool operator==(const Instance& other) const;
};

/// A partial or complete choice of outcomes eps_1..eps_k, one per variable,
/// each taken verbatim from the corresponding support.
struct Assignment {
  std::vector<double> outcomes;
  bool complete = false;

  std::size_t size() const { return outcomes.size(); }
};

/// Builds an assignment over the first outcomes.size() variables of inst,
/// checking each outcome is a stored support value. Throws ContractError.
Assignment make_assignment(const Instance& inst, std::vector<double> outcomes);

enum class SelectMethod { kGreedy, kBrute, kRandom };

std::string to_string(SelectMethod method);

/// Result record for one solved instance.
struct DiscrepancyReport {
  double sigma = 0.0;            // variance proxy
  double disc = 0.0;             // achieved spectral-norm discrepancy
  double bound = 0.0;            // 4 * sigma
  double lambda_max_root = 0.0;  // largest root of the expected polynomial
  SelectMethod method = SelectMethod::kGreedy;
};

/// sigma = sqrt(lambda_max(sum_i Var[xi_i] (u_i u_i^T)^2)).
double compute_sigma(const Instance& inst);

/// The deviation matrix sum_i (eps_i - mu_i) u_i u_i^T for a complete
/// assignment (or the first k terms of a partial one).
Eigen::MatrixXd deviation_matrix(const Instance& inst, const Assignment& a);

/// Spectral norm of the deviation matrix. Requires a complete assignment;
/// throws ContractError otherwise.
double discrepancy_norm(const Instance& inst, const Assignment& a);

/// Largest eigenvalue of a symmetric matrix.
double lambda_max(const Eigen::MatrixXd& sym);

/// Spectral norm (largest |eigenvalue|) of a symmetric matrix.
double spectral_norm(const Eigen::MatrixXd& sym);

/// Copy of inst with every vector multiplied by `factor` (rvs unchanged).
Instance scale_vectors(const Instance& inst, double factor);

}  // namespace dforge
