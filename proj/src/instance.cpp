#include "dforge/instance.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "dforge/errors.hpp"

namespace dforge {

void Instance::validate() const {
  if (m < 1) throw ValidationError("Instance: m must be >= 1");
  if (vectors.empty()) throw ValidationError("Instance: need at least one vector");
  if (vectors.size() != rvs.size()) {
    throw ValidationError("Instance: vectors and rvs must have equal length");
  }
  for (const auto& u : vectors) {
    if (u.size() != m) throw ValidationError("Instance: vector length differs from m");
    for (int j = 0; j < u.size(); ++j) {
      if (!std::isfinite(u[j])) throw ValidationError("Instance: non-finite vector entry");
    }
  }
}

bool Instance::operator==(const Instance& other) const {
  if (m != other.m || vectors.size() != other.vectors.size() || rvs != other.rvs) return false;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != other.vectors[i].size()) return false;
    if (vectors[i] != other.vectors[i]) return false;
  }
  return true;
}

Assignment make_assignment(const Instance& inst, std::vector<double> outcomes) {
  if (outcomes.size() > inst.size()) {
    throw ContractError("Assignment: more outcomes than variables");
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!inst.rvs[i].in_support(outcomes[i])) {
      throw ContractError("Assignment: outcome is not in the support of its variable");
    }
  }
  Assignment a;
  a.complete = outcomes.size() == inst.size();
  a.outcomes = std::move(outcomes);
  return a;
}

std::string to_string(SelectMethod method) {
  switch (method) {
    case SelectMethod::kGreedy: return "greedy";
    case SelectMethod::kBrute: return "brute";
    case SelectMethod::kRandom: return "random";
  }
  return "unknown";
}

double lambda_max(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

double spectral_norm(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double compute_sigma(const Instance& inst) {
  inst.validate();
  // (u u^T)^2 = |u|^2 u u^T, so the sum stays a single m x m accumulation.
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(inst.m, inst.m);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& u = inst.vectors[i];
    const double w = inst.rvs[i].variance() * u.squaredNorm();
    if (w != 0.0) s.noalias() += w * (u * u.transpose());
  }
  const double top = lambda_max(s);
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

Eigen::MatrixXd deviation_matrix(const Instance& inst, const Assignment& a) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(inst.m, inst.m);
  for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
    const double w = a.outcomes[i] - inst.rvs[i].mean();
    if (w != 0.0) d.noalias() += w * (inst.vectors[i] * inst.vectors[i].transpose());
  }
  return d;
}

double discrepancy_norm(const Instance& inst, const Assignment& a) {
  inst.validate();
  if (!a.complete || a.outcomes.size() != inst.size()) {
    throw ContractError("discrepancy_norm: assignment must be complete");
  }
  return spectral_norm(deviation_matrix(inst, a));
}

Instance scale_vectors(const Instance& inst, double factor) {
  Instance out = inst;
  for (auto& u : out.vectors) u *= factor;
  return out;
}

}  // namespace dforge
