#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "dforge/instance.hpp"
#include "dforge/multipoly.hpp"
#include "dforge/unipoly.hpp"

namespace dforge {

/// Work-size guard shared by the exponential engines. Enumeration counts
/// leaf evaluations, the operator engine counts ring slots 3^n * (2m+1).
struct EngineCaps {
  std::uint64_t work_cap = std::uint64_t{1} << 20;
};

/// A node of the conditional-polynomial tree: the partial assignment t, its
/// probability weight prod p_{i,t_i}, the conditional expected polynomial
/// q_t, and the accumulated offset matrix sum_{i<=k} (t_i - mu_i) u_i u_i^T.
struct ConditionalNode {
  Assignment prefix;
  double weight = 1.0;
  UniPoly qpoly;
  Eigen::MatrixXd offset_matrix;
};

/// Exact conditional expected polynomial
///   q_t(x) = (prod_{i<=k} p_{i,t_i}) E[ det(x^2 I - (Q + sum_{j>k} (xi_j - mu_j) u_j u_j^T)^2) ]
/// by enumerating the remaining product distribution. When `condense` is
/// set, every remaining variable is first replaced by its two-point
/// condensation; the result is identical because each determinant factor is
/// affine in each xi_j, so the integrand has degree <= 2 per variable.
/// Children are accumulated in ascending support order, a fixed tree
/// reduction over the assignment tree.
ConditionalNode expected_poly_enum(const Instance& inst, const Assignment& prefix,
                                   bool condense = true, const EngineCaps& caps = {});

/// The same expectation, for an explicit symmetric offset Q over all n
/// variables, through the operator formula: both determinant factors
///   det(xI -/+ Q + sum_i z_i tau_i u_i u_i^T)
/// are expanded in the truncated z-ring, multiplied, each (1 - d_i^2/2) is
/// applied as the slice rule c0 <- c0 - c2, and z = 0 is taken.
UniPoly expected_poly_operator(const Instance& inst, const Eigen::MatrixXd& offset,
                               const EngineCaps& caps = {});

/// One determinant factor det(xI + base + sum_i z_i tau_i u_i u_i^T) as an
/// element of the truncated ring, via minor expansion over column subsets.
/// Exposed for the engine-identity tests.
TruncatedMultiPoly det_factor_poly(const Instance& inst, const Eigen::MatrixXd& base);

struct TraceDerivatives {
  double value = 0.0;  // det(M) det(N)
  double d1 = 0.0;     // d/dt at t=0 of det(M + tA) det(N + tA)
  double d2 = 0.0;     // second derivative at t=0
};

/// Jacobi-formula evaluation of det(M + tA) det(N + tA) and its first two
/// derivatives at t = 0. Both factors must be invertible.
TraceDerivatives det_product_trace_derivatives(const Eigen::MatrixXd& M,
                                               const Eigen::MatrixXd& N,
                                               const Eigen::MatrixXd& A);

}  // namespace dforge
