#include "dforge/expectation.hpp"

#include <Eigen/Dense>
#include <bit>
#include <vector>

#include "dforge/errors.hpp"

namespace dforge {

namespace {

// Depth-first expectation over variables j..n-1 starting from deviation
// matrix M. Children are summed in ascending support order.
UniPoly enum_rec(const Instance& inst, const std::vector<FiniteRV>& rvs,
                 const Eigen::MatrixXd& M, std::size_t j) {
  if (j == inst.size()) return char_poly_squared(M);
  const FiniteRV& rv = rvs[j];
  UniPoly acc;
  for (std::size_t r = 0; r < rv.size(); ++r) {
    const double shift = rv.support()[r] - rv.mean();
    Eigen::MatrixXd next = M;
    if (shift != 0.0) {
      next.noalias() += shift * (inst.vectors[j] * inst.vectors[j].transpose());
    }
    acc += rv.probs()[r] * enum_rec(inst, rvs, next, j + 1);
  }
  return acc;
}

}  // namespace

ConditionalNode expected_poly_enum(const Instance& inst, const Assignment& prefix,
                                   bool condense, const EngineCaps& caps) {
  inst.validate();
  const std::size_t k = prefix.outcomes.size();
  if (k > inst.size()) throw ContractError("expected_poly_enum: prefix longer than instance");

  ConditionalNode node;
  node.offset_matrix = Eigen::MatrixXd::Zero(inst.m, inst.m);
  for (std::size_t i = 0; i < k; ++i) {
    const FiniteRV& rv = inst.rvs[i];
    // Throws if the outcome is not a stored support point.
    node.weight *= rv.probs()[rv.support_index(prefix.outcomes[i])];
    const double shift = prefix.outcomes[i] - rv.mean();
    if (shift != 0.0) {
      node.offset_matrix.noalias() +=
          shift * (inst.vectors[i] * inst.vectors[i].transpose());
    }
  }

  std::vector<FiniteRV> rvs;
  rvs.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (i < k) {
      rvs.push_back(inst.rvs[i]);  // never visited by the recursion
    } else {
      rvs.push_back(condense ? condense_to_two_point(inst.rvs[i]) : inst.rvs[i]);
    }
  }

  std::uint64_t leaves = 1;
  for (std::size_t i = k; i < inst.size(); ++i) {
    leaves *= rvs[i].size();
    if (leaves > caps.work_cap) {
      throw CapExceededError("expected_poly_enum: enumeration exceeds the work cap");
    }
  }

  node.prefix = prefix;
  node.qpoly = node.weight * enum_rec(inst, rvs, node.offset_matrix, k);
  return node;
}

TruncatedMultiPoly det_factor_poly(const Instance& inst, const Eigen::MatrixXd& base) {
  const int n = static_cast<int>(inst.size());
  const int m = inst.m;

  // Ring-valued matrix entries: A(r,c) = x*[r==c] + base(r,c) + sum_i z_i tau_i u_i[r] u_i[c].
  std::vector<std::vector<TruncatedMultiPoly>> entry(
      static_cast<std::size_t>(m),
      std::vector<TruncatedMultiPoly>(static_cast<std::size_t>(m), TruncatedMultiPoly(n)));
  std::vector<std::uint32_t> zcode(static_cast<std::size_t>(n));
  {
    std::uint32_t p3 = 1;
    for (int i = 0; i < n; ++i, p3 *= 3u) zcode[static_cast<std::size_t>(i)] = p3;
  }
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      auto& e = entry[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      std::vector<double> lin{base(r, c)};
      if (r == c) lin.push_back(1.0);
      e.add_term(0u, UniPoly(std::move(lin)));
      for (int i = 0; i < n; ++i) {
        const double tau = inst.rvs[static_cast<std::size_t>(i)].stddev();
        const double v = tau * inst.vectors[static_cast<std::size_t>(i)][r] *
                         inst.vectors[static_cast<std::size_t>(i)][c];
        if (v != 0.0) e.add_term(zcode[static_cast<std::size_t>(i)], UniPoly::constant(v));
      }
    }
  }

  // Minor expansion along the last processed row, memoized over column
  // subsets. D[mask] = det of rows 0..popcount(mask)-1, columns in mask.
  const std::uint32_t full = (m >= 32) ? 0xffffffffu : ((1u << m) - 1u);
  std::vector<TruncatedMultiPoly> dp(static_cast<std::size_t>(full) + 1, TruncatedMultiPoly(n));
  dp[0] = TruncatedMultiPoly::constant(n, UniPoly::constant(1.0));
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int row = std::popcount(mask) - 1;
    TruncatedMultiPoly acc(n);
    int pos = 0;
    for (int c = 0; c < m; ++c) {
      if (!(mask & (1u << c))) continue;
      const TruncatedMultiPoly prod =
          entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] *
          dp[mask & ~(1u << c)];
      const double sign = ((row + pos) % 2 == 0) ? 1.0 : -1.0;
      for (const auto& [code, p] : prod.terms()) acc.add_term(code, p * sign);
      ++pos;
    }
    dp[mask] = std::move(acc);
  }
  return dp[full];
}

UniPoly expected_poly_operator(const Instance& inst, const Eigen::MatrixXd& offset,
                               const EngineCaps& caps) {
  inst.validate();
  if (offset.rows() != inst.m || offset.cols() != inst.m) {
    throw ContractError("expected_poly_operator: offset must be m x m");
  }
  const int n = static_cast<int>(inst.size());

  std::uint64_t work = static_cast<std::uint64_t>(2 * inst.m + 1);
  for (int i = 0; i < n; ++i) {
    work *= 3;
    if (work > caps.work_cap) {
      throw CapExceededError("expected_poly_operator: ring size exceeds the work cap");
    }
  }

  const TruncatedMultiPoly f1 = det_factor_poly(inst, -offset);
  const TruncatedMultiPoly f2 = det_factor_poly(inst, offset);
  TruncatedMultiPoly prod = f1 * f2;
  for (int i = 0; i < n; ++i) prod.apply_second_derivative_condense(i);
  return prod.at_zero();
}

TraceDerivatives det_product_trace_derivatives(const Eigen::MatrixXd& M,
                                               const Eigen::MatrixXd& N,
                                               const Eigen::MatrixXd& A) {
  if (M.rows() != M.cols() || N.rows() != N.cols() || A.rows() != A.cols() ||
      M.rows() != N.rows() || M.rows() != A.rows()) {
    throw ContractError("det_product_trace_derivatives: dimension mismatch");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> luM(M), luN(N);
  if (!luM.isInvertible() || !luN.isInvertible()) {
    throw ContractError("det_product_trace_derivatives: singular factor");
  }
  const Eigen::MatrixXd X = luM.solve(A);  // M^{-1} A
  const Eigen::MatrixXd Y = luN.solve(A);  // N^{-1} A
  const double tm = X.trace();
  const double tn = Y.trace();
  const double sm = (X * X).trace();
  const double sn = (Y * Y).trace();

  TraceDerivatives out;
  out.value = luM.determinant() * luN.determinant();
  out.d1 = out.value * (tm + tn);
  // d^2/dt^2 det(M+tA) = det(M) (Tr[M^{-1}A]^2 - Tr[(M^{-1}A)^2]); product rule.
  out.d2 = out.value * ((tm * tm - sm) + 2.0 * tm * tn + (tn * tn - sn));
  return out;
}

}  // namespace dforge
