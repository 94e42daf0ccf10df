#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dforge/unipoly.hpp"

namespace dforge {

/// Multivariate polynomial in z_1..z_n with UniPoly-in-x coefficients,
/// truncated to per-variable z-degree <= 2 (the quotient by z_i^3). Terms
/// are keyed by a base-3 mixed-radix code: digit i of the code is the
/// exponent of z_i. Terms are kept sorted by code, zero coefficients
/// dropped.
class TruncatedMultiPoly {
 public:
  explicit TruncatedMultiPoly(int nvars);

  static TruncatedMultiPoly constant(int nvars, UniPoly xpoly);

  int nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<std::uint32_t, UniPoly>>& terms() const { return terms_; }

  std::uint32_t encode(const std::vector<int>& exps) const;
  std::vector<int> decode(std::uint32_t code) const;

  /// Coefficient for an exponent vector; zero polynomial if absent.
  const UniPoly& coeff(const std::vector<int>& exps) const;

  /// Adds p into the coefficient at `code`.
  void add_term(std::uint32_t code, const UniPoly& p);

  TruncatedMultiPoly operator+(const TruncatedMultiPoly& other) const;
  /// Product in the quotient ring: any term whose per-variable exponent
  /// would exceed 2 is dropped.
  TruncatedMultiPoly operator*(const TruncatedMultiPoly& other) const;

  /// Applies (1 - d^2/dz_var^2 / 2): for every slice, c0 <- c0 - c2.
  void apply_second_derivative_condense(int var);

  /// The coefficient at z = 0.
  UniPoly at_zero() const;

 private:
  int nvars_;
  std::vector<std::uint32_t> pow3_;  // pow3_[i] = 3^i
  std::vector<std::pair<std::uint32_t, UniPoly>> terms_;
};

}  // namespace dforge
