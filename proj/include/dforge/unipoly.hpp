#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace dforge {

/// Univariate polynomial with real coefficients, stored ascending by degree
/// with trailing near-zeros trimmed (threshold 1e-13 relative to the largest
/// coefficient magnitude). The zero polynomial has no coefficients and
/// degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static UniPoly constant(double c) { return UniPoly({c}); }
  static UniPoly identity_x() { return UniPoly({0.0, 1.0}); }

  /// leading * prod (x - r) expanded to coefficients.
  static UniPoly from_roots(const std::vector<double>& roots, double leading = 1.0);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double leading_coeff() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  /// Coefficient of x^k (0 beyond the stored degree).
  double coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0.0; }

  double evaluate(double x) const;  // Horner
  UniPoly derivative() const;

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;  // convolution
  UniPoly operator*(double scalar) const;
  UniPoly& operator+=(const UniPoly& other);

  /// Divides by the leading coefficient.
  UniPoly monic() const;

 private:
  void trim();
  std::vector<double> coeffs_;
};

inline UniPoly operator*(double scalar, const UniPoly& p) { return p * scalar; }

/// Real parts of the accepted roots, sorted ascending, plus the largest
/// imaginary magnitude the acceptance discarded.
struct RootSet {
  std::vector<double> roots;
  double max_imag_residual = 0.0;
};

/// Complex roots via a balanced companion matrix (degrees 1 and 2 are solved
/// in closed form).
std::vector<std::complex<double>> companion_roots(const UniPoly& p);

/// Default acceptance tolerance for real-rootedness: a root estimate r is
/// accepted when |Im r| <= tol * (1 + |r|). Expected polynomials are exactly
/// real-rooted in theory; residuals are eigensolver noise.
inline constexpr double kRealRootTol = 1e-7;

/// Tests whether every companion eigenvalue is real within tol and returns
/// the real parts as a RootSet (sorted). Requires degree >= 1.
std::pair<bool, RootSet> is_real_rooted(const UniPoly& p, double tol = kRealRootTol);

/// Maximum real root of a real-rooted polynomial: companion eigenvalues
/// followed by one Newton polish step. Throws RootednessError when the
/// real-rootedness test fails and ContractError on degree < 1.
double largest_root(const UniPoly& p, double tol = kRealRootTol);

/// Randomized common-interlacing verifier: checks real-rootedness of the
/// vertices, all pairwise midpoints, and `samples` random convex
/// combinations of the family. A true result is evidence, not proof.
/// All polynomials must share one degree and have positive leading
/// coefficients.
bool common_interlacing_check(const std::vector<UniPoly>& fs, int samples,
                              std::uint64_t seed = 0x5eedULL,
                              double tol = kRealRootTol);

/// prod_j (x^2 - lambda_j(M)^2) for a symmetric matrix M: the characteristic
/// polynomial of M extended through the product det(xI - M) det(xI + M).
/// Monic, degree 2m, with exactly zero odd coefficients.
UniPoly char_poly_squared(const Eigen::MatrixXd& M);

/// max_k |a_k - b_k| / max(1, max_k |a_k|, max_k |b_k|).
double coeff_rel_diff(const UniPoly& a, const UniPoly& b);

}  // namespace dforge
