#include "dforge/unipoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "dforge/errors.hpp"
#include "dforge/rng.hpp"

namespace dforge {

namespace {
constexpr double kTrimRel = 1e-13;
}

void UniPoly::trim() {
  double max_abs = 0.0;
  for (double c : coeffs_) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) {
    coeffs_.clear();
    return;
  }
  const double cut = kTrimRel * max_abs;
  while (!coeffs_.empty() && std::abs(coeffs_.back()) <= cut) coeffs_.pop_back();
}

UniPoly UniPoly::from_roots(const std::vector<double>& roots, double leading) {
  std::vector<double> c{leading};
  for (double r : roots) {
    // multiply by (x - r)
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return UniPoly(std::move(c));
}

double UniPoly::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  }
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<double> c(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& other) const { return *this + other * -1.0; }

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return UniPoly();
  std::vector<double> c(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      c[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(double scalar) const {
  std::vector<double> c = coeffs_;
  for (double& x : c) x *= scalar;
  return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  *this = *this + other;
  return *this;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) throw ContractError("monic: zero polynomial");
  return *this * (1.0 / leading_coeff());
}

namespace {

// Parlett-Reinsch style balancing: scale row/column pairs by powers of two
// until the 1-norms stop improving.
void balance_companion(Eigen::MatrixXd& c) {
  const int n = static_cast<int>(c.rows());
  const double gamma = 0.9;
  bool changed;
  do {
    changed = false;
    for (int i = 0; i < n; ++i) {
      double row_norm = c.row(i).lpNorm<1>() - std::abs(c(i, i));
      double col_norm = c.col(i).lpNorm<1>() - std::abs(c(i, i));
      if (row_norm == 0.0 || col_norm == 0.0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent != 0) {
        const double scaled_col = std::ldexp(col_norm, exponent);
        const double scaled_row = std::ldexp(row_norm, -exponent);
        if (scaled_col + scaled_row < gamma * (col_norm + row_norm)) {
          changed = true;
          c.row(i) *= std::ldexp(1.0, -exponent);
          c.col(i) *= std::ldexp(1.0, exponent);
        }
      }
    }
  } while (changed);
}

}  // namespace

std::vector<std::complex<double>> companion_roots(const UniPoly& p) {
  const int deg = p.degree();
  if (deg < 1) throw ContractError("companion_roots: degree must be >= 1");
  const auto& a = p.coeffs();

  if (deg == 1) {
    return {std::complex<double>(-a[0] / a[1], 0.0)};
  }
  if (deg == 2) {
    const double A = a[2], B = a[1], C = a[0];
    const double disc = B * B - 4.0 * A * C;
    if (disc >= 0.0) {
      // Stable split: avoid cancellation in the smaller root.
      const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
      double r0, r1;
      if (q != 0.0) {
        r0 = q / A;
        r1 = C / q;
      } else {
        r0 = 0.0;
        r1 = 0.0;
      }
      return {std::complex<double>(r0, 0.0), std::complex<double>(r1, 0.0)};
    }
    const double re = -B / (2.0 * A);
    const double im = std::sqrt(-disc) / (2.0 * A);
    return {std::complex<double>(re, im), std::complex<double>(re, -im)};
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  companion.diagonal(-1).setOnes();
  for (int k = 0; k < deg; ++k) companion(k, deg - 1) = -a[k] / a[deg];
  balance_companion(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw RootednessError("companion_roots: eigensolver failed to converge");
  }
  std::vector<std::complex<double>> roots(deg);
  for (int k = 0; k < deg; ++k) roots[k] = solver.eigenvalues()[k];
  return roots;
}

std::pair<bool, RootSet> is_real_rooted(const UniPoly& p, double tol) {
  if (p.degree() < 1) throw ContractError("is_real_rooted: degree must be >= 1");
  const auto roots = companion_roots(p);
  RootSet rs;
  rs.roots.reserve(roots.size());
  bool ok = true;
  for (const auto& z : roots) {
    const double im = std::abs(z.imag());
    rs.max_imag_residual = std::max(rs.max_imag_residual, im);
    if (im > tol * (1.0 + std::abs(z))) ok = false;
    rs.roots.push_back(z.real());
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  return {ok, rs};
}

double largest_root(const UniPoly& p, double tol) {
  if (p.degree() < 1) throw ContractError("largest_root: degree must be >= 1");
  auto [ok, rs] = is_real_rooted(p, tol);
  if (!ok) {
    throw RootednessError("largest_root: polynomial failed the real-rootedness test (max imag residual " +
                          std::to_string(rs.max_imag_residual) + ")");
  }
  double r = rs.roots.back();
  // One Newton step; skipped near a multiple root where p' vanishes.
  const double pr = p.evaluate(r);
  const double dr = p.derivative().evaluate(r);
  if (dr != 0.0) {
    const double step = pr / dr;
    if (std::isfinite(step) && std::abs(step) <= 1e-3 * (1.0 + std::abs(r))) r -= step;
  }
  return r;
}

bool common_interlacing_check(const std::vector<UniPoly>& fs, int samples,
                              std::uint64_t seed, double tol) {
  if (fs.empty()) throw ContractError("common_interlacing_check: empty family");
  const int deg = fs.front().degree();
  if (deg < 1) throw ContractError("common_interlacing_check: degree must be >= 1");
  for (const auto& f : fs) {
    if (f.degree() != deg) throw ContractError("common_interlacing_check: degree mismatch");
    if (f.leading_coeff() <= 0.0) {
      throw ContractError("common_interlacing_check: leading coefficients must be positive");
    }
  }

  const auto passes = [&](const UniPoly& q) { return is_real_rooted(q, tol).first; };

  // Vertices.
  for (const auto& f : fs) {
    if (!passes(f)) return false;
  }
  // Pairwise midpoints.
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (!passes(fs[i] * 0.5 + fs[j] * 0.5)) return false;
    }
  }
  // Random convex combinations.
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<double> w(fs.size());
    double sum = 0.0;
    for (double& x : w) {
      x = uniform01(rng);
      sum += x;
    }
    if (sum == 0.0) continue;
    UniPoly mix;
    for (std::size_t i = 0; i < fs.size(); ++i) mix += fs[i] * (w[i] / sum);
    if (!passes(mix)) return false;
  }
  return true;
}

UniPoly char_poly_squared(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw ValidationError("char_poly_squared: matrix must be square");
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("char_poly_squared: matrix is not symmetric within 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  // prod_j (x^2 - lambda_j^2): convolve even-degree factors, odd entries
  // stay identically zero.
  const int m = static_cast<int>(M.rows());
  std::vector<double> c(static_cast<std::size_t>(2 * m) + 1, 0.0);
  c[0] = 1.0;
  int top = 0;  // current degree
  for (int j = 0; j < m; ++j) {
    const double lam2 = es.eigenvalues()[j] * es.eigenvalues()[j];
    for (int k = top; k >= 0; k -= 2) {
      c[static_cast<std::size_t>(k) + 2] += c[static_cast<std::size_t>(k)];
      c[static_cast<std::size_t>(k)] *= -lam2;
    }
    top += 2;
  }
  return UniPoly(std::move(c));
}

double coeff_rel_diff(const UniPoly& a, const UniPoly& b) {
  double scale = 1.0;
  for (double c : a.coeffs()) scale = std::max(scale, std::abs(c));
  for (double c : b.coeffs()) scale = std::max(scale, std::abs(c));
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  double worst = 0.0;
  for (std::size_t k = 0; k < len; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  return worst / scale;
}

}  // namespace dforge
