#include "dforge/generators.hpp"

#include <algorithm>
#include <cmath>

#include "dforge/errors.hpp"
#include "dforge/rng.hpp"

namespace dforge {

InstanceKind parse_instance_kind(const std::string& name) {
  if (name == "gaussian") return InstanceKind::kGaussian;
  if (name == "isotropic") return InstanceKind::kIsotropic;
  if (name == "lyapunov") return InstanceKind::kLyapunov;
  if (name == "heavy_light") return InstanceKind::kHeavyLight;
  throw ValidationError("unknown instance kind: " + name);
}

RvKind parse_rv_kind(const std::string& name) {
  if (name == "rademacher") return RvKind::kRademacher;
  if (name == "biased") return RvKind::kBiasedSign;
  if (name == "bernoulli") return RvKind::kBernoulli;
  if (name == "three_point") return RvKind::kThreePoint;
  if (name == "mixed") return RvKind::kMixed;
  throw ValidationError("unknown rv kind: " + name);
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kGaussian: return "gaussian";
    case InstanceKind::kIsotropic: return "isotropic";
    case InstanceKind::kLyapunov: return "lyapunov";
    case InstanceKind::kHeavyLight: return "heavy_light";
  }
  return "unknown";
}

namespace {

Eigen::VectorXd gaussian_direction(std::mt19937_64& rng, int m) {
  Eigen::VectorXd v(m);
  for (int j = 0; j < m; ++j) v[j] = normal01(rng);
  const double nrm = v.norm();
  if (nrm == 0.0) {
    v.setZero();
    v[0] = 1.0;
    return v;
  }
  return v / nrm;
}

FiniteRV three_point_rv(std::mt19937_64& rng) {
  // Three distinct support points with a minimum gap, positive weights.
  double a = uniform_in(rng, -1.0, -0.1);
  double b = uniform_in(rng, -0.05, 0.05);
  double c = uniform_in(rng, 0.1, 1.0);
  double w0 = uniform_in(rng, 0.1, 1.0);
  double w1 = uniform_in(rng, 0.1, 1.0);
  double w2 = uniform_in(rng, 0.1, 1.0);
  const double sum = w0 + w1 + w2;
  w0 /= sum;
  w1 /= sum;
  w2 = 1.0 - w0 - w1;
  return FiniteRV({a, b, c}, {w0, w1, w2});
}

FiniteRV draw_rv(std::mt19937_64& rng, RvKind kind) {
  switch (kind) {
    case RvKind::kRademacher:
      return FiniteRV::rademacher();
    case RvKind::kBiasedSign:
      return FiniteRV::biased_sign(uniform_in(rng, -0.9, 0.9));
    case RvKind::kBernoulli:
      return FiniteRV::bernoulli(uniform_in(rng, 0.05, 0.95));
    case RvKind::kThreePoint:
      return three_point_rv(rng);
    case RvKind::kMixed: {
      const auto pick = uniform_index(rng, 4);
      return draw_rv(rng, static_cast<RvKind>(pick));
    }
  }
  throw ValidationError("unknown rv kind");
}

}  // namespace

Instance generate_instance(InstanceKind kind, int n, int m, std::uint64_t seed,
                           const GenParams& params) {
  if (n < 1 || m < 1) throw ValidationError("generate_instance: n and m must be >= 1");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.m = m;
  inst.vectors.reserve(n);
  inst.rvs.reserve(n);

  switch (kind) {
    case InstanceKind::kGaussian: {
      const RvKind rv = params.rv_kind.value_or(RvKind::kMixed);
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd u(m);
        for (int j = 0; j < m; ++j) u[j] = normal01(rng) / std::sqrt(double(m));
        inst.vectors.push_back(u);
        inst.rvs.push_back(draw_rv(rng, rv));
      }
      break;
    }
    case InstanceKind::kIsotropic: {
      const RvKind rv = params.rv_kind.value_or(RvKind::kRademacher);
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd u = Eigen::VectorXd::Zero(m);
        u[i % m] = 1.0;
        inst.vectors.push_back(u);
        inst.rvs.push_back(rv == RvKind::kRademacher ? FiniteRV::rademacher()
                                                     : draw_rv(rng, rv));
      }
      break;
    }
    case InstanceKind::kLyapunov: {
      if (!(params.eps > 0.0)) throw ValidationError("lyapunov: eps must be > 0");
      for (int i = 0; i < n; ++i) {
        const double sqnorm = params.eps * uniform_in(rng, 0.3, 1.0);
        inst.vectors.push_back(std::sqrt(sqnorm) * gaussian_direction(rng, m));
        inst.rvs.push_back(FiniteRV::bernoulli(uniform_in(rng, 0.0, 1.0)));
      }
      Eigen::MatrixXd total = Eigen::MatrixXd::Zero(m, m);
      for (const auto& u : inst.vectors) total.noalias() += u * u.transpose();
      const double top = lambda_max(total);
      if (top > 1.0) {
        const double shrink = 1.0 / std::sqrt(top * (1.0 + 1e-12));
        for (auto& u : inst.vectors) u *= shrink;
      }
      break;
    }
    case InstanceKind::kHeavyLight: {
      const RvKind rv = params.rv_kind.value_or(RvKind::kMixed);
      const int heavy = params.heavy_count > 0 ? std::min(params.heavy_count, n)
                                               : std::max(1, n / 4);
      for (int i = 0; i < n; ++i) {
        const double scale = i < heavy ? 1.0 : params.light_scale;
        inst.vectors.push_back(scale * gaussian_direction(rng, m));
        inst.rvs.push_back(draw_rv(rng, rv));
      }
      break;
    }
  }

  inst.validate();
  return inst;
}

}  // namespace dforge
