#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dforge/instance.hpp"

namespace dforge {

enum class InstanceKind { kGaussian, kIsotropic, kLyapunov, kHeavyLight };

enum class RvKind { kRademacher, kBiasedSign, kBernoulli, kThreePoint, kMixed };

InstanceKind parse_instance_kind(const std::string& name);
RvKind parse_rv_kind(const std::string& name);
std::string to_string(InstanceKind kind);

struct GenParams {
  // lyapunov: target for max_i |u_i|^2 (the vectors are rescaled so that
  // |sum u_i u_i^T| <= 1 as well).
  double eps = 0.25;
  // heavy_light: number of unit-norm vectors (0 picks max(1, n/4)) and the
  // norm of the remaining ones.
  int heavy_count = 0;
  double light_scale = 0.2;
  // Per-variable distribution family; unset uses the kind's default
  // (isotropic: rademacher, gaussian/heavy_light: mixed). lyapunov always
  // uses {0,1}-valued variables with uniformly drawn means.
  std::optional<RvKind> rv_kind;
};

/// Deterministic in (kind, n, m, seed, params).
Instance generate_instance(InstanceKind kind, int n, int m, std::uint64_t seed,
                           const GenParams& params = {});

}  // namespace dforge
