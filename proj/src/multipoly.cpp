#include "dforge/multipoly.hpp"

#include <algorithm>
#include <map>

#include "dforge/errors.hpp"

namespace dforge {

TruncatedMultiPoly::TruncatedMultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > 20) {
    throw ValidationError("TruncatedMultiPoly: variable count out of range");
  }
  pow3_.resize(static_cast<std::size_t>(nvars) + 1);
  pow3_[0] = 1;
  for (int i = 0; i < nvars; ++i) pow3_[static_cast<std::size_t>(i) + 1] = 3u * pow3_[i];
}

TruncatedMultiPoly TruncatedMultiPoly::constant(int nvars, UniPoly xpoly) {
  TruncatedMultiPoly p(nvars);
  if (!xpoly.is_zero()) p.terms_.emplace_back(0u, std::move(xpoly));
  return p;
}

std::uint32_t TruncatedMultiPoly::encode(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != nvars_) {
    throw ContractError("TruncatedMultiPoly: exponent vector length mismatch");
  }
  std::uint32_t code = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (exps[static_cast<std::size_t>(i)] < 0 || exps[static_cast<std::size_t>(i)] > 2) {
      throw ContractError("TruncatedMultiPoly: exponents must lie in {0,1,2}");
    }
    code += static_cast<std::uint32_t>(exps[static_cast<std::size_t>(i)]) * pow3_[static_cast<std::size_t>(i)];
  }
  return code;
}

std::vector<int> TruncatedMultiPoly::decode(std::uint32_t code) const {
  std::vector<int> exps(static_cast<std::size_t>(nvars_));
  for (int i = 0; i < nvars_; ++i) {
    exps[static_cast<std::size_t>(i)] = static_cast<int>(code % 3u);
    code /= 3u;
  }
  return exps;
}

const UniPoly& TruncatedMultiPoly::coeff(const std::vector<int>& exps) const {
  static const UniPoly kZero;
  const std::uint32_t code = encode(exps);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), code,
                             [](const auto& t, std::uint32_t c) { return t.first < c; });
  if (it == terms_.end() || it->first != code) return kZero;
  return it->second;
}

void TruncatedMultiPoly::add_term(std::uint32_t code, const UniPoly& p) {
  if (p.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), code,
                             [](const auto& t, std::uint32_t c) { return t.first < c; });
  if (it != terms_.end() && it->first == code) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {code, p});
  }
}

TruncatedMultiPoly TruncatedMultiPoly::operator+(const TruncatedMultiPoly& other) const {
  if (nvars_ != other.nvars_) throw ContractError("TruncatedMultiPoly: variable count mismatch");
  TruncatedMultiPoly out(nvars_);
  out.terms_ = terms_;
  for (const auto& [code, p] : other.terms_) out.add_term(code, p);
  return out;
}

TruncatedMultiPoly TruncatedMultiPoly::operator*(const TruncatedMultiPoly& other) const {
  if (nvars_ != other.nvars_) throw ContractError("TruncatedMultiPoly: variable count mismatch");
  std::map<std::uint32_t, UniPoly> acc;
  for (const auto& [ca, pa] : terms_) {
    const std::vector<int> da = decode(ca);
    for (const auto& [cb, pb] : other.terms_) {
      // Per-digit sum must stay <= 2; overflowing terms fall out of the
      // quotient ring.
      std::uint32_t code = 0;
      bool keep = true;
      std::uint32_t rb = cb;
      for (int i = 0; i < nvars_; ++i) {
        const int e = da[static_cast<std::size_t>(i)] + static_cast<int>(rb % 3u);
        rb /= 3u;
        if (e > 2) {
          keep = false;
          break;
        }
        code += static_cast<std::uint32_t>(e) * pow3_[static_cast<std::size_t>(i)];
      }
      if (!keep) continue;
      auto [it, inserted] = acc.try_emplace(code, UniPoly());
      it->second += pa * pb;
    }
  }
  TruncatedMultiPoly out(nvars_);
  out.terms_.reserve(acc.size());
  for (auto& [code, p] : acc) {
    if (!p.is_zero()) out.terms_.emplace_back(code, std::move(p));
  }
  return out;
}

void TruncatedMultiPoly::apply_second_derivative_condense(int var) {
  if (var < 0 || var >= nvars_) throw ContractError("TruncatedMultiPoly: variable index out of range");
  const std::uint32_t step = 2u * pow3_[static_cast<std::size_t>(var)];
  // Collect the digit-2 slice first; add_term may reallocate.
  std::vector<std::pair<std::uint32_t, UniPoly>> updates;
  for (const auto& [code, p] : terms_) {
    const int digit = static_cast<int>((code / pow3_[static_cast<std::size_t>(var)]) % 3u);
    if (digit == 2) updates.emplace_back(code - step, p * -1.0);
  }
  for (const auto& [code, p] : updates) add_term(code, p);
}

UniPoly TruncatedMultiPoly::at_zero() const {
  if (!terms_.empty() && terms_.front().first == 0u) return terms_.front().second;
  return UniPoly();
}

}  // namespace dforge
