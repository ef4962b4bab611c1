#pragma once

#include "punctual/chain.hpp"
#include "punctual/submodules.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace punctual {

enum class PoolKind {
  Left,           // left closure of the seed
  LeftSigma,      // also stable under conjugation by the dual generator
  TwoSided,       // left and right closure
  TwoSidedSigma,  // two-sided and conjugation-stable
};

std::string_view to_string(PoolKind kind);

/// Seed for instance `index` of a pool, mixed from the pool seed and a label.
std::uint64_t instance_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

/// Saturated proper left ideals from closing 1-3 random elements of degree
/// <= max(2, N - 2) together with either u^p, v^q (p + q = N or N - 1) or all
/// central monomials of one degree k in [2, N - 1]. Unsaturated closures and duplicates
/// are discarded; at most 20 * count attempts are made.
std::vector<LeftIdeal> random_ideal_pool(const AlgebraSpec& spec, PoolKind kind, int count,
                                         std::uint64_t seed);

/// Monomial ideals of R_N of colength at most `max_colength`, followed by the
/// non-monomial ideals (v - t u, u^k) and (u - t v^2, v^3) for eight slopes t.
std::vector<CommIdeal> comm_ideal_pool(int max_colength, int N);

/// Chains of length e over comm_ideal_pool with e * colength_sum in
/// [1, max_colength], each at N = e * colength_sum + 2 when `tight_truncation`
/// and at max_colength + 2 otherwise.
std::vector<IdealChain> chain_pool(int e, int max_colength, bool tight_truncation = true);

} // namespace punctual
