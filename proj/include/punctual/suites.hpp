#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace punctual {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Smaller pools and grids, for `selftest quick`.
  bool quick = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Checks performed (ideals, chains, grid points, ...).
  int cases = 0;
  double seconds = 0;
  double budget_seconds = 0;
  /// Counts and the first failure, if any.
  std::string detail;
};

/// c m_1 = m_e c and c m_i = m_{i-1} c as exact subspaces, e in {2,3,4}.
CriterionResult check_conjugation_relations(const SuiteOptions& options);
/// Dual containment implies two-sidedness over seeded pools.
CriterionResult check_two_sided_lemma(const SuiteOptions& options);
/// compose(decompose(I)) = I and the colength formula.
CriterionResult check_chain_round_trip(const SuiteOptions& options);
/// deform_smooth_ram over the chain pool.
CriterionResult check_smooth_ram_deformations(const SuiteOptions& options);
/// Endpoints and constant colength of the P^1 families.
CriterionResult check_families(const SuiteOptions& options);
/// divisibility_probe(spec, l) = (f | l).
CriterionResult check_divisibility(const SuiteOptions& options);
/// Number of colength-one left ideals.
CriterionResult check_simple_counts(const SuiteOptions& options);
/// Spot checks of the above with N raised by one.
CriterionResult check_truncation_stability(const SuiteOptions& options);

std::vector<CriterionResult> run_all_criteria(const SuiteOptions& options);

/// "PASS [3] name (1.23 s / budget 120 s): detail"
std::string format_result(const CriterionResult& result);

} // namespace punctual
