#pragma once

#include "punctual/chain.hpp"
#include "punctual/submodules.hpp"

#include <optional>
#include <string>
#include <vector>

namespace punctual {

struct FamilySample {
  CycScalar a;
  CycScalar b;
  LeftIdeal fiber;
  int colength;
};

enum class DeformationBranch {
  NoOp,      // input already fails dual containment
  AllEqual,  // J_1 = ... = J_e
  Adjacent,  // J_m != J_{m+1} for the smallest such m
  Unramified,
};

std::string_view to_string(DeformationBranch branch);

struct DeformationCertificate {
  LeftIdeal before;
  LeftIdeal after;
  int colength = 0;
  bool dual_containment_before = false;
  bool dual_containment_after = false;
  /// Whether `after` is still of circulant shape (SmoothRam only).
  bool chain_shape_after = false;
  DeformationBranch branch = DeformationBranch::NoOp;
  /// The index m of the Adjacent branch (1-based), 0 otherwise.
  int branch_index = 0;
  std::optional<IdealChain> chain{};
  /// First row (J_e', ..., J_1') of the deformed ideal, when a chain was used.
  std::vector<CommIdeal> first_row{};
  /// Interpolation is only constructed for SmoothRam deformations.
  bool endpoint_only = false;
  std::vector<FamilySample> family_samples{};
};

/// Lifts J + R^{f-1} where J is the staircase ideal of colength l; the
/// result is never two-sided. `before` is the lift of `summands`.
DeformationCertificate deform_unramified(const std::shared_ptr<const Algebra>& algebra,
                                         const std::vector<CommIdeal>& summands);

/// The first-row modification of a circulant ideal. Inputs that already fail
/// dual containment come back unchanged with the NoOp branch.
DeformationCertificate deform_smooth_ram(const LeftIdeal& ideal);

/// (J cap J2) + span(a w + b w'), with w, w' the canonical representatives
/// of J / (J cap J2) and J2 / (J cap J2).
LeftIdeal family_fiber(const LeftIdeal& first, const LeftIdeal& second, const CycScalar& a,
                       const CycScalar& b);

/// Fills certificate.family_samples with fibers at [1:0], [0:1] and the
/// given extra points.
void sample_family(DeformationCertificate& certificate,
                   const std::vector<std::pair<CycScalar, CycScalar>>& points);

/// The default interior sample points [1:t] used by certificates.
std::vector<std::pair<CycScalar, CycScalar>> default_family_points(int count);

struct DivisibilityResult {
  bool exists = false;
  /// Colength-l left ideal when one exists.
  std::optional<LeftIdeal> witness;
  /// Number of one-dimensional simple modules of the Morita-reduced algebra.
  int simple_count = 0;
  /// Human-readable account of how the answer was certified.
  std::string argument;
};

/// Whether a left ideal of colength l exists.
DivisibilityResult divisibility_probe(const AlgebraSpec& spec, int l, std::size_t max_dim = 5000);

} // namespace punctual
