#pragma once

#include "punctual/chain.hpp"
#include "punctual/deformations.hpp"
#include "punctual/submodules.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace punctual {

// std::map-backed objects, so dumps list keys in sorted order.
using Json = nlohmann::json;

std::uint64_t fnv1a64(std::string_view bytes);
/// 16 lowercase hex digits of fnv1a64(json.dump()).
std::string input_hash(const Json& json);

Json scalar_to_json(const CycScalar& c);
/// Accepts a string (see parse_scalar) or an integer.
CycScalar scalar_from_json(const Json& json, int order = 1);

Json spec_to_json(const AlgebraSpec& spec);
/// {"kind", "e", "f", "N"} plus "e_prime" for Mixed; e and e_prime default
/// from the kind. N comes from `truncation` when that is positive.
AlgebraSpec spec_from_json(const Json& json, int truncation = 0);

Json element_to_json(const Algebra& algebra, const SparseVec& v);
/// An n x n array of entry strings, or a single string meaning text * 1.
SparseVec element_from_json(const Algebra& algebra, const Json& json);

/// {"N", "colength", "basis": [elements]}; colength is null when unsaturated.
Json ideal_to_json(const LeftIdeal& ideal);
/// {"generators": [...]} is closed into a left ideal; {"basis": [...]} is
/// taken as given and checked for closure.
LeftIdeal ideal_from_json(const std::shared_ptr<const Algebra>& algebra, const Json& json);

Json comm_ideal_to_json(const CommIdeal& ideal);
/// {"generators": [...]} or {"basis": [...]}, polynomial strings in u, v.
CommIdeal comm_ideal_from_json(const Json& json, int N);

Json chain_to_json(const IdealChain& chain);
IdealChain chain_from_json(const Json& json, int N);

Json row_module_to_json(const RowModule& module);

Json certificate_to_json(const DeformationCertificate& certificate);

} // namespace punctual
