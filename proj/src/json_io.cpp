#include "punctual/json_io.hpp"

#include "punctual/error.hpp"
#include "punctual/expr.hpp"

#include <cstdio>

namespace punctual {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& where) {
  throw Error(ErrorCode::ParseError, what, where.dump());
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad(std::string("missing key '") + key + "'", obj);
  return obj.at(key);
}

int int_field(const Json& obj, const char* key, int fallback, bool required) {
  if (!obj.contains(key)) {
    if (required) bad(std::string("missing key '") + key + "'", obj);
    return fallback;
  }
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' must be an integer", obj);
  return v.get<int>();
}

const Json& array_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_array()) bad(std::string("'") + key + "' must be an array", obj);
  return v;
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string input_hash(const Json& json) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(json.dump())));
  return buf;
}

Json scalar_to_json(const CycScalar& c) { return c.to_string(); }

CycScalar scalar_from_json(const Json& json, int order) {
  if (json.is_number_integer()) return CycScalar(Rational(json.get<long>()), order);
  if (!json.is_string()) bad("scalar must be a string or an integer", json);
  return parse_scalar(json.get<std::string>(), order);
}

Json spec_to_json(const AlgebraSpec& spec) {
  return Json{{"kind", std::string(to_string(spec.kind))},
              {"e", spec.e},
              {"e_prime", spec.e_prime},
              {"f", spec.f},
              {"N", spec.N}};
}

AlgebraSpec spec_from_json(const Json& json, int truncation) {
  if (!json.is_object()) bad("algebra must be an object", json);
  const Json& kind_json = field(json, "kind");
  if (!kind_json.is_string()) bad("'kind' must be a string", json);
  AlgebraKind kind;
  try {
    kind = parse_algebra_kind(kind_json.get<std::string>());
  } catch (const Error& err) {
    throw Error(ErrorCode::ParseError, err.what(), kind_json.dump());
  }
  const int f = int_field(json, "f", 1, false);
  const int N = truncation > 0 ? truncation : int_field(json, "N", 0, true);
  int e = 1;
  int e_prime = 1;
  switch (kind) {
  case AlgebraKind::Unramified:
    e = int_field(json, "e", 1, false);
    e_prime = int_field(json, "e_prime", e, false);
    break;
  case AlgebraKind::SmoothRam:
    e = int_field(json, "e", 0, true);
    e_prime = int_field(json, "e_prime", 1, false);
    break;
  case AlgebraKind::SingularRam:
    e = int_field(json, "e", 0, true);
    e_prime = int_field(json, "e_prime", e, false);
    break;
  case AlgebraKind::Mixed:
    e = int_field(json, "e", 0, true);
    e_prime = int_field(json, "e_prime", 0, true);
    break;
  }
  AlgebraSpec spec = AlgebraSpec::make(e, e_prime, f, N);
  if (spec.kind != kind)
    throw Error(ErrorCode::InvalidSpec, "parameters do not match the requested kind", json.dump());
  return spec;
}

Json element_to_json(const Algebra& algebra, const SparseVec& v) { return render_element(algebra, v); }

SparseVec element_from_json(const Algebra& algebra, const Json& json) {
  if (json.is_string()) return parse_central(algebra, json.get<std::string>());
  if (!json.is_array()) bad("element must be a string or a matrix of strings", json);
  EntryGrid grid;
  for (const auto& row : json) {
    if (!row.is_array()) bad("matrix rows must be arrays", json);
    grid.emplace_back();
    for (const auto& entry : row) {
      if (entry.is_number_integer()) {
        grid.back().push_back(std::to_string(entry.get<long>()));
      } else if (entry.is_string()) {
        grid.back().push_back(entry.get<std::string>());
      } else {
        bad("matrix entries must be strings", json);
      }
    }
  }
  return parse_element(algebra, grid);
}

Json ideal_to_json(const LeftIdeal& ideal) {
  Json basis = Json::array();
  for (const auto& [p, row] : ideal.basis().rows()) basis.push_back(element_to_json(ideal.algebra(), row));
  Json out{{"N", ideal.spec().N}, {"basis", std::move(basis)}};
  out["colength"] = ideal.saturated() ? Json(ideal.colength()) : Json();
  return out;
}

LeftIdeal ideal_from_json(const std::shared_ptr<const Algebra>& algebra, const Json& json) {
  if (!json.is_object()) bad("ideal must be an object", json);
  const bool has_gens = json.contains("generators");
  const bool has_basis = json.contains("basis");
  if (has_gens == has_basis) bad("ideal needs exactly one of 'generators' or 'basis'", json);
  std::vector<SparseVec> vectors;
  for (const auto& g : array_field(json, has_gens ? "generators" : "basis"))
    vectors.push_back(element_from_json(*algebra, g));
  if (has_gens) return close_left_ideal(algebra, vectors);
  Subspace s = Subspace::span(algebra->dim(), vectors);
  if (s.dim() != vectors.size())
    throw Error(ErrorCode::CertificateMismatch, "basis vectors are linearly dependent");
  return LeftIdeal(algebra, std::move(s));
}

Json comm_ideal_to_json(const CommIdeal& ideal) {
  Json basis = Json::array();
  for (const auto& s : ideal.basis_series()) basis.push_back(s.to_string());
  Json out{{"N", ideal.trunc_order()}, {"basis", std::move(basis)}};
  out["colength"] = ideal.saturated() ? Json(ideal.colength()) : Json();
  return out;
}

CommIdeal comm_ideal_from_json(const Json& json, int N) {
  if (json.is_string()) return ideal_from_generators({parse_series(json.get<std::string>(), N)}, N);
  if (!json.is_object()) bad("ideal must be an object", json);
  const bool has_gens = json.contains("generators");
  const bool has_basis = json.contains("basis");
  if (has_gens == has_basis) bad("ideal needs exactly one of 'generators' or 'basis'", json);
  std::vector<TruncSeries> series;
  for (const auto& g : array_field(json, has_gens ? "generators" : "basis")) {
    if (!g.is_string()) bad("generators must be strings", json);
    series.push_back(parse_series(g.get<std::string>(), N));
  }
  CommIdeal ideal = ideal_from_generators(series, N);
  if (has_basis && ideal.basis().dim() != series.size())
    throw Error(ErrorCode::CertificateMismatch, "basis series are linearly dependent");
  return ideal;
}

Json chain_to_json(const IdealChain& chain) {
  Json out = Json::array();
  for (const auto& j : chain.entries) out.push_back(comm_ideal_to_json(j));
  return out;
}

IdealChain chain_from_json(const Json& json, int N) {
  if (!json.is_array() || json.empty()) bad("chain must be a non-empty array of ideals", json);
  IdealChain chain;
  for (const auto& j : json) chain.entries.push_back(comm_ideal_from_json(j, N));
  return chain;
}

Json row_module_to_json(const RowModule& module) {
  Json out{{"f", module.f}, {"N", module.N}};
  if (auto split = module.summands()) {
    Json summands = Json::array();
    for (const auto& j : *split) summands.push_back(comm_ideal_to_json(j));
    out["summands"] = std::move(summands);
  }
  out["colength"] = module.saturated() ? Json(module.colength()) : Json();
  return out;
}

Json certificate_to_json(const DeformationCertificate& c) {
  Json out{{"before", ideal_to_json(c.before)},
           {"after", ideal_to_json(c.after)},
           {"colength", c.colength},
           {"dual_containment_before", c.dual_containment_before},
           {"dual_containment_after", c.dual_containment_after},
           {"chain_shape_after", c.chain_shape_after},
           {"branch", std::string(to_string(c.branch))},
           {"branch_index", c.branch_index},
           {"endpoint_only", c.endpoint_only}};
  out["chain"] = c.chain ? chain_to_json(*c.chain) : Json();
  Json row = Json::array();
  for (const auto& j : c.first_row) row.push_back(comm_ideal_to_json(j));
  out["first_row"] = std::move(row);
  Json samples = Json::array();
  for (const auto& s : c.family_samples)
    samples.push_back(Json{{"point", Json::array({scalar_to_json(s.a), scalar_to_json(s.b)})},
                           {"fiber", ideal_to_json(s.fiber)},
                           {"colength", s.colength}});
  out["family_samples"] = std::move(samples);
  return out;
}

} // namespace punctual
