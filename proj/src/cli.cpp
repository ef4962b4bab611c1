#include "punctual/cli.hpp"

#include "punctual/error.hpp"
#include "punctual/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

namespace punctual {

namespace {

constexpr std::array<std::string_view, 11> kCommands = {
    "colength",     "check-two-sided",    "check-dual-containment", "decompose-chain",
    "compose-chain", "deform",            "family-fiber",           "probe-divisibility",
    "find-simple-quotients", "selftest",  "verify-certificate"};

bool known_command(std::string_view c) {
  return std::find(kCommands.begin(), kCommands.end(), c) != kCommands.end();
}

bool needs_algebra(std::string_view c) { return c != "selftest" && c != "verify-certificate"; }

[[noreturn]] void bad(const std::string& what, const Json& where) {
  throw Error(ErrorCode::ParseError, what, where.dump());
}

const Json& key(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) bad(std::string("payload needs '") + name + "'", obj);
  return obj.at(name);
}

int int_key(const Json& obj, const char* name, int fallback) {
  if (!obj.contains(name)) return fallback;
  if (!obj.at(name).is_number_integer()) bad(std::string("'") + name + "' must be an integer", obj);
  return obj.at(name).get<int>();
}

Json escape_json(const Algebra& alg, const ContainmentCheck& check) {
  return check.witness ? element_to_json(alg, *check.witness) : Json();
}

Json ideals_json(const std::vector<LeftIdeal>& ideals) {
  Json out = Json::array();
  for (const auto& i : ideals) out.push_back(ideal_to_json(i));
  return out;
}

struct Outcome {
  Json result = Json::object();
  Json witness;
};

Outcome run_selftest(const Json& payload, std::uint64_t seed) {
  const std::string level = payload.value("level", std::string("quick"));
  if (level != "quick" && level != "full") bad("level must be 'quick' or 'full'", payload);
  SuiteOptions options;
  options.seed = seed;
  options.quick = level == "quick";
  Outcome o;
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : run_all_criteria(options)) {
    all = all && r.passed;
    criteria.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
  }
  o.result = Json{{"level", level}, {"passed", all}, {"criteria", std::move(criteria)}};
  return o;
}

Outcome dispatch(const Json& job) {
  const std::string command = job.at("command").get<std::string>();
  const Json& payload = job.at("payload");
  const auto seed = job.at("seed").get<std::uint64_t>();
  const auto max_dim = job.at("max_dim").get<std::size_t>();
  if (command == "selftest") return run_selftest(payload, seed);
  if (command == "verify-certificate") {
    verify_certificate(payload);
    Outcome o;
    o.result = Json{{"verified", true}};
    o.witness = Json{{"input_hash", payload.at("input_hash")}};
    return o;
  }

  const AlgebraSpec spec = spec_from_json(job.at("algebra"));
  if (!payload.is_object()) bad("payload must be an object", payload);
  const auto alg = Algebra::make(spec);
  Outcome o;

  if (command == "colength" || command == "check-two-sided" || command == "check-dual-containment" ||
      command == "decompose-chain") {
    const LeftIdeal ideal = ideal_from_json(alg, key(payload, "ideal"));
    o.witness = Json{{"ideal", ideal_to_json(ideal)}};
    if (command == "colength") {
      o.result["colength"] = ideal.saturated() ? Json(ideal.colength()) : Json();
      o.result["quotient_dim"] = ideal.quotient_dim();
    } else if (command == "check-two-sided") {
      const auto check = two_sided_check(ideal);
      o.result["two_sided"] = check.holds;
      o.witness["escape"] = escape_json(*alg, check);
    } else if (command == "check-dual-containment") {
      const auto check = dual_containment_check(ideal);
      o.result["dual_containment"] = check.holds;
      o.witness["escape"] = escape_json(*alg, check);
    } else {
      const IdealChain chain = chain_decompose(ideal);
      o.result["chain"] = chain_to_json(chain);
      o.result["colength_sum"] = chain.colength_sum();
    }
    return o;
  }

  if (command == "compose-chain") {
    const IdealChain chain = chain_from_json(key(payload, "chain"), spec.N);
    const LeftIdeal ideal = chain_compose(chain, alg);
    o.result["ideal"] = ideal_to_json(ideal);
    o.result["colength"] = ideal.saturated() ? Json(ideal.colength()) : Json();
    o.witness = Json{{"chain", chain_to_json(chain)}};
    return o;
  }

  if (command == "deform") {
    const int points = int_key(payload, "family_points", 10);
    if (points < 0) bad("'family_points' must be non-negative", payload);
    const int given = payload.contains("ideal") + payload.contains("chain") + payload.contains("summands");
    if (given != 1) bad("deform needs exactly one of 'ideal', 'chain' or 'summands'", payload);
    DeformationCertificate cert = [&] {
      if (payload.contains("summands")) {
        const Json& s = payload.at("summands");
        if (!s.is_array()) bad("'summands' must be an array", payload);
        std::vector<CommIdeal> summands;
        for (const auto& j : s) summands.push_back(comm_ideal_from_json(j, spec.N));
        return deform_unramified(alg, summands);
      }
      if (payload.contains("chain"))
        return deform_smooth_ram(chain_compose(chain_from_json(payload.at("chain"), spec.N), alg));
      return deform_smooth_ram(ideal_from_json(alg, payload.at("ideal")));
    }();
    sample_family(cert, default_family_points(points));
    o.result = certificate_to_json(cert);
    o.witness = Json{{"escape_after", escape_json(*alg, dual_containment_check(cert.after))}};
    return o;
  }

  if (command == "family-fiber") {
    const LeftIdeal first = ideal_from_json(alg, key(payload, "first"));
    const LeftIdeal second = ideal_from_json(alg, key(payload, "second"));
    const Json& point = key(payload, "point");
    if (!point.is_array() || point.size() != 2) bad("'point' must be [a, b]", payload);
    const int order = alg->skew_order();
    const CycScalar a = scalar_from_json(point[0], order);
    const CycScalar b = scalar_from_json(point[1], order);
    const LeftIdeal fiber = family_fiber(first, second, a, b);
    o.result["fiber"] = ideal_to_json(fiber);
    o.result["colength"] = fiber.saturated() ? Json(fiber.colength()) : Json();
    o.witness = Json{{"first", ideal_to_json(first)}, {"second", ideal_to_json(second)}};
    return o;
  }

  if (command == "probe-divisibility") {
    const int l = int_key(payload, "l", 0);
    if (!payload.contains("l")) bad("payload needs 'l'", payload);
    const DivisibilityResult r = divisibility_probe(spec, l, max_dim);
    o.result = Json{{"l", l}, {"exists", r.exists}, {"simple_count", r.simple_count}, {"argument", r.argument}};
    o.witness = Json{{"ideal", r.witness ? ideal_to_json(*r.witness) : Json()}};
    return o;
  }

  // find-simple-quotients
  const auto ideals = find_codim_one_quotients(spec, max_dim);
  o.result["count"] = ideals.size();
  o.witness = Json{{"ideals", ideals_json(ideals)}};
  return o;
}

Json error_json(const Error& err) {
  return Json{{"error", Json{{"code", std::string(to_string(err.code()))},
                             {"message", err.what()},
                             {"offending", err.offending()}}}};
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

Json normalize_job(const std::string& command, const Json& input, const JobOptions& options) {
  if (!known_command(command)) throw Error(ErrorCode::ParseError, "unknown command", command);
  if (!input.is_null() && !input.is_object()) bad("input must be a JSON object", input);
  Json job{{"command", command}};
  auto number = [&](const char* name, auto override_value, auto fallback) {
    if (override_value) return Json(*override_value);
    if (input.is_object() && input.contains(name)) {
      if (!input.at(name).is_number_unsigned()) bad(std::string("'") + name + "' must be a non-negative integer", input);
      return input.at(name);
    }
    return Json(fallback);
  };
  job["seed"] = number("seed", options.seed, std::uint64_t{0});
  job["max_dim"] = number("max_dim", options.max_dim, std::size_t{5000});
  if (input.is_object() && input.contains("command") && input.at("command") != command)
    bad("input names a different command", input.at("command"));

  if (command == "verify-certificate") {
    if (input.is_null()) bad("verify-certificate needs a certificate on input", input);
    job["payload"] = input.contains("payload") && !input.contains("operation") ? input.at("payload") : input;
    return job;
  }
  job["payload"] = input.is_object() && input.contains("payload") ? input.at("payload") : Json::object();
  if (needs_algebra(command)) {
    if (!input.is_object() || !input.contains("algebra")) bad("input needs 'algebra'", input);
    job["algebra"] = spec_to_json(spec_from_json(input.at("algebra"), options.truncation));
  }
  return job;
}

Json run_job(const Json& job) {
  Outcome o = dispatch(job);
  o.result["input"] = job;
  return Json{{"operation", job.at("command")},
              {"input_hash", input_hash(job)},
              {"result", std::move(o.result)},
              {"witness", std::move(o.witness)}};
}

void verify_certificate(const Json& certificate) {
  for (const char* k : {"operation", "input_hash", "result", "witness"})
    if (!certificate.is_object() || !certificate.contains(k))
      throw Error(ErrorCode::CertificateMismatch, std::string("certificate lacks '") + k + "'", "/" + std::string(k));
  const Json& result = certificate.at("result");
  if (!result.is_object() || !result.contains("input"))
    throw Error(ErrorCode::CertificateMismatch, "certificate lacks the echoed input", "/result/input");
  const Json& job = result.at("input");
  if (!job.is_object() || !job.contains("command") || !job.at("command").is_string())
    throw Error(ErrorCode::CertificateMismatch, "echoed input has no command", "/result/input/command");
  if (job.at("command") == "verify-certificate")
    throw Error(ErrorCode::CertificateMismatch, "nested verification is not re-run", "/result/input/command");
  if (certificate.at("operation") != job.at("command"))
    throw Error(ErrorCode::CertificateMismatch, "operation differs from the echoed command", "/operation");
  if (certificate.at("input_hash") != input_hash(job))
    throw Error(ErrorCode::CertificateMismatch, "input hash does not match the echoed input", "/input_hash");

  Json rerun;
  try {
    rerun = run_job(normalize_job(job.at("command").get<std::string>(), job, JobOptions{}));
  } catch (const Error& err) {
    throw Error(ErrorCode::CertificateMismatch, std::string("echoed input fails to re-run: ") + err.what(),
                "/result/input");
  }
  if (rerun.at("result").at("input") != job)
    throw Error(ErrorCode::CertificateMismatch, "echoed input is not in normal form", "/result/input");
  const Json patch = Json::diff(certificate, rerun);
  if (!patch.empty())
    throw Error(ErrorCode::CertificateMismatch, "certificate differs from the recomputation",
                patch.front().at("path").get<std::string>());
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deformations of rank-one modules over terminal orders"};
  std::string command;
  std::string level;
  std::string input_path;
  JobOptions options;
  bool verify = false;
  app.add_option("command", command, "colength | check-two-sided | check-dual-containment | decompose-chain | "
                                     "compose-chain | deform | family-fiber | probe-divisibility | "
                                     "find-simple-quotients | selftest | verify-certificate");
  app.add_option("level", level, "selftest level: quick or full");
  app.add_option("--input", input_path, "JSON job file, or - for standard input");
  app.add_option("--seed", options.seed, "seed for randomized pools");
  app.add_option("--truncation", options.truncation, "override the truncation order N")->check(CLI::Range(2, 64));
  app.add_option("--max-dim", options.max_dim, "enumeration guard");
  app.add_flag("--verify", verify, "re-verify the certificate before printing it");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  if (command.empty()) command = verify ? "verify-certificate" : "";

  try {
    if (command.empty()) throw Error(ErrorCode::ParseError, "no command given");
    Json input;
    const bool read_input = !input_path.empty() || (command != "selftest");
    if (read_input) {
      std::string text;
      if (input_path.empty() || input_path == "-") {
        text = read_all(in);
      } else {
        std::ifstream file(input_path);
        if (!file) throw Error(ErrorCode::ParseError, "cannot open input file", input_path);
        text = read_all(file);
      }
      try {
        input = Json::parse(text);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
      }
    }
    if (command == "selftest" && !level.empty()) {
      if (input.is_null()) input = Json::object();
      input["payload"]["level"] = level;
    } else if (!level.empty()) {
      throw Error(ErrorCode::ParseError, "unexpected extra argument", level);
    }
    const Json job = normalize_job(command, input, options);
    const Json certificate = run_job(job);
    if (verify && command != "verify-certificate") verify_certificate(certificate);
    out << certificate.dump() << "\n";
    if (command == "selftest") {
      for (const auto& c : certificate.at("result").at("criteria"))
        err << (c.at("passed").get<bool>() ? "PASS" : "FAIL") << " [" << c.at("id").get<int>() << "] "
            << c.at("name").get<std::string>() << ": " << c.at("detail").get<std::string>() << "\n";
      if (!certificate.at("result").at("passed").get<bool>()) return kExitSelftestFailed;
    }
    return kExitOk;
  } catch (const Error& e) {
    out << error_json(e).dump() << "\n";
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError ? kExitParse : kExitPrecondition;
  } catch (const Json::exception& e) {
    const Error wrapped(ErrorCode::ParseError, std::string("malformed JSON value: ") + e.what());
    out << error_json(wrapped).dump() << "\n";
    err << "ParseError: " << wrapped.what() << "\n";
    return kExitParse;
  }
}

} // namespace punctual
