#include "dirmix/serialize.hpp"

#include <cstdio>
#include <sstream>

#include "dirmix/errors.hpp"

namespace dirmix::io {

using nlohmann::json;

std::string decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

json rational_array(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

json counterexample_json(const Counterexample& c) {
  return {{"order", c.order}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}};
}

Rational rational_from_json(const json& value) {
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ParseError("expected a rational string such as \"1/2\", got " + value.dump());
}

}  // namespace

json to_json(const MomentSequence& seq) {
  return {{"support", {seq.support().lo.str(), seq.support().hi.str()}},
          {"moments", rational_array(seq.moments())}};
}

json to_json(const VerificationResult& result) {
  json doc = {{"schema", kSchemaVersion},
              {"claim", result.claim},
              {"n", result.n},
              {"params", result.params},
              {"orders", {result.orders.first, result.orders.last}},
              {"status", result.passed() ? "pass" : "fail"}};
  if (result.counterexample) doc["counterexample"] = counterexample_json(*result.counterexample);
  return doc;
}

json to_json(const HausdorffVerdict& verdict) {
  json doc = {{"status", verdict.valid ? "pass" : "fail"}, {"order", verdict.order}};
  if (verdict.violation) {
    doc["violation"] = {{"j", verdict.violation->first}, {"k", verdict.violation->second}};
  }
  return doc;
}

json to_json(const IdentificationReport& report) {
  json candidates = json::array();
  for (const auto& c : report.candidates) {
    json entry = {{"spec", to_string(c.spec)}, {"match", c.matched()}};
    if (c.mismatch) entry["mismatch"] = counterexample_json(*c.mismatch);
    candidates.push_back(std::move(entry));
  }
  json matches = json::array();
  for (const auto& m : report.matches) matches.push_back(to_string(m));
  return {{"schema", kSchemaVersion},
          {"recovered", to_json(report.recovered)},
          {"checked_order", report.checked_order},
          {"validity", to_json(report.validity)},
          {"candidates", std::move(candidates)},
          {"matches", std::move(matches)}};
}

json to_json(const SimReport& report) {
  json moments = json::array();
  for (const auto& m : report.moments) {
    moments.push_back({{"order", m.order},
                       {"exact", m.exact.str()},
                       {"exact_decimal", m.exact.to_double()},
                       {"empirical", m.empirical},
                       {"standard_error", m.standard_error},
                       {"tolerance", m.tolerance},
                       {"status", m.passed() ? "pass" : "fail"}});
  }
  json doc = {{"schema", kSchemaVersion},
              {"spec", to_string(report.spec)},
              {"n", report.n},
              {"samples", report.samples},
              {"seed", report.seed},
              {"ks_critical_1pct", report.ks_critical_1pct},
              {"moments", std::move(moments)},
              {"verdict", report.passed() ? "pass" : "fail"}};
  if (report.target) doc["target"] = to_string(*report.target);
  if (report.ks_statistic) {
    doc["ks_statistic"] = *report.ks_statistic;
    doc["ks_status"] = report.ks_passed() ? "pass" : "fail";
  }
  return doc;
}

MomentSequence moment_sequence_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("moments document must be a JSON object");
    if (!doc.contains("support") || !doc["support"].is_array() || doc["support"].size() != 2) {
      throw ParseError("moments document needs \"support\": [lo, hi]");
    }
    if (!doc.contains("moments") || !doc["moments"].is_array()) {
      throw ParseError("moments document needs a \"moments\" array");
    }
    Interval support{rational_from_json(doc["support"][0]), rational_from_json(doc["support"][1])};
    std::vector<Rational> moments;
    for (const auto& m : doc["moments"]) moments.push_back(rational_from_json(m));
    return MomentSequence(std::move(support), std::move(moments));
  } catch (const ContractViolation& e) {
    throw ParseError(std::string("invalid moment sequence: ") + e.what());
  }
}

std::string to_csv(const SimReport& report) {
  std::ostringstream out;
  out << "check,order,value,exact,exact_decimal,threshold,pass\n";
  if (report.ks_statistic) {
    out << "ks,," << decimal(*report.ks_statistic) << ",," << ","
        << decimal(report.ks_critical_1pct) << ',' << (report.ks_passed() ? "pass" : "fail") << '\n';
  }
  for (const auto& m : report.moments) {
    out << "moment," << m.order << ',' << decimal(m.empirical) << ',' << m.exact.str() << ','
        << decimal(m.exact.to_double()) << ',' << decimal(m.tolerance) << ','
        << (m.passed() ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace dirmix::io
