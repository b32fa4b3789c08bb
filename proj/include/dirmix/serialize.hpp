#pragma once

#include <string>

#include <json.hpp>

#include "dirmix/characterize.hpp"
#include "dirmix/mixture.hpp"
#include "dirmix/moment_sequence.hpp"
#include "dirmix/montecarlo.hpp"

// JSON and CSV emitters. Every JSON document carries "schema": 1 at the top
// level and writes rationals as "p/q" strings.
namespace dirmix::io {

inline constexpr int kSchemaVersion = 1;

/// 17 significant digits, enough to round-trip a double.
std::string decimal(double value);

nlohmann::json to_json(const MomentSequence& seq);
nlohmann::json to_json(const VerificationResult& result);
nlohmann::json to_json(const HausdorffVerdict& verdict);
nlohmann::json to_json(const IdentificationReport& report);
nlohmann::json to_json(const SimReport& report);

/// Reads {"support": [lo, hi], "moments": ["1", "1/2", ...]}; entries may be
/// strings or integers. Throws ParseError on malformed input.
MomentSequence moment_sequence_from_json(const nlohmann::json& doc);

/// One row per check: check,order,value,exact,exact_decimal,threshold,pass.
std::string to_csv(const SimReport& report);

}  // namespace dirmix::io
