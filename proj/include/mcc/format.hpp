#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mcc/codes.hpp"
#include "mcc/idempotents.hpp"

namespace mcc::format {

using nlohmann::json;

/// "c*x^e + ..." in ascending exponent, the constant term as "c"; "0" for zero.
std::string sparse_text(const RingElement& a);
std::string sparse_text(const gf::Poly& a);

/// JSON array of the n coefficients, ascending exponent.
json poly_json(const RingElement& a);
/// Inverse of poly_json. Throws std::invalid_argument on a malformed array.
RingElement poly_from_json(const json& array, u64 l);

/// {"i", "j", "starred", "name", "representative"}
json label_json(const Parameters& params, const CosetLabel& label);
/// Short name from the representative: "C_7", "chi_7", "theta_7".
std::string short_name(const Parameters& params, const CosetLabel& label, const std::string& letter);

/// "2*chi_1 + chi_7 + 1" style rendering; chi_0 is written as the bare
/// coefficient when it is the last term.
std::string chi_text(const Parameters& params, const std::vector<ChiCoefficient>& terms);
json chi_json(const Parameters& params, const std::vector<ChiCoefficient>& terms);

/// {n, l, generator, k, d: {value, kind} | null, provenance}
json code_json(const CodeSpec& code);
CodeSpec code_from_json(const json& j);

}  // namespace mcc::format
