#include "mcc/format.hpp"

#include <sstream>

namespace mcc::format {

namespace {

std::string sparse_terms(const std::vector<u64>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs[e];
    if (e > 0) os << "*x^" << e;
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string sparse_text(const RingElement& a) { return sparse_terms(a.coeffs()); }
std::string sparse_text(const gf::Poly& a) { return sparse_terms(a); }

json poly_json(const RingElement& a) { return json(a.coeffs()); }

RingElement poly_from_json(const json& array, u64 l) {
  if (!array.is_array() || array.empty()) throw std::invalid_argument("polynomial must be a nonempty array");
  std::vector<u64> coeffs;
  coeffs.reserve(array.size());
  for (const auto& c : array) {
    if (!c.is_number_unsigned() || c.get<u64>() >= l) {
      throw std::invalid_argument("polynomial coefficients must be integers in [0, l)");
    }
    coeffs.push_back(c.get<u64>());
  }
  const u64 n = coeffs.size();
  return RingElement(n, l, std::move(coeffs));
}

std::string short_name(const Parameters& params, const CosetLabel& label, const std::string& letter) {
  return letter + "_" + std::to_string(representative(params, label));
}

json label_json(const Parameters& params, const CosetLabel& label) {
  return {{"i", label.i},
          {"j", label.j},
          {"starred", label.starred},
          {"name", to_string(label)},
          {"representative", representative(params, label)}};
}

std::string chi_text(const Parameters& params, const std::vector<ChiCoefficient>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms) {
    if (!first) os << " + ";
    first = false;
    if (representative(params, term.label) == 0) {
      os << term.coeff;
      continue;
    }
    if (term.coeff != 1) os << term.coeff << "*";
    os << short_name(params, term.label, "chi");
  }
  return os.str();
}

json chi_json(const Parameters& params, const std::vector<ChiCoefficient>& terms) {
  json out = json::array();
  for (const auto& term : terms) {
    json entry = label_json(params, term.label);
    entry["coeff"] = term.coeff;
    out.push_back(std::move(entry));
  }
  return out;
}

json code_json(const CodeSpec& code) {
  json out{{"n", code.n}, {"l", code.l}, {"generator", code.generator}, {"k", code.dimension}};
  if (code.distance) {
    out["d"] = {{"value", code.distance->value}, {"kind", to_string(code.distance->kind)}};
    out["provenance"] = code.distance->provenance;
  } else {
    out["d"] = nullptr;
    out["provenance"] = nullptr;
  }
  return out;
}

CodeSpec code_from_json(const json& j) {
  CodeSpec code;
  code.n = j.at("n").get<u64>();
  code.l = j.at("l").get<u64>();
  code.generator = j.at("generator").get<gf::Poly>();
  code.dimension = j.at("k").get<u64>();
  if (!j.at("d").is_null()) {
    const auto& d = j.at("d");
    const std::string kind = d.at("kind").get<std::string>();
    if (kind != "exact" && kind != "bound") throw std::invalid_argument("distance kind must be exact or bound");
    code.distance = DistanceInfo{d.at("value").get<u64>(), kind == "exact" ? DistanceKind::exact : DistanceKind::bound,
                                 j.at("provenance").get<std::string>()};
  }
  validate_code(code);
  return code;
}

}  // namespace mcc::format
