// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "mcc/codes.hpp"
#include "mcc/count_table.hpp"
#include "mcc/identity_table.hpp"
#include "support.hpp"

using namespace mcc;

namespace {

// Wall-clock limits in seconds.
constexpr double kExampleLimit = 1.0;
constexpr double kOracleLimit = 60.0;
constexpr double kCountLimit = 60.0;
constexpr double kIdentityLimit = 120.0;
constexpr double kDistanceLimit = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Combination = std::map<u64, u64>;  // coset representative -> coefficient, 0 is the constant

Combination chi_map(const CosetSystem& system, const RingElement& poly) {
  Combination out;
  for (const auto& t : chi_combination(system, poly)) out[system.coset(t.label).representative] = t.coeff;
  return out;
}

Combination all_ones(const CosetSystem& system) {
  Combination out;
  for (const auto& c : system.cosets()) out[c.representative] = 1;
  return out;
}

std::optional<unsigned> alpha_with(const Parameters& params, u64 r, u64 n) {
  for (unsigned k = 0; k < 8; ++k) {
    const auto g = gf::build_splitting_field(params, k).gauss;
    if (g.residue_sum == r && g.nonresidue_sum == n) return k;
  }
  return std::nullopt;
}

// Compares each printed theta with the oracle and the closed form.
Outcome match_printed(const CosetSystem& system, const gf::SplittingField& field,
                      const std::map<u64, Combination>& printed) {
  Outcome out;
  std::ostringstream bad;
  for (const auto& label : all_labels(system.params())) {
    const u64 rep = system.coset(label).representative;
    const Idempotent oracle = idempotent_oracle(system, field, label);
    const Idempotent closed = idempotent_closed_form(system, field.gauss, label);
    const bool same = chi_map(system, oracle.poly) == printed.at(rep) && closed.poly == oracle.poly;
    if (!same) {
      out.pass = false;
      bad << " theta_" << rep;
    }
  }
  out.detail = out.pass ? "all six idempotents match" : "mismatched:" + bad.str();
  return out;
}

Outcome criterion1() {
  const Parameters params = validate_parameters(11, 5, 1, 1, 3, 2);
  const CosetSystem system = enumerate_cosets(params);
  const std::map<u64, std::vector<u64>> cosets{
      {0, {0}},
      {1, {1, 3, 4, 9, 12, 14, 16, 23, 26, 27, 31, 34, 36, 37, 38, 42, 47, 48, 49, 53}},
      {2, {2, 6, 7, 8, 13, 17, 18, 19, 21, 24, 28, 29, 32, 39, 41, 43, 46, 51, 52, 54}},
      {5, {5, 15, 20, 25, 45}},
      {10, {10, 30, 35, 40, 50}},
      {11, {11, 22, 33, 44}},
  };
  Outcome out;
  if (system.size() != cosets.size()) return {false, "coset count differs"};
  for (const auto& [rep, elements] : cosets) {
    if (system.coset_of(rep).elements != elements) return {false, "C_" + std::to_string(rep) + " differs"};
  }
  const auto index = alpha_with(params, 2, 0);
  if (!index) return {false, "no alpha with R=2, N=0"};
  const auto field = gf::build_splitting_field(params, *index);
  const std::map<u64, Combination> printed{
      {0, all_ones(system)},
      {1, {{0, 2}, {10, 2}, {2, 1}, {11, 1}}},
      {2, {{0, 2}, {5, 2}, {1, 1}, {11, 1}}},
      {5, {{0, 2}, {2, 2}, {10, 2}, {11, 2}}},
      {10, {{0, 2}, {1, 2}, {5, 2}, {11, 2}}},
      {11, {{0, 1}, {1, 2}, {2, 2}, {5, 1}, {10, 1}, {11, 2}}},
  };
  out = match_printed(system, field, printed);
  out.detail = "6 cosets match, alpha-index " + std::to_string(*index) + " (R=2, N=0), " + out.detail;
  return out;
}

Outcome criterion2() {
  const Parameters params = validate_parameters(7, 5, 1, 1, 2, 3);
  const CosetSystem system = enumerate_cosets(params);
  const auto& c3 = system.coset_of(3).elements;
  std::vector<u64> orbit;
  for (u64 x = 3; orbit.empty() || x != 3; x = x * 2 % 35) orbit.push_back(x);
  std::sort(orbit.begin(), orbit.end());
  if (c3 != orbit || c3.size() != 12) return {false, "C_3 does not match its definition"};

  const auto index = alpha_with(params, 1, 0);
  if (!index) return {false, "no alpha with R=1, N=0"};
  const auto field = gf::build_splitting_field(params, *index);
  const std::map<u64, Combination> printed{
      {0, all_ones(system)},
      {1, {{3, 1}, {7, 1}}},
      {3, {{1, 1}, {7, 1}}},
      {5, {{0, 1}, {3, 1}, {5, 1}, {7, 1}}},
      {15, {{0, 1}, {1, 1}, {7, 1}, {15, 1}}},
      {7, {{1, 1}, {3, 1}, {7, 1}}},
  };
  Outcome out = match_printed(system, field, printed);
  out.detail = "C_3 has 12 elements, alpha-index " + std::to_string(*index) + " (R=1, N=0), " + out.detail;
  return out;
}

Outcome criterion3() {
  std::size_t labels = 0, mismatches = 0;
  for (const auto& t : test::kTuples) {
    const Parameters params = test::params_of(t);
    const CosetSystem system = enumerate_cosets(params);
    const auto field = gf::build_splitting_field(params);
    for (const auto& label : all_labels(params)) {
      ++labels;
      if (!(idempotent_closed_form(system, field.gauss, label).poly == idempotent_oracle(system, field, label).poly)) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(labels) + " labels, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion4() {
  std::size_t checks = 0, mismatches = 0;
  for (const auto& t : test::kTuples) {
    const auto report = sweep_counts(enumerate_cosets(test::params_of(t)), true);
    checks += report.checks;
    mismatches += report.mismatches.size();
  }
  return {mismatches == 0, std::to_string(checks) + " counts, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion5() {
  std::size_t cases = 0, mismatches = 0;
  std::set<std::string> rules;
  for (const auto& t : test::kTuples) {
    const CosetSystem system = enumerate_cosets(test::params_of(t));
    const auto report = sweep_identities(system, false);
    cases += report.cases;
    mismatches += report.mismatches.size();
    for (const auto& c : enumerate_identity_cases(system.params())) rules.insert(c.rule->id);
  }
  return {mismatches == 0, std::to_string(cases) + " identity instances over " + std::to_string(rules.size()) +
                               " branches, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion6() {
  std::size_t failures = 0, checked = 0;
  for (const auto& t : test::kTuples) {
    const Parameters params = test::params_of(t);
    const CosetSystem system = enumerate_cosets(params);
    const auto field = gf::build_splitting_field(params);
    std::vector<Idempotent> family;
    for (const auto& label : all_labels(params)) {
      family.push_back(idempotent_closed_form(system, field.gauss, label));
      ++checked;
      if (!verify_idempotent(system, field, family.back()).ok()) ++failures;
    }
    const auto fam = verify_family(family);
    failures += !fam.sums_to_one + fam.non_orthogonal.size();
  }
  return {failures == 0, std::to_string(checked) + " idempotents, " + std::to_string(failures) + " failures"};
}

Outcome criterion7() {
  std::ostringstream detail;
  bool pass = true;
  {
    const Parameters params = validate_parameters(11, 5, 1, 1, 3, 2);
    const CosetSystem system = enumerate_cosets(params);
    const auto field = gf::build_splitting_field(params);
    const auto search = exhaustive_weights(minimal_code(system, field, {1, 0, false}), 0);
    pass &= search.min_weight == 22 && search.codewords == 80;
    detail << "d=" << search.min_weight << " over " << search.codewords << " words; ";
  }
  const Parameters params = validate_parameters(7, 5, 1, 1, 2, 3);
  const CosetSystem system = enumerate_cosets(params);
  const auto field = gf::build_splitting_field(params);
  const auto search = exhaustive_weights(minimal_code(system, field, {1, 0, false}), 0);
  pass &= search.min_weight == 14 && search.codewords == 15;
  detail << "d=" << search.min_weight << " over " << search.codewords << " words; odd-like minima";
  for (const auto& a : SelectionMatrix::all(1, 2)) {
    const DuadicCode dc = duadic_code(system, field, a);
    const OddLikeResult r = odd_like_min_weight(dc);
    pass &= r.exact && r.examined == (u64{1} << 20) - 1 && r.min_weight >= 3;
    detail << " " << r.min_weight;
  }
  detail << " (bound 3, 2^20 words each)";
  return {pass, detail.str()};
}

Outcome criterion8() {
  std::size_t failures = 0;
  for (const auto& t : test::kTuples) {
    const Parameters params = test::params_of(t);
    const CosetSystem system = enumerate_cosets(params);
    failures += system.size() != (2 * params.s + 1) * (params.t + 1);
    std::vector<int> hits(params.n, 0);
    for (const auto& c : system.cosets()) {
      for (u64 e : c.elements) {
        ++hits[e];
        failures += (e * params.l % params.n != e) && !c.contains(e * params.l % params.n);
      }
    }
    failures += std::count_if(hits.begin(), hits.end(), [](int h) { return h != 1; });
    for (const auto& label : all_labels(params)) {
      failures += additive_coset_form(params, label).elements != system.coset(label).elements;
    }
    const auto classes = cyclotomic_classes(params);
    failures += classes.d0 != system.coset_of(1).elements;
    failures += classes.d1 != system.coset_of(params.g).elements;
  }
  return {failures == 0, "4 tuples, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "(11,5,1,1,3) cosets and idempotents", kExampleLimit, criterion1},
      {2, "(7,5,1,1,2) cosets and idempotents", kExampleLimit, criterion2},
      {3, "closed-form idempotents equal the oracle", kOracleLimit, criterion3},
      {4, "closed-form counts equal enumeration", kCountLimit, criterion4},
      {5, "product identities over F_l", kIdentityLimit, criterion5},
      {6, "idempotent algebra", kOracleLimit, criterion6},
      {7, "minimum distances and odd-like bound", kDistanceLimit, criterion7},
      {8, "coset structure", kOracleLimit, criterion8},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit;
    const bool pass = outcome.pass && in_time;
    all &= pass;
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << ": " << c.name << ": " << outcome.detail
              << " [" << seconds << " s, limit " << c.limit << " s" << (in_time ? "" : ", over limit") << "]"
              << std::endl;
  }
  return all ? 0 : 1;
}
