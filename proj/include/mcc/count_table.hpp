#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcc/cosets.hpp"

namespace mcc {

enum class Residuosity { any, qr, qnr };

/// Index tuple shared by all count and identity rules. Each rule reads only
/// the indices named in its `uses` mask; the rest stay zero. i2 and j2 are the
/// primed indices i' and j'.
struct CountIndices {
  unsigned i = 0, i2 = 0, j = 0, j2 = 0, m = 0, k = 0;
  auto operator<=>(const CountIndices&) const = default;
};

namespace index_bits {
inline constexpr unsigned i = 1, i2 = 2, j = 4, j2 = 8, m = 16, k = 32;
}

std::string to_string(const CountIndices& idx, unsigned uses);

/// a is drawn from `anchor`; the count is #(a + shifted) ∩ target.
struct CountTriple {
  CosetLabel anchor;
  CosetLabel shifted;
  CosetLabel target;
};

/// One branch of the closed-form count table. Ids spell the pattern, e.g.
/// "Cij+C*ij->Ckm" is #(a + C*_{ij}) ∩ C_{km} for a in C_{ij}.
struct CountRule {
  const char* id;
  Residuosity when;
  unsigned uses;
  bool (*in_range)(const Parameters&, const CountIndices&);
  CountTriple (*labels)(const Parameters&, const CountIndices&);
  u64 (*value)(const Parameters&, const CountIndices&);
  const char* note;  // set when the rule departs from the usual printed form
};

const std::vector<CountRule>& count_rules();

/// Throws std::out_of_range for an unknown id.
const CountRule& find_count_rule(std::string_view id);

bool rule_applies(const Parameters& params, Residuosity when);

/// Closed-form count. Throws std::out_of_range when the rule does not apply to
/// these parameters or the indices are outside its range.
u64 closed_form_count(const Parameters& params, std::string_view id, const CountIndices& idx);

struct CountCase {
  const CountRule* rule;
  CountIndices idx;
  CountTriple labels;
  u64 value;
};

/// Every applicable (rule, in-range index tuple) pair.
std::vector<CountCase> enumerate_count_cases(const Parameters& params);

/// Counts inside Z_{p^s} for a residue or non-residue anchor r:
/// #(r + X) ∩ Y with X, Y in {R_s, N_s}.
struct ResidueCountRule {
  const char* id;
  bool anchor_residue;
  bool shifted_residue;
  bool target_residue;
  bool large;  // (p+1)/4 p^{s-1} rather than (p-3)/4 p^{s-1}
};

const std::vector<ResidueCountRule>& residue_count_rules();
u64 residue_closed_form(const Parameters& params, const ResidueCountRule& rule);
/// Brute-force #(r + X) ∩ Y in Z_{p^s}.
u64 residue_intersection_count(const QRSets& sets, u64 r, bool shifted_residue, bool target_residue);

struct CountMismatch {
  std::string rule;
  std::string indices;
  CountTriple labels;
  u64 anchor_element = 0;
  u64 expected = 0;  // closed form
  u64 actual = 0;    // enumeration
};

struct CountSweepReport {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::vector<CountMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares every closed-form count with intersection_count. With
/// all_anchors the count is checked for every a in the anchor coset, otherwise
/// only for its representative.
CountSweepReport sweep_counts(const CosetSystem& system, bool all_anchors);

}  // namespace mcc
