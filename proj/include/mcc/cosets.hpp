#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mcc/numtheory.hpp"

namespace mcc {

/// C_{ij} (starred = false) or C*_{ij} (starred = true). Starred labels exist
/// only for i < s; (s, t) is the zero coset.
struct CosetLabel {
  unsigned i = 0;
  unsigned j = 0;
  bool starred = false;

  auto operator<=>(const CosetLabel&) const = default;
};

/// "C_{i,j}" or "C*_{i,j}".
std::string to_string(const CosetLabel& label);

bool is_valid_label(const Parameters& params, const CosetLabel& label);

/// p^i q^j, times g when starred, reduced mod n.
u64 representative(const Parameters& params, const CosetLabel& label);

/// All (2s+1)(t+1) labels: i ascending, then j ascending, unstarred first.
std::vector<CosetLabel> all_labels(const Parameters& params);

/// Position of label in all_labels(params); throws std::out_of_range for
/// invalid labels.
std::size_t label_index(const Parameters& params, const CosetLabel& label);

/// Size predicted by the coset count formula.
u64 expected_coset_size(const Parameters& params, const CosetLabel& label);

struct Coset {
  CosetLabel label;
  u64 representative = 0;
  std::vector<u64> elements;  // sorted

  bool contains(u64 e) const;
  std::size_t size() const { return elements.size(); }
};

/// Orbit of gamma under multiplication by l. The label is read off from the
/// p- and q-valuations; a coset below the top p-level is starred when it does
/// not contain p^i q^j.
Coset multiplicative_coset(const Parameters& params, u64 gamma);

/// Every l-cyclotomic coset mod n with an element-to-coset index.
class CosetSystem {
 public:
  explicit CosetSystem(Parameters params);

  const Parameters& params() const { return params_; }
  const std::vector<Coset>& cosets() const { return cosets_; }
  std::size_t size() const { return cosets_.size(); }

  /// Position of label in cosets(); throws std::out_of_range for invalid labels.
  std::size_t index_of(const CosetLabel& label) const;
  const Coset& coset(const CosetLabel& label) const { return cosets_[index_of(label)]; }
  std::size_t index_of_element(u64 e) const { return element_index_.at(e % params_.n); }
  const Coset& coset_of(u64 e) const { return cosets_[index_of_element(e)]; }
  const CosetLabel& label_of(u64 e) const { return coset_of(e).label; }

 private:
  Parameters params_;
  std::vector<Coset> cosets_;
  std::vector<std::uint32_t> element_index_;
};

/// Builds the system and checks the coset count, the sizes and the partition.
/// Throws std::logic_error when any of them fails.
CosetSystem enumerate_cosets(const Parameters& params);

/// The coset rebuilt from the additive description
/// {p^i q^t x + p^s q^j y : x in R_{s-i} or N_{s-i}, y in Z*_{q^{t-j}}}.
Coset additive_coset_form(const Parameters& params, const CosetLabel& label);

/// Whether the additive description of label draws x from the residues
/// (true) or the non-residues (false). Only meaningful for i < s.
bool additive_uses_residues(const Parameters& params, const CosetLabel& label);

struct CyclotomicClasses {
  std::vector<u64> d0;  // sorted
  std::vector<u64> d1;  // sorted
};

/// D_0 = {g^{2k}, g^{2k} v} and D_1 = g D_0 for 0 <= k < phi(n)/4.
CyclotomicClasses cyclotomic_classes(const Parameters& params);

/// #{x in X : a + x mod n in Y}, by direct enumeration.
u64 intersection_count(const CosetSystem& system, u64 a, const CosetLabel& x, const CosetLabel& y);

}  // namespace mcc
