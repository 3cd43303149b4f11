#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcc/idempotents.hpp"

namespace mcc {

inline constexpr u64 kDefaultBudget = u64{1} << 24;

enum class DistanceKind { exact, bound };

const char* to_string(DistanceKind kind);

struct DistanceInfo {
  u64 value = 0;
  DistanceKind kind = DistanceKind::bound;
  std::string provenance;  // e.g. "repetition", "square-root-bound", "exhaustive"
};

/// Cyclic code of length n over F_l given by its generator polynomial.
struct CodeSpec {
  u64 n = 0;
  u64 l = 0;
  gf::Poly generator;
  u64 dimension = 0;
  std::optional<DistanceInfo> distance;
};

/// Checks that generator is monic, divides x^n - 1 and matches dimension.
/// Throws std::invalid_argument otherwise.
void validate_code(const CodeSpec& code);

/// The minimal ideal generated by (x^n - 1) / M_label. Distances known in
/// closed form (the all-ones code and the C_{sj} codes) are attached as exact.
CodeSpec minimal_code(const CosetSystem& system, const gf::SplittingField& field, const CosetLabel& label);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(gf::BigInt needed, u64 budget);
  const gf::BigInt& needed() const { return needed_; }
  u64 budget() const { return budget_; }

 private:
  gf::BigInt needed_;
  u64 budget_;
};

/// Number of codewords, l^dimension.
gf::BigInt codeword_count(const CodeSpec& code);

struct WeightSearch {
  u64 codewords = 0;          // nonzero codewords examined
  u64 min_weight = 0;         // over all nonzero codewords
  u64 odd_like_codewords = 0;
  std::optional<u64> min_odd_like_weight;
};

/// Walks every message in l-ary Gray order, so each step adds one generator
/// row. period > 0 also tracks the odd-like words: those whose fold
/// mod x^period - 1 is nonzero. threads = 0 uses the hardware concurrency.
/// Throws BudgetExceeded when l^dimension exceeds budget.
WeightSearch exhaustive_weights(const CodeSpec& code, u64 period, u64 budget = kDefaultBudget, unsigned threads = 0);

/// Minimum Hamming weight over all nonzero codewords.
u64 min_distance_exhaustive(const CodeSpec& code, u64 budget = kDefaultBudget, unsigned threads = 0);

/// a(x) mod x^period - 1 is nonzero.
bool is_odd_like(const RingElement& word, u64 period);

/// The codeword for a message polynomial: message(x) * generator(x).
RingElement encode(const CodeSpec& code, const gf::Poly& message);

struct RepetitionDecomposition {
  CodeSpec inner;     // length q^{t-j}, generator x^{q^{t-j-1}} - 1
  u64 factor = 0;     // p^s q^j copies
  gf::Poly repeater;  // 1 + x^{q^{t-j}} + ... + x^{(factor-1) q^{t-j}}
};

/// Splits the C_{sj} code as a repetition of a short code. Throws
/// gf::VerificationError when inner generator times repeater differs from
/// the minimal code's generator.
RepetitionDecomposition repetition_decomposition(const CosetSystem& system, const gf::SplittingField& field,
                                                 unsigned j);

/// 0/1 choice between M_{p^k q^m} (0) and M_{p^k q^m g} (1) for each (k, m)
/// of the selection block.
class SelectionMatrix {
 public:
  SelectionMatrix(unsigned rows, unsigned cols, std::vector<unsigned char> entries = {});

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  bool at(unsigned r, unsigned c) const { return entries_.at(r * cols_ + c) != 0; }
  void set(unsigned r, unsigned c, bool v) { entries_.at(r * cols_ + c) = v; }
  SelectionMatrix complement() const;

  /// All 2^(rows*cols) matrices of this shape, in binary counting order.
  static std::vector<SelectionMatrix> all(unsigned rows, unsigned cols);

 private:
  unsigned rows_, cols_;
  std::vector<unsigned char> entries_;
};

struct Anchor {
  unsigned i = 0;
  unsigned j = 0;
};

/// Code C_A of length n built from a selection matrix. Without an anchor the
/// block is s x (t+1) starting at (0, 0); with anchor (i, j) it is
/// (s-i) x (t+1-j) and the code repeats a shorter code p^i q^j times.
struct DuadicCode {
  CodeSpec code;   // length n
  CodeSpec inner;  // length p^{s-i} q^{t-j}, generator g_A
  u64 period = 0;  // q^{t-j}; odd-like means nonzero fold mod x^period - 1
  u64 repetition = 1;
  u64 inner_bound = 0;  // ceil(sqrt(p^{s-i}))
  u64 g = 0;            // common primitive root, reduced mod the inner length
};

/// Throws std::invalid_argument on a shape mismatch.
DuadicCode duadic_code(const CosetSystem& system, const gf::SplittingField& field, const SelectionMatrix& a,
                       std::optional<Anchor> anchor = std::nullopt);

/// b(x) = a(x) a(x^g) mod x^len - 1 is periodic with the given period, which
/// is the shape forced on an odd-like word of C_A.
bool square_root_product_periodic(const RingElement& a, u64 g, u64 period);

struct SquareRootCheck {
  u64 odd_like_words = 0;
  u64 failures = 0;  // odd-like words whose b(x) is not periodic
  bool ok() const { return failures == 0; }
};

/// Encodes `trials` random messages with a fixed seed and checks the
/// periodicity of b(x) on the odd-like ones.
SquareRootCheck check_square_root_products(const DuadicCode& code, u64 trials);

struct OddLikeResult {
  u64 inner_min = 0;  // minimum odd-like weight of the inner code
  u64 min_weight = 0; // scaled by the repetition factor
  u64 bound = 0;      // repetition * ceil(sqrt(p^{s-i}))
  bool exact = false; // false when sampled
  u64 examined = 0;
  std::string verdict;  // "exact" or "bound-consistent" / "bound-violated"
  bool bound_holds() const { return min_weight >= bound; }
};

/// Minimum odd-like weight of the inner code, exhaustively when l^k fits the
/// budget and otherwise by sampling `samples` random messages with a fixed
/// seed.
OddLikeResult odd_like_min_weight(const DuadicCode& code, u64 budget = kDefaultBudget, u64 samples = 1u << 16,
                                  unsigned threads = 0);

}  // namespace mcc
