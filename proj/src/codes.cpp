#include "mcc/codes.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <thread>

namespace mcc {

namespace {

using gf::Poly;

constexpr u64 kSampleSeed = 0x5eed'c0de'2024ULL;

u64 ceil_sqrt(u64 v) {
  u64 r = 0;
  while (r * r < v) ++r;
  return r;
}

Poly repeater(u64 copies, u64 stride) {
  Poly out((copies - 1) * stride + 1, 0);
  for (u64 c = 0; c < copies; ++c) out[c * stride] = 1;
  return out;
}

struct Shard {
  u64 codewords = 0;
  u64 min_weight = ~u64{0};
  u64 odd_like = 0;
  u64 min_odd = ~u64{0};

  void record(u64 weight, bool odd) {
    ++codewords;
    min_weight = std::min(min_weight, weight);
    if (odd) {
      ++odd_like;
      min_odd = std::min(min_odd, weight);
    }
  }
};

// Gray digits of counter c: g_r = b_r - b_{r+1} mod l. Stepping c -> c + 1
// adds one to exactly one Gray digit, the one at the number of trailing
// (l - 1) digits of c.
std::vector<u64> counter_digits(u64 c, u64 l, std::size_t k) {
  std::vector<u64> b(k, 0);
  for (std::size_t r = 0; r < k && c > 0; ++r, c /= l) b[r] = c % l;
  return b;
}

Shard scan_binary(const CodeSpec& code, u64 period, u64 begin, u64 end) {
  const std::size_t k = code.dimension;
  std::vector<u64> rows(k, 0);
  u64 g = 0;
  for (std::size_t e = 0; e < code.generator.size(); ++e) {
    if (code.generator[e]) g |= u64{1} << e;
  }
  for (std::size_t r = 0; r < k; ++r) rows[r] = g << r;
  const u64 chunk = period == 0 || period >= 64 ? 0 : (u64{1} << period) - 1;
  auto odd_like = [&](u64 w) {
    if (period == 0) return false;
    u64 fold = 0;
    for (u64 h = 0; h < code.n; h += period) fold ^= (w >> h) & chunk;
    return fold != 0;
  };

  u64 word = 0;
  const u64 gray = begin ^ (begin >> 1);
  for (std::size_t r = 0; r < k; ++r) {
    if (gray >> r & 1) word ^= rows[r];
  }
  Shard out;
  for (u64 c = begin; c < end; ++c) {
    if (c != 0) out.record(std::popcount(word), odd_like(word));
    if (c + 1 < end) word ^= rows[std::countr_one(c)];
  }
  return out;
}

Shard scan_general(const CodeSpec& code, u64 period, u64 begin, u64 end) {
  const gf::PrimeField f(code.l);
  const u64 l = code.l, n = code.n;
  const std::size_t k = code.dimension;
  std::vector<std::pair<u64, u64>> support;
  for (std::size_t e = 0; e < code.generator.size(); ++e) {
    if (code.generator[e]) support.emplace_back(e, code.generator[e]);
  }

  std::vector<u64> word(n, 0), fold(period, 0);
  u64 weight = 0, fold_nonzero = 0;
  auto add_row = [&](std::size_t r, u64 times) {
    for (const auto& [e, c0] : support) {
      const u64 pos = e + r, c = f.mul(c0, times);
      const u64 before = word[pos];
      word[pos] = f.add(before, c);
      weight += (word[pos] != 0) - (before != 0);
      if (period) {
        u64& slot = fold[pos % period];
        const u64 was = slot;
        slot = f.add(was, c);
        fold_nonzero += (slot != 0) - (was != 0);
      }
    }
  };

  std::vector<u64> b = counter_digits(begin, l, k);
  for (std::size_t r = 0; r < k; ++r) {
    const u64 next = r + 1 < k ? b[r + 1] : 0;
    const u64 gray = f.sub(b[r], next);
    if (gray) add_row(r, gray);
  }
  Shard out;
  for (u64 c = begin; c < end; ++c) {
    if (c != 0) out.record(weight, fold_nonzero != 0);
    if (c + 1 >= end) break;
    std::size_t r = 0;
    while (b[r] == l - 1) b[r++] = 0;
    ++b[r];
    add_row(r, 1);
  }
  return out;
}

}  // namespace

const char* to_string(DistanceKind kind) { return kind == DistanceKind::exact ? "exact" : "bound"; }

void validate_code(const CodeSpec& code) {
  const gf::PrimeField f(code.l);
  const long deg = gf::poly::degree(code.generator);
  if (deg < 0 || code.generator.back() != 1) throw std::invalid_argument("generator must be monic");
  if (static_cast<u64>(deg) > code.n || code.dimension != code.n - static_cast<u64>(deg)) {
    throw std::invalid_argument("dimension does not match generator degree");
  }
  if (!gf::poly::mod(f, gf::poly::x_pow_minus_one(f, code.n), code.generator).empty()) {
    throw std::invalid_argument("generator does not divide x^n - 1");
  }
}

CodeSpec minimal_code(const CosetSystem& system, const gf::SplittingField& field, const CosetLabel& label) {
  const Parameters& params = system.params();
  const gf::PrimeField f(params.l);
  const auto m = minimal_polynomial(system, field, label);
  auto [quotient, rem] = gf::poly::divmod(f, gf::poly::x_pow_minus_one(f, params.n), m.poly);
  if (!rem.empty()) throw gf::VerificationError("M_" + to_string(label) + " does not divide x^n - 1");

  CodeSpec code{params.n, params.l, std::move(quotient), m.poly.size() - 1, std::nullopt};
  if (label.i == params.s) {
    if (label.j == params.t) {
      code.distance = DistanceInfo{params.n, DistanceKind::exact, "repetition"};
    } else {
      code.distance = DistanceInfo{2 * params.pow_p(params.s) * params.pow_q(label.j), DistanceKind::exact,
                                   "repetition"};
    }
  }
  return code;
}

BudgetExceeded::BudgetExceeded(gf::BigInt needed, u64 budget)
    : std::runtime_error("exhaustive search needs " + needed.str() + " codewords, budget is " +
                         std::to_string(budget)),
      needed_(std::move(needed)),
      budget_(budget) {}

gf::BigInt codeword_count(const CodeSpec& code) {
  return boost::multiprecision::pow(gf::BigInt(code.l), static_cast<unsigned>(code.dimension));
}

WeightSearch exhaustive_weights(const CodeSpec& code, u64 period, u64 budget, unsigned threads) {
  if (period != 0 && code.n % period != 0) throw std::invalid_argument("period must divide the length");
  const gf::BigInt needed = codeword_count(code);
  if (needed > budget) throw BudgetExceeded(needed, budget);
  const u64 total = static_cast<u64>(needed);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const u64 shards = std::min<u64>(threads, std::max<u64>(1, total / 4096));
  const bool binary = code.l == 2 && code.n <= 64;
  std::vector<Shard> results(shards);
  {
    std::vector<std::jthread> pool;
    for (u64 s = 0; s < shards; ++s) {
      const u64 begin = total / shards * s, end = s + 1 == shards ? total : total / shards * (s + 1);
      pool.emplace_back([&, s, begin, end] {
        results[s] = binary ? scan_binary(code, period, begin, end) : scan_general(code, period, begin, end);
      });
    }
  }

  WeightSearch out;
  Shard merged;
  for (const auto& r : results) {
    merged.codewords += r.codewords;
    merged.odd_like += r.odd_like;
    merged.min_weight = std::min(merged.min_weight, r.min_weight);
    merged.min_odd = std::min(merged.min_odd, r.min_odd);
  }
  out.codewords = merged.codewords;
  out.min_weight = merged.codewords ? merged.min_weight : 0;
  out.odd_like_codewords = merged.odd_like;
  if (merged.odd_like) out.min_odd_like_weight = merged.min_odd;
  return out;
}

u64 min_distance_exhaustive(const CodeSpec& code, u64 budget, unsigned threads) {
  return exhaustive_weights(code, 0, budget, threads).min_weight;
}

bool is_odd_like(const RingElement& word, u64 period) {
  if (period == 0 || word.length() % period != 0) throw std::invalid_argument("period must divide the length");
  const auto& f = word.field();
  std::vector<u64> fold(period, 0);
  for (u64 e = 0; e < word.length(); ++e) fold[e % period] = f.add(fold[e % period], word[e]);
  return std::any_of(fold.begin(), fold.end(), [](u64 c) { return c != 0; });
}

RingElement encode(const CodeSpec& code, const gf::Poly& message) {
  const gf::PrimeField f(code.l);
  if (gf::poly::degree(message) >= static_cast<long>(code.dimension)) {
    throw std::invalid_argument("message degree must be below the dimension");
  }
  Poly c = gf::poly::mul(f, message, code.generator);
  c.resize(code.n, 0);
  return RingElement(code.n, code.l, std::move(c));
}

RepetitionDecomposition repetition_decomposition(const CosetSystem& system, const gf::SplittingField& field,
                                                 unsigned j) {
  const Parameters& params = system.params();
  if (j >= params.t) throw std::out_of_range("repetition decomposition needs j < t");
  const gf::PrimeField f(params.l);
  const u64 len = params.pow_q(params.t - j), step = params.pow_q(params.t - j - 1);

  RepetitionDecomposition out;
  out.factor = params.pow_p(params.s) * params.pow_q(j);
  Poly inner_gen(step + 1, 0);
  inner_gen[0] = f.neg(1);
  inner_gen[step] = 1;
  out.inner = CodeSpec{len, params.l, inner_gen, len - step, DistanceInfo{2, DistanceKind::exact, "repetition"}};
  out.repeater = repeater(out.factor, len);

  const CodeSpec whole = minimal_code(system, field, {params.s, j, false});
  if (gf::poly::mul(f, out.inner.generator, out.repeater) != whole.generator) {
    throw gf::VerificationError("C_{s," + std::to_string(j) + "} generator is not the repeated short code");
  }
  return out;
}

SelectionMatrix::SelectionMatrix(unsigned rows, unsigned cols, std::vector<unsigned char> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.empty()) entries_.assign(static_cast<std::size_t>(rows) * cols, 0);
  if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("selection matrix entry count does not match its shape");
  }
}

SelectionMatrix SelectionMatrix::complement() const {
  SelectionMatrix out = *this;
  for (auto& e : out.entries_) e = !e;
  return out;
}

std::vector<SelectionMatrix> SelectionMatrix::all(unsigned rows, unsigned cols) {
  const unsigned cells = rows * cols;
  if (cells >= 20) throw std::invalid_argument("too many selection matrices to list");
  std::vector<SelectionMatrix> out;
  for (u64 mask = 0; mask < (u64{1} << cells); ++mask) {
    SelectionMatrix m(rows, cols);
    for (unsigned c = 0; c < cells; ++c) m.entries_[c] = mask >> c & 1;
    out.push_back(std::move(m));
  }
  return out;
}

DuadicCode duadic_code(const CosetSystem& system, const gf::SplittingField& field, const SelectionMatrix& a,
                       std::optional<Anchor> anchor) {
  const Parameters& params = system.params();
  const Anchor at = anchor.value_or(Anchor{});
  if (at.i >= params.s || at.j > params.t) throw std::out_of_range("anchor must satisfy i < s and j <= t");
  if (a.rows() != params.s - at.i || a.cols() != params.t + 1 - at.j) {
    throw std::invalid_argument("selection matrix must be " + std::to_string(params.s - at.i) + " x " +
                                std::to_string(params.t + 1 - at.j));
  }
  const gf::PrimeField f(params.l);

  DuadicCode out;
  const u64 inner_n = params.pow_p(params.s - at.i) * params.pow_q(params.t - at.j);
  out.repetition = params.pow_p(at.i) * params.pow_q(at.j);
  out.period = params.pow_q(params.t - at.j);
  out.inner_bound = ceil_sqrt(params.pow_p(params.s - at.i));
  out.g = params.g % inner_n;

  Poly g_a{1};
  for (unsigned r = 0; r < a.rows(); ++r) {
    for (unsigned c = 0; c < a.cols(); ++c) {
      const CosetLabel label{at.i + r, at.j + c, a.at(r, c)};
      g_a = gf::poly::mul(f, g_a, minimal_polynomial(system, field, label).poly);
    }
  }
  const u64 dimension = inner_n - (g_a.size() - 1);
  out.inner = CodeSpec{inner_n, params.l, g_a, dimension, std::nullopt};
  out.code = CodeSpec{params.n, params.l, gf::poly::mul(f, g_a, repeater(out.repetition, inner_n)), dimension,
                      std::nullopt};
  validate_code(out.inner);
  validate_code(out.code);
  return out;
}

bool square_root_product_periodic(const RingElement& a, u64 g, u64 period) {
  const u64 len = a.length();
  if (period == 0 || len % period != 0) throw std::invalid_argument("period must divide the length");
  const RingElement b = ring_mul(a, substitute_power(a, g % len));
  for (u64 e = period; e < len; ++e) {
    if (b[e] != b[e - period]) return false;
  }
  return true;
}

namespace {

RingElement random_word(const CodeSpec& code, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> digit(0, code.l - 1);
  Poly message(code.dimension);
  for (auto& c : message) c = digit(rng);
  gf::poly::trim(message);
  return encode(code, message);
}

}  // namespace

SquareRootCheck check_square_root_products(const DuadicCode& code, u64 trials) {
  std::mt19937_64 rng(kSampleSeed);
  SquareRootCheck out;
  for (u64 k = 0; k < trials; ++k) {
    const RingElement word = random_word(code.inner, rng);
    if (!is_odd_like(word, code.period)) continue;
    ++out.odd_like_words;
    if (!square_root_product_periodic(word, code.g, code.period)) ++out.failures;
  }
  return out;
}

OddLikeResult odd_like_min_weight(const DuadicCode& code, u64 budget, u64 samples, unsigned threads) {
  OddLikeResult out;
  out.bound = code.repetition * code.inner_bound;
  try {
    const WeightSearch search = exhaustive_weights(code.inner, code.period, budget, threads);
    if (!search.min_odd_like_weight) throw std::logic_error("code has no odd-like words");
    out.inner_min = *search.min_odd_like_weight;
    out.exact = true;
    out.examined = search.codewords;
    out.verdict = "exact";
  } catch (const BudgetExceeded&) {
    std::mt19937_64 rng(kSampleSeed);
    u64 best = ~u64{0};
    for (u64 k = 0; k < samples; ++k) {
      const RingElement word = random_word(code.inner, rng);
      if (word.is_zero()) continue;
      ++out.examined;
      if (is_odd_like(word, code.period)) best = std::min<u64>(best, word.weight());
    }
    if (best == ~u64{0}) throw std::logic_error("no odd-like word among the samples");
    out.inner_min = best;
  }
  out.min_weight = code.repetition * out.inner_min;
  if (!out.exact) out.verdict = out.bound_holds() ? "bound-consistent" : "bound-violated";
  return out;
}

}  // namespace mcc
