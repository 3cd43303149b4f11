#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "mcc/codes.hpp"

namespace mcc::cli {

enum class Command { validate, cosets, classes, chi, idempotents, verify, codes, sweep };
enum class Output { text, json };

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kHypothesis = 2;
inline constexpr int kVerification = 3;

inline constexpr u64 kLengthCap = 1'000'000;

struct SweepRange {
  u64 max_p = 50;
  u64 max_q = 50;
  unsigned max_s = 2;
  unsigned max_t = 2;
  u64 max_l = 50;
  u64 max_n = 10'000;
};

struct RunConfig {
  Command command = Command::validate;
  u64 p = 0, q = 0, l = 0;
  unsigned s = 0, t = 0;
  std::optional<u64> g;
  Output output = Output::text;
  u64 budget = kDefaultBudget;
  unsigned alpha_index = 0;
  std::optional<Anchor> anchor;  // codes: the (i, j) block for C_A
  SweepRange sweep;
};

/// Throws std::invalid_argument for an unknown name.
Command parse_command(const std::string& name);
const char* to_string(Command command);

/// Runs one command. Reports go to out, diagnostics to err; the return value
/// is one of the exit statuses above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs. MCC_BUDGET overrides the default budget when
/// --budget is absent.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcc::cli
