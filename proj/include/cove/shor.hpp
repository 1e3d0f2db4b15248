#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cove/algorithms.hpp"
#include "cove/state.hpp"

namespace cove {

struct ShorOptions {
  std::uint64_t seed = 0;
  algorithms::OracleKind oracle = algorithms::OracleKind::Semantic;
  /// Use this m first instead of a random one. Must satisfy 1 < m < N.
  std::optional<std::uint64_t> force_m;
  std::size_t qubit_cap = kDefaultQubitCap;
  /// Quantum samples plus gcd shortcuts allowed before ResourceExhausted.
  std::size_t max_iterations = 32;
  /// Samples drawn for one m before moving on to another.
  std::size_t samples_per_m = 4;
};

enum class Verdict {
  GcdShortcut,   // gcd(m, N) > 1 already is a factor
  NoPeriod,      // sample did not yield a validated period (yet)
  OddPeriod,
  TrivialRoot,   // m^(P/2) == -1 mod N
  Factored,
};

std::string_view verdict_name(Verdict verdict);

/// One pass through the loop: either a gcd shortcut or one quantum sample.
struct IterationRecord {
  std::uint64_t m = 0;
  std::optional<algorithms::PeriodSample> sample;
  std::optional<std::uint64_t> period;
  Verdict verdict = Verdict::NoPeriod;
};

struct FactoringOutcome {
  std::uint64_t n = 0;
  /// p <= q and p * q == n.
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<IterationRecord> trace;
};

/// Throws InvalidParameter unless N is odd, at least 15, composite and not a
/// prime power.
void require_factorable(std::uint64_t n);

/// Random m, gcd shortcut, quantum period finding, parity and root checks,
/// factor extraction. Each quantum sample runs on a fresh context seeded with
/// derive_seed(seed, iteration). Throws InvalidParameter, QubitLimitExceeded,
/// or ResourceExhausted once the budget or the untried values of m run out.
FactoringOutcome shor_factor(std::uint64_t n, const ShorOptions& options = {});

}  // namespace cove
