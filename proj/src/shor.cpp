#include "cove/shor.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "cove/error.hpp"
#include "cove/number_theory.hpp"

namespace cove {

namespace nt = number_theory;

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::GcdShortcut: return "gcd-shortcut";
    case Verdict::NoPeriod: return "no-period";
    case Verdict::OddPeriod: return "odd-period";
    case Verdict::TrivialRoot: return "trivial-root";
    case Verdict::Factored: return "factored";
  }
  return "?";
}

void require_factorable(std::uint64_t n) {
  const std::string s = std::to_string(n);
  if (n % 2 == 0) throw InvalidParameter("N=" + s + " is even; 2 is a factor");
  if (n < 15) throw InvalidParameter("N=" + s + " is below 15, the smallest supported input");
  if (nt::is_prime(n)) throw InvalidParameter("N=" + s + " is prime");
  if (nt::is_prime_power(n)) throw InvalidParameter("N=" + s + " is a prime power");
}

namespace {

FactoringOutcome finish(std::uint64_t n, std::uint64_t factor, std::vector<IterationRecord> trace) {
  FactoringOutcome out;
  out.n = n;
  out.p = std::min(factor, n / factor);
  out.q = std::max(factor, n / factor);
  out.trace = std::move(trace);
  return out;
}

}  // namespace

FactoringOutcome shor_factor(std::uint64_t n, const ShorOptions& options) {
  require_factorable(n);
  if (options.force_m && (*options.force_m < 2 || *options.force_m >= n)) {
    throw InvalidParameter("forced m must lie in (1, N)");
  }
  const std::size_t width = 3 * nt::bits_to_express(n);
  if (width > options.qubit_cap) {
    throw QubitLimitExceeded("factoring N=" + std::to_string(n) + " needs " +
                             std::to_string(width) + " qubits, cap is " +
                             std::to_string(options.qubit_cap));
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(2, n - 1);
  std::set<std::uint64_t> tried;
  std::vector<IterationRecord> trace;
  std::size_t iteration = 0;

  while (iteration < options.max_iterations && tried.size() < n - 2) {
    std::uint64_t m = 0;
    if (tried.empty() && options.force_m) {
      m = *options.force_m;
    } else {
      do m = pick(rng);
      while (tried.count(m) != 0);
    }
    tried.insert(m);

    // Step 1: a lucky m already shares a factor with N.
    const std::uint64_t g = nt::gcd(m, n);
    if (g != 1) {
      ++iteration;
      trace.push_back({m, std::nullopt, std::nullopt, Verdict::GcdShortcut});
      return finish(n, g, std::move(trace));
    }

    const QuantumOperation uf = algorithms::build_uf(m, n, options.oracle);
    std::vector<algorithms::PeriodSample> samples;
    for (std::size_t s = 0; s < options.samples_per_m && iteration < options.max_iterations; ++s) {
      SimulationContext ctx(ContextOptions{derive_seed(options.seed, iteration), options.qubit_cap,
                                           false});
      ++iteration;
      samples.push_back(algorithms::shor_quantum_step(ctx, n, uf));

      IterationRecord record{m, samples.back(), algorithms::extract_period(samples, m, n),
                             Verdict::NoPeriod};
      if (!record.period) {
        trace.push_back(record);
        continue;
      }
      const std::uint64_t p = *record.period;
      if (p % 2 != 0) {
        record.verdict = Verdict::OddPeriod;
        trace.push_back(record);
        break;
      }
      const std::uint64_t half = nt::mod_pow(m, p / 2, n);
      std::uint64_t factor = 0;
      if (half != n - 1) {
        for (std::uint64_t candidate : {nt::gcd(half + n - 1, n), nt::gcd(half + 1, n)}) {
          if (candidate > 1 && candidate < n) {
            factor = candidate;
            break;
          }
        }
      }
      if (factor == 0) {
        record.verdict = Verdict::TrivialRoot;
        trace.push_back(record);
        break;
      }
      record.verdict = Verdict::Factored;
      trace.push_back(record);
      return finish(n, factor, std::move(trace));
    }
  }
  throw ResourceExhausted("no factor of " + std::to_string(n) + " after " +
                          std::to_string(iteration) + " iterations over " +
                          std::to_string(tried.size()) + " values of m");
}

}  // namespace cove
