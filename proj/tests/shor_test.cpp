#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>

#include "cove/error.hpp"
#include "cove/number_theory.hpp"
#include "cove/shor.hpp"

using namespace cove;
namespace nt = cove::number_theory;

namespace {

// Reference order of m modulo n by repeated multiplication.
std::uint64_t brute_order(std::uint64_t m, std::uint64_t n) {
  std::uint64_t v = m % n, r = 1;
  while (v != 1) {
    v = v * m % n;
    ++r;
  }
  return r;
}

bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(NumberTheory, Gcd) {
  EXPECT_EQ(nt::gcd(8, 15), 1u);
  EXPECT_EQ(nt::gcd(65, 15), 5u);
  EXPECT_EQ(nt::gcd(63, 15), 3u);
  EXPECT_EQ(nt::gcd(12, 0), 12u);
  EXPECT_EQ(nt::gcd(0, 7), 7u);
  EXPECT_THROW(nt::gcd(0, 0), InvalidParameter);
  EXPECT_EQ(nt::lcm(4, 6), 12u);
}

TEST(NumberTheory, ModPow) {
  EXPECT_EQ(nt::mod_pow(8, 3, 15), 2u);
  EXPECT_EQ(nt::mod_pow(8, 0, 15), 1u);
  EXPECT_EQ(nt::mod_pow(8, 14, 15), 4u);
  EXPECT_THROW(nt::mod_pow(3, 2, 1), InvalidParameter);
  // Near the top of the 64-bit range intermediates would overflow without care.
  const std::uint64_t big = (std::uint64_t{1} << 61) - 1;  // Mersenne prime
  EXPECT_EQ(nt::mod_pow(3, big - 1, big), 1u);
}

TEST(NumberTheory, ModPowTableMatchesFermatWalk) {
  const std::vector<std::uint64_t> f = nt::mod_pow_table(8, 16, 15);
  const std::vector<std::uint64_t> expected{1, 8, 4, 2, 1, 8, 4, 2, 1, 8, 4, 2, 1, 8, 4, 2};
  EXPECT_EQ(f, expected);
  for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(f[x], nt::mod_pow(8, x, 15));
}

TEST(NumberTheory, BitsToExpress) {
  EXPECT_EQ(nt::bits_to_express(15), 4u);
  EXPECT_EQ(nt::bits_to_express(1), 1u);
  EXPECT_EQ(nt::bits_to_express(16), 5u);
  for (std::uint64_t n = 1; n < 1000; ++n)
    EXPECT_EQ(nt::bits_to_express(n), static_cast<std::size_t>(std::ceil(std::log2(n + 1.0)))) << n;
  EXPECT_THROW(nt::bits_to_express(0), InvalidParameter);
}

TEST(NumberTheory, PrimesAndPowers) {
  for (std::uint64_t n = 0; n < 2000; ++n) EXPECT_EQ(nt::is_prime(n), brute_prime(n)) << n;
  for (std::uint64_t n : {4u, 8u, 9u, 25u, 27u, 49u, 121u, 125u, 243u, 343u}) EXPECT_TRUE(nt::is_prime_power(n)) << n;
  for (std::uint64_t n : {2u, 3u, 6u, 15u, 21u, 45u, 100u}) EXPECT_FALSE(nt::is_prime_power(n)) << n;
}

TEST(NumberTheory, ModInverse) {
  EXPECT_EQ(nt::mod_inverse(8, 15), 2u);
  EXPECT_EQ(nt::mod_inverse(6, 15), std::nullopt);
  for (std::uint64_t a = 1; a < 21; ++a)
    if (auto inv = nt::mod_inverse(a, 21)) EXPECT_EQ(a * *inv % 21, 1u);
}

TEST(ShorFactor, ForcedEightMatchesWorkedExample) {
  ShorOptions opts;
  opts.seed = 7;
  opts.force_m = 8;
  const FactoringOutcome out = shor_factor(15, opts);
  EXPECT_EQ(out.p, 3u);
  EXPECT_EQ(out.q, 5u);
  ASSERT_FALSE(out.trace.empty());
  EXPECT_EQ(out.trace.front().m, 8u);
  EXPECT_EQ(out.trace.back().verdict, Verdict::Factored);
  EXPECT_EQ(out.trace.back().period, 4u);
  for (const IterationRecord& r : out.trace) {
    ASSERT_TRUE(r.sample);
    EXPECT_EQ(r.sample->measured % 64, 0u);
  }
}

TEST(ShorFactor, GcdShortcut) {
  ShorOptions opts;
  opts.force_m = 5;
  const FactoringOutcome out = shor_factor(15, opts);
  EXPECT_EQ(out.p, 3u);
  EXPECT_EQ(out.q, 5u);
  ASSERT_EQ(out.trace.size(), 1u);
  EXPECT_EQ(out.trace[0].verdict, Verdict::GcdShortcut);
  EXPECT_FALSE(out.trace[0].sample);
}

TEST(ShorFactor, TwentyOneSeeded) {
  ShorOptions opts;
  opts.seed = 3;
  const FactoringOutcome out = shor_factor(21, opts);
  EXPECT_EQ(out.p, 3u);
  EXPECT_EQ(out.q, 7u);
  EXPECT_EQ(out.p * out.q, 21u);
}

TEST(ShorFactor, TwentyOneThroughQuantumPath) {
  // m = 2 is coprime to 21 with order 6, so this must go through period finding.
  ShorOptions opts;
  opts.seed = 11;
  opts.force_m = 2;
  const FactoringOutcome out = shor_factor(21, opts);
  EXPECT_EQ(out.p * out.q, 21u);
  EXPECT_EQ(out.trace.front().m, 2u);
  EXPECT_NE(out.trace.front().verdict, Verdict::GcdShortcut);
  for (const IterationRecord& r : out.trace)
    if (r.period) EXPECT_EQ(*r.period, brute_order(r.m, 21));
}

TEST(ShorFactor, CircuitOracleFactorsFifteen) {
  ShorOptions opts;
  opts.seed = 42;
  opts.oracle = algorithms::OracleKind::Circuit;
  const FactoringOutcome out = shor_factor(15, opts);
  EXPECT_EQ(out.p, 3u);
  EXPECT_EQ(out.q, 5u);
}

TEST(ShorFactor, Preconditions) {
  for (std::uint64_t n : {14u, 2u, 9u, 3u, 13u, 17u, 25u, 27u, 49u, 0u, 1u})
    EXPECT_THROW(shor_factor(n), InvalidParameter) << n;
  ShorOptions opts;
  opts.force_m = 1;
  EXPECT_THROW(shor_factor(15, opts), InvalidParameter);
  opts.force_m = 15;
  EXPECT_THROW(shor_factor(15, opts), InvalidParameter);
  ShorOptions narrow;
  narrow.qubit_cap = 11;
  EXPECT_THROW(shor_factor(15, narrow), QubitLimitExceeded);
}

TEST(ShorFactor, BudgetExhaustion) {
  // 14 = -1 mod 15: period 2 and m^(P/2) = -1, so the only allowed iteration is rejected.
  ShorOptions opts;
  opts.force_m = 14;
  opts.max_iterations = 1;
  try {
    shor_factor(15, opts);
    FAIL() << "expected ResourceExhausted";
  } catch (const ResourceExhausted&) {
  }
  ShorOptions none;
  none.max_iterations = 0;
  EXPECT_THROW(shor_factor(15, none), ResourceExhausted);
}

TEST(ShorFactor, TraceIsReproducible) {
  for (std::uint64_t seed : {1u, 2u, 42u, 1234u}) {
    ShorOptions opts;
    opts.seed = seed;
    const FactoringOutcome a = shor_factor(15, opts);
    const FactoringOutcome b = shor_factor(15, opts);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      EXPECT_EQ(a.trace[i].m, b.trace[i].m);
      EXPECT_EQ(a.trace[i].period, b.trace[i].period);
      EXPECT_EQ(a.trace[i].verdict, b.trace[i].verdict);
      EXPECT_EQ(a.trace[i].sample.has_value(), b.trace[i].sample.has_value());
      if (a.trace[i].sample) {
        EXPECT_EQ(a.trace[i].sample->measured, b.trace[i].sample->measured);
        EXPECT_EQ(a.trace[i].sample->reg2, b.trace[i].sample->reg2);
      }
    }
    EXPECT_EQ(a.p, b.p);
  }
}

TEST(ShorFactor, FactorsAreNonTrivialOverManySeeds) {
  for (std::uint64_t n : {15u, 21u}) {
    for (std::uint64_t seed = 0; seed < (n == 15 ? 200u : 25u); ++seed) {
      ShorOptions opts;
      opts.seed = seed;
      const FactoringOutcome out = shor_factor(n, opts);
      EXPECT_EQ(out.p * out.q, n);
      EXPECT_GT(out.p, 1u);
      EXPECT_LE(out.p, out.q);
      EXPECT_LT(out.q, n);
      EXPECT_LE(out.trace.size(), opts.max_iterations);
      for (const IterationRecord& r : out.trace) {
        EXPECT_GT(r.m, 1u);
        EXPECT_LT(r.m, n);
        if (r.period) EXPECT_EQ(nt::mod_pow(r.m, *r.period, n), 1u);
        if (r.verdict == Verdict::OddPeriod) EXPECT_EQ(*r.period % 2, 1u);
        if (r.verdict == Verdict::TrivialRoot) EXPECT_EQ(nt::mod_pow(r.m, *r.period / 2, n), n - 1);
      }
    }
  }
}

TEST(ShorFactor, VerdictNames) {
  EXPECT_EQ(verdict_name(Verdict::GcdShortcut), "gcd-shortcut");
  EXPECT_EQ(verdict_name(Verdict::Factored), "factored");
  EXPECT_EQ(verdict_name(Verdict::TrivialRoot), "trivial-root");
}
