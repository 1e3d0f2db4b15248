#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

/// Classical number theory behind the factoring driver and the arithmetic
/// plan builders.
namespace cove::number_theory {

/// Euclid. Throws InvalidParameter for gcd(0, 0).
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

/// m^x mod n with intermediates below n^2. Throws InvalidParameter when n < 2.
std::uint64_t mod_pow(std::uint64_t m, std::uint64_t x, std::uint64_t n);

/// f(x) = m^x mod n for x in [0, count), each value obtained from the previous
/// one as ((m^(x-1) mod n) * m) mod n.
std::vector<std::uint64_t> mod_pow_table(std::uint64_t m, std::size_t count, std::uint64_t n);

/// Inverse of a modulo n, or nullopt when gcd(a, n) != 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n);

/// Minimal bit width of n. Throws InvalidParameter for n == 0.
std::size_t bits_to_express(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// True when n = p^k for a prime p and k >= 2.
bool is_prime_power(std::uint64_t n);

}  // namespace cove::number_theory
