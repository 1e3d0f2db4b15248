#include "cove/number_theory.hpp"

#include "cove/error.hpp"

namespace cove::number_theory {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  if (a == 0 && b == 0) throw InvalidParameter("gcd(0, 0) is undefined");
  while (b != 0) {
    const std::uint64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

}  // namespace

std::uint64_t mod_pow(std::uint64_t m, std::uint64_t x, std::uint64_t n) {
  if (n < 2) throw InvalidParameter("mod_pow needs a modulus of at least 2");
  std::uint64_t result = 1;
  std::uint64_t base = m % n;
  while (x != 0) {
    if (x & 1U) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    x >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> mod_pow_table(std::uint64_t m, std::size_t count, std::uint64_t n) {
  if (n < 2) throw InvalidParameter("mod_pow_table needs a modulus of at least 2");
  std::vector<std::uint64_t> table(count);
  std::uint64_t f = 1;
  for (std::size_t x = 0; x < count; ++x) {
    table[x] = f;
    f = mul_mod(f, m % n, n);
  }
  return table;
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n) {
  if (n < 2) return std::nullopt;
  // Signed 128-bit keeps the Bezout coefficients clear of overflow.
  i128 r0 = n, r1 = a % n, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i128 q = r0 / r1;
    const i128 r2 = r0 - q * r1;
    const i128 t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += n;
  return static_cast<std::uint64_t>(t0);
}

std::size_t bits_to_express(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("bits_to_express needs n >= 1");
  std::size_t bits = 0;
  while (n != 0) {
    ++bits;
    n >>= 1;
  }
  return bits;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 4) return false;
  std::uint64_t p = 2;
  while (p <= n / p && n % p != 0) ++p;
  if (n % p != 0) return false;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace cove::number_theory
