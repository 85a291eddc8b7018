#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zdp {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n; primes strictly ascending, each certified prime.
struct Factorization {
  std::uint64_t n = 0;
  std::vector<PrimePower> factors;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// One canonical family per n. Overlaps resolve in the order
/// EmptyGraph > PrimeSquared > TwoP > PQ > PSquaredQ > PQR >
/// PrimePowerEven/Odd > General (so p^2 never reports as PrimePowerEven(1),
/// and 2p never reports as PQ).
enum class Family {
  EmptyGraph,      // n prime: no zero divisors
  PrimeSquared,    // n = p^2
  TwoP,            // n = 2p, p odd prime
  PQ,              // n = pq, 2 < p < q
  PSquaredQ,       // n = p^2 q, p != q
  PQR,             // n = pqr, p < q < r
  PrimePowerEven,  // n = p^{2m}, m >= 2
  PrimePowerOdd,   // n = p^{2m+1}, m >= 1
  General,
};

struct FamilyClass {
  Family tag = Family::General;
  unsigned m = 0;  // set for PrimePowerEven/Odd only
  friend bool operator==(const FamilyClass&, const FamilyClass&) = default;
};

inline constexpr std::uint64_t kMaxFactorizeInput = 1'000'000'000'000ULL;

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Trial division up to 10^6; the remaining cofactor is certified prime.
/// Throws RangeError unless 2 <= n <= 10^12.
Factorization factorize(std::uint64_t n);

/// Euler totient via the product formula. phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t euler_phi(const Factorization& f);

/// Divisors d of n with 1 < d < n, ascending. Empty iff n is prime.
std::vector<std::uint64_t> proper_divisors(std::uint64_t n);
std::vector<std::uint64_t> proper_divisors(const Factorization& f);

FamilyClass classify_family(const Factorization& f);

std::string family_name(Family tag);
std::string family_name(const FamilyClass& fc);  // "PrimePowerOdd(m=2)" etc.

}  // namespace zdp
