#include "zdp/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zdp/errors.hpp"

namespace zdp {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

namespace {

// Brent's cycle variant of Pollard rho; n must be odd, composite, > 1.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Uncapped factorization: trial division to 10^6, Miller-Rabin certificate,
// Pollard rho for any remaining composite cofactor (only reachable beyond
// the public 10^12 limit, e.g. from euler_phi).
Factorization factorize_u64(std::uint64_t n) {
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  auto strip = [&](std::uint64_t p) {
    if (rest % p != 0) return;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= 1'000'000 && d * d <= rest; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (rest > 1) {
    if (is_prime(rest)) {
      f.factors.push_back({rest, 1});
    } else {
      std::vector<std::uint64_t> primes;
      factor_into(rest, primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
      }
    }
  }
  return f;
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n < 2 || n > kMaxFactorizeInput)
    throw RangeError("factorize: n must satisfy 2 <= n <= 10^12");
  return factorize_u64(n);
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw RangeError("euler_phi: n must be positive");
  if (n == 1) return 1;
  return euler_phi(factorize_u64(n));
}

std::vector<std::uint64_t> proper_divisors(const Factorization& f) {
  std::vector<std::uint64_t> divs{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = divs.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  // drop 1 and n
  divs.erase(divs.begin());
  if (!divs.empty()) divs.pop_back();
  return divs;
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t n) {
  if (n < 2) throw RangeError("proper_divisors: n must be >= 2");
  return proper_divisors(factorize(n));
}

FamilyClass classify_family(const Factorization& f) {
  const auto& fs = f.factors;
  if (fs.size() == 1) {
    const unsigned e = fs[0].exponent;
    if (e == 1) return {Family::EmptyGraph, 0};
    if (e == 2) return {Family::PrimeSquared, 0};
    if (e % 2 == 0) return {Family::PrimePowerEven, e / 2};
    return {Family::PrimePowerOdd, (e - 1) / 2};
  }
  if (fs.size() == 2) {
    const unsigned e0 = fs[0].exponent, e1 = fs[1].exponent;
    if (e0 == 1 && e1 == 1)
      return {fs[0].prime == 2 ? Family::TwoP : Family::PQ, 0};
    if ((e0 == 2 && e1 == 1) || (e0 == 1 && e1 == 2))
      return {Family::PSquaredQ, 0};
    return {Family::General, 0};
  }
  if (fs.size() == 3 && fs[0].exponent == 1 && fs[1].exponent == 1 &&
      fs[2].exponent == 1)
    return {Family::PQR, 0};
  return {Family::General, 0};
}

std::string family_name(Family tag) {
  switch (tag) {
    case Family::EmptyGraph: return "EmptyGraph";
    case Family::PrimeSquared: return "PrimeSquared";
    case Family::TwoP: return "TwoP";
    case Family::PQ: return "PQ";
    case Family::PSquaredQ: return "PSquaredQ";
    case Family::PQR: return "PQR";
    case Family::PrimePowerEven: return "PrimePowerEven";
    case Family::PrimePowerOdd: return "PrimePowerOdd";
    case Family::General: return "General";
  }
  return "General";
}

std::string family_name(const FamilyClass& fc) {
  if (fc.tag == Family::PrimePowerEven || fc.tag == Family::PrimePowerOdd)
    return family_name(fc.tag) + "(m=" + std::to_string(fc.m) + ")";
  return family_name(fc.tag);
}

}  // namespace zdp
