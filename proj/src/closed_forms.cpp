#include "zdp/closed_forms.hpp"

#include <string>

#include "zdp/engines.hpp"
#include "zdp/errors.hpp"
#include "zdp/zdg.hpp"

namespace zdp {

namespace {

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::uint64_t phi_prime_power(std::uint64_t p, unsigned e) {
  return e == 0 ? 1 : (p - 1) * ipow(p, e - 1);
}

}  // namespace

DomPolynomial closed_prime_squared(std::uint64_t p) {
  return DomPolynomial::monomial(BigInt(p - 1), 1);
}

DomPolynomial closed_two_p(std::uint64_t p) {
  DomPolynomial out;
  out.add_term(1, 1);
  out.add_term(1, p - 1);
  return out;
}

DomPolynomial closed_pq(std::uint64_t p, std::uint64_t q) {
  DomPolynomial out;
  out.add_term(1, p - 1);
  out.add_term(1, q - 1);
  return out;
}

DomPolynomial closed_p_squared_q(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t phi_q = q - 1;
  const std::uint64_t phi_p = p - 1;
  const std::uint64_t phi_pq = (p - 1) * (q - 1);
  const std::uint64_t phi_p2 = p * (p - 1);
  DomPolynomial out;
  out.add_term(1, phi_q + phi_pq);
  out.add_term(BigInt(phi_p), phi_p2 + 1);
  out.add_term(1, phi_p2 + phi_pq);
  return out;
}

DomPolynomial closed_pqr(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  const auto phi = [](std::uint64_t a) { return a - 1; };
  const std::uint64_t phi_pq = phi(p) * phi(q);
  const std::uint64_t phi_pr = phi(p) * phi(r);
  const std::uint64_t phi_qr = phi(q) * phi(r);
  DomPolynomial out;
  out.add_term(1, phi_pr + phi_pq + phi(p));
  out.add_term(1, phi_qr + phi_pq + phi(q));
  out.add_term(1, phi_qr + phi_pr + phi(r));
  out.add_term(1, phi_qr + phi_pr + phi_pq);
  return out;
}

DomPolynomial closed_prime_power_even(std::uint64_t p, unsigned m) {
  const std::uint64_t p2m1 = ipow(p, 2 * m - 1);
  DomPolynomial out;
  for (unsigned i = 1; i <= m; ++i)
    out.add_term(BigInt(phi_prime_power(p, i)),
                 1 + p2m1 - ipow(p, 2 * m - 1 - (i - 1)));
  out.add_term(1, p2m1 - ipow(p, m));
  return out;
}

DomPolynomial closed_prime_power_odd(std::uint64_t p, unsigned m) {
  const std::uint64_t p2m = ipow(p, 2 * m);
  DomPolynomial out;
  for (unsigned i = 1; i <= m; ++i)
    out.add_term(BigInt(phi_prime_power(p, i)),
                 1 + p2m - ipow(p, 2 * m - (i - 1)));
  out.add_term(1, p2m - ipow(p, m));
  return out;
}

ClosedForm dipoly_closed(const Factorization& f) {
  const FamilyClass fc = classify_family(f);
  const auto& fs = f.factors;
  switch (fc.tag) {
    case Family::PrimeSquared:
      return {closed_prime_squared(fs[0].prime), fc};
    case Family::TwoP:
      return {closed_two_p(fs[1].prime), fc};
    case Family::PQ:
      return {closed_pq(fs[0].prime, fs[1].prime), fc};
    case Family::PSquaredQ: {
      const bool first_squared = fs[0].exponent == 2;
      const std::uint64_t p = first_squared ? fs[0].prime : fs[1].prime;
      const std::uint64_t q = first_squared ? fs[1].prime : fs[0].prime;
      return {closed_p_squared_q(p, q), fc};
    }
    case Family::PQR:
      return {closed_pqr(fs[0].prime, fs[1].prime, fs[2].prime), fc};
    case Family::PrimePowerEven:
      return {closed_prime_power_even(fs[0].prime, fc.m), fc};
    case Family::PrimePowerOdd:
      return {closed_prime_power_odd(fs[0].prime, fc.m), fc};
    case Family::EmptyGraph:
    case Family::General:
      break;
  }
  throw UnsupportedFamilyError("no closed form for n = " + std::to_string(f.n) +
                               " (family " + family_name(fc) + ")");
}

AuditRecord audit_family(const Factorization& f) {
  AuditRecord rec;
  rec.n = f.n;
  const ClosedForm cf = dipoly_closed(f);
  rec.family = cf.family;
  const DomPolynomial compressed = dipoly_compressed(build_class_graph(f.n));
  rec.difference = subtract_sparse(cf.poly, compressed);
  rec.match = rec.difference.empty();
  return rec;
}

SignedSparse expected_even_power_difference(std::uint64_t p, unsigned m) {
  SignedSparse d;
  if (m == 1)
    d.emplace(0, 1);
  else
    d.emplace(ipow(p, 2 * m - 1) - ipow(p, m), 1);
  return d;
}

}  // namespace zdp
