#include "zdp/sturm.hpp"

#include <stdexcept>

namespace zdp::detail {

bool zp_is_zero(const ZPoly& a) { return a.empty(); }

std::size_t zp_degree(const ZPoly& a) { return a.empty() ? 0 : a.size() - 1; }

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_derivative(const ZPoly& a) {
  ZPoly d;
  if (a.size() < 2) return d;
  d.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * BigInt(i));
  zp_trim(d);
  return d;
}

BigInt zp_content(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return abs(g);
}

ZPoly zp_primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  const BigInt c = zp_content(a);
  if (c <= 1) return a;
  ZPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / c;
  return out;
}

ZPoly zp_scaled_rem(ZPoly a, const ZPoly& b) {
  if (zp_is_zero(b)) throw std::domain_error("zp_scaled_rem: zero divisor");
  const std::size_t db = zp_degree(b);
  const BigInt lc_abs = abs(b.back());
  const int lc_sign = b.back() > 0 ? 1 : -1;
  // a <- |lc(b)| * a - sgn(lc(b)) * a_k * x^{k-db} * b keeps a congruent to a
  // positive multiple of rem(a, b) and kills the degree-k coefficient.
  while (!a.empty() && zp_degree(a) >= db) {
    const std::size_t k = zp_degree(a);
    const BigInt top = a.back();
    if (top == 0) {
      a.pop_back();
      continue;
    }
    for (auto& c : a) c *= lc_abs;
    const std::size_t shift = k - db;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= (lc_sign > 0 ? top : -top) * b[i];
    }
    zp_trim(a);
  }
  return a;
}

ZPoly zp_exact_div(const ZPoly& a, const ZPoly& b) {
  if (zp_is_zero(b)) throw std::domain_error("zp_exact_div: zero divisor");
  if (zp_is_zero(a)) return {};
  const std::size_t da = zp_degree(a), db = zp_degree(b);
  if (da < db) throw std::domain_error("zp_exact_div: not divisible");
  ZPoly rem = a;
  ZPoly q(da - db + 1, BigInt(0));
  for (std::size_t k = da + 1; k-- > db;) {
    if (rem.size() <= k || rem[k] == 0) continue;
    if (rem[k] % b[db] != 0)
      throw std::domain_error("zp_exact_div: not divisible");
    const BigInt qk = rem[k] / b[db];
    q[k - db] = qk;
    for (std::size_t i = 0; i < b.size(); ++i) rem[k - db + i] -= qk * b[i];
  }
  zp_trim(rem);
  if (!rem.empty()) throw std::domain_error("zp_exact_div: nonzero remainder");
  zp_trim(q);
  return q;
}

BigInt zp_eval(const ZPoly& a, const BigInt& x) {
  BigInt v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
  zp_trim(a);
  zp_trim(b);
  a = zp_primitive_part(a);
  b = zp_primitive_part(b);
  if (zp_is_zero(a)) std::swap(a, b);
  while (!zp_is_zero(b)) {
    if (zp_degree(a) < zp_degree(b)) std::swap(a, b);
    ZPoly r = zp_primitive_part(zp_scaled_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

ZPoly zp_squarefree_part(const ZPoly& a) {
  ZPoly p = zp_primitive_part(a);
  zp_trim(p);
  if (zp_is_zero(p))
    throw std::domain_error("zp_squarefree_part: zero polynomial");
  if (zp_degree(p) == 0) return {BigInt(1)};
  const ZPoly g = zp_gcd(p, zp_derivative(p));
  if (zp_degree(g) == 0) return p;
  return zp_exact_div(p, g);
}

std::vector<ZPoly> sturm_chain(const ZPoly& squarefree) {
  std::vector<ZPoly> chain;
  chain.push_back(zp_primitive_part(squarefree));
  if (zp_degree(chain[0]) == 0) return chain;
  chain.push_back(zp_primitive_part(zp_derivative(chain[0])));
  while (zp_degree(chain.back()) > 0) {
    ZPoly r = zp_scaled_rem(chain[chain.size() - 2], chain.back());
    if (zp_is_zero(r)) break;  // only at the gcd for non-squarefree input
    r = zp_primitive_part(r);
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations_at(const std::vector<ZPoly>& chain, const BigInt& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const BigInt v = zp_eval(s, x);
    const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sign == 0) continue;
    if (prev != 0 && sign != prev) ++variations;
    prev = sign;
  }
  return variations;
}

BigInt cauchy_bound_int(const ZPoly& a) {
  if (zp_is_zero(a)) throw std::domain_error("cauchy_bound_int: zero poly");
  BigInt max_abs = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const BigInt mag = abs(a[i]);
    if (mag > max_abs) max_abs = mag;
  }
  return 2 + max_abs / BigInt(abs(a.back()));
}

std::size_t count_distinct_real_roots(const ZPoly& squarefree) {
  if (zp_degree(squarefree) == 0) return 0;
  const auto chain = sturm_chain(squarefree);
  const BigInt bound = cauchy_bound_int(squarefree);
  const int lo = sign_variations_at(chain, -bound);
  const int hi = sign_variations_at(chain, bound);
  return static_cast<std::size_t>(lo - hi);
}

}  // namespace zdp::detail
