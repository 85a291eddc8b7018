#include "zdp/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdp/errors.hpp"

namespace zdp {

namespace {
const BigInt kZero = 0;

std::string term_to_string(const BigInt& c, std::size_t e) {
  std::string out;
  if (e == 0) return c.str();
  if (c != 1) out += c.str();
  out += "x";
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}
}  // namespace

DomPolynomial::DomPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c < 0)
      throw std::invalid_argument("DomPolynomial: negative coefficient");
  }
  trim();
}

DomPolynomial DomPolynomial::monomial(BigInt coeff, std::size_t exponent) {
  DomPolynomial p;
  p.add_term(coeff, exponent);
  return p;
}

DomPolynomial DomPolynomial::from_sparse(
    const std::map<std::size_t, BigInt>& terms) {
  DomPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(c, e);
  return p;
}

void DomPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t DomPolynomial::degree() const {
  if (is_zero()) throw std::logic_error("degree of zero polynomial");
  return coeffs_.size() - 1;
}

std::size_t DomPolynomial::lowest_exponent() const {
  if (is_zero()) throw std::logic_error("lowest_exponent of zero polynomial");
  std::size_t i = 0;
  while (coeffs_[i] == 0) ++i;
  return i;
}

const BigInt& DomPolynomial::coeff(std::size_t exponent) const {
  return exponent < coeffs_.size() ? coeffs_[exponent] : kZero;
}

void DomPolynomial::add_term(const BigInt& coeff, std::size_t exponent) {
  if (coeff < 0)
    throw std::invalid_argument("DomPolynomial: negative coefficient");
  if (coeff == 0) return;
  if (exponent > kMaxDenseDegree)
    throw SizeCapError("dense degree cap " + std::to_string(kMaxDenseDegree) +
                       " exceeded (exponent " + std::to_string(exponent) + ")");
  if (exponent >= coeffs_.size()) coeffs_.resize(exponent + 1);
  coeffs_[exponent] += coeff;
}

BigInt DomPolynomial::evaluate_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::map<std::size_t, BigInt> DomPolynomial::sparse() const {
  std::map<std::size_t, BigInt> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace(i, coeffs_[i]);
  return out;
}

std::string DomPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : sparse()) {
    if (!out.empty()) out += " + ";
    out += term_to_string(c, e);
  }
  return out;
}

SignedSparse subtract_sparse(const DomPolynomial& a, const DomPolynomial& b) {
  SignedSparse out;
  const std::size_t top = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t e = 0; e < top; ++e) {
    BigInt d = a.coeff(e) - b.coeff(e);
    if (d != 0) out.emplace(e, std::move(d));
  }
  return out;
}

std::string sparse_to_string(const SignedSparse& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : s) {
    if (!out.empty()) out += " ";
    out += c > 0 ? "+" : "-";
    out += term_to_string(abs(c), e);
  }
  return out;
}

}  // namespace zdp
