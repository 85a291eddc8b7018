#include "zdp/analysis.hpp"

#include <stdexcept>

namespace zdp {

namespace {

void require_nonzero(const DomPolynomial& p, const char* who) {
  if (p.is_zero())
    throw std::invalid_argument(std::string(who) + ": zero polynomial");
}

}  // namespace

std::pair<bool, std::optional<std::size_t>> is_unimodal(
    const DomPolynomial& p) {
  require_nonzero(p, "is_unimodal");
  const auto& a = p.coeffs();
  bool fallen = false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > a[i - 1] && fallen) return {false, std::nullopt};
    if (a[i] < a[i - 1]) fallen = true;
  }
  // smallest valid mode: start of the nonincreasing suffix
  std::size_t mode = a.size() - 1;
  while (mode > 0 && a[mode - 1] >= a[mode]) --mode;
  return {true, mode};
}

std::pair<bool, std::optional<std::size_t>> is_log_concave(
    const DomPolynomial& p) {
  require_nonzero(p, "is_log_concave");
  const auto& a = p.coeffs();
  for (std::size_t j = a.size() - 1; j-- > 1;) {
    if (a[j] * a[j] < a[j - 1] * a[j + 1]) return {false, j};
  }
  return {true, std::nullopt};
}

std::pair<bool, std::optional<std::size_t>> newton_check(
    const DomPolynomial& p) {
  require_nonzero(p, "newton_check");
  const auto& a = p.coeffs();
  if (a.size() < 3) return {true, std::nullopt};  // degree < 2: vacuous
  const std::size_t b = a.size() - 1;
  for (std::size_t t = b - 1; t >= 1; --t) {
    const BigRat lhs(a[t] * a[t]);
    const BigRat rhs = BigRat(a[t - 1] * a[t + 1]) *
                       BigRat(BigInt(t + 1), BigInt(t)) *
                       BigRat(BigInt(b - t + 1), BigInt(b - t));
    if (lhs < rhs) return {false, t};
  }
  return {true, std::nullopt};
}

OscillationMetrics oscillation_metrics(const DomPolynomial& p) {
  require_nonzero(p, "oscillation_metrics");
  const auto& a = p.coeffs();
  OscillationMetrics m;
  int prev = 0;  // sign of the last strict step
  for (std::size_t i = 1; i < a.size(); ++i) {
    const int step = a[i] > a[i - 1] ? 1 : (a[i] < a[i - 1] ? -1 : 0);
    if (step == 0 || step == prev) continue;
    if (step > 0)
      ++m.inc_runs;
    else
      ++m.dec_runs;
    if (prev != 0) ++m.direction_changes;
    prev = step;
  }
  m.eta = std::max(m.inc_runs, m.dec_runs);
  return m;
}

bool has_internal_zeros(const DomPolynomial& p) {
  require_nonzero(p, "has_internal_zeros");
  const auto& a = p.coeffs();
  bool seen_positive = false;
  bool gap_after_positive = false;
  for (const auto& c : a) {
    if (c != 0) {
      if (gap_after_positive) return true;
      seen_positive = true;
    } else if (seen_positive) {
      gap_after_positive = true;
    }
  }
  return false;
}

PropertyReport analyze(const DomPolynomial& p) {
  PropertyReport r;
  std::tie(r.unimodal, r.mode_index) = is_unimodal(p);
  std::tie(r.logconcave, r.logconcave_witness) = is_log_concave(p);
  std::tie(r.newton, r.newton_witness) = newton_check(p);
  r.oscillation = oscillation_metrics(p);
  r.has_internal_zeros = has_internal_zeros(p);
  return r;
}

}  // namespace zdp
