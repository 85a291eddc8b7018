#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "zdp/polynomial.hpp"

namespace zdp {

struct OscillationMetrics {
  std::size_t inc_runs = 0;
  std::size_t dec_runs = 0;
  std::size_t direction_changes = 0;
  std::size_t eta = 0;  // max(inc_runs, dec_runs)
  friend bool operator==(const OscillationMetrics&,
                         const OscillationMetrics&) = default;
};

/// Shape verdicts for the full dense coefficient vector a_0..a_b (zeros
/// included, so x^2 + x^4 is not unimodal).
struct PropertyReport {
  bool unimodal = false;
  std::optional<std::size_t> mode_index;          // smallest valid mode
  bool logconcave = false;
  std::optional<std::size_t> logconcave_witness;  // highest violating j
  bool newton = false;
  std::optional<std::size_t> newton_witness;      // highest violating t
  OscillationMetrics oscillation;
  bool has_internal_zeros = false;
};

/// True iff a_0 <= ... <= a_p >= ... >= a_b for some p; returns the smallest
/// such p. Errors on the zero polynomial.
std::pair<bool, std::optional<std::size_t>> is_unimodal(const DomPolynomial& p);

/// True iff a_j^2 >= a_{j-1} a_{j+1} for 1 <= j <= b-1, exact integers.
/// The witness is the highest violating index.
std::pair<bool, std::optional<std::size_t>> is_log_concave(
    const DomPolynomial& p);

/// True iff a_t^2 >= a_{t-1} a_{t+1} (1 + 1/t)(1 + 1/(b-t)) for t = 1..b-1,
/// exact rationals. Vacuously true below degree 2. Witness as above.
std::pair<bool, std::optional<std::size_t>> newton_check(
    const DomPolynomial& p);

/// Maximal strictly-increasing/-decreasing runs of the coefficient vector;
/// equal neighbors split nothing. direction_changes counts alternations of
/// the rise/fall sign sequence.
OscillationMetrics oscillation_metrics(const DomPolynomial& p);

/// True iff a_i > 0, a_j = 0, a_k > 0 for some i < j < k.
bool has_internal_zeros(const DomPolynomial& p);

PropertyReport analyze(const DomPolynomial& p);

}  // namespace zdp
