#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zdp/polynomial.hpp"
#include "zdp/roots.hpp"

namespace zdp {

/// On-disk polynomial: {"n": int?, "engine": string?, "family": string?,
/// "coeffs": {"<exp>": "<coeff>"}}. Coefficients are decimal strings so
/// arbitrary precision survives the trip.
struct PolynomialFile {
  std::optional<std::uint64_t> n;
  std::optional<std::string> engine;
  std::optional<std::string> family;
  DomPolynomial poly;
};

/// Deterministic rendering: fixed key order, exponents ascending.
std::string to_json(const PolynomialFile& pf);

/// Throws ParseError on malformed input, missing coeffs, nonpositive or
/// non-numeric entries.
PolynomialFile parse_polynomial_file(const std::string& json_text);
PolynomialFile load_polynomial_file(const std::string& path);
void save_polynomial_file(const PolynomialFile& pf, const std::string& path);

/// "re,im,residual" rows, origin roots included, sorted by (re, im).
std::string roots_csv(const RootsReport& rep);

/// Static scatter of the zeros on the complex plane with axes and the unit
/// circle for reference; green dots, no timestamps.
std::string roots_svg(const RootsReport& rep, const std::string& label);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace zdp
