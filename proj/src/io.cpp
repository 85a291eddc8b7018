#include "zdp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "zdp/errors.hpp"

namespace zdp {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

}  // namespace

std::string to_json(const PolynomialFile& pf) {
  nlohmann::ordered_json j;
  if (pf.n) j["n"] = *pf.n;
  if (pf.engine) j["engine"] = *pf.engine;
  if (pf.family) j["family"] = *pf.family;
  auto& coeffs = j["coeffs"] = nlohmann::ordered_json::object();
  for (const auto& [e, c] : pf.poly.sparse())
    coeffs[std::to_string(e)] = c.str();
  return j.dump(2) + "\n";
}

PolynomialFile parse_polynomial_file(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw ParseError("polynomial file: missing \"coeffs\" object");
  PolynomialFile pf;
  if (j.contains("n")) {
    if (!j["n"].is_number_unsigned())
      throw ParseError("polynomial file: \"n\" must be a nonnegative integer");
    pf.n = j["n"].get<std::uint64_t>();
  }
  if (j.contains("engine")) pf.engine = j["engine"].get<std::string>();
  if (j.contains("family")) pf.family = j["family"].get<std::string>();
  for (const auto& [key, value] : j["coeffs"].items()) {
    std::size_t exponent = 0;
    try {
      exponent = std::stoull(key);
    } catch (const std::exception&) {
      throw ParseError("polynomial file: bad exponent \"" + key + "\"");
    }
    BigInt coeff;
    if (value.is_string()) {
      try {
        coeff = BigInt(value.get<std::string>());
      } catch (const std::exception&) {
        throw ParseError("polynomial file: bad coefficient for exponent " +
                         key);
      }
    } else if (value.is_number_unsigned()) {
      coeff = value.get<std::uint64_t>();
    } else {
      throw ParseError("polynomial file: coefficient for exponent " + key +
                       " must be a decimal string");
    }
    if (coeff <= 0)
      throw ParseError("polynomial file: coefficient for exponent " + key +
                       " must be positive");
    pf.poly.add_term(coeff, exponent);
  }
  return pf;
}

PolynomialFile load_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polynomial file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polynomial_file(buf.str());
}

void save_polynomial_file(const PolynomialFile& pf, const std::string& path) {
  write_text_file(path, to_json(pf));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

std::string roots_csv(const RootsReport& rep) {
  struct Row {
    double re, im, residual;
  };
  std::vector<Row> rows;
  rows.reserve(rep.degree);
  for (std::size_t i = 0; i < rep.origin_multiplicity; ++i)
    rows.push_back({0.0, 0.0, 0.0});
  for (const auto& r : rep.numeric_roots)
    rows.push_back({r.z.real(), r.z.imag(), r.residual});
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  std::string out = "re,im,residual\n";
  for (const auto& r : rows) {
    out += fmt("%.17g", r.re);
    out += ",";
    out += fmt("%.17g", r.im);
    out += ",";
    out += fmt("%.17g", r.residual);
    out += "\n";
  }
  return out;
}

std::string roots_svg(const RootsReport& rep, const std::string& label) {
  constexpr double kSize = 480.0;
  constexpr double kMargin = 40.0;
  double extent = 1.0;  // always show the unit circle
  for (const auto& r : rep.numeric_roots) {
    extent = std::max(extent, std::abs(r.z.real()));
    extent = std::max(extent, std::abs(r.z.imag()));
  }
  extent *= 1.1;
  const double scale = (kSize / 2.0 - kMargin) / extent;
  const auto px = [&](double x) { return kSize / 2.0 + x * scale; };
  const auto py = [&](double y) { return kSize / 2.0 - y * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << " "
      << kSize << "\">\n";
  svg << "  <rect width=\"" << kSize << "\" height=\"" << kSize
      << "\" fill=\"white\"/>\n";
  svg << "  <line x1=\"0\" y1=\"" << fmt("%.2f", py(0)) << "\" x2=\"" << kSize
      << "\" y2=\"" << fmt("%.2f", py(0))
      << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  svg << "  <line x1=\"" << fmt("%.2f", px(0)) << "\" y1=\"0\" x2=\""
      << fmt("%.2f", px(0)) << "\" y2=\"" << kSize
      << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  svg << "  <circle cx=\"" << fmt("%.2f", px(0)) << "\" cy=\""
      << fmt("%.2f", py(0)) << "\" r=\"" << fmt("%.2f", scale)
      << "\" fill=\"none\" stroke=\"#bbb\" stroke-dasharray=\"4 3\"/>\n";
  if (!label.empty())
    svg << "  <text x=\"8\" y=\"16\" font-family=\"sans-serif\" "
           "font-size=\"12\" fill=\"#333\">"
        << label << "</text>\n";
  if (rep.origin_multiplicity > 0)
    svg << "  <circle cx=\"" << fmt("%.2f", px(0)) << "\" cy=\""
        << fmt("%.2f", py(0)) << "\" r=\"3\" fill=\"green\"/>\n";
  for (const auto& r : rep.numeric_roots)
    svg << "  <circle cx=\"" << fmt("%.2f", px(r.z.real())) << "\" cy=\""
        << fmt("%.2f", py(r.z.imag())) << "\" r=\"3\" fill=\"green\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace zdp
