// zdpoly: compute and analyze independent domination polynomials of the
// zero-divisor graphs Gamma(Z_n).
//
// Subcommands: dipoly, props, roots, verify, scan. Exit codes: 0 success,
// 2 empty graph (n prime), 3 engine cap exceeded, 4 root iteration did not
// converge, 5 verify found an undocumented mismatch.

#include <atomic>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdp/analysis.hpp"
#include "zdp/closed_forms.hpp"
#include "zdp/engines.hpp"
#include "zdp/errors.hpp"
#include "zdp/io.hpp"
#include "zdp/numtheory.hpp"
#include "zdp/roots.hpp"
#include "zdp/zdg.hpp"

namespace {

constexpr int kExitEmptyGraph = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitNotConverged = 4;
constexpr int kExitVerifyMismatch = 5;

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

Range parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw CLI::ValidationError("--range", "expected A..B, got '" + text + "'");
  Range r;
  try {
    r.lo = std::stoull(text.substr(0, pos));
    r.hi = std::stoull(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--range", "expected A..B, got '" + text + "'");
  }
  if (r.lo > r.hi)
    throw CLI::ValidationError("--range", "A must not exceed B");
  return r;
}

struct ComputedPoly {
  zdp::DomPolynomial poly;
  std::string engine;
  std::string family;
};

ComputedPoly compute_poly(std::uint64_t n, const std::string& engine) {
  const zdp::Factorization f = zdp::factorize(n);
  const zdp::FamilyClass fc = zdp::classify_family(f);
  if (fc.tag == zdp::Family::EmptyGraph)
    throw zdp::EmptyGraphError("graph is empty: " + std::to_string(n) +
                               " is prime");
  ComputedPoly out;
  out.family = zdp::family_name(fc);
  if (engine == "closed") {
    out.poly = zdp::dipoly_closed(f).poly;
    out.engine = "closed";
  } else if (engine == "brute") {
    const auto g =
        zdp::expand_graph(zdp::build_class_graph(n), zdp::kDefaultBruteCap);
    out.poly = zdp::dipoly_bruteforce(g);
    out.engine = "brute";
  } else {
    out.poly = zdp::dipoly_compressed(zdp::build_class_graph(n));
    out.engine = "compressed";
  }
  return out;
}

std::string opt_str(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

nlohmann::ordered_json props_json(const zdp::PropertyReport& r) {
  nlohmann::ordered_json j;
  j["unimodal"] = r.unimodal;
  j["mode_index"] =
      r.mode_index ? nlohmann::ordered_json(*r.mode_index) : nullptr;
  j["logconcave"] = r.logconcave;
  j["logconcave_witness"] = r.logconcave_witness
                                ? nlohmann::ordered_json(*r.logconcave_witness)
                                : nullptr;
  j["newton"] = r.newton;
  j["newton_witness"] =
      r.newton_witness ? nlohmann::ordered_json(*r.newton_witness) : nullptr;
  j["inc_runs"] = r.oscillation.inc_runs;
  j["dec_runs"] = r.oscillation.dec_runs;
  j["direction_changes"] = r.oscillation.direction_changes;
  j["eta"] = r.oscillation.eta;
  j["has_internal_zeros"] = r.has_internal_zeros;
  return j;
}

int run_dipoly(std::uint64_t n, const std::string& engine,
               const std::string& format) {
  const ComputedPoly cp = compute_poly(n, engine);
  if (format == "json") {
    zdp::PolynomialFile pf;
    pf.n = n;
    pf.engine = cp.engine;
    pf.family = cp.family;
    pf.poly = cp.poly;
    std::cout << zdp::to_json(pf);
  } else {
    std::cout << cp.poly.to_string() << "\n";
  }
  return 0;
}

int run_props(std::optional<std::uint64_t> n, const std::string& poly_path,
              const std::string& format) {
  zdp::DomPolynomial poly;
  if (!poly_path.empty()) {
    poly = zdp::load_polynomial_file(poly_path).poly;
  } else {
    poly = compute_poly(*n, "auto").poly;
  }
  const zdp::PropertyReport r = zdp::analyze(poly);
  if (format == "json") {
    std::cout << props_json(r).dump(2) << "\n";
    return 0;
  }
  std::cout << "unimodal: " << (r.unimodal ? "true" : "false")
            << "  (mode_index: " << opt_str(r.mode_index) << ")\n";
  std::cout << "logconcave: " << (r.logconcave ? "true" : "false")
            << "  (witness: " << opt_str(r.logconcave_witness) << ")\n";
  std::cout << "newton: " << (r.newton ? "true" : "false")
            << "  (witness: " << opt_str(r.newton_witness) << ")\n";
  std::cout << "inc_runs: " << r.oscillation.inc_runs
            << "  dec_runs: " << r.oscillation.dec_runs
            << "  direction_changes: " << r.oscillation.direction_changes
            << "  eta: " << r.oscillation.eta << "\n";
  std::cout << "has_internal_zeros: "
            << (r.has_internal_zeros ? "true" : "false") << "\n";
  return 0;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int run_roots(std::optional<std::uint64_t> n, const std::string& poly_path,
              double tol, std::size_t max_iter, const std::string& csv_path,
              const std::string& svg_path) {
  zdp::DomPolynomial poly;
  std::string label;
  if (!poly_path.empty()) {
    const auto pf = zdp::load_polynomial_file(poly_path);
    poly = pf.poly;
    if (pf.n) label = "n=" + std::to_string(*pf.n);
  } else {
    poly = compute_poly(*n, "auto").poly;
    label = "n=" + std::to_string(*n);
  }
  zdp::RootFindOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  const zdp::RootsReport rep = zdp::certify_roots(poly, opts);

  // artifacts first: a broken stdout pipe must not lose them
  if (!csv_path.empty()) zdp::write_text_file(csv_path, zdp::roots_csv(rep));
  if (!svg_path.empty())
    zdp::write_text_file(svg_path, zdp::roots_svg(rep, label));

  std::cout << "degree: " << rep.degree
            << "  origin multiplicity: " << rep.origin_multiplicity << "\n";
  std::cout << "iterations: " << rep.iterations
            << "  converged: " << (rep.converged ? "true" : "false")
            << "  max residual: " << fmt_double(rep.max_residual) << "\n";
  std::cout << "distinct real roots (exact): " << rep.distinct_real_exact
            << "  distinct non-real (exact): " << rep.distinct_nonreal_exact
            << "  squarefree degree: " << rep.squarefree_degree << "\n";
  if (rep.origin_multiplicity > 0)
    std::cout << "0 (multiplicity " << rep.origin_multiplicity << ")\n";
  for (const auto& r : rep.numeric_roots) {
    const double im = r.z.imag();
    std::cout << fmt_double(r.z.real()) << (im < 0 ? " - " : " + ")
              << fmt_double(std::abs(im)) << "i"
              << "  residual " << fmt_double(r.residual) << "\n";
  }
  return rep.converged ? 0 : kExitNotConverged;
}

int run_verify(const std::string& range_text) {
  const Range range = parse_range(range_text);
  std::size_t ok = 0, documented = 0, unexpected = 0, unchecked = 0,
              skipped = 0;
  for (std::uint64_t n = range.lo; n <= range.hi; ++n) {
    if (n < 2) continue;
    const zdp::Factorization f = zdp::factorize(n);
    const zdp::FamilyClass fc = zdp::classify_family(f);
    if (fc.tag == zdp::Family::EmptyGraph) continue;
    const std::string fam = zdp::family_name(fc);
    zdp::DomPolynomial compressed;
    try {
      compressed = zdp::dipoly_compressed(zdp::build_class_graph(n));
    } catch (const zdp::SizeCapError& e) {
      std::cout << "n=" << n << " family=" << fam << " SKIPPED (" << e.what()
                << ")\n";
      ++skipped;
      continue;
    }

    std::vector<std::string> checks;
    bool mismatch = false, is_documented = false;
    std::string detail;

    if (fc.tag != zdp::Family::General) {
      const zdp::AuditRecord rec = zdp::audit_family(f);
      checks.push_back("closed");
      if (!rec.match) {
        mismatch = true;
        detail = "closed-compressed=" + zdp::sparse_to_string(rec.difference);
        if (fc.tag == zdp::Family::PrimePowerEven &&
            rec.difference ==
                zdp::expected_even_power_difference(f.factors[0].prime, fc.m))
          is_documented = true;
      }
    }
    const auto cg = zdp::build_class_graph(n);
    if (cg.vertex_count() <= zdp::kDefaultBruteCap) {
      const auto brute = zdp::dipoly_bruteforce(zdp::expand_graph(cg));
      checks.push_back("brute");
      if (brute != compressed) {
        mismatch = true;
        is_documented = false;
        detail += std::string(detail.empty() ? "" : " ") +
                  "brute-compressed=" +
                  zdp::sparse_to_string(zdp::subtract_sparse(brute, compressed));
      }
    }

    std::string check_list;
    for (const auto& c : checks)
      check_list += (check_list.empty() ? "" : ",") + c;

    if (checks.empty()) {
      ++unchecked;
      std::cout << "n=" << n << " family=" << fam
                << " UNCHECKED (no closed form, too large for brute force)\n";
    } else if (!mismatch) {
      ++ok;
      std::cout << "n=" << n << " family=" << fam << " checks=" << check_list
                << " OK\n";
    } else if (is_documented) {
      ++documented;
      std::cout << "n=" << n << " family=" << fam << " MISMATCH " << detail
                << " (documented)\n";
    } else {
      ++unexpected;
      std::cout << "n=" << n << " family=" << fam << " MISMATCH " << detail
                << " (UNEXPECTED)\n";
    }
  }
  std::cout << "summary: " << ok << " ok, " << documented
            << " documented mismatches, " << unexpected
            << " unexpected mismatches, " << unchecked << " unchecked, "
            << skipped << " skipped\n";
  return unexpected == 0 ? 0 : kExitVerifyMismatch;
}

std::string scan_row(std::uint64_t n, bool with_roots) {
  const auto boolstr = [](bool b) { return b ? "true" : "false"; };
  // empty stat columns + quoted reason in the engine column
  const std::string blanks(with_roots ? 11 : 10, ',');
  std::string fam = "-";
  try {
    const zdp::Factorization f = zdp::factorize(n);
    const zdp::FamilyClass fc = zdp::classify_family(f);
    fam = zdp::family_name(fc);
    if (fc.tag == zdp::Family::EmptyGraph)
      return std::to_string(n) + "," + fam + blanks +
             "\"skipped: graph is empty\"";
    const auto poly = zdp::dipoly_compressed(zdp::build_class_graph(n));
    const auto [gamma_i, alpha] = zdp::gamma_i_alpha(poly);
    const zdp::PropertyReport r = zdp::analyze(poly);
    std::string row = std::to_string(n) + "," + fam + "," +
                      std::to_string(gamma_i) + "," + std::to_string(alpha) +
                      "," + poly.evaluate_at_one().str() + "," +
                      boolstr(r.unimodal) + "," + boolstr(r.logconcave) + "," +
                      boolstr(r.newton) + "," +
                      std::to_string(r.oscillation.eta) + "," +
                      std::to_string(r.oscillation.inc_runs) + "," +
                      std::to_string(r.oscillation.dec_runs);
    if (with_roots)
      row += "," +
             std::to_string(zdp::count_real_roots_exact(poly).distinct_real_exact);
    row += ",compressed";
    return row;
  } catch (const std::exception& e) {
    return std::to_string(n) + "," + fam + blanks + "\"skipped: " + e.what() +
           "\"";
  }
}

int run_scan(const std::string& range_text, const std::string& out_path,
             bool with_roots) {
  const Range range = parse_range(range_text);
  const std::uint64_t lo = std::max<std::uint64_t>(range.lo, 2);
  if (lo > range.hi)
    throw CLI::ValidationError("--range", "empty range after clamping to 2");
  const std::size_t count = range.hi - lo + 1;
  std::vector<std::string> rows(count);

  // fan out by n; the ordered merge below keeps output deterministic
  const std::size_t jobs = std::min<std::size_t>(
      std::max(1u, std::thread::hardware_concurrency()), 8);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      rows[i] = scan_row(lo + i, with_roots);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::string csv =
      "n,family,gamma_i,alpha,mis_count,unimodal,logconcave,newton,eta,"
      "inc_runs,dec_runs";
  if (with_roots) csv += ",distinct_real_exact";
  csv += ",engine\n";
  for (const auto& row : rows) csv += row + "\n";
  zdp::write_text_file(out_path, csv);
  std::cout << "wrote " << count << " rows to " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "independent domination polynomials of zero-divisor graphs of Z_n"};
  app.require_subcommand(1);

  std::uint64_t n = 0;
  std::string engine = "auto", format = "text";
  auto* dipoly = app.add_subcommand("dipoly", "compute D_i(Gamma(Z_n), x)");
  dipoly->add_option("n", n, "modulus n")->required();
  dipoly->add_option("--engine", engine, "auto|closed|compressed|brute")
      ->check(CLI::IsMember({"auto", "closed", "compressed", "brute"}));
  dipoly->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::uint64_t props_n = 0;
  std::string props_poly, props_format = "text";
  auto* props = app.add_subcommand("props", "shape verdicts for D_i");
  auto* props_n_opt = props->add_option("n", props_n, "modulus n");
  auto* props_file_opt =
      props->add_option("--poly", props_poly, "polynomial JSON file");
  props->add_option("--format", props_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  props_n_opt->excludes(props_file_opt);

  std::uint64_t roots_n = 0;
  std::string roots_poly, roots_csv_path, roots_svg_path;
  double tol = 1e-12;
  std::size_t max_iter = 1000;
  auto* roots = app.add_subcommand("roots", "numeric zeros + exact real-root count");
  auto* roots_n_opt = roots->add_option("n", roots_n, "modulus n");
  auto* roots_file_opt =
      roots->add_option("--poly", roots_poly, "polynomial JSON file");
  roots->add_option("--tol", tol, "update tolerance (default 1e-12)");
  roots->add_option("--max-iter", max_iter, "iteration cap (default 1000)");
  roots->add_option("--csv", roots_csv_path, "write re,im,residual CSV");
  roots->add_option("--svg", roots_svg_path, "write zero-scatter SVG");
  roots_n_opt->excludes(roots_file_opt);

  std::string verify_range;
  auto* verify = app.add_subcommand("verify", "cross-check engines and closed forms");
  verify->add_option("--range", verify_range, "A..B")->required();

  std::string scan_range, scan_out;
  bool scan_roots = false;
  auto* scan = app.add_subcommand("scan", "CSV table over a range of n");
  scan->add_option("--range", scan_range, "A..B")->required();
  scan->add_option("--out", scan_out, "output CSV path")->required();
  scan->add_flag("--roots", scan_roots, "add exact distinct-real-root column");

  try {
    app.parse(argc, argv);
    if (dipoly->parsed()) return run_dipoly(n, engine, format);
    if (props->parsed()) {
      if (props_poly.empty() && props_n_opt->count() == 0)
        throw CLI::ValidationError("props", "give n or --poly FILE");
      return run_props(props_n_opt->count() ? std::optional(props_n)
                                            : std::nullopt,
                       props_poly, props_format);
    }
    if (roots->parsed()) {
      if (roots_poly.empty() && roots_n_opt->count() == 0)
        throw CLI::ValidationError("roots", "give n or --poly FILE");
      return run_roots(roots_n_opt->count() ? std::optional(roots_n)
                                            : std::nullopt,
                       roots_poly, tol, max_iter, roots_csv_path,
                       roots_svg_path);
    }
    if (verify->parsed()) return run_verify(verify_range);
    if (scan->parsed()) return run_scan(scan_range, scan_out, scan_roots);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const zdp::EmptyGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEmptyGraph;
  } catch (const zdp::SizeCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
