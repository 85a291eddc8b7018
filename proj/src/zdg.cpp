#include "zdp/zdg.hpp"

#include <numeric>
#include <sstream>

#include "zdp/errors.hpp"
#include "zdp/numtheory.hpp"

namespace zdp {

std::uint64_t ClassGraph::vertex_count() const {
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.size;
  return total;
}

ClassGraph build_class_graph(std::uint64_t n) {
  const Factorization f = factorize(n);
  if (f.factors.size() == 1 && f.factors[0].exponent == 1)
    throw EmptyGraphError("graph is empty: " + std::to_string(n) +
                          " is prime, Z_n has no zero divisors");
  ClassGraph cg;
  cg.n = n;
  const auto divisors = proper_divisors(f);
  cg.classes.reserve(divisors.size());
  for (std::uint64_t e : divisors) {
    DivisorClass dc;
    dc.divisor = e;
    dc.size = euler_phi(n / e);
    dc.is_clique = (static_cast<unsigned __int128>(e) * e % n) == 0;
    cg.classes.push_back(dc);
  }
  const std::size_t t = cg.classes.size();
  cg.adjacency = BitMatrix(t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      const auto prod = static_cast<unsigned __int128>(cg.classes[i].divisor) *
                        cg.classes[j].divisor;
      if (prod % n == 0) cg.adjacency.set_edge(i, j);
    }
  }
  return cg;
}

ExplicitGraph expand_graph(const ClassGraph& cg, std::uint64_t vertex_cap) {
  const std::uint64_t total = cg.vertex_count();
  if (total > vertex_cap)
    throw SizeCapError("vertex cap " + std::to_string(vertex_cap) +
                       " exceeded: Gamma(Z_" + std::to_string(cg.n) + ") has " +
                       std::to_string(total) + " vertices");
  ExplicitGraph g;
  g.n = cg.n;
  g.vertices.reserve(total);
  g.class_index.reserve(total);
  for (std::uint64_t u = 2; u < cg.n; ++u) {
    const std::uint64_t e = std::gcd(u, cg.n);
    if (e == 1) continue;
    // classes are sorted by divisor
    std::size_t lo = 0, hi = cg.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cg.classes[mid].divisor < e)
        lo = mid + 1;
      else
        hi = mid;
    }
    g.vertices.push_back(u);
    g.class_index.push_back(lo);
  }
  const std::size_t v = g.vertices.size();
  g.adjacency = BitMatrix(v);
  for (std::size_t i = 0; i < v; ++i) {
    const std::size_t ci = g.class_index[i];
    for (std::size_t j = i + 1; j < v; ++j) {
      const std::size_t cj = g.class_index[j];
      const bool edge =
          ci == cj ? cg.classes[ci].is_clique : cg.adjacent(ci, cj);
      if (edge) g.adjacency.set_edge(i, j);
    }
  }
  return g;
}

std::string to_dot(const ClassGraph& cg) {
  std::ostringstream out;
  out << "graph class_graph_" << cg.n << " {\n";
  for (const auto& c : cg.classes) {
    out << "  d" << c.divisor << " [label=\"A" << c.divisor
        << " size=" << c.size << (c.is_clique ? " clique" : " null")
        << "\"];\n";
  }
  for (std::size_t i = 0; i < cg.size(); ++i)
    for (std::size_t j = i + 1; j < cg.size(); ++j)
      if (cg.adjacent(i, j))
        out << "  d" << cg.classes[i].divisor << " -- d"
            << cg.classes[j].divisor << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const ExplicitGraph& g) {
  std::ostringstream out;
  out << "graph zdg_" << g.n << " {\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j))
        out << "  v" << g.vertices[i] << " -- v" << g.vertices[j] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zdp
