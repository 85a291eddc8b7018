#include "zdp/engines.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "zdp/errors.hpp"

namespace zdp {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

struct MisCounter {
  const std::vector<Mask>& conbr;  // complement neighborhoods, self excluded
  DomPolynomial poly;

  // Bron-Kerbosch with pivoting on the complement graph: maximal cliques of
  // the complement are exactly the maximal independent sets.
  void run(std::size_t depth, Mask candidates, Mask excluded) {
    if (candidates == 0 && excluded == 0) {
      poly.add_term(1, depth);
      return;
    }
    Mask pool = candidates | excluded;
    std::size_t pivot = 0;
    int best = -1;
    for (Mask m = pool; m;) {
      const std::size_t u = std::countr_zero(m);
      m &= m - 1;
      const int cover = std::popcount(candidates & conbr[u]);
      if (cover > best) {
        best = cover;
        pivot = u;
      }
    }
    Mask ext = candidates & ~conbr[pivot];
    while (ext) {
      const std::size_t v = std::countr_zero(ext);
      ext &= ext - 1;
      run(depth + 1, candidates & conbr[v], excluded & conbr[v]);
      candidates &= ~bit(v);
      excluded |= bit(v);
    }
  }
};

std::vector<Mask> adjacency_masks(const ExplicitGraph& g) {
  const std::size_t v = g.size();
  std::vector<Mask> adj(v, 0);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (g.adjacent(i, j)) adj[i] |= bit(j);
  return adj;
}

}  // namespace

DomPolynomial dipoly_bruteforce(const ExplicitGraph& g,
                                std::size_t vertex_cap) {
  const std::size_t v = g.size();
  if (v == 0)
    throw EmptyGraphError("dipoly_bruteforce: graph has no vertices");
  if (v > vertex_cap || v > 64)
    throw SizeCapError("brute-force vertex cap " + std::to_string(vertex_cap) +
                       " exceeded: " + std::to_string(v) + " vertices");
  const auto adj = adjacency_masks(g);
  const Mask full = v == 64 ? ~Mask{0} : bit(v) - 1;
  std::vector<Mask> conbr(v);
  for (std::size_t i = 0; i < v; ++i) conbr[i] = full & ~adj[i] & ~bit(i);
  MisCounter counter{conbr, {}};
  counter.run(0, full, 0);
  return std::move(counter.poly);
}

DomPolynomial dipoly_compressed(const ClassGraph& cg) {
  const std::size_t t = cg.size();
  if (t == 0)
    throw EmptyGraphError("dipoly_compressed: no divisor classes");
  if (t > kMaxClasses)
    throw SizeCapError("class cap " + std::to_string(kMaxClasses) +
                       " exceeded: " + std::to_string(t) + " classes");
  std::vector<Mask> nbr(t, 0);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      if (cg.adjacent(i, j)) nbr[i] |= bit(j);

  DomPolynomial poly;
  // Depth-first over class indices. A chosen clique class contributes one
  // vertex (factor size * x); a chosen null class must be taken whole
  // (factor x^size), otherwise its leftover vertices could not be dominated
  // by the pairwise non-adjacent support.
  struct Rec {
    const ClassGraph& cg;
    const std::vector<Mask>& nbr;
    DomPolynomial& poly;
    std::size_t t;

    void go(std::size_t k, Mask chosen, Mask blocked, Mask pending,
            std::uint64_t exponent, const BigInt& coeff) {
      if (k == t) {
        if (pending == 0) poly.add_term(coeff, exponent);
        return;
      }
      const Mask future = ~(bit(k) - 1);
      const Mask candidates = future & ~blocked;
      // every pending class still needs a potential dominator ahead
      for (Mask m = pending; m;) {
        const std::size_t c = std::countr_zero(m);
        m &= m - 1;
        if ((nbr[c] & candidates) == 0) return;
      }
      if ((blocked & bit(k)) == 0) {
        const auto& dc = cg.classes[k];
        const std::uint64_t add = dc.is_clique ? 1 : dc.size;
        const BigInt mul = dc.is_clique ? BigInt(dc.size) : BigInt(1);
        go(k + 1, chosen | bit(k), blocked | nbr[k], pending & ~nbr[k],
           exponent + add, coeff * mul);
      }
      const Mask still = (nbr[k] & chosen) ? Mask{0} : bit(k);
      go(k + 1, chosen, blocked, pending | still, exponent, coeff);
    }
  };
  Rec rec{cg, nbr, poly, t};
  rec.go(0, 0, 0, 0, 0, 1);
  return poly;
}

std::pair<std::size_t, std::size_t> gamma_i_alpha(const DomPolynomial& p) {
  if (p.is_zero())
    throw EmptyGraphError("gamma_i_alpha: zero polynomial (empty graph)");
  return {p.lowest_exponent(), p.degree()};
}

namespace {

bool dominates_within(const std::vector<Mask>& closed, Mask undominated,
                      std::size_t budget) {
  if (undominated == 0) return true;
  if (budget == 0) return false;
  std::size_t best_cover = 0;
  for (const Mask cn : closed)
    best_cover = std::max<std::size_t>(best_cover,
                                       std::popcount(cn & undominated));
  if (best_cover * budget < static_cast<std::size_t>(std::popcount(undominated)))
    return false;
  // some dominator must come from the closed neighborhood of any
  // undominated vertex; branch on the first one
  const std::size_t u = std::countr_zero(undominated);
  for (Mask m = closed[u]; m;) {
    const std::size_t w = std::countr_zero(m);
    m &= m - 1;
    if (dominates_within(closed, undominated & ~closed[w], budget - 1))
      return true;
  }
  return false;
}

}  // namespace

std::size_t domination_number(const ExplicitGraph& g, std::size_t vertex_cap) {
  const std::size_t v = g.size();
  if (v == 0)
    throw EmptyGraphError("domination_number: graph has no vertices");
  if (v > vertex_cap || v > 64)
    throw SizeCapError("domination vertex cap " + std::to_string(vertex_cap) +
                       " exceeded: " + std::to_string(v) + " vertices");
  const auto adj = adjacency_masks(g);
  std::vector<Mask> closed(v);
  for (std::size_t i = 0; i < v; ++i) closed[i] = adj[i] | bit(i);
  const Mask full = v == 64 ? ~Mask{0} : bit(v) - 1;
  for (std::size_t k = 1;; ++k)
    if (dominates_within(closed, full, k)) return k;
}

}  // namespace zdp
