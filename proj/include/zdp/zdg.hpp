#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zdp {

/// Symmetric adjacency bits, flat 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n)
      : n_(n), stride_((n + 63) / 64), words_(n * stride_, 0) {}

  void set_edge(std::size_t i, std::size_t j) {
    words_[i * stride_ + j / 64] |= 1ULL << (j % 64);
    words_[j * stride_ + i / 64] |= 1ULL << (i % 64);
  }
  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * stride_ + j / 64] >> (j % 64)) & 1ULL;
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DivisorClass {
  std::uint64_t divisor = 0;  // e with 1 < e < n, e | n
  std::uint64_t size = 0;     // phi(n / e) residues u with gcd(u, n) = e
  bool is_clique = false;     // n | e^2
};

/// Divisor-class quotient of Gamma(Z_n): one node per proper divisor e of n,
/// classes adjacent iff n | e_i * e_j. Gamma(Z_n) is its blow-up by
/// clique/null classes.
struct ClassGraph {
  std::uint64_t n = 0;
  std::vector<DivisorClass> classes;  // ascending divisor
  BitMatrix adjacency;                // diagonal unused

  std::size_t size() const { return classes.size(); }
  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && adjacency.get(i, j);
  }
  std::uint64_t vertex_count() const;  // sum of class sizes = n - phi(n) - 1
};

/// Vertex-level graph: residues u with 0 < u < n and gcd(u, n) > 1,
/// ascending; u ~ v iff u != v and u * v = 0 (mod n).
struct ExplicitGraph {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> vertices;
  std::vector<std::size_t> class_index;  // per vertex, into the ClassGraph
  BitMatrix adjacency;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const {
    return i != j && adjacency.get(i, j);
  }
};

inline constexpr std::uint64_t kDefaultVertexCap = 5000;

/// Throws EmptyGraphError when n is prime (no zero divisors), RangeError for
/// n < 2 or n > 10^12.
ClassGraph build_class_graph(std::uint64_t n);

/// Blow-up of the class quotient. Throws SizeCapError when the vertex count
/// exceeds the cap.
ExplicitGraph expand_graph(const ClassGraph& cg,
                           std::uint64_t vertex_cap = kDefaultVertexCap);

/// DOT text for debugging, one edge per line.
std::string to_dot(const ClassGraph& cg);
std::string to_dot(const ExplicitGraph& g);

}  // namespace zdp
