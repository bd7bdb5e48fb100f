#pragma once

// Simple graphs on vertices 1..n (n <= 64) with bitset adjacency rows, and
// the GF(2) linear algebra behind nondegeneracy and corank.

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace wsys {

/// Rows of bits over GF(2); row i is a word whose bit j is entry (i, j).
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::uint32_t rows, std::uint32_t cols, std::vector<std::uint64_t> bits);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  const std::vector<std::uint64_t>& bits() const { return bits_; }
  bool at(std::uint32_t i, std::uint32_t j) const { return (bits_[i] >> j) & 1u; }

  std::uint32_t rank() const;

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// dim - rank. Throws DomainError on a non-square matrix.
std::uint32_t gf2_corank(const GF2Matrix& m);

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::uint32_t n);
  static Graph complete(std::uint32_t n);
  static Graph path(std::uint32_t n);
  static Graph cycle(std::uint32_t n);

  std::uint32_t size() const { return n_; }
  /// 1-based vertex labels.
  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    return (adj_[a - 1] >> (b - 1)) & 1u;
  }
  void set_edge(std::uint32_t a, std::uint32_t b, bool present);
  void toggle_edge(std::uint32_t a, std::uint32_t b);
  /// Neighbourhood of vertex a as a 0-based bitmask.
  std::uint64_t neighbours(std::uint32_t a) const { return adj_[a - 1]; }
  std::uint32_t edge_count() const;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

  GF2Matrix adjacency() const;
  /// Corank of the adjacency matrix of the subgraph induced on `mask`
  /// (0-based bits), without materializing the subgraph.
  std::uint32_t corank_on(std::uint64_t mask) const;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend bool operator<(const Graph& a, const Graph& b) {
    return std::tie(a.n_, a.adj_) < std::tie(b.n_, b.adj_);
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> adj_;
};

bool is_nondegenerate(const Graph& g);

/// G|_U for U a 0-based bitmask; vertices relabelled 1..|U| in order.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);
/// G minus vertex a (1-based).
Graph remove_vertex(const Graph& g, std::uint32_t a);
Graph disjoint_union(const Graph& a, const Graph& b);

/// G with the labels a and b exchanged.
Graph swap_vertices(const Graph& g, std::uint32_t a, std::uint32_t b);

/// Pivot on the edge ab. Throws DomainError if ab is not an edge.
Graph graph_pivot(const Graph& g, std::uint32_t a, std::uint32_t b);

struct FourTermImages {
  Graph toggled;        // G'_ab
  Graph rewired;        // G~_ab
  Graph rewired_toggled;  // G~'_ab
};

/// Images of the graph 4-term relation. Throws DomainError if a == b.
FourTermImages four_term_images(const Graph& g, std::uint32_t a, std::uint32_t b);

/// "n=3; edges=1-2,1-3,2-3".
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// All labelled graphs on n vertices (2^(n choose 2) of them).
std::vector<Graph> all_graphs(std::uint32_t n);

}  // namespace wsys
