#include "doctest.h"
#include "wsys/errors.hpp"
#include "wsys/graphs.hpp"

using namespace wsys;

namespace {

// Rank over GF(2) by elimination on an explicit 0/1 matrix.
std::uint32_t rank_oracle(std::vector<std::vector<int>> a) {
  const std::size_t n = a.size();
  std::uint32_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != rank && a[r][col]) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] ^= a[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

std::uint32_t corank_oracle(const Graph& g, std::uint64_t mask) {
  std::vector<std::uint32_t> vs;
  for (std::uint32_t v = 1; v <= g.size(); ++v) {
    if ((mask >> (v - 1)) & 1u) vs.push_back(v);
  }
  std::vector<std::vector<int>> a(vs.size(), std::vector<int>(vs.size(), 0));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) a[i][j] = g.adjacent(vs[i], vs[j]);
  }
  return static_cast<std::uint32_t>(vs.size()) - rank_oracle(a);
}

}  // namespace

TEST_CASE("GF(2) corank") {
  CHECK(gf2_corank(GF2Matrix(0, 0, {})) == 0);
  CHECK(gf2_corank(Graph::complete(3).adjacency()) == 1);
  CHECK(gf2_corank(Graph::complete(2).adjacency()) == 0);
  CHECK_THROWS_AS(gf2_corank(GF2Matrix(2, 3, {0, 0})), DomainError);
  CHECK(!is_nondegenerate(Graph(1)));
  CHECK(is_nondegenerate(Graph::complete(2)));
  CHECK(!is_nondegenerate(Graph::complete(3)));
  CHECK(is_nondegenerate(Graph(0)));

  for (std::uint32_t n = 0; n <= 6; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
        const auto c = g.corank_on(u);
        CHECK(c == corank_oracle(g, u));
        CHECK(c == gf2_corank(induced_subgraph(g, u).adjacency()));
      }
    }
  }
}

TEST_CASE("induced subgraphs") {
  const Graph k3 = Graph::complete(3);
  CHECK(induced_subgraph(k3, 0b111) == k3);
  CHECK(induced_subgraph(k3, 0b011) == Graph::complete(2));
  CHECK(induced_subgraph(Graph::path(3), 0b101) == Graph(2));
  CHECK(remove_vertex(k3, 2) == Graph::complete(2));
  CHECK(disjoint_union(Graph::complete(2), Graph(1)).edge_count() == 1);
}

TEST_CASE("text form") {
  const Graph k3 = parse_graph("n=3; edges=1-2,1-3,2-3");
  CHECK(k3 == Graph::complete(3));
  CHECK(parse_graph("n=2; edges=") == Graph(2));
  CHECK(format_graph(parse_graph("n=3; edges=2-3,2-1")) == "n=3; edges=1-2,2-3");
  CHECK(format_graph(Graph(2)) == "n=2; edges=");
  CHECK_THROWS_AS(parse_graph("n=3; edges=1-4"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3; edges=1-1"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=3; edges=1-2,2-1"), ParseError);
  CHECK_THROWS_AS(parse_graph("edges=1-2"), ParseError);
  for (const auto& g : all_graphs(4)) CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("pivot") {
  CHECK_THROWS_AS(graph_pivot(Graph(2), 1, 2), DomainError);
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (const auto& [a, b] : g.edges()) {
        const Graph p = graph_pivot(g, a, b);
        CHECK(graph_pivot(p, a, b) == g);
        // Class-by-class definition, written out.
        for (std::uint32_t v = 1; v <= n; ++v) {
          for (std::uint32_t w = v + 1; w <= n; ++w) {
            auto cls = [&](std::uint32_t x) {
              if (x == a || x == b) return 0;
              const bool na = g.adjacent(x, a), nb = g.adjacent(x, b);
              return na && nb ? 1 : na ? 2 : nb ? 3 : 4;
            };
            const int cv = cls(v), cw = cls(w);
            const bool toggle = cv >= 1 && cv <= 3 && cw >= 1 && cw <= 3 && cv != cw;
            CHECK(p.adjacent(v, w) == (g.adjacent(v, w) != toggle));
          }
        }
      }
    }
  }
}

TEST_CASE("4-term images") {
  const Graph p3 = Graph::path(3);
  // Vertex 1 has no neighbours other than 2.
  CHECK(four_term_images(p3, 2, 1).rewired == p3);
  CHECK_THROWS_AS(four_term_images(p3, 1, 1), DomainError);
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (std::uint32_t a = 1; a <= n; ++a) {
        for (std::uint32_t b = 1; b <= n; ++b) {
          if (a == b) continue;
          const auto img = four_term_images(g, a, b);
          Graph t = g;
          t.toggle_edge(a, b);
          CHECK(img.toggled == t);
          CHECK(four_term_images(img.toggled, a, b).rewired == img.rewired_toggled);
          CHECK(four_term_images(img.rewired, a, b).rewired == g);
        }
      }
    }
  }
}
