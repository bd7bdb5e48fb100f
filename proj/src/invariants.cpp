#include "wsys/invariants.hpp"

#include <bit>
#include <mutex>
#include <random>
#include <vector>

#include "wsys/errors.hpp"

namespace wsys {

namespace {

std::uint64_t all_vertices(const Graph& g) {
  return g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
}

void require_enumerable(std::uint32_t n) {
  if (n > 24) throw DomainError("subset sums are limited to 24 elements");
}

}  // namespace

Poly skew_char(const Graph& g) {
  require_enumerable(g.size());
  Poly out;
  for (std::uint64_t u = 0; u <= all_vertices(g); ++u) {
    if (g.corank_on(u) != 0) continue;
    out.add_term(Monomial(Var::u(), g.size() - static_cast<std::uint32_t>(std::popcount(u))), 1);
  }
  return out;
}

Poly refined_skew_char_graph(const Graph& g) {
  require_enumerable(g.size());
  Poly out;
  for (std::uint64_t u = 0; u <= all_vertices(g); ++u) {
    const auto rest = g.size() - static_cast<std::uint32_t>(std::popcount(u));
    out.add_term(Monomial{{Var::u(), rest}, {Var::w(), g.corank_on(u)}}, 1);
  }
  return out;
}

Poly refined_skew_char_dmat(const DMat& d) {
  Poly out;
  for (Subset u = 0; u <= d.full(); ++u) {
    const auto rest = d.ground_size() - static_cast<std::uint32_t>(std::popcount(u));
    out.add_term(Monomial{{Var::u(), rest}, {Var::w(), distance(d, u)}}, 1);
  }
  return out;
}

Poly interlace_dmat(const DMat& d) {
  Poly out;
  for (Subset u = 0; u <= d.full(); ++u) out.add_term(Monomial(Var::x(), distance(d, u)), 1);
  return out;
}

Poly interlace_graph(const Graph& g) { return interlace_dmat(dmat_from_graph(g)); }

namespace {

class InterlaceRecursion {
 public:
  InterlaceRecursion(EdgePolicy policy, unsigned seed) : policy_(policy), rng_(seed) {}

  Poly run(const Graph& g) {
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    const auto edges = g.edges();
    Poly value;
    if (edges.empty()) {
      value = (Poly(Var::x()) + Poly(1)).pow(g.size());
    } else {
      std::pair<std::uint32_t, std::uint32_t> e = edges.front();
      if (policy_ == EdgePolicy::kRandom) {
        e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng_)];
        if (rng_() & 1u) std::swap(e.first, e.second);
      }
      const auto [a, b] = e;
      value = run(remove_vertex(g, a)) + run(remove_vertex(graph_pivot(g, a, b), b));
    }
    memo_.emplace(g, value);
    return value;
  }

 private:
  EdgePolicy policy_;
  std::mt19937 rng_;
  std::map<Graph, Poly> memo_;
};

}  // namespace

Poly interlace_graph_recursive(const Graph& g, EdgePolicy policy, unsigned seed) {
  return InterlaceRecursion(policy, seed).run(g);
}

Poly two_var_interlace(const DMat& d) {
  Poly out;
  for (Subset u = 0; u <= d.full(); ++u) {
    out.add_term(Monomial{{Var::x(), static_cast<std::uint32_t>(std::popcount(u))},
                          {Var::y(), distance(d, u)}},
                 1);
  }
  return out;
}

Poly shift_interlace(const Poly& l) {
  return subst(l, {{Var::x(), Poly(Var::x()) - Poly(1)}});
}

Poly convolution(const GraphInvariant& f, const GraphInvariant& g, const Graph& graph) {
  require_enumerable(graph.size());
  const auto all = all_vertices(graph);
  Poly out;
  for (std::uint64_t u = 0; u <= all; ++u) {
    Poly left = f(induced_subgraph(graph, u));
    if (left.is_zero()) continue;
    out += left * g(induced_subgraph(graph, all & ~u));
  }
  return out;
}

bool graph_4t_check(const GraphInvariant& f, const Graph& g, std::uint32_t a, std::uint32_t b) {
  const auto img = four_term_images(g, a, b);
  return f(g) - f(img.toggled) == f(img.rewired) - f(img.rewired_toggled);
}

namespace invariant {

GraphInvariant skew_char() { return {"skew_char", [](const Graph& g) { return wsys::skew_char(g); }}; }

GraphInvariant refined_skew_char() {
  return {"refined_skew_char", [](const Graph& g) { return refined_skew_char_graph(g); }};
}

GraphInvariant interlace() {
  return {"interlace", [](const Graph& g) { return interlace_graph_recursive(g); }};
}

GraphInvariant nondegeneracy() {
  return {"nondegeneracy", [](const Graph& g) { return Poly(is_nondegenerate(g) ? 1 : 0); }};
}

GraphInvariant vertex_power(Var u) {
  return {"vertex_power", [u](const Graph& g) { return Poly::var(u, g.size()); }};
}

GraphInvariant corank_power(Var n) {
  return {"corank_power", [n](const Graph& g) { return Poly::var(n, gf2_corank(g.adjacency())); }};
}

GraphInvariant unit() {
  return {"unit", [](const Graph& g) { return Poly(g.size() == 0 ? 1 : 0); }};
}

}  // namespace invariant

}  // namespace wsys
