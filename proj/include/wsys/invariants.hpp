#pragma once

// Interlace and skew-characteristic polynomials of graphs and delta-matroids,
// convolution of graph invariants, and the graph 4-term check.

#include <functional>
#include <map>
#include <string>

#include "wsys/algebra.hpp"
#include "wsys/dmat.hpp"
#include "wsys/graphs.hpp"

namespace wsys {

/// A named graph invariant with values in Poly.
struct GraphInvariant {
  std::string name;
  std::function<Poly(const Graph&)> eval;

  Poly operator()(const Graph& g) const { return eval(g); }
};

/// Q_G(u) = sum over nondegenerate U of u^(|V| - |U|).
Poly skew_char(const Graph& g);
/// sum over U of u^(|V| - |U|) w^corank(A_U).
Poly refined_skew_char_graph(const Graph& g);
/// sum over U of u^(|E| - |U|) w^d(U).
Poly refined_skew_char_dmat(const DMat& d);
/// L_D(x) = sum over U of x^d(U).
Poly interlace_dmat(const DMat& d);
Poly interlace_graph(const Graph& g);

enum class EdgePolicy { kFirst, kRandom };

/// L_G(x) = L_{G - a}(x) + L_{G^ab - b}(x), with L = (x+1)^n on edgeless
/// graphs. kFirst picks the lexicographically first edge; kRandom draws an
/// edge from a generator seeded by `seed`.
Poly interlace_graph_recursive(const Graph& g, EdgePolicy policy = EdgePolicy::kFirst,
                               unsigned seed = 0);

/// sum over U of x^|U| y^d(U).
Poly two_var_interlace(const DMat& d);

/// Replaces x by x - 1 (the normalization with base case x^n).
Poly shift_interlace(const Poly& l);

/// sum over U of f(G|_U) g(G|_(V - U)).
Poly convolution(const GraphInvariant& f, const GraphInvariant& g, const Graph& graph);

/// f(G) - f(G'_ab) == f(G~_ab) - f(G~'_ab).
bool graph_4t_check(const GraphInvariant& f, const Graph& g, std::uint32_t a, std::uint32_t b);

namespace invariant {

GraphInvariant skew_char();
GraphInvariant refined_skew_char();
GraphInvariant interlace();
/// 1 on nondegenerate graphs, 0 otherwise.
GraphInvariant nondegeneracy();
/// u^|V|.
GraphInvariant vertex_power(Var u);
/// N^corank(A_G).
GraphInvariant corank_power(Var n);
/// 1 on the empty graph, 0 otherwise.
GraphInvariant unit();

}  // namespace invariant

}  // namespace wsys
