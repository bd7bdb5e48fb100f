#include "wsys/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "wsys/errors.hpp"

namespace wsys {

GF2Matrix::GF2Matrix(std::uint32_t rows, std::uint32_t cols, std::vector<std::uint64_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (bits_.size() != rows_) throw DomainError("GF2Matrix: row count mismatch");
  if (cols_ > 64) throw DomainError("GF2Matrix: more than 64 columns");
}

std::uint32_t GF2Matrix::rank() const {
  std::vector<std::uint64_t> rows = bits_;
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < cols_ && rank < rows_; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::uint32_t pivot = rank;
    while (pivot < rows_ && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows_) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::uint32_t r = 0; r < rows_; ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

std::uint32_t gf2_corank(const GF2Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("corank of a non-square matrix");
  return m.rows() - m.rank();
}

Graph::Graph(std::uint32_t n) : n_(n), adj_(n, 0) {
  if (n > 64) throw DomainError("graphs are limited to 64 vertices");
}

Graph Graph::complete(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t a = 1; a <= n; ++a)
    for (std::uint32_t b = a + 1; b <= n; ++b) g.set_edge(a, b, true);
  return g;
}

Graph Graph::path(std::uint32_t n) {
  Graph g(n);
  for (std::uint32_t a = 1; a < n; ++a) g.set_edge(a, a + 1, true);
  return g;
}

Graph Graph::cycle(std::uint32_t n) {
  Graph g = path(n);
  if (n >= 3) g.set_edge(1, n, true);
  return g;
}

void Graph::set_edge(std::uint32_t a, std::uint32_t b, bool present) {
  if (a == b) throw DomainError("loops are not allowed");
  const std::uint64_t ba = std::uint64_t{1} << (b - 1);
  const std::uint64_t ab = std::uint64_t{1} << (a - 1);
  if (present) {
    adj_[a - 1] |= ba;
    adj_[b - 1] |= ab;
  } else {
    adj_[a - 1] &= ~ba;
    adj_[b - 1] &= ~ab;
  }
}

void Graph::toggle_edge(std::uint32_t a, std::uint32_t b) { set_edge(a, b, !adjacent(a, b)); }

std::uint32_t Graph::edge_count() const {
  std::uint32_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::uint32_t>(std::popcount(row));
  return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t a = 1; a <= n_; ++a)
    for (std::uint32_t b = a + 1; b <= n_; ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

GF2Matrix Graph::adjacency() const { return GF2Matrix(n_, n_, adj_); }

std::uint32_t Graph::corank_on(std::uint64_t mask) const {
  // Eliminate on the restricted rows; columns outside the mask are masked off.
  std::vector<std::uint64_t> rows;
  rows.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (std::uint64_t m = mask; m; m &= m - 1) rows.push_back(adj_[std::countr_zero(m)] & mask);
  std::uint32_t rank = 0;
  const auto nrows = static_cast<std::uint32_t>(rows.size());
  for (std::uint64_t m = mask; m && rank < nrows; m &= m - 1) {
    const std::uint64_t bit = m & -m;
    std::uint32_t pivot = rank;
    while (pivot < nrows && !(rows[pivot] & bit)) ++pivot;
    if (pivot == nrows) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::uint32_t r = 0; r < nrows; ++r)
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return nrows - rank;
}

bool is_nondegenerate(const Graph& g) { return gf2_corank(g.adjacency()) == 0; }

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
  std::vector<std::uint32_t> keep;
  for (std::uint32_t v = 1; v <= g.size(); ++v)
    if ((mask >> (v - 1)) & 1u) keep.push_back(v);
  Graph out(static_cast<std::uint32_t>(keep.size()));
  for (std::uint32_t i = 0; i < keep.size(); ++i)
    for (std::uint32_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.set_edge(i + 1, j + 1, true);
  return out;
}

Graph remove_vertex(const Graph& g, std::uint32_t a) {
  const std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
  return induced_subgraph(g, all & ~(std::uint64_t{1} << (a - 1)));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.size() + b.size());
  for (auto [x, y] : a.edges()) out.set_edge(x, y, true);
  for (auto [x, y] : b.edges()) out.set_edge(x + a.size(), y + a.size(), true);
  return out;
}

Graph swap_vertices(const Graph& g, std::uint32_t a, std::uint32_t b) {
  auto s = [&](std::uint32_t v) { return v == a ? b : (v == b ? a : v); };
  Graph out(g.size());
  for (const auto& [u, v] : g.edges()) out.set_edge(s(u), s(v), true);
  return out;
}

Graph graph_pivot(const Graph& g, std::uint32_t a, std::uint32_t b) {
  if (a == b || !g.adjacent(a, b)) {
    throw DomainError("pivot requires an edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  // Class of each other vertex: 1 both, 2 only a, 3 only b, 4 neither.
  auto cls = [&](std::uint32_t v) {
    const bool na = g.adjacent(v, a);
    const bool nb = g.adjacent(v, b);
    if (na && nb) return 1;
    if (na) return 2;
    if (nb) return 3;
    return 4;
  };
  Graph out = g;
  for (std::uint32_t v = 1; v <= g.size(); ++v) {
    if (v == a || v == b) continue;
    for (std::uint32_t t = v + 1; t <= g.size(); ++t) {
      if (t == a || t == b) continue;
      const int cv = cls(v);
      const int ct = cls(t);
      if (cv != 4 && ct != 4 && cv != ct) out.toggle_edge(v, t);
    }
  }
  return out;
}

FourTermImages four_term_images(const Graph& g, std::uint32_t a, std::uint32_t b) {
  if (a == b) throw DomainError("4-term relation needs two distinct vertices");
  FourTermImages out;
  out.toggled = g;
  out.toggled.toggle_edge(a, b);
  out.rewired = g;
  for (std::uint32_t v = 1; v <= g.size(); ++v) {
    if (v != a && v != b && g.adjacent(v, b)) out.rewired.toggle_edge(a, v);
  }
  out.rewired_toggled = out.rewired;
  out.rewired_toggled.toggle_edge(a, b);
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::uint32_t parse_uint(const std::string& s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      })) {
    throw ParseError(std::string("expected a number for ") + what + ", got '" + s + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("graph text needs 'n=..; edges=..'");
  std::string head = trim(text.substr(0, semi));
  std::string tail = trim(text.substr(semi + 1));
  if (head.rfind("n=", 0) != 0) throw ParseError("graph text must start with 'n='");
  if (tail.rfind("edges=", 0) != 0) throw ParseError("graph text needs 'edges='");
  const std::uint32_t n = parse_uint(trim(head.substr(2)), "n");
  if (n > 64) throw ParseError("graphs are limited to 64 vertices");
  Graph g(n);
  std::string list = trim(tail.substr(6));
  if (list.empty()) return g;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("edge '" + item + "' is not of the form a-b");
    const auto a = parse_uint(trim(item.substr(0, dash)), "edge endpoint");
    const auto b = parse_uint(trim(item.substr(dash + 1)), "edge endpoint");
    if (a < 1 || b < 1 || a > n || b > n) throw ParseError("edge '" + item + "' out of range");
    if (a == b) throw ParseError("loop at vertex " + std::to_string(a));
    if (g.adjacent(a, b)) throw ParseError("duplicate edge '" + item + "'");
    g.set_edge(a, b, true);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = "n=" + std::to_string(g.size()) + "; edges=";
  bool first = true;
  for (auto [a, b] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

std::vector<Graph> all_graphs(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t a = 1; a <= n; ++a)
    for (std::uint32_t b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
  if (slots.size() > 24) throw DomainError("too many graphs to enumerate");
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << slots.size());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((bits >> i) & 1u) g.set_edge(slots[i].first, slots[i].second, true);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace wsys
