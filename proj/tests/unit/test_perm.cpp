#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "wsys/errors.hpp"
#include "wsys/graphs.hpp"
#include "wsys/perm.hpp"

using namespace wsys;

namespace {

// Faces by walking i -> sigma(alpha^-1(i)) directly on the image vector.
std::uint32_t faces_oracle(const Perm& p) {
  const auto m = p.size();
  if (m == 0) return 1;
  std::vector<std::uint32_t> inv(m + 1);
  for (std::uint32_t i = 1; i <= m; ++i) inv[p(i)] = i;
  std::vector<bool> seen(m + 1, false);
  std::uint32_t cycles = 0;
  for (std::uint32_t s = 1; s <= m; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::uint32_t i = s; !seen[i]; i = inv[i] % m + 1) seen[i] = true;
  }
  return cycles;
}

bool interlaced(std::uint32_t a1, std::uint32_t a2, std::uint32_t b1, std::uint32_t b2) {
  if (a1 > a2) std::swap(a1, a2);
  const bool b1_in = a1 < b1 && b1 < a2;
  const bool b2_in = a1 < b2 && b2 < a2;
  return b1_in != b2_in;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::uint32_t> sigma(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) sigma[i] = i + 1;
  do {
    bool same = true;
    for (const auto& [u, v] : a.edges()) same = same && b.adjacent(sigma[u - 1], sigma[v - 1]);
    if (same) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace

TEST_CASE("parsing and formatting") {
  CHECK(parse_perm("(1 3 2)", 3).images() == std::vector<std::uint32_t>{3, 1, 2});
  CHECK(parse_perm("(1,3,2)").images() == std::vector<std::uint32_t>{3, 1, 2});
  CHECK(parse_perm("(1 2)(3)", 3).images() == std::vector<std::uint32_t>{2, 1, 3});
  CHECK(parse_perm("(1 2)", 4).images() == std::vector<std::uint32_t>{2, 1, 3, 4});
  CHECK(format_perm(parse_perm("3,5,6,7,2,8,4,9,1")) == "3,5,6,7,2,8,4,9,1");
  CHECK(parse_perm("").size() == 0);
  CHECK(format_cycles(parse_perm("3,1,2")) == "(1 3 2)");
  CHECK(format_cycles(Perm::identity(3)) == "()");
  CHECK_THROWS_AS(parse_perm("1,1,2"), ParseError);
  CHECK_THROWS_AS(parse_perm("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_perm("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_perm("(1 5)", 3), ParseError);
  CHECK_THROWS_AS(parse_perm("1,x"), ParseError);
  for (const auto& p : all_perms(4)) {
    CHECK(parse_perm(format_perm(p)) == p);
    CHECK(parse_perm(format_cycles(p), p.size()) == p);
  }
}

TEST_CASE("cycles and faces") {
  CHECK(cycle_count(Perm::identity(3)) == 3);
  CHECK(cycle_count(parse_perm("(1 3)(2 4)")) == 2);
  CHECK(cycle_count(parse_perm("(1 3 2)")) == 1);
  CHECK(cycle_count(Perm()) == 0);
  CHECK(face_count(Perm()) == 1);
  for (std::uint32_t m = 1; m <= 6; ++m) CHECK(face_count(Perm::standard_cycle(m)) == m);
  CHECK(face_count(parse_perm("(1 3 2)")) == 1);
  CHECK(face_count(parse_perm("(1 4)(2 5)(3 6)")) == 2);
  for (std::uint32_t m = 0; m <= 6; ++m) {
    for (const auto& p : all_perms(m)) CHECK(face_count(p) == faces_oracle(p));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(all_perms(0).size() == 1);
  CHECK(all_perms(5).size() == 120);
  CHECK(all_chord_diagrams(3).size() == 15);
  CHECK(all_chord_diagrams(5).size() == 945);
  for (const auto& d : all_chord_diagrams(4)) CHECK(d.is_chord_diagram());
}

TEST_CASE("subpermutations") {
  CHECK(subperm(parse_perm("(1 3 2)"), 0b101) == parse_perm("(1 2)"));
  CHECK(subperm(parse_perm("(1 3)(2 4)"), 0b0011) == Perm::identity(2));
  for (const auto& p : all_perms(5)) {
    CHECK(subperm(p, 0b11111) == p);
    for (std::uint64_t u = 0; u < 32; ++u) CHECK(cycle_count(subperm(p, u)) <= cycle_count(p));
  }
}

TEST_CASE("concatenation") {
  CHECK(concat(parse_perm("(1 2)"), parse_perm("(1 2)")) == parse_perm("(1 2)(3 4)"));
  CHECK(concat(Perm(), parse_perm("(1 3 2)")) == parse_perm("(1 3 2)"));
  for (std::uint32_t ma = 0; ma <= 3; ++ma) {
    for (std::uint32_t mb = 0; ma + mb <= 6; ++mb) {
      for (const auto& a : all_perms(ma)) {
        for (const auto& b : all_perms(mb)) {
          const Perm ab = concat(a, b);
          CHECK(cycle_count(ab) == cycle_count(a) + cycle_count(b));
          CHECK(face_count(ab) + 1 == face_count(a) + face_count(b));
        }
      }
    }
  }
}

TEST_CASE("intersection graphs") {
  CHECK(intersection_graph(parse_perm("(1 4)(2 5)(3 6)")) == Graph::complete(3));
  CHECK(intersection_graph(parse_perm("(1 2)(3 4)")) == Graph(2));
  CHECK(intersection_graph(parse_perm("(1 3)(2 4)")) == Graph::complete(2));
  CHECK_THROWS_AS(intersection_graph(parse_perm("(1 2 3)")), DomainError);
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (const auto& d : all_chord_diagrams(n)) {
      const Graph g = intersection_graph(d);
      const auto idx = chord_index(d);
      for (std::uint32_t i = 1; i <= 2 * n; ++i) {
        for (std::uint32_t j = 1; j <= 2 * n; ++j) {
          if (idx[i] == idx[j]) continue;
          CHECK(g.adjacent(idx[i] + 1, idx[j] + 1) == interlaced(i, d(i), j, d(j)));
        }
      }
      CHECK(face_count(d) - 1 == gf2_corank(g.adjacency()));
    }
  }
}

TEST_CASE("pivot") {
  const Perm p = parse_perm("3,5,6,7,2,8,4,9,1");
  const Perm q = perm_pivot(p, {2, 5}, {4, 7});
  CHECK(format_perm(q) == "6,5,8,7,2,3,4,9,1");
  CHECK(perm_pivot(q, {2, 5}, {4, 7}) == p);
  CHECK_THROWS_AS(perm_pivot(p, {1, 3}, {4, 7}), DomainError);
  CHECK_THROWS_AS(perm_pivot(parse_perm("(1 2)(3 4)"), {1, 2}, {3, 4}), DomainError);

  // Blocks B and D trade places, so the pivoted 2-cycles move unless the
  // blocks have equal length.
  for (std::uint32_t m = 4; m <= 7; ++m) {
    for (const auto& a : all_perms(m)) {
      for (const auto& [x, y] : interlacing_two_cycles(a)) {
        const Perm b = perm_pivot(a, x, y);
        const std::uint32_t a1 = x.first, b1 = y.first, a2 = x.second, b2 = y.second;
        const std::uint32_t len_b = b1 - a1 - 1, len_c = a2 - b1 - 1, len_d = b2 - a2 - 1;
        const std::uint32_t p_b1 = a1 + len_d + 1, p_a2 = p_b1 + len_c + 1, p_b2 = p_a2 + len_b + 1;
        CHECK(p_b2 == b2);
        CHECK(b(a1) == p_a2);
        CHECK(b(p_b1) == p_b2);
        CHECK(perm_pivot(b, {a1, p_a2}, {p_b1, p_b2}) == a);
        const auto moved = pivot_orbits(x, y);
        CHECK(moved.first == Orbit2{a1, p_a2});
        CHECK(moved.second == Orbit2{p_b1, p_b2});
        auto la = cycle_lengths(a), lb = cycle_lengths(b);
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        CHECK(la == lb);
        if (len_b == len_d) CHECK(perm_pivot(b, x, y) == a);
      }
    }
  }
}

TEST_CASE("pivot on chord diagrams matches the graph pivot") {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (const auto& d : all_chord_diagrams(n)) {
      const auto idx = chord_index(d);
      for (const auto& [x, y] : interlacing_two_cycles(d)) {
        const Perm e = perm_pivot(d, x, y);
        CHECK(e.is_chord_diagram());
        const Graph gd = graph_pivot(intersection_graph(d), idx[x.first] + 1, idx[y.first] + 1);
        CHECK(isomorphic(intersection_graph(e), gd));
      }
    }
  }
}

TEST_CASE("4-term quadruples of chord diagrams match the graph 4-term images") {
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (const auto& d : all_chord_diagrams(n)) {
      const auto idx = chord_index(d);
      const std::uint32_t m = 2 * n;
      for (std::uint32_t e = 1; e <= m; ++e) {
        const std::uint32_t e2 = e % m + 1;
        if (d(e) == e2) {
          CHECK_THROWS_AS(chord_4t_quadruple(d, e, e2), DomainError);
          continue;
        }
        const auto q = chord_4t_quadruple(d, e, e2);
        CHECK(q.diagrams[0] == d);
        Graph tracked[4];
        for (int k = 0; k < 4; ++k) {
          CHECK(q.diagrams[k].is_chord_diagram());
          tracked[k] = intersection_graph_tracked(q.diagrams[k], d, q.relabel[k]);
        }
        const std::uint32_t a = idx[e] + 1, b = idx[e2] + 1;
        const auto img = four_term_images(intersection_graph(d), a, b);
        CHECK(tracked[0] == intersection_graph(d));
        CHECK(tracked[1] == img.toggled);
        CHECK(tracked[2] == img.rewired);
        CHECK(tracked[3] == img.rewired_toggled);
        const int f0 = face_count(q.diagrams[0]), f1 = face_count(q.diagrams[1]);
        const int f2 = face_count(q.diagrams[2]), f3 = face_count(q.diagrams[3]);
        CHECK(f0 - f1 == f2 - f3);
      }
    }
  }
}
