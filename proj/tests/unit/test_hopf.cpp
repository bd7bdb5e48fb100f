#include <set>

#include "doctest.h"
#include "wsys/errors.hpp"
#include "wsys/glws.hpp"
#include "wsys/hopf.hpp"

using namespace wsys;

namespace {

const Poly N = Var::N();

std::uint64_t stirling2(std::uint32_t n, std::uint32_t k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

std::uint64_t factorial(std::uint32_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

// Concatenation of the sub-diagrams on the blocks, in block order.
Perm product_of_blocks(const Perm& d, const std::vector<std::uint64_t>& blocks) {
  Perm out;
  for (auto b : blocks) out = concat(out, sub_diagram(d, b));
  return out;
}

}  // namespace

TEST_CASE("ordered partitions") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const OrderedPartitionStream stream((std::uint64_t{1} << n) - 1);
    for (std::uint32_t k = 1; k <= n; ++k) CHECK(stream.count(k) == factorial(k) * stirling2(n, k));
  }
  std::set<std::vector<std::uint64_t>> seen;
  OrderedPartitionStream(0b11111).for_each([&](const std::vector<std::uint64_t>& blocks) {
    std::uint64_t cover = 0;
    for (auto b : blocks) {
      CHECK(b != 0);
      CHECK((cover & b) == 0);
      cover |= b;
    }
    CHECK(cover == 0b11111);
    CHECK(seen.insert(blocks).second);
  });
  CHECK(seen.size() == 541);
}

TEST_CASE("F_eps on primitives") {
  const auto f = [](const Perm& b) { return feps(b); };
  CHECK(primitive_eval(f, parse_perm("(1 2)")) == parse_poly("N + 2*eps + N*eps^2"));
  CHECK(primitive_eval(f, parse_perm("(1 3)(2 4)")) == Poly(1) - N * N);

  const auto k2 = eps_independence_check(parse_perm("(1 3)(2 4)"));
  CHECK(k2.independent);
  CHECK(k2.value == Poly(1) - N * N);
  const auto k3 = eps_independence_check(parse_perm("(1 4)(2 5)(3 6)"));
  CHECK(k3.independent);
  CHECK(k3.value == k3.standard_value);
  CHECK(k3.value == Poly(2) * N.pow(3) - Poly(2) * N);
  CHECK_THROWS_AS(eps_independence_check(parse_perm("(1 2)")), DomainError);

  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (const auto& d : all_chord_diagrams(n)) {
      const auto r = eps_independence_check(d);
      CHECK(r.independent);
      CHECK(r.value == r.standard_value);
    }
  }
}

TEST_CASE("log expansion agrees with the connected-part recursion") {
  const auto f = [](const Perm& b) { return feps(b); };
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (const auto& d : all_chord_diagrams(n)) {
      const SubsetInvariant sub = [&](std::uint64_t s) { return f(sub_diagram(d, s)); };
      CHECK(primitive_eval(sub, n) == primitive_eval_recursive(sub, n));
    }
  }
  const GraphInvariant fs[] = {invariant::skew_char(), invariant::refined_skew_char(), invariant::interlace()};
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (const auto& g : all_graphs(n)) {
      for (const auto& inv : fs) {
        const SubsetInvariant sub = [&](std::uint64_t s) { return inv(induced_subgraph(g, s)); };
        CHECK(primitive_eval(inv, g) == primitive_eval_recursive(sub, n));
      }
    }
  }
}

TEST_CASE("vertex power on primitives") {
  const auto upow = invariant::vertex_power(Var::u());
  CHECK(primitive_eval(upow, Graph(1)) == Poly(Var::u()));
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (const auto& g : all_graphs(n)) CHECK(primitive_eval(upow, g).is_zero());
  }
}

TEST_CASE("primitives vanish on products") {
  const GraphInvariant fs[] = {invariant::skew_char(), invariant::refined_skew_char(), invariant::interlace()};
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (std::uint32_t na = 1; na < n; ++na) {
      for (const auto& a : all_graphs(na)) {
        for (const auto& b : all_graphs(n - na)) {
          const Graph g = disjoint_union(a, b);
          for (const auto& inv : fs) CHECK(primitive_eval(inv, g).is_zero());
        }
      }
    }
  }
}

TEST_CASE("projection is idempotent at the level of values") {
  // Expand pi(B) as a formal sum of products of sub-diagrams and evaluate
  // f o pi on it; products are killed, so the result is (f o pi)(B) again.
  const auto f = [](const Perm& b) { return feps(b); };
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (const auto& d : all_chord_diagrams(n)) {
      Poly twice;
      OrderedPartitionStream((std::uint64_t{1} << n) - 1).for_each([&](const std::vector<std::uint64_t>& blocks) {
        const auto k = static_cast<long>(blocks.size());
        const Coef w(k % 2 == 1 ? 1 : -1, k);
        twice += Poly(w) * primitive_eval(f, product_of_blocks(d, blocks));
      });
      CHECK(twice == primitive_eval(f, d));
    }
  }
}

TEST_CASE("exponential recovers the invariant") {
  // f = sum_k 1/k! sum over ordered k-partitions of prod (f o pi)(B|U_j).
  const auto f = [](const Perm& b) { return feps(b); };
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (const auto& d : all_chord_diagrams(n)) {
      Poly back;
      OrderedPartitionStream((std::uint64_t{1} << n) - 1).for_each([&](const std::vector<std::uint64_t>& blocks) {
        Poly prod(Coef(1, static_cast<long>(factorial(static_cast<std::uint32_t>(blocks.size())))));
        for (auto b : blocks) prod *= primitive_eval(f, sub_diagram(d, b));
        back += prod;
      });
      CHECK(back == feps(d));
    }
  }
}
