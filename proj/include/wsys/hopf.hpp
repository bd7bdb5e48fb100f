#pragma once

// Values of multiplicative invariants on the primitive projection pi(B),
// expanded as the convolution logarithm of the invariant.

#include <cstdint>
#include <functional>
#include <vector>

#include "wsys/algebra.hpp"
#include "wsys/graphs.hpp"
#include "wsys/invariants.hpp"
#include "wsys/perm.hpp"

namespace wsys {

/// Ordered partitions (U_1, ..., U_k) of a set into nonempty blocks, every k.
class OrderedPartitionStream {
 public:
  explicit OrderedPartitionStream(std::uint64_t set) : set_(set) {}

  void for_each(const std::function<void(const std::vector<std::uint64_t>&)>& fn) const;
  /// Number of partitions with exactly k blocks, by enumeration.
  std::uint64_t count(std::uint32_t k) const;

 private:
  std::uint64_t set_;
};

/// f restricted to a subset of the elements (chords or vertices), given as
/// a bitmask.
using SubsetInvariant = std::function<Poly(std::uint64_t)>;

/// (f o pi) = sum_k (-1)^(k-1)/k sum over ordered k-partitions of
/// prod_j f(U_j), over the n elements.
Poly primitive_eval(const SubsetInvariant& f, std::uint32_t n);

/// Same value through the connected-part recursion
/// g(S) = f(S) - sum over proper T containing min(S) of g(T) f(S - T).
Poly primitive_eval_recursive(const SubsetInvariant& f, std::uint32_t n);

Poly primitive_eval(const std::function<Poly(const Perm&)>& f, const Perm& diagram);
Poly primitive_eval(const GraphInvariant& f, const Graph& g);

struct EpsIndependence {
  bool independent = false;
  /// F_eps(pi(B)); a polynomial in N alone when independent.
  Poly value;
  /// F(pi(B)) with F the standard-representation specialization.
  Poly standard_value;
};

/// Throws DomainError for diagrams with fewer than two chords.
EpsIndependence eps_independence_check(const Perm& diagram);

}  // namespace wsys
