#pragma once

// Set systems and delta-matroids with admissible sets stored as bitmasks.
// Elements are 1..ground_size; bit i-1 stands for element i.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wsys/graphs.hpp"
#include "wsys/perm.hpp"

namespace wsys {

using Subset = std::uint32_t;

class DMat {
 public:
  static constexpr std::uint32_t kMaxGround = 20;

  /// Throws DomainError if `admissible` is empty, a set leaves the ground
  /// set, or the ground set exceeds kMaxGround.
  DMat(std::uint32_t ground_size, std::vector<Subset> admissible);

  std::uint32_t ground_size() const { return ground_; }
  /// Sorted, duplicate-free.
  const std::vector<Subset>& admissible() const { return phi_; }
  bool is_admissible(Subset s) const;
  Subset full() const { return ground_ == 32 ? ~Subset{0} : (Subset{1} << ground_) - 1; }

  friend bool operator==(const DMat&, const DMat&) = default;

 private:
  std::uint32_t ground_;
  std::vector<Subset> phi_;
};

DMat dmat_from_graph(const Graph& g);
/// Admissible iff f(B|_U) = 1, computed on the sub-diagram.
DMat dmat_from_chord_diagram(const Perm& diagram);

bool check_symmetric_exchange(const DMat& d);

/// min over admissible phi of |U xor phi|.
std::uint32_t distance(const DMat& d, Subset u);

DMat partial_dual(const DMat& d, Subset s);

/// e is 1-based.
bool is_loop(const DMat& d, std::uint32_t e);
bool is_coloop(const DMat& d, std::uint32_t e);
/// (E - e; {phi : e not in phi}), elements above e renumbered down.
/// Throws DomainError when e is a coloop.
DMat dmat_delete(const DMat& d, std::uint32_t e);

/// "E=3; phi={},{1,2},{1,3},{2,3}".
DMat parse_dmat(std::string_view text);
std::string format_dmat(const DMat& d);
std::string format_subset(Subset s);

}  // namespace wsys
