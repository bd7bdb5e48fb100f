#pragma once

// Permutations of {1..m} in one-line form, viewed as one-vertex hypermaps.
// Chord diagrams are the fixed-point-free involutions.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsys/graphs.hpp"

namespace wsys {

class Perm {
 public:
  Perm() = default;
  /// One-line images, 1-based. Throws ParseError if not a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::uint32_t m);
  /// The standard long cycle 1 -> 2 -> ... -> m -> 1.
  static Perm standard_cycle(std::uint32_t m);

  std::uint32_t size() const { return static_cast<std::uint32_t>(img_.size()); }
  bool empty() const { return img_.empty(); }
  /// alpha(i), 1-based.
  std::uint32_t operator()(std::uint32_t i) const { return img_[i - 1]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Perm inverse() const;
  /// (this o other)(i) = this(other(i)).
  Perm compose(const Perm& other) const;
  /// Conjugate by the cyclic shift i -> i+1 (mod m).
  Perm rotated(std::uint32_t steps = 1) const;

  bool is_chord_diagram() const;
  std::uint32_t chords() const { return size() / 2; }

  /// Compact key: one byte per image. Requires m < 256.
  std::string key() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<std::uint32_t> img_;
};

/// Parses "(1 4)(2 5)" / "(1,3,2)" cycle notation or "3,5,6,7,2,8,4,9,1"
/// one-line notation. For cycle notation the size is the largest point
/// mentioned unless `m` is given.
Perm parse_perm(std::string_view text, std::optional<std::uint32_t> m = std::nullopt);
/// Canonical one-line form "3,1,2"; the empty permutation is "".
std::string format_perm(const Perm& p);
/// Cycle notation without fixed points, e.g. "(1 3 2)"; identity is "()".
std::string format_cycles(const Perm& p);

std::uint32_t cycle_count(const Perm& p);
/// Number of cycles of i -> sigma(alpha^{-1}(i)), sigma the ascending long
/// cycle. The empty permutation has one face.
std::uint32_t face_count(const Perm& p);
std::vector<std::uint32_t> cycle_lengths(const Perm& p);

/// alpha|_U for U given as a bitmask over points (bit i-1 is point i).
Perm subperm(const Perm& p, std::uint64_t mask);
Perm subperm(const Perm& p, const std::vector<std::uint32_t>& points);

Perm concat(const Perm& a, const Perm& b);

/// All permutations of {1..m} in lexicographic order of one-line form.
std::vector<Perm> all_perms(std::uint32_t m);
/// All chord diagrams with n chords (fixed-point-free involutions on 2n).
std::vector<Perm> all_chord_diagrams(std::uint32_t n);

/// One vertex per chord, ordered by smaller endpoint; edges join
/// interlacing chords.
Graph intersection_graph(const Perm& diagram);
/// Chord index (0-based, ordered by smaller endpoint) of every point.
std::vector<std::uint32_t> chord_index(const Perm& diagram);
/// Bitmask of the endpoints of the chords in `chord_mask`.
std::uint64_t chord_points(const Perm& diagram, std::uint64_t chord_mask);
/// Sub-diagram formed by the chords in `chord_mask`.
Perm sub_diagram(const Perm& diagram, std::uint64_t chord_mask);

/// A 2-cycle (p, q) of a permutation, p < q.
using Orbit2 = std::pair<std::uint32_t, std::uint32_t>;

/// Pivot on two interlacing 2-cycles: writing the circle as
/// A a1 B b1 C a2 D b2 E, blocks B and D are exchanged and the result is
/// relabelled by position.
Perm perm_pivot(const Perm& p, Orbit2 a, Orbit2 b);
/// Positions of the two pivoted 2-cycles after perm_pivot(p, a, b); they
/// move when the exchanged blocks differ in length.
std::pair<Orbit2, Orbit2> pivot_orbits(Orbit2 a, Orbit2 b);

/// Pairs of interlacing 2-cycles of p.
std::vector<std::pair<Orbit2, Orbit2>> interlacing_two_cycles(const Perm& p);

/// The four diagrams of a 4-term relation. `relabel[k][i]` is the position
/// in diagram k of the point at position i of the input diagram, so chords
/// can be tracked across the quadruple.
struct FourTermQuadruple {
  std::array<Perm, 4> diagrams;
  std::array<std::vector<std::uint32_t>, 4> relabel;
};

/// e and e2 are circularly adjacent points (e2 follows e) on distinct chords
/// x and y. B2 swaps the two ends; B3 moves the end e of x to just after the
/// other end of y; B4 applies the same move to B2.
FourTermQuadruple chord_4t_quadruple(const Perm& diagram, std::uint32_t e, std::uint32_t e2);

/// Intersection graph with vertices labelled by the chord order of an
/// original diagram, following `relabel` (as in FourTermQuadruple).
Graph intersection_graph_tracked(const Perm& diagram, const Perm& original,
                                 const std::vector<std::uint32_t>& relabel);

}  // namespace wsys
