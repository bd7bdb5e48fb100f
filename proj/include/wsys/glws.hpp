#pragma once

// The universal gl-weight system on permutations, computed with the
// commutator recurrence, and its specializations.

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsys/algebra.hpp"
#include "wsys/perm.hpp"

namespace wsys {

namespace detail {

/// Polynomial in N, C_1..C_15 with int64 coefficients: each monomial is
/// packed four bits per variable into one word (N in the low nibble, C_k in
/// nibble k), kept sorted by key. Exponents stay below 16 for m <= 15.
class PackedPoly {
 public:
  using Term = std::pair<std::uint64_t, std::int64_t>;

  PackedPoly() = default;
  static PackedPoly constant(std::int64_t c);
  static PackedPoly casimir(std::uint32_t k);

  static constexpr std::uint64_t n_key(std::uint32_t e) { return e; }
  static constexpr std::uint64_t casimir_key(std::uint32_t k, std::uint32_t e = 1) {
    return static_cast<std::uint64_t>(e) << (4 * k);
  }

  const std::vector<Term>& terms() const { return terms_; }

  /// this += sign * N^n_power * other
  void add_scaled(const PackedPoly& other, std::int64_t sign, std::uint32_t n_power);
  PackedPoly operator*(const PackedPoly& other) const;

  Poly to_poly() const;
  std::size_t bytes() const { return terms_.capacity() * sizeof(Term); }

 private:
  std::vector<Term> terms_;
};

}  // namespace detail

/// Formal linear combination of permutations with polynomial coefficients.
struct WglState {
  std::vector<std::pair<Poly, Perm>> terms;
};

/// One application of the recurrence at positions (l, l+1):
///   w(alpha) = w(swap) + N^a w(merge_first) - N^b w(merge_second).
struct RecurrenceStep {
  Perm swapped;
  Perm merge_first;
  std::uint32_t n_first = 0;
  Perm merge_second;
  std::uint32_t n_second = 0;

  WglState as_state() const;
};

/// Valid for any permutation with m >= 2 and 1 <= l < m; the degenerate
/// cases (fixed points, an arc between l and l+1) fall out of the same
/// index bookkeeping.
RecurrenceStep recurrence_step(const Perm& alpha, std::uint32_t l);

struct WglOptions {
  /// Largest permutation accepted by WglEngine::wgl.
  std::uint32_t cap = 10;
  /// Memoize under the lexicographically least cyclic rotation.
  bool canonical_rotation = true;
  /// Split off alpha-invariant intervals (their values are central).
  bool factor_intervals = true;
};

/// Memoized evaluator. Safe for concurrent use: lookups take a shared lock,
/// inserts an exclusive one.
class WglEngine {
 public:
  static constexpr std::uint32_t kHardCap = 15;

  explicit WglEngine(WglOptions options = {});

  /// Throws DomainError above the configured cap.
  Poly wgl(const Perm& alpha);
  const WglOptions& options() const { return options_; }
  std::size_t memo_size() const;
  std::size_t memo_bytes() const;
  void clear();

 private:
  const detail::PackedPoly& eval(const Perm& alpha);
  detail::PackedPoly compute(const Perm& alpha);
  std::string memo_key(const Perm& alpha) const;

  WglOptions options_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::unique_ptr<detail::PackedPoly>> memo_;
};

/// Process-wide engine with default options.
WglEngine& default_engine();

Poly wgl(const Perm& alpha);

/// C_k -> N^(k-1): the normalized trace of the standard representation.
Poly spec_standard(const Poly& w);
Poly spec_standard(const Perm& alpha);

/// C_k -> N eps^k + sum_{i=1..k} binom(k,i) N^(i-1) eps^(k-i).
Poly feps_casimir(std::uint32_t k);
Poly feps(const Poly& w);
Poly feps(const Perm& alpha);

/// sum over U of N^(c(alpha) - c(alpha|U) + f(alpha|U) - 1) eps^(m - |U|).
Poly feps_direct(const Perm& alpha);

/// N -> 0, C_1 -> 1, C_k -> k (u/2)^(k-1).
Poly gl11_casimir(std::uint32_t k);
Poly gl11_skewchar(const Poly& w);
Poly gl11_skewchar(const Perm& alpha);

/// C_k -> N for all k.
Poly casimir_to_N(const Poly& w);
Poly casimir_to_N(const Perm& alpha);

/// F_eps of a chord diagram in the variables (N, v), v = 2 eps + N eps^2,
/// computed as the refined skew-characteristic polynomial of the
/// intersection graph; throws std::logic_error if expanding v does not give
/// feps(B).
Poly feps_in_v(const Perm& diagram);

/// F_eps under N = z^2 - 1, eps = 1/(1 - z).
RatFunc interlace_perm(const Poly& feps_value);
RatFunc interlace_perm(const Perm& alpha);

}  // namespace wsys
