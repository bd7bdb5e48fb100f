#pragma once

// Exact sparse multivariate polynomials over Q, plus univariate rational
// functions in z whose only pole is at z = 1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsys {

using Coef = mpq_class;

/// A polynomial variable. Casimir variables C_k carry their index in the
/// code; the named variables sit above every Casimir so that the total order
/// N < C_1 < C_2 < ... < eps < z < u < v < w < x < y is the integer order of
/// the codes.
class Var {
 public:
  static constexpr std::uint32_t kEps = 1u << 20;

  static constexpr Var N() { return Var(0); }
  static Var C(std::uint32_t k);
  static constexpr Var eps() { return Var(kEps); }
  static constexpr Var z() { return Var(kEps + 1); }
  static constexpr Var u() { return Var(kEps + 2); }
  static constexpr Var v() { return Var(kEps + 3); }
  static constexpr Var w() { return Var(kEps + 4); }
  static constexpr Var x() { return Var(kEps + 5); }
  static constexpr Var y() { return Var(kEps + 6); }

  constexpr std::uint32_t code() const { return code_; }
  constexpr bool is_casimir() const { return code_ >= 1 && code_ < kEps; }
  constexpr std::uint32_t casimir_index() const { return code_; }

  /// Weight used by the printing order: C_k weighs k; N and eps weigh 0
  /// (they are the parameters of the specializations); the rest weigh 1.
  std::uint32_t print_weight() const;

  std::string name() const;
  static Var from_name(std::string_view name);

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr explicit Var(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

/// Monomial as a sorted list of (variable, positive exponent).
class Monomial {
 public:
  Monomial() = default;
  Monomial(Var v, std::uint32_t e = 1);
  Monomial(std::initializer_list<std::pair<Var, std::uint32_t>> factors);

  const std::vector<std::pair<Var, std::uint32_t>>& factors() const {
    return factors_;
  }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.factors_ < b.factors_;
  }

 private:
  std::vector<std::pair<Var, std::uint32_t>> factors_;
};

/// Printing order: descending weighted degree, then ascending in the
/// reverse-lexicographic sense (exponents compared from the largest variable
/// down, smaller exponent first).
bool print_before(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using Terms = std::map<Monomial, Coef>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Coef& c);  // NOLINT(google-explicit-constructor)
  Poly(Var v);  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Coef& c = 1);

  static Poly var(Var v, std::uint32_t e = 1) { return Poly(Monomial(v, e)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  Coef coefficient(const Monomial& m) const;
  Coef constant_term() const { return coefficient(Monomial{}); }

  /// True if every monomial uses only variables in `vars`.
  bool uses_only(std::initializer_list<Var> vars) const;
  bool mentions(Var v) const;
  std::uint32_t degree(Var v) const;

  /// Adds c*m in place. c should be canonical when m is already present.
  void add_term(const Monomial& m, const Coef& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly pow(std::uint32_t e) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

/// Simultaneous substitution; variables without a binding pass through.
Poly subst(const Poly& p, const std::map<Var, Poly>& bindings);

/// Canonical text, e.g. "C3 + C1^2 - N*C2". The zero polynomial is "0".
std::string to_string(const Poly& p);

/// Parses the canonical text form (and reasonable variants with extra spaces
/// or explicit '*' between coefficient and variables).
Poly parse_poly(std::string_view text);

/// num / (1 - z)^dpow with num a polynomial in z.
class RatFunc {
 public:
  RatFunc() = default;
  /// Normalizes: cancels common factors (1 - z).
  RatFunc(Poly num, std::uint32_t dpow);

  const Poly& num() const { return num_; }
  std::uint32_t dpow() const { return dpow_; }
  bool is_polynomial() const { return dpow_ == 0; }

  /// Taylor coefficients of z^0..z^order at z = 0.
  std::vector<Coef> series(std::uint32_t order) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  Poly num_;
  std::uint32_t dpow_ = 0;
};

/// Substitution of N and eps into RatFuncs. Every variable of `p` needs a
/// binding; a binding is a RatFunc.
RatFunc subst_rat(const Poly& p, const std::map<Var, RatFunc>& bindings);

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);

std::string to_string(const RatFunc& r);

/// Series coefficients as "2z^2+5z^3+...".
std::string series_to_string(const std::vector<Coef>& coeffs);

/// Dense coefficient list of a polynomial in one variable.
std::vector<Coef> dense_coefficients(const Poly& p, Var v);
Poly from_dense(const std::vector<Coef>& coeffs, Var v);

Coef binomial(std::uint32_t n, std::uint32_t k);

}  // namespace wsys
