#include "wsys/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "wsys/errors.hpp"

namespace wsys {

Var Var::C(std::uint32_t k) {
  if (k == 0 || k >= kEps) {
    throw DomainError("Casimir index out of range: " + std::to_string(k));
  }
  return Var(k);
}

std::uint32_t Var::print_weight() const {
  if (code_ == 0 || code_ == kEps) return 0;
  if (is_casimir()) return code_;
  return 1;
}

std::string Var::name() const {
  if (code_ == 0) return "N";
  if (is_casimir()) return "C" + std::to_string(code_);
  switch (code_ - kEps) {
    case 0: return "eps";
    case 1: return "z";
    case 2: return "u";
    case 3: return "v";
    case 4: return "w";
    case 5: return "x";
    case 6: return "y";
  }
  return "?";
}

Var Var::from_name(std::string_view name) {
  if (name == "N") return N();
  if (name == "eps") return eps();
  if (name == "z") return z();
  if (name == "u") return u();
  if (name == "v") return v();
  if (name == "w") return w();
  if (name == "x") return x();
  if (name == "y") return y();
  if (name.size() >= 2 && name[0] == 'C' &&
      std::all_of(name.begin() + 1, name.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return C(static_cast<std::uint32_t>(std::stoul(std::string(name.substr(1)))));
  }
  throw ParseError("unknown variable '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t e) {
  if (e > 0) factors_.emplace_back(v, e);
}

Monomial::Monomial(std::initializer_list<std::pair<Var, std::uint32_t>> factors) {
  for (const auto& [v, e] : factors) *this = *this * Monomial(v, e);
}

std::uint32_t Monomial::degree(Var v) const {
  for (const auto& [var, e] : factors_) {
    if (var == v) return e;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

namespace {

std::uint32_t print_weight(const Monomial& m) {
  std::uint32_t w = 0;
  for (const auto& [v, e] : m.factors()) w += v.print_weight() * e;
  return w;
}

}  // namespace

bool print_before(const Monomial& a, const Monomial& b) {
  const auto wa = print_weight(a);
  const auto wb = print_weight(b);
  if (wa != wb) return wa > wb;
  auto ia = a.factors().rbegin();
  auto ib = b.factors().rbegin();
  while (ia != a.factors().rend() || ib != b.factors().rend()) {
    if (ib == b.factors().rend()) return false;  // a has a larger variable
    if (ia == a.factors().rend()) return true;
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Coef(c));
}

Poly::Poly(const Coef& c) { add_term(Monomial{}, c); }

Poly::Poly(Var v) { terms_.emplace(Monomial(v), Coef(1)); }

Poly::Poly(const Monomial& m, const Coef& c) { add_term(m, c); }

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Coef Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coef(0) : it->second;
}

bool Poly::uses_only(std::initializer_list<Var> vars) const {
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    }
  }
  return true;
}

bool Poly::mentions(Var v) const { return degree(v) > 0; }

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

void Poly::add_term(const Monomial& m, const Coef& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    // Coef(num, den) is not reduced on construction.
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::pow(std::uint32_t e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly subst(const Poly& p, const std::map<Var, Poly>& bindings) {
  // Powers of each bound variable are cached across monomials.
  std::map<Var, std::vector<Poly>> powers;
  auto power_of = [&](Var v, std::uint32_t e) -> const Poly& {
    auto& list = powers[v];
    if (list.empty()) list.emplace_back(1);
    while (list.size() <= e) list.push_back(list.back() * bindings.at(v));
    return list[e];
  };

  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    Poly factor(c);
    for (const auto& [v, e] : m.factors()) {
      if (bindings.count(v)) {
        factor *= power_of(v, e);
      } else {
        kept = kept * Monomial(v, e);
      }
    }
    if (kept.is_one()) {
      out += factor;
    } else {
      out += factor * Poly(kept);
    }
  }
  return out;
}

namespace {

std::string coef_to_string(const Coef& c) { return c.get_str(); }

std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (const auto& [v, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Coef>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return print_before(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Coef mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += coef_to_string(mag);
    } else if (mag == 1) {
      out += monomial_to_string(m);
    } else {
      out += coef_to_string(mag) + '*' + monomial_to_string(m);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Poly parse() {
    Poly out;
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial text");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' at offset " + std::to_string(pos_));
      }
      first = false;
      auto [m, c] = parse_term();
      out.add_term(m, sign * c);
    }
    return out;
  }

 private:
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::pair<Monomial, Coef> parse_term() {
    Coef c = 1;
    Monomial m;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = read_digits();
        if (pos_ < s_.size() && peek() == '/') {
          ++pos_;
          std::string den = read_digits();
          if (den.empty()) throw ParseError("bad rational coefficient");
          num += "/" + den;
        }
        Coef value(num);
        value.canonicalize();
        if (value.get_den() == 0) throw ParseError("zero denominator");
        c *= value;
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Var v = Var::from_name(s_.substr(start, pos_ - start));
        std::uint32_t e = 1;
        skip_ws();
        if (pos_ < s_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          std::string digits = read_digits();
          if (digits.empty()) throw ParseError("missing exponent");
          e = static_cast<std::uint32_t>(std::stoul(digits));
        }
        m = m * Monomial(v, e);
      } else {
        throw ParseError(std::string("unexpected character '") + ch + "'");
      }
      have_factor = true;
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError("empty term");
    return {m, c};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------- RatFunc

std::vector<Coef> dense_coefficients(const Poly& p, Var v) {
  std::vector<Coef> out(p.degree(v) + 1, Coef(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.factors().size() > 1 || (!m.is_one() && m.factors()[0].first != v)) {
      throw DomainError("polynomial is not univariate in " + v.name() + ": " + to_string(p));
    }
    out[m.degree(v)] += c;
  }
  if (p.is_zero()) out.clear();
  return out;
}

Poly from_dense(const std::vector<Coef>& coeffs, Var v) {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out.add_term(Monomial(v, static_cast<std::uint32_t>(i)), coeffs[i]);
  }
  return out;
}

Coef binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Coef(r);
}

RatFunc::RatFunc(Poly num, std::uint32_t dpow) : num_(std::move(num)), dpow_(dpow) {
  if (num_.is_zero()) {
    dpow_ = 0;
    return;
  }
  auto c = dense_coefficients(num_, Var::z());
  // Divide by (1 - z) while z = 1 is a root.
  while (dpow_ > 0) {
    Coef at_one = 0;
    for (const auto& x : c) at_one += x;
    if (at_one != 0) break;
    // p(z) = (z - 1) q(z); synthetic division from the top.
    std::vector<Coef> q(c.size() - 1, Coef(0));
    Coef carry = 0;
    for (std::size_t i = c.size() - 1; i >= 1; --i) {
      carry = c[i] + carry;
      q[i - 1] = carry;
    }
    for (auto& x : q) x = -x;  // (z - 1) = -(1 - z)
    c = std::move(q);
    --dpow_;
  }
  num_ = from_dense(c, Var::z());
}

std::vector<Coef> RatFunc::series(std::uint32_t order) const {
  std::vector<Coef> out(order + 1, Coef(0));
  const auto c = dense_coefficients(num_, Var::z());
  for (std::uint32_t n = 0; n <= order; ++n) {
    for (std::uint32_t j = 0; j < c.size() && j <= n; ++j) {
      if (c[j] == 0) continue;
      if (dpow_ == 0) {
        if (j == n) out[n] += c[j];
      } else {
        out[n] += c[j] * binomial(n - j + dpow_ - 1, dpow_ - 1);
      }
    }
  }
  return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num() * b.num(), a.dpow() + b.dpow());
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  const std::uint32_t d = std::max(a.dpow(), b.dpow());
  const Poly one_minus_z = Poly(1) - Poly(Var::z());
  Poly num = a.num() * one_minus_z.pow(d - a.dpow()) + b.num() * one_minus_z.pow(d - b.dpow());
  return RatFunc(std::move(num), d);
}

RatFunc subst_rat(const Poly& p, const std::map<Var, RatFunc>& bindings) {
  std::map<Var, std::vector<RatFunc>> powers;
  auto power_of = [&](Var v, std::uint32_t e) -> const RatFunc& {
    auto it = bindings.find(v);
    if (it == bindings.end()) {
      throw DomainError("no rational binding for variable " + v.name());
    }
    auto& list = powers[v];
    if (list.empty()) list.emplace_back(Poly(1), 0);
    while (list.size() <= e) list.push_back(list.back() * it->second);
    return list[e];
  };

  // Accumulate over the common denominator (1 - z)^D, then normalize once.
  std::uint32_t max_d = 0;
  std::vector<std::pair<Poly, std::uint32_t>> parts;
  for (const auto& [m, c] : p.terms()) {
    RatFunc term(Poly(c), 0);
    for (const auto& [v, e] : m.factors()) term = term * power_of(v, e);
    max_d = std::max(max_d, term.dpow());
    parts.emplace_back(term.num(), term.dpow());
  }
  const Poly one_minus_z = Poly(1) - Poly(Var::z());
  std::vector<Poly> pow_cache{Poly(1)};
  while (pow_cache.size() <= max_d) pow_cache.push_back(pow_cache.back() * one_minus_z);
  Poly num;
  for (const auto& [n, d] : parts) num += n * pow_cache[max_d - d];
  return RatFunc(std::move(num), max_d);
}

std::string to_string(const RatFunc& r) {
  if (r.dpow() == 0) return to_string(r.num());
  std::string den = r.dpow() == 1 ? "(1 - z)" : "(1 - z)^" + std::to_string(r.dpow());
  return "(" + to_string(r.num()) + ")/" + den;
}

std::string series_to_string(const std::vector<Coef>& coeffs) {
  std::string out;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const Coef& c = coeffs[n];
    if (c == 0) continue;
    Coef mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (n == 0 || mag != 1) out += mag.get_str();
    if (n >= 1) out += 'z';
    if (n >= 2) out += '^' + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

}  // namespace wsys
