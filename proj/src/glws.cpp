#include "wsys/glws.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "wsys/errors.hpp"
#include "wsys/invariants.hpp"

namespace wsys {

namespace detail {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("wgl coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw DomainError("wgl coefficient overflow");
  return r;
}

}  // namespace

PackedPoly PackedPoly::constant(std::int64_t c) {
  PackedPoly p;
  if (c != 0) p.terms_.emplace_back(0, c);
  return p;
}

PackedPoly PackedPoly::casimir(std::uint32_t k) {
  PackedPoly p;
  p.terms_.emplace_back(casimir_key(k), 1);
  return p;
}

void PackedPoly::add_scaled(const PackedPoly& other, std::int64_t sign, std::uint32_t n_power) {
  if (other.terms_.empty()) return;
  const std::uint64_t shift = n_key(n_power);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  // Adding a constant to every key preserves their order.
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first + shift < a->first) {
      out.emplace_back(b->first + shift, sign * b->second);
      ++b;
    } else {
      const std::int64_t c = checked_add(a->second, sign * b->second);
      if (c != 0) out.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

PackedPoly PackedPoly::operator*(const PackedPoly& other) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size() * other.terms_.size());
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : other.terms_) raw.emplace_back(ka + kb, checked_mul(ca, cb));
  std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  PackedPoly out;
  for (const auto& t : raw) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second = checked_add(out.terms_.back().second, t.second);
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(t);
    }
  }
  return out;
}

Poly PackedPoly::to_poly() const {
  Poly out;
  for (const auto& [key, c] : terms_) {
    Monomial m;
    for (std::uint32_t slot = 0; slot < 16; ++slot) {
      const auto e = static_cast<std::uint32_t>((key >> (4 * slot)) & 0xFu);
      if (e == 0) continue;
      m = m * Monomial(slot == 0 ? Var::N() : Var::C(slot), e);
    }
    out.add_term(m, Coef(static_cast<long>(c)));
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- recurrence

namespace {

/// Products of matrix units E_{row, col} where every index label occurs at
/// most once as a row and once as a column, after merging two labels.
/// Returns the permutation on the surviving factors and the number of labels
/// left with no occurrence (each is a free sum contributing a factor N).
std::pair<Perm, std::uint32_t> wire(std::uint32_t m,
                                    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors,
                                    std::uint32_t join_a, std::uint32_t join_b) {
  std::vector<std::uint32_t> rep(m + 1);
  std::iota(rep.begin(), rep.end(), 0u);
  rep[join_b] = rep[join_a];
  const auto r = [&](std::uint32_t label) { return rep[label]; };

  std::vector<std::int32_t> row_owner(m + 1, -1);
  for (std::uint32_t t = 0; t < factors.size(); ++t) {
    auto& owner = row_owner[r(factors[t].first)];
    if (owner != -1) throw std::logic_error("wgl wiring: label used twice as a row");
    owner = static_cast<std::int32_t>(t);
  }
  std::vector<std::uint32_t> img(factors.size());
  std::vector<bool> used(m + 1, false);
  for (std::uint32_t t = 0; t < factors.size(); ++t) {
    const auto owner = row_owner[r(factors[t].second)];
    if (owner == -1) throw std::logic_error("wgl wiring: dangling column label");
    img[t] = static_cast<std::uint32_t>(owner) + 1;
    used[r(factors[t].first)] = true;
    used[r(factors[t].second)] = true;
  }
  std::uint32_t empty = 0;
  for (std::uint32_t label = 1; label <= m; ++label)
    if (r(label) == label && !used[label]) ++empty;
  return {Perm(std::move(img)), empty};
}

}  // namespace

WglState RecurrenceStep::as_state() const {
  WglState s;
  s.terms.emplace_back(Poly(1), swapped);
  s.terms.emplace_back(Poly::var(Var::N(), n_first), merge_first);
  s.terms.emplace_back(-Poly::var(Var::N(), n_second), merge_second);
  return s;
}

RecurrenceStep recurrence_step(const Perm& alpha, std::uint32_t l) {
  const auto m = alpha.size();
  if (m < 2 || l < 1 || l >= m) throw DomainError("recurrence position out of range");

  RecurrenceStep step;
  {
    // Conjugation by the transposition (l l+1).
    auto tau = [l](std::uint32_t i) { return i == l ? l + 1 : (i == l + 1 ? l : i); };
    std::vector<std::uint32_t> img(m);
    for (std::uint32_t i = 1; i <= m; ++i) img[i - 1] = tau(alpha(tau(i)));
    step.swapped = Perm(std::move(img));
  }

  // The factor at position k is E_{i_k, i_alpha(k)}: row label k, column
  // label alpha(k). The commutator of the factors at l and l+1 is
  //   delta(i_alpha(l), i_{l+1}) E_{i_l, i_alpha(l+1)}
  // - delta(i_alpha(l+1), i_l) E_{i_{l+1}, i_alpha(l)},
  // each placed where the pair stood.
  auto merged = [&](std::uint32_t row, std::uint32_t col) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;
    factors.reserve(m - 1);
    for (std::uint32_t k = 1; k <= m; ++k) {
      if (k == l) {
        factors.emplace_back(row, col);
      } else if (k != l + 1) {
        factors.emplace_back(k, alpha(k));
      }
    }
    return factors;
  };
  std::tie(step.merge_first, step.n_first) = wire(m, merged(l, alpha(l + 1)), alpha(l), l + 1);
  std::tie(step.merge_second, step.n_second) = wire(m, merged(l + 1, alpha(l)), l, alpha(l + 1));
  return step;
}

// ---------------------------------------------------------------- engine

WglEngine::WglEngine(WglOptions options) : options_(options) {
  if (options_.cap > kHardCap) {
    throw DomainError("wgl size cap cannot exceed " + std::to_string(kHardCap));
  }
}

std::size_t WglEngine::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

std::size_t WglEngine::memo_bytes() const {
  std::shared_lock lock(mutex_);
  std::size_t total = 0;
  for (const auto& [k, v] : memo_) total += k.capacity() + v->bytes() + sizeof(*v);
  return total;
}

void WglEngine::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

std::string WglEngine::memo_key(const Perm& alpha) const {
  std::string best = alpha.key();
  if (!options_.canonical_rotation) return best;
  for (std::uint32_t s = 1; s < alpha.size(); ++s) {
    std::string k = alpha.rotated(s).key();
    if (k < best) best = std::move(k);
  }
  return best;
}

Poly WglEngine::wgl(const Perm& alpha) {
  if (alpha.size() > options_.cap) {
    throw DomainError("permutation of size " + std::to_string(alpha.size()) +
                      " exceeds the wgl cap " + std::to_string(options_.cap));
  }
  return eval(alpha).to_poly();
}

const detail::PackedPoly& WglEngine::eval(const Perm& alpha) {
  const std::string key = memo_key(alpha);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto value = std::make_unique<detail::PackedPoly>(compute(alpha));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(key, std::move(value));
  return *it->second;
}

detail::PackedPoly WglEngine::compute(const Perm& alpha) {
  using detail::PackedPoly;
  const auto m = alpha.size();
  if (m == 0) return PackedPoly::constant(1);

  if (options_.factor_intervals) {
    // Any alpha-invariant interval [a, b] is a central factor.
    for (std::uint32_t a = 1; a <= m; ++a) {
      std::uint32_t lo = m + 1, hi = 0;
      for (std::uint32_t b = a; b <= m; ++b) {
        lo = std::min(lo, alpha(b));
        hi = std::max(hi, alpha(b));
        if (lo < a) break;
        if (hi == b && lo == a) {
          if (a == 1 && b == m) break;
          std::uint64_t inside = 0;
          for (std::uint32_t i = a; i <= b; ++i) inside |= std::uint64_t{1} << (i - 1);
          const std::uint64_t all = (std::uint64_t{1} << m) - 1;
          const PackedPoly& left = eval(subperm(alpha, inside));
          const PackedPoly& right = eval(subperm(alpha, all & ~inside));
          return left * right;
        }
      }
    }
  }

  // Follow the cycle of 1 along consecutive positions 1 -> 2 -> ... -> k.
  std::uint32_t k = 1;
  while (k < m && alpha(k) == k + 1) ++k;
  const std::uint32_t target = alpha(k);
  if (target == 1) {
    if (k == m) return PackedPoly::casimir(m);
    // [1, k] is invariant; only reachable with interval factoring disabled.
    const std::uint64_t inside = (std::uint64_t{1} << k) - 1;
    const std::uint64_t all = (std::uint64_t{1} << m) - 1;
    const PackedPoly& left = eval(subperm(alpha, inside));
    const PackedPoly& right = eval(subperm(alpha, all & ~inside));
    return left * right;
  }

  // target >= k + 2: bubble it one position to the left.
  const RecurrenceStep step = recurrence_step(alpha, target - 1);
  PackedPoly out = eval(step.swapped);
  out.add_scaled(eval(step.merge_first), 1, step.n_first);
  out.add_scaled(eval(step.merge_second), -1, step.n_second);
  return out;
}

WglEngine& default_engine() {
  static WglEngine engine;
  return engine;
}

Poly wgl(const Perm& alpha) { return default_engine().wgl(alpha); }

// ---------------------------------------------------------------- specializations

namespace {

std::uint32_t max_casimir(const Poly& w) {
  std::uint32_t k = 0;
  for (const auto& [m, c] : w.terms())
    for (const auto& [v, e] : m.factors())
      if (v.is_casimir()) k = std::max(k, v.casimir_index());
  return k;
}

template <typename Binding>
Poly subst_casimirs(const Poly& w, Binding binding) {
  std::map<Var, Poly> b;
  for (std::uint32_t k = 1; k <= max_casimir(w); ++k) b.emplace(Var::C(k), binding(k));
  return subst(w, b);
}

}  // namespace

Poly spec_standard(const Poly& w) {
  return subst_casimirs(w, [](std::uint32_t k) { return Poly::var(Var::N(), k - 1); });
}

Poly spec_standard(const Perm& alpha) { return spec_standard(wgl(alpha)); }

Poly feps_casimir(std::uint32_t k) {
  Poly c = Poly(Monomial{{Var::N(), 1}, {Var::eps(), k}});
  for (std::uint32_t i = 1; i <= k; ++i) {
    c += Poly(Monomial{{Var::N(), i - 1}, {Var::eps(), k - i}}, binomial(k, i));
  }
  return c;
}

Poly feps(const Poly& w) { return subst_casimirs(w, feps_casimir); }

Poly feps(const Perm& alpha) { return feps(wgl(alpha)); }

Poly feps_direct(const Perm& alpha) {
  const auto m = alpha.size();
  if (m > 24) throw DomainError("feps_direct is limited to 24 points");
  const auto c_alpha = cycle_count(alpha);
  // Exponent pairs (N, eps) are tallied first; the sum has few distinct ones.
  std::map<std::pair<std::uint32_t, std::uint32_t>, long> tally;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << m); ++u) {
    const Perm sub = subperm(alpha, u);
    const auto n_exp = c_alpha - cycle_count(sub) + face_count(sub) - 1;
    const auto eps_exp = m - static_cast<std::uint32_t>(std::popcount(u));
    ++tally[{n_exp, eps_exp}];
  }
  Poly out;
  for (const auto& [exps, count] : tally) {
    out.add_term(Monomial{{Var::N(), exps.first}, {Var::eps(), exps.second}}, Coef(count));
  }
  return out;
}

Poly gl11_casimir(std::uint32_t k) {
  if (k == 1) return Poly(1);
  return Poly(Monomial(Var::u(), k - 1), Coef(k) / Coef(mpz_class(1) << (k - 1)));
}

Poly gl11_skewchar(const Poly& w) {
  std::map<Var, Poly> b{{Var::N(), Poly()}};
  for (std::uint32_t k = 1; k <= max_casimir(w); ++k) b.emplace(Var::C(k), gl11_casimir(k));
  return subst(w, b);
}

Poly gl11_skewchar(const Perm& alpha) { return gl11_skewchar(wgl(alpha)); }

Poly casimir_to_N(const Poly& w) {
  return subst_casimirs(w, [](std::uint32_t) { return Poly(Var::N()); });
}

Poly casimir_to_N(const Perm& alpha) { return casimir_to_N(wgl(alpha)); }

Poly feps_in_v(const Perm& diagram) {
  if (!diagram.is_chord_diagram()) throw DomainError("feps_in_v needs a chord diagram");
  const Poly q = refined_skew_char_graph(intersection_graph(diagram));
  const Poly in_v = subst(q, {{Var::u(), Poly(Var::v())}, {Var::w(), Poly(Var::N())}});
  const Poly v_value = Poly(Monomial(Var::eps()), 2) + Poly(Monomial{{Var::N(), 1}, {Var::eps(), 2}});
  if (subst(in_v, {{Var::v(), v_value}}) != feps(diagram)) {
    throw std::logic_error("F_eps disagrees with the refined skew-characteristic polynomial on " +
                           format_perm(diagram));
  }
  return in_v;
}

RatFunc interlace_perm(const Poly& feps_value) {
  const Poly z2_minus_1 = Poly::var(Var::z(), 2) - Poly(1);
  return subst_rat(feps_value, {{Var::N(), RatFunc(z2_minus_1, 0)}, {Var::eps(), RatFunc(Poly(1), 1)}});
}

RatFunc interlace_perm(const Perm& alpha) { return interlace_perm(feps(alpha)); }

}  // namespace wsys
