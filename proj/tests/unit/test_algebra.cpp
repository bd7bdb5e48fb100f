#include <random>

#include "doctest.h"
#include "wsys/algebra.hpp"
#include "wsys/errors.hpp"

using namespace wsys;

namespace {

Poly random_poly(std::mt19937& rng) {
  const Var vars[] = {Var::N(), Var::C(1), Var::C(2), Var::eps(), Var::z()};
  Poly p;
  const int terms = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (Var v : vars) {
      const auto e = std::uniform_int_distribution<std::uint32_t>(0, 2)(rng);
      m = m * Monomial(v, e);
    }
    const long num = std::uniform_int_distribution<long>(-5, 5)(rng);
    const long den = std::uniform_int_distribution<long>(1, 3)(rng);
    Coef c(num, den);
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const Poly n = Var::N(), e = Var::eps();
  CHECK(to_string((n + e) * (n - e)) == "N^2 - eps^2");
  CHECK((n + e) + Poly() == n + e);
  CHECK((Poly(1) + n * e).pow(2) == Poly(1) + Poly(2) * n * e + n * n * e * e);
  CHECK(to_string(Poly()) == "0");
  CHECK(Poly(Coef(0)).is_zero());
}

TEST_CASE("text form") {
  const Poly w = Poly(Var::C(3)) + Poly::var(Var::C(1), 2) - Poly(Var::N()) * Poly(Var::C(2));
  CHECK(to_string(w) == "C3 + C1^2 - N*C2");
  CHECK(parse_poly("C3 + C1^2 - N*C2") == w);
  CHECK(parse_poly("-3/4*u^2 + 1") == Poly(Coef(-3, 4)) * Poly::var(Var::u(), 2) + Poly(1));
  CHECK(parse_poly("0").is_zero());
  CHECK_THROWS_AS(parse_poly("C3 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("q^2"), ParseError);

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Poly p = random_poly(rng);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("ring axioms") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly());
  }
}

TEST_CASE("substitution") {
  const Poly feps_c1 = Poly(1) + Poly(Var::N()) * Poly(Var::eps());
  CHECK(subst(Poly::var(Var::C(1), 2), {{Var::C(1), feps_c1}}) == feps_c1 * feps_c1);
  CHECK(to_string(subst(Poly(Var::N()) * Poly(Var::C(2)), {{Var::C(2), Poly(Var::N())}})) == "N^2");

  // Simultaneous, not sequential.
  const Poly swapped = subst(Poly(Var::x()) - Poly(Var::y()),
                             {{Var::x(), Poly(Var::y())}, {Var::y(), Poly(Var::x())}});
  CHECK(swapped == Poly(Var::y()) - Poly(Var::x()));

  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    const Poly a = random_poly(rng), b = random_poly(rng);
    const std::map<Var, Poly> bind{{Var::C(1), random_poly(rng)}, {Var::N(), random_poly(rng)}};
    CHECK(subst(a * b, bind) == subst(a, bind) * subst(b, bind));
    CHECK(subst(a + b, bind) == subst(a, bind) + subst(b, bind));
  }
}

TEST_CASE("rational functions") {
  const RatFunc one(Poly(1), 0);
  CHECK(one.is_polynomial());
  CHECK(one.series(3) == std::vector<Coef>{1, 0, 0, 0});
  CHECK(RatFunc(Poly(1), 2).series(3) == std::vector<Coef>{1, 2, 3, 4});

  // (1 - z)^2 / (1 - z)^3 normalizes to 1 / (1 - z).
  const Poly one_minus_z = Poly(1) - Poly(Var::z());
  const RatFunc r(one_minus_z * one_minus_z, 3);
  CHECK(r.dpow() == 1);
  CHECK(r.num() == Poly(1));
  CHECK(RatFunc(r.num(), r.dpow()) == r);
  CHECK(RatFunc(one_minus_z, 1) == one);

  // Polynomial case: series is the coefficient list.
  const Poly p = parse_poly("3 + 2*z^2 - z^4");
  CHECK(RatFunc(p, 0).series(5) == std::vector<Coef>{3, 0, 2, 0, -1, 0});

  // Series against the product with (1 - z)^d.
  const RatFunc q(parse_poly("z^2 - 2*z + 5"), 3);
  const auto s = q.series(12);
  Poly back = from_dense(s, Var::z()) * one_minus_z.pow(3);
  for (std::uint32_t k = 0; k <= 12; ++k) {
    if (k > 2) CHECK(dense_coefficients(back, Var::z())[k] == 0);
  }
  CHECK(dense_coefficients(back, Var::z())[0] == 5);

  CHECK(series_to_string({0, 0, 2, 5, 7}) == "2z^2+5z^3+7z^4");
  CHECK(series_to_string({1}) == "1");
  CHECK(series_to_string({0, 0}) == "0");
}

TEST_CASE("rational substitution") {
  const std::map<Var, RatFunc> bind{
      {Var::N(), RatFunc(Poly::var(Var::z(), 2) - Poly(1), 0)},
      {Var::eps(), RatFunc(Poly(1), 1)},
  };
  CHECK(subst_rat(Poly(1), bind) == RatFunc(Poly(1), 0));
  // N eps^3 + 3 eps^2 + 3 N eps + 1 -> -z^2 (3z - 4) / (1 - z)^2
  const RatFunc l = subst_rat(parse_poly("N*eps^3 + 3*eps^2 + 3*N*eps + 1"), bind);
  CHECK(l == RatFunc(parse_poly("-3*z^3 + 4*z^2"), 2));
  CHECK(series_to_string(l.series(7)) == "4z^2+5z^3+6z^4+7z^5+8z^6+9z^7");
  CHECK_THROWS_AS(subst_rat(Poly(Var::u()), bind), DomainError);
}
