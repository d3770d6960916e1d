#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "chowlaff/fpoly.hpp"

using namespace chowlaff;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return errc::invalid_spec;
}

// Test-only oracle: the resultant as the determinant of the Sylvester
// matrix, evaluated by Gaussian elimination. Fully independent of the
// remainder-chain path in the library.
Fe sylvester_resultant(const Poly& f, const Poly& g) {
  const FieldPtr& fd = f.field();
  const int n = f.deg(), m = g.deg();
  REQUIRE(n >= 0);
  REQUIRE(m >= 0);
  const int size = n + m;
  if (size == 0) return fd->one();
  std::vector<std::vector<Fe>> mat(size, std::vector<Fe>(size, Fe{0}));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) mat[r][r + j] = f.coeff(n - j);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) mat[m + r][r + j] = g.coeff(m - j);
  Fe det = fd->one();
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (!(mat[r][col] == Fe{0})) {
        piv = r;
        break;
      }
    if (piv < 0) return fd->zero();
    if (piv != col) {
      std::swap(mat[piv], mat[col]);
      det = fd->neg(det);
    }
    det = fd->mul(det, mat[col][col]);
    Fe inv = fd->inv(mat[col][col]);
    for (int r = col + 1; r < size; ++r) {
      Fe factor = fd->mul(mat[r][col], inv);
      if (factor == Fe{0}) continue;
      for (int c = col; c < size; ++c)
        mat[r][c] = fd->sub(mat[r][c], fd->mul(factor, mat[col][c]));
    }
  }
  return det;
}

Poly random_nonzero(const FieldPtr& fd, int max_deg, std::mt19937_64& rng) {
  while (true) {
    std::vector<Fe> cs(1 + rng() % (max_deg + 1));
    for (Fe& c : cs) c = Fe{static_cast<std::uint32_t>(rng() % fd->q())};
    Poly p(fd, std::move(cs));
    if (!p.is_zero()) return p;
  }
}

// oracle-grade irreducibility: trial division by every monic polynomial
// of degree <= deg/2
bool irreducible_by_trial_division(const Poly& f) {
  const FieldPtr& fd = f.field();
  for (int d = 1; 2 * d <= f.deg(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= fd->q();
    for (std::uint64_t idx = 0; idx < count; ++idx)
      if (divmod(f, Poly::monic_from_index(fd, d, idx)).second.is_zero()) return false;
  }
  return f.deg() >= 1;
}

}  // namespace

TEST_CASE("ring operations and gcd examples") {
  FieldPtr f3 = Field::make_q(3);
  Poly a = Poly::from_ints(f3, {2, 0, 1});  // x^2 + 2 = (x-1)(x+1)
  Poly b = Poly::from_ints(f3, {1, 1});     // x + 1
  CHECK(gcd(a, b) == b);

  FieldPtr f5 = Field::make_q(5);
  auto [quo, rem] = divmod(Poly::monomial(f5, 3, f5->one()), Poly::monomial(f5, 2, f5->one()));
  CHECK(quo == Poly::x(f5));
  CHECK(rem.is_zero());

  FieldPtr f7 = Field::make_q(7);
  Poly f = Poly::from_ints(f7, {3, 0, 2, 1});
  CHECK(gcd(f, f) == f.monic());
  CHECK(gcd(Poly::zero(f7), Poly::zero(f7)).is_zero());
  CHECK(gcd(f, Poly::zero(f7)) == f.monic());

  CHECK(code_of([&] { return divmod(f, Poly::zero(f7)); }) == errc::division_by_zero);
  FieldPtr f5b = Field::make_q(5);
  CHECK(code_of([&] { return f + Poly::one(f5b); }) == errc::field_mismatch);

  // degree bookkeeping
  CHECK(Poly::zero(f7).deg() == Poly::neg_inf_deg);
  CHECK((Poly::from_ints(f7, {1, 1}) + Poly::from_ints(f7, {1, 6})).deg() == 0);
}

TEST_CASE("derivative handles characteristic-p collapses") {
  FieldPtr f5 = Field::make_q(5);
  CHECK(Poly::monomial(f5, 5, f5->one()).derivative().is_zero());  // (x^5)' = 0

  FieldPtr f3 = Field::make_q(3);
  // (x^3 + a x^2 + b x)' = 2a x + b with the cubic term gone; a=1, b=2
  Poly g = Poly::from_ints(f3, {0, 2, 1, 1});
  CHECK(g.derivative() == Poly::from_ints(f3, {2, 2}));

  FieldPtr f7 = Field::make_q(7);
  Poly h = Poly::from_ints(f7, {0, 1, 0, 1});  // x^3 + x
  CHECK(h.derivative() == Poly::from_ints(f7, {1, 0, 3}));
}

TEST_CASE("evaluation and interpolation") {
  FieldPtr f3 = Field::make_q(3);
  CHECK(Poly::from_ints(f3, {1, 0, 1}).eval(f3->one()) == f3->elem(2));  // x^2+1 at 1

  std::vector<std::pair<Fe, Fe>> pts = {{Fe{0}, Fe{1}}, {Fe{1}, Fe{2}}, {Fe{2}, Fe{0}}};
  Poly p = interpolate(f3, pts);
  CHECK(p.deg() < 3);
  for (const auto& [x, y] : pts) CHECK(p.eval(x) == y);

  CHECK(code_of([&] {
          return interpolate(f3, {{Fe{1}, Fe{0}}, {Fe{1}, Fe{1}}});
        }) == errc::duplicate_node);

  // samples of a known cubic at 4 nodes reproduce it exactly
  FieldPtr f7 = Field::make_q(7);
  Poly cubic = Poly::from_ints(f7, {4, 0, 3, 1});
  std::vector<std::pair<Fe, Fe>> nodes;
  for (std::uint32_t x = 0; x < 4; ++x) nodes.emplace_back(Fe{x}, cubic.eval(Fe{x}));
  CHECK(interpolate(f7, nodes) == cubic);

  // randomized roundtrip across fields, extension included
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {5u, 9u}) {
    FieldPtr f = Field::make_q(q);
    for (int t = 0; t < 50; ++t) {
      Poly r = random_nonzero(f, 4, rng);
      std::vector<std::pair<Fe, Fe>> sample;
      for (std::uint32_t x = 0; x <= static_cast<std::uint32_t>(r.deg()); ++x)
        sample.emplace_back(Fe{x}, r.eval(Fe{x}));
      CHECK(interpolate(f, sample) == r);
    }
  }
}

TEST_CASE("resultant: examples, Sylvester oracle, bilinearity") {
  FieldPtr f5 = Field::make_q(5);
  for (std::uint32_t a = 0; a < 5; ++a)
    for (std::uint32_t b = 0; b < 5; ++b) {
      Poly fa(f5, {f5->neg(Fe{a}), f5->one()});
      Poly fb(f5, {f5->neg(Fe{b}), f5->one()});
      CHECK(resultant(fa, fb) == f5->sub(Fe{a}, Fe{b}));  // Res(x-a, x-b) = a-b
    }

  FieldPtr f3 = Field::make_q(3);
  CHECK(resultant(Poly::from_ints(f3, {1, 0, 1}), Poly::x(f3)) == f3->one());
  CHECK(code_of([&] { return resultant(Poly::x(f3), Poly::zero(f3)); }) ==
        errc::zero_polynomial);

  // constants on either side
  FieldPtr f7 = Field::make_q(7);
  Poly c2 = Poly::constant(f7, f7->elem(2));
  Poly g3 = Poly::from_ints(f7, {1, 2, 0, 1});
  CHECK(resultant(c2, g3) == f7->pow(f7->elem(2), 3));
  CHECK(resultant(g3, c2) == f7->pow(f7->elem(2), 3));

  // Euclidean chain vs Sylvester determinant, degrees up to 6
  std::mt19937_64 rng(23);
  for (std::uint32_t q : {7u, 9u}) {
    FieldPtr f = Field::make_q(q);
    for (int t = 0; t < 300; ++t) {
      Poly a = random_nonzero(f, 6, rng);
      Poly b = random_nonzero(f, 6, rng);
      CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
  }

  // Res(F, G1 G2) = Res(F, G1) Res(F, G2)
  for (std::uint32_t q : {3u, 5u, 9u}) {
    FieldPtr f = Field::make_q(q);
    for (int t = 0; t < 100; ++t) {
      Poly a = random_nonzero(f, 4, rng);
      Poly g1 = random_nonzero(f, 4, rng);
      Poly g2 = random_nonzero(f, 4, rng);
      CHECK(resultant(a, g1 * g2) == f->mul(resultant(a, g1), resultant(a, g2)));
    }
  }
}

TEST_CASE("discriminant formulas for small degrees") {
  // disc(x^2 + a x + t) = a^2 - 4t, coefficient-wise over F_5 and F_7
  for (std::uint32_t q : {5u, 7u}) {
    FieldPtr f = Field::make_q(q);
    Fe four = f->from_int(4);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t t = 0; t < q; ++t) {
        Poly p = Poly(f, {Fe{t}, Fe{a}, f->one()});
        CHECK(discriminant(p) == f->sub(f->mul(Fe{a}, Fe{a}), f->mul(four, Fe{t})));
      }
  }

  // disc(x^3 + a x^2 + b x + t) = (a^2 b^2 - 4 b^3) + (18 a b - 4 a^3) t - 27 t^2
  for (std::uint32_t q : {5u, 7u}) {
    FieldPtr f = Field::make_q(q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t t = 0; t < q; ++t) {
          Poly p = Poly(f, {Fe{t}, Fe{b}, Fe{a}, f->one()});
          std::int64_t ai = a, bi = b, ti = t;
          Fe expect = f->from_int(ai * ai * bi * bi - 4 * bi * bi * bi +
                                  (18 * ai * bi - 4 * ai * ai * ai) * ti - 27 * ti * ti);
          CHECK(discriminant(p) == expect);
        }
  }

  FieldPtr f5 = Field::make_q(5);
  for (std::uint32_t c = 0; c < 5; ++c)
    CHECK(discriminant(Poly(f5, {Fe{c}, f5->one()})) == f5->one());  // disc(x - c) = 1
  CHECK(discriminant(Poly::monomial(f5, 5, f5->one())) == f5->zero());  // (x^5)' = 0
  CHECK(code_of([&] { return discriminant(Poly::one(f5)); }) == errc::constant_polynomial);
  CHECK(code_of([&] { return discriminant(Poly::zero(f5)); }) == errc::zero_polynomial);

  // non-monic degree-2 exercises the lc^{-1} branch: disc(c f) = c^{2n-2} disc(f)
  FieldPtr f7 = Field::make_q(7);
  Poly g = Poly::from_ints(f7, {3, 1, 1});
  Poly g2 = g.scaled(f7->elem(2));
  CHECK(discriminant(g2) == f7->mul(f7->pow(f7->elem(2), 2), discriminant(g)));
}

TEST_CASE("disc = 0 exactly on the non-squarefree polynomials") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    FieldPtr f = Field::make_q(q);
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Poly p = Poly::monic_from_index(f, n, idx);
        CHECK((discriminant(p) == f->zero()) == !is_squarefree(p));
      }
    }
  }
}

TEST_CASE("squarefree detection examples") {
  FieldPtr f3 = Field::make_q(3);
  CHECK(is_squarefree(Poly::from_ints(f3, {1, 0, 1})));     // x^2 + 1 irreducible
  CHECK(!is_squarefree(Poly::from_ints(f3, {1, 2, 1})));    // (x+1)^2
  CHECK(!is_squarefree(Poly::monomial(f3, 3, f3->one())));  // x^3, derivative 0
  CHECK(is_squarefree(Poly::one(f3)));
}

TEST_CASE("weighted homogeneity of the discriminant") {
  for (std::uint32_t q : {3u, 5u}) {
    FieldPtr f = Field::make_q(q);
    for (int n = 2; n <= 4; ++n) {
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Poly p = Poly::monic_from_index(f, n, idx);
        Fe d = discriminant(p);
        for (std::uint32_t lv = 1; lv < q; ++lv) {
          Fe lambda{lv};
          std::vector<Fe> cs(n + 1);
          for (int i = 0; i <= n; ++i) cs[i] = f->mul(p.coeff(i), f->pow(lambda, n - i));
          CHECK(discriminant(Poly(f, std::move(cs))) ==
                f->mul(f->pow(lambda, static_cast<std::uint64_t>(n) * (n - 1)), d));
        }
      }
    }
  }
}

TEST_CASE("factor counting without factoring matches the full factorization") {
  FieldPtr f3 = Field::make_q(3);
  CHECK(factor_count(Poly::from_ints(f3, {2, 0, 1})) == 2);  // (x-1)(x+1)
  CHECK(factor_count(Poly::from_ints(f3, {1, 0, 1})) == 1);  // irreducible
  {
    auto fs = factorize(Poly::from_ints(f3, {2, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == Poly::from_ints(f3, {1, 1}));  // x + 1
    CHECK(fs[1].first == Poly::from_ints(f3, {2, 1}));  // x + 2
    CHECK(fs[0].second == 1);
    CHECK(fs[1].second == 1);
  }

  FieldPtr f5 = Field::make_q(5);
  Poly all_linear = Poly::one(f5);
  for (std::uint32_t c = 0; c < 5; ++c) all_linear = all_linear * Poly(f5, {Fe{c}, f5->one()});
  CHECK(factor_count(all_linear) == 5);

  CHECK(code_of([&] { return factor_count(Poly::one(f5)); }) == errc::constant_polynomial);
  CHECK(code_of([&] { return factorize(Poly::zero(f5)); }) == errc::zero_polynomial);

  for (std::uint32_t q : {3u, 5u, 7u}) {
    FieldPtr f = Field::make_q(q);
    for (int n = 1; n <= 4; ++n) {
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Poly p = Poly::monic_from_index(f, n, idx);
        auto factors = factorize(p);
        CHECK(factor_count(p) == static_cast<int>(factors.size()));
        Poly product = Poly::one(f);
        int degsum = 0;
        for (const auto& [fac, mult] : factors) {
          CHECK(irreducible_by_trial_division(fac));
          CHECK(fac.lc() == f->one());
          degsum += fac.deg() * mult;
          for (int e = 0; e < mult; ++e) product = product * fac;
        }
        CHECK(product == p);
        CHECK(degsum == n);
      }
    }
  }

  // p-th powers take the Frobenius route through the p-th root
  Poly pth = Poly::monomial(f3, 6, f3->one()) + Poly::one(f3);  // x^6 + 1 = (x^2+1)^3
  auto fs = factorize(pth);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].first == Poly::from_ints(f3, {1, 0, 1}));
  CHECK(fs[0].second == 3);
  CHECK(factor_count(pth) == 1);

  // determinism: identical seeds give identical output
  std::mt19937_64 rng(31);
  FieldPtr f7 = Field::make_q(7);
  for (int t = 0; t < 20; ++t) {
    Poly p = random_nonzero(f7, 6, rng);
    if (p.deg() < 1) continue;
    CHECK(factorize(p, 5) == factorize(p, 5));
  }
}

TEST_CASE("multivariate zero counts") {
  FieldPtr f5 = Field::make_q(5);
  MultiPoly line = MultiPoly::from_terms(f5, 2, {{{1, 0, 0}, f5->one()}});  // X1
  CHECK(mv_count_zeros(line) == 5);

  MultiPoly cross = MultiPoly::from_terms(f5, 2, {{{1, 1, 0}, f5->one()}});  // X1 X2
  CHECK(mv_count_zeros(cross) == 9);  // two lines minus the shared origin

  MultiPoly zero(f5, 2);
  CHECK(code_of([&] { return mv_count_zeros(zero); }) == errc::zero_polynomial);
  MultiPoly big = MultiPoly::from_terms(f5, 3, {{{1, 0, 0}, f5->one()}});
  CHECK(code_of([&] { return mv_count_zeros(big, 10); }) == errc::budget_exceeded);

  // cancelling terms keep the invariant "no zero coefficients stored"
  MultiPoly h(f5, 1);
  h.add_term({2, 0, 0}, f5->elem(3));
  h.add_term({2, 0, 0}, f5->elem(2));
  CHECK(h.is_zero());

  // zero-count bound on random instances
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    FieldPtr f = Field::make_q(q);
    for (int m = 1; m <= 3; ++m)
      for (int d = 1; d <= 4; ++d)
        for (int t = 0; t < 25; ++t) {
          MultiPoly h2(f, m);
          while (h2.is_zero()) {
            for (int term = 0; term < 4; ++term) {
              MultiPoly::Exps e{0, 0, 0};
              int sum = 0;
              do {
                sum = 0;
                for (int i = 0; i < m; ++i) {
                  e[i] = static_cast<std::uint16_t>(rng() % (d + 1));
                  sum += e[i];
                }
              } while (sum > d);
              h2.add_term(e, Fe{static_cast<std::uint32_t>(rng() % q)});
            }
          }
          std::uint64_t qm1 = 1;
          for (int i = 0; i + 1 < m; ++i) qm1 *= q;
          CHECK(mv_count_zeros(h2) <= static_cast<std::uint64_t>(h2.total_degree()) * qm1);
        }
  }
}
