#include "chowlaff/badset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <tuple>

#include "parallel.hpp"

namespace chowlaff {

namespace {

// Extension fields and embeddings are deterministic in (p, k), so they
// are memoized; the cached objects are immutable.
std::mutex ext_mutex;

FieldPtr cached_field(std::uint32_t p, std::uint32_t k) {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(ext_mutex);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  FieldPtr f = Field::make(p, k);
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

std::shared_ptr<const Embedding> cached_embedding(const FieldPtr& base, const FieldPtr& ext) {
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>,
                  std::shared_ptr<const Embedding>>
      cache;
  std::lock_guard<std::mutex> lock(ext_mutex);
  auto key = std::make_tuple(base->p(), base->k(), ext->k());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto emb = std::make_shared<const Embedding>(base, ext);
  cache.emplace(key, emb);
  return emb;
}

Poly lift(const Poly& f, const Embedding& emb) {
  std::vector<Fe> cs;
  cs.reserve(f.coeffs().size());
  for (Fe c : f.coeffs()) cs.push_back(emb.up(c));
  return Poly(emb.ext(), std::move(cs));
}

}  // namespace

FiberCoeffs FiberCoeffs::from_index(const FieldPtr& f, int n, std::uint64_t idx) {
  FiberCoeffs fc;
  fc.field = f;
  fc.n = n;
  fc.a.resize(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    fc.a[i] = Fe{static_cast<std::uint32_t>(idx % f->q())};
    idx /= f->q();
  }
  return fc;
}

Poly FiberCoeffs::f_poly() const {
  std::vector<Fe> cs(n + 1, Fe{0});
  for (int i = 0; i + 1 < n; ++i) cs[i + 1] = a[i];
  cs[n] = field->one();
  return Poly(field, std::move(cs));
}

Poly dpoly(const FiberCoeffs& fc, const Poly& alpha) {
  const FieldPtr& field = fc.field;
  if (!alpha.field() || !alpha.field()->compatible(*field))
    fail(errc::field_mismatch, "shift polynomial over the wrong field");
  if (alpha.deg() >= fc.n) fail(errc::invalid_spec, "deg alpha must be < n");
  const int n = fc.n;
  const std::uint32_t npts = static_cast<std::uint32_t>(n) + 1;
  Poly g = fc.f_poly() + alpha;  // monic of degree n

  Poly d;
  if (field->q() >= npts) {
    std::vector<std::pair<Fe, Fe>> pts;
    pts.reserve(npts);
    for (std::uint32_t tv = 0; tv < npts; ++tv)
      pts.emplace_back(Fe{tv}, discriminant(g.add_constant(Fe{tv})));
    d = interpolate(field, pts);
  } else {
    // sample in the smallest extension with q^m >= n+1, then project back
    std::uint32_t m = 2;
    for (std::uint64_t qm = static_cast<std::uint64_t>(field->q()) * field->q(); qm < npts;
         qm *= field->q())
      ++m;
    FieldPtr ext = cached_field(field->p(), field->k() * m);
    auto emb = cached_embedding(field, ext);
    Poly ge = lift(g, *emb);
    std::vector<std::pair<Fe, Fe>> pts;
    pts.reserve(npts);
    for (std::uint32_t tv = 0; tv < npts; ++tv)
      pts.emplace_back(Fe{tv}, discriminant(ge.add_constant(Fe{tv})));
    Poly de = interpolate(ext, pts);
    std::vector<Fe> cs;
    cs.reserve(de.coeffs().size());
    for (Fe c : de.coeffs()) {
      auto down = emb->down(c);
      if (!down)
        fail(errc::consistency_failure,
             "interpolated coefficient escapes the base field: " + de.str());
      cs.push_back(*down);
    }
    d = Poly(field, std::move(cs));
  }
  if (d.deg() > n - 1)
    fail(errc::consistency_failure, "fiber polynomial exceeds degree n-1: " + d.str());
  return d;
}

bool dpoly_root_check(const FiberCoeffs& fc) {
  const FieldPtr& field = fc.field;
  Poly f = fc.f_poly();
  Poly fp = f.derivative();
  Poly d = dpoly(fc, Poly::zero(field));
  for (std::uint32_t cv = 0; cv < field->q(); ++cv) {
    Fe c{cv};
    if (fp.eval(c) == field->zero() &&
        !(d.eval(field->neg(f.eval(c))) == field->zero()))
      return false;
  }
  if (fc.n <= 4) {
    for (std::uint32_t m = 2; m <= 3; ++m) {
      std::uint64_t qm = 1;
      bool fits = true;
      for (std::uint32_t i = 0; i < m; ++i) {
        qm *= field->q();
        if (qm > Field::hard_bound) fits = false;
      }
      if (!fits) continue;
      FieldPtr ext = cached_field(field->p(), field->k() * m);
      auto emb = cached_embedding(field, ext);
      Poly fe = lift(f, *emb), fpe = lift(fp, *emb), de = lift(d, *emb);
      for (std::uint32_t cv = 0; cv < ext->q(); ++cv) {
        Fe c{cv};
        if (fpe.eval(c) == ext->zero() &&
            !(de.eval(ext->neg(fe.eval(c))) == ext->zero()))
          return false;
      }
    }
  }
  return true;
}

bool good_predicate(const FiberCoeffs& fc, const CorrelationSpec& spec, std::size_t i) {
  if (i >= spec.shifts().size() || spec.shifts()[i].eps % 2 == 0)
    fail(errc::invalid_spec, "index i must pick an odd eps");
  Poly di = dpoly(fc, spec.shifts()[i].alpha);
  if (di.deg() < 1) return false;
  if (!is_squarefree(di)) return false;
  for (std::size_t j = 0; j < spec.shifts().size(); ++j) {
    if (j == i) continue;
    if (gcd(di, dpoly(fc, spec.shifts()[j].alpha)).deg() != 0) return false;
  }
  return true;
}

std::int64_t fiber_char_sum(const FiberCoeffs& fc, const CorrelationSpec& spec) {
  const FieldPtr& field = fc.field;
  std::vector<Poly> d;
  d.reserve(spec.r());
  for (const Shift& s : spec.shifts()) d.push_back(dpoly(fc, s.alpha));
  std::int64_t sum = 0;
  for (std::uint32_t tv = 0; tv < field->q(); ++tv) {
    Fe t{tv}, acc = field->one();
    for (std::size_t j = 0; j < d.size(); ++j) {
      Fe v = d[j].eval(t);
      acc = field->mul(acc, spec.shifts()[j].eps == 1 ? v : field->mul(v, v));
    }
    sum += field->chi2(acc);
  }
  return sum;
}

bool weil_fiber_check(const FiberCoeffs& fc, const CorrelationSpec& spec, std::size_t i) {
  const FieldPtr& field = fc.field;
  if (i >= spec.shifts().size() || spec.shifts()[i].eps % 2 == 0)
    fail(errc::invalid_spec, "index i must pick an odd eps");
  std::vector<Poly> d;
  d.reserve(spec.r());
  std::int64_t deg_p = 0;
  for (const Shift& s : spec.shifts()) {
    d.push_back(dpoly(fc, s.alpha));
    if (d.back().deg() > 0) deg_p += static_cast<std::int64_t>(s.eps) * d.back().deg();
  }
  std::int64_t sum = 0;
  for (std::uint32_t tv = 0; tv < field->q(); ++tv) {
    Fe t{tv}, acc = field->one();
    for (std::size_t j = 0; j < d.size(); ++j) {
      Fe v = d[j].eval(t);
      acc = field->mul(acc, spec.shifts()[j].eps == 1 ? v : field->mul(v, v));
    }
    sum += field->chi2(acc);
  }
  return sum * sum <= (deg_p - 1) * (deg_p - 1) * static_cast<std::int64_t>(field->q());
}

BadSetReport badset_scan(const CorrelationSpec& spec, std::size_t i, std::uint64_t budget,
                         int workers) {
  const FieldPtr& field = spec.field();
  const int n = spec.n();
  const int r = spec.r();
  if (n < 2) fail(errc::invalid_spec, "bad-set scan needs n >= 2");
  if (i >= spec.shifts().size() || spec.shifts()[i].eps % 2 == 0)
    fail(errc::invalid_spec, "chosen index must have odd eps");
  const std::uint64_t total = spec.fibers();
  if (total > budget)
    fail(errc::budget_exceeded,
         "scan of q^{n-1} = " + std::to_string(total) + " fibers over budget");

  const bool p_divides_n = n % static_cast<int>(field->p()) == 0;
  // x^{n-1} coefficients of alpha_j - alpha_i, for the edge locus
  std::vector<Fe> a_top_shift(spec.shifts().size());
  for (std::size_t j = 0; j < spec.shifts().size(); ++j)
    a_top_shift[j] =
        field->sub(spec.shifts()[j].alpha.coeff(n - 1), spec.shifts()[i].alpha.coeff(n - 1));

  struct Part {
    std::uint64_t count_A = 0, count_B = 0, count_good = 0;
    std::uint64_t edge_count = 0, edge_excluded = 0;
    std::vector<std::uint64_t> per_j;
    bool cover = true;
    std::vector<std::vector<std::uint32_t>> wit_A;
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> wit_B;
  };

  auto parts = run_chunked<Part>(total, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    Part part;
    part.per_j.assign(spec.shifts().size(), 0);
    std::vector<Poly> d(spec.shifts().size());
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      FiberCoeffs fc = FiberCoeffs::from_index(field, n, idx);
      for (std::size_t j = 0; j < spec.shifts().size(); ++j)
        d[j] = dpoly(fc, spec.shifts()[j].alpha);

      bool edge = false;
      if (p_divides_n) {
        if (fc.a_top() == field->zero()) edge = true;
        for (std::size_t j = 0; !edge && j < spec.shifts().size(); ++j)
          if (j != i && field->add(fc.a_top(), a_top_shift[j]) == field->zero()) edge = true;
      }
      if (edge) ++part.edge_count;

      bool all_const = true;
      for (const Poly& dj : d)
        if (dj.deg() > 0) all_const = false;

      bool in_a = false, in_b = false;
      bool excluded = edge && all_const;
      if (excluded) {
        ++part.edge_excluded;
      } else {
        in_a = d[i].deg() < 1 || discriminant(d[i]) == field->zero();
        for (std::size_t j = 0; j < spec.shifts().size(); ++j) {
          if (j == i) continue;
          if (gcd(d[i], d[j]).deg() != 0) {
            ++part.per_j[j];
            in_b = true;
          }
        }
        if (in_a) {
          ++part.count_A;
          if (part.wit_A.size() < 10) {
            std::vector<std::uint32_t> w;
            for (Fe c : fc.a) w.push_back(c.v);
            part.wit_A.push_back(std::move(w));
          }
        }
        if (in_b) {
          ++part.count_B;
          if (part.wit_B.size() < 10) {
            std::vector<std::uint32_t> w;
            for (Fe c : fc.a) w.push_back(c.v);
            std::size_t first_j = 0;
            for (std::size_t j = 0; j < spec.shifts().size(); ++j)
              if (j != i && gcd(d[i], d[j]).deg() != 0) {
                first_j = j;
                break;
              }
            part.wit_B.emplace_back(first_j, std::move(w));
          }
        }
      }

      bool good = good_predicate(fc, spec, i);
      if (good) ++part.count_good;
      bool expected_good = excluded ? false : (!in_a && !in_b);
      if (good != expected_good) part.cover = false;
    }
    return part;
  });

  BadSetReport rep;
  rep.q = field->q();
  rep.n = n;
  rep.r = r;
  rep.chosen_i = i;
  rep.count_B_per_j.assign(spec.shifts().size(), 0);
  rep.cover_holds = true;
  for (const Part& p : parts) {
    rep.count_A += p.count_A;
    rep.count_B += p.count_B;
    rep.count_good += p.count_good;
    rep.edge_count += p.edge_count;
    rep.edge_excluded += p.edge_excluded;
    for (std::size_t j = 0; j < p.per_j.size(); ++j) rep.count_B_per_j[j] += p.per_j[j];
    rep.cover_holds = rep.cover_holds && p.cover;
    for (const auto& w : p.wit_A)
      if (rep.witnesses_A.size() < 10) rep.witnesses_A.push_back(w);
    for (const auto& w : p.wit_B)
      if (rep.witnesses_B.size() < 10) rep.witnesses_B.push_back(w);
  }
  std::uint64_t qnm2 = 1;
  for (int e = 0; e < n - 2; ++e) qnm2 *= field->q();
  rep.bound_A = 3ull * n * n * qnm2;
  rep.bound_B = 3ull * (r - 1) * n * n * qnm2;
  rep.bounds_hold = rep.count_A <= rep.bound_A && rep.count_B <= rep.bound_B;
  // A, B and the excluded edge fibers must cover everything not good
  if (rep.count_A + rep.count_B + rep.edge_excluded + rep.count_good < total)
    rep.cover_holds = false;
  return rep;
}

namespace {

// cofactor expansion along the first row
Fe det3(const FieldPtr& f, const Fe m[3][3]) {
  Fe t0 = f->sub(f->mul(m[1][1], m[2][2]), f->mul(m[1][2], m[2][1]));
  Fe t1 = f->sub(f->mul(m[1][0], m[2][2]), f->mul(m[1][2], m[2][0]));
  Fe t2 = f->sub(f->mul(m[1][0], m[2][1]), f->mul(m[1][1], m[2][0]));
  return f->add(f->sub(f->mul(m[0][0], t0), f->mul(m[0][1], t1)), f->mul(m[0][2], t2));
}

bool det_pair_ok(const FieldPtr& f, Fe r1, Fe r2) {
  Fe two = f->from_int(2), three = f->from_int(3);
  Fe m[3][3] = {
      {f->mul(three, f->mul(r1, r1)), f->mul(two, r1), f->one()},
      {f->mul(three, f->mul(r2, r2)), f->mul(two, r2), f->one()},
      {f->sub(f->pow(r2, 3), f->pow(r1, 3)), f->sub(f->mul(r2, r2), f->mul(r1, r1)),
       f->sub(r2, r1)},
  };
  return det3(f, m) == f->pow(f->sub(r1, r2), 4);
}

}  // namespace

bool det_identity_check(const FieldPtr& field, int trials, std::uint64_t seed) {
  if (field->q() < 5) fail(errc::invalid_spec, "determinant check needs q >= 5");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    Fe r1{static_cast<std::uint32_t>(rng() % field->q())};
    Fe r2{static_cast<std::uint32_t>(rng() % field->q())};
    if (r1 == r2) {
      --t;
      continue;
    }
    if (!det_pair_ok(field, r1, r2)) return false;
  }
  return true;
}

bool det_identity_exhaustive(const FieldPtr& field) {
  for (std::uint32_t a = 0; a < field->q(); ++a)
    for (std::uint32_t b = 0; b < field->q(); ++b)
      if (!det_pair_ok(field, Fe{a}, Fe{b})) return false;
  return true;
}

bool cubic_formula_check(const FieldPtr& field) {
  const bool three_divides = field->p() == 3;
  Fe c4 = field->from_int(4), c16 = field->from_int(16), c18 = field->from_int(18),
     c27 = field->from_int(27), c3 = field->from_int(3);
  for (std::uint32_t av = 0; av < field->q(); ++av) {
    for (std::uint32_t bv = 0; bv < field->q(); ++bv) {
      Fe a{av}, b{bv};
      FiberCoeffs fc{field, 3, {b, a}};  // f = x^3 + a x^2 + b x
      Poly d = dpoly(fc, Poly::zero(field));
      Fe a2 = field->mul(a, a), b2 = field->mul(b, b);
      Fe c0 = field->sub(field->mul(a2, b2), field->mul(c4, field->mul(b2, b)));
      if (!three_divides) {
        Fe c1 = field->sub(field->mul(c18, field->mul(a, b)),
                           field->mul(c4, field->mul(a2, a)));
        Poly expected(field, {c0, c1, field->neg(c27)});
        if (d != expected) return false;
        Fe lhs = discriminant(d);
        Fe rhs = field->mul(c16, field->pow(field->sub(a2, field->mul(c3, b)), 3));
        if (!(lhs == rhs)) return false;
      } else {
        Fe c1 = field->neg(field->mul(c4, field->mul(a2, a)));
        Poly expected(field, {c0, c1});
        if (d != expected) return false;
      }
    }
  }
  return true;
}

}  // namespace chowlaff
