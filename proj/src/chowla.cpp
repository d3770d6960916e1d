#include "chowlaff/chowla.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "chowlaff/badset.hpp"
#include "chowlaff/mobius.hpp"
#include "parallel.hpp"

namespace chowlaff {

CorrelationSpec CorrelationSpec::make(FieldPtr field, int n, std::vector<Shift> shifts) {
  if (!field) fail(errc::invalid_spec, "missing field");
  if (n < 1) fail(errc::invalid_spec, "degree n must be >= 1");
  if (shifts.empty()) fail(errc::invalid_spec, "at least one shift required");
  bool some_odd = false;
  for (std::size_t j = 0; j < shifts.size(); ++j) {
    const Shift& s = shifts[j];
    if (s.eps != 1 && s.eps != 2) fail(errc::invalid_spec, "eps must be 1 or 2");
    if (s.eps == 1) some_odd = true;
    if (!s.alpha.field() || !s.alpha.field()->compatible(*field))
      fail(errc::invalid_spec, "shift polynomial over the wrong field");
    if (s.alpha.deg() >= n) fail(errc::invalid_spec, "deg alpha_" + std::to_string(j + 1) +
                                                         " must be < n");
    for (std::size_t l = 0; l < j; ++l)
      if (shifts[l].alpha == s.alpha) fail(errc::invalid_spec, "shifts must be distinct");
  }
  if (!some_odd) fail(errc::invalid_spec, "eps values must not all be even");

  CorrelationSpec spec;
  spec.field_ = std::move(field);
  spec.n_ = n;
  spec.shifts_ = std::move(shifts);
  return spec;
}

namespace {

// q^e, saturating at uint64 max so budget comparisons stay correct
std::uint64_t sat_pow(std::uint64_t q, int e) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > UINT64_MAX / q) return UINT64_MAX;
    v *= q;
  }
  return v;
}

}  // namespace

std::uint64_t CorrelationSpec::qn() const { return sat_pow(q(), n_); }

std::uint64_t CorrelationSpec::fibers() const { return sat_pow(q(), n_ - 1); }

int CorrelationSpec::eps_sum() const {
  int s = 0;
  for (const Shift& sh : shifts_) s += sh.eps;
  return s;
}

std::string CorrelationSpec::str() const {
  std::string s = "q=" + std::to_string(q()) + " n=" + std::to_string(n_) + " shifts=";
  for (std::size_t j = 0; j < shifts_.size(); ++j) {
    if (j) s += ",";
    s += shifts_[j].alpha.str() + "^" + std::to_string(shifts_[j].eps);
  }
  return s;
}

BoundValue theorem_bound(const CorrelationSpec& spec) {
  const long double q = spec.q();
  const long double r = spec.r();
  const long double n = spec.n();
  if (spec.n() == 1) return {q, true};
  if (spec.r() == 1) return {static_cast<long double>(spec.qn()), true};
  long double q_pow = 1;
  for (int i = 0; i + 1 < spec.n(); ++i) q_pow *= q;  // q^{n-1}, exact in 64-bit mantissa
  long double main_term;
  std::uint64_t s = static_cast<std::uint64_t>(llroundl(sqrtl(q)));
  if (s * s == spec.q()) {
    main_term = 2 * r * n * q_pow * s;  // q is a perfect square: exact
  } else {
    long double root = nextafterl(sqrtl(q), 2 * q);
    main_term = nextafterl(2 * r * n * q_pow * root, HUGE_VALL);
  }
  return {main_term + 3 * r * n * n * q_pow, false};
}

namespace {

CorrelationResult finish(const CorrelationSpec& spec, Method method, std::int64_t value,
                         std::uint64_t skipped) {
  CorrelationResult res;
  res.value = value;
  res.num = value;
  res.den = spec.qn();
  BoundValue b = theorem_bound(spec);
  res.bound = b.value;
  res.bound_trivial = b.trivial;
  res.method = method;
  res.summands = spec.qn();
  res.skipped = skipped;
  return res;
}

void check_budget(const CorrelationSpec& spec, std::uint64_t budget) {
  if (spec.qn() > budget)
    fail(errc::budget_exceeded, "correlation needs " + std::to_string(spec.qn()) +
                                    " summands, budget is " + std::to_string(budget));
}

struct PartialSum {
  std::int64_t sum = 0;
  std::uint64_t skipped = 0;
};

}  // namespace

CorrelationResult correlation_direct(const CorrelationSpec& spec, std::uint64_t budget,
                                     int workers) {
  check_budget(spec, budget);
  const FieldPtr& field = spec.field();
  auto parts = run_chunked<PartialSum>(
      spec.qn(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        PartialSum part;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          Poly f = Poly::monic_from_index(field, spec.n(), idx);
          int prod = 1;
          for (const Shift& s : spec.shifts()) {
            int mu = mobius_factor(f + s.alpha);
            prod *= s.eps == 1 ? mu : mu * mu;
            if (prod == 0) break;
          }
          if (prod == 0) ++part.skipped;
          else part.sum += prod;
        }
        return part;
      });
  PartialSum total;
  for (const PartialSum& p : parts) {
    total.sum += p.sum;
    total.skipped += p.skipped;
  }
  return finish(spec, Method::direct, total.sum, total.skipped);
}

CorrelationResult correlation_charsum(const CorrelationSpec& spec, std::uint64_t budget,
                                      int workers) {
  check_budget(spec, budget);
  const FieldPtr& field = spec.field();
  if (field->p() == 2) fail(errc::even_characteristic, "character-sum route needs odd q");
  auto parts = run_chunked<PartialSum>(
      spec.fibers(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        PartialSum part;
        std::vector<Poly> d;
        d.reserve(spec.r());
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          FiberCoeffs fc = FiberCoeffs::from_index(field, spec.n(), idx);
          d.clear();
          for (const Shift& s : spec.shifts()) d.push_back(dpoly(fc, s.alpha));
          for (std::uint32_t tv = 0; tv < field->q(); ++tv) {
            Fe t{tv};
            Fe acc = field->one();
            for (std::size_t j = 0; j < d.size(); ++j) {
              Fe v = d[j].eval(t);
              acc = field->mul(acc, spec.shifts()[j].eps == 1 ? v : field->mul(v, v));
            }
            int chi = field->chi2(acc);
            if (chi == 0) ++part.skipped;
            else part.sum += chi;
          }
        }
        return part;
      });
  PartialSum total;
  for (const PartialSum& p : parts) {
    total.sum += p.sum;
    total.skipped += p.skipped;
  }
  // mu(F+alpha_j)^{eps_j} contributes (-1)^{n eps_j} chi2(disc^{eps_j}),
  // so the whole sum carries the factor (-1)^{n sum eps_j}.
  std::int64_t sign = (spec.n() * spec.eps_sum()) % 2 == 0 ? 1 : -1;
  return finish(spec, Method::charsum, sign * total.sum, total.skipped);
}

std::vector<SweepRow> sweep(const SweepTemplate& tmpl, std::vector<std::uint32_t> q_list,
                            std::uint64_t budget, int workers, bool timings) {
  if (tmpl.r < 1 || static_cast<int>(tmpl.eps.size()) != tmpl.r)
    fail(errc::invalid_spec, "sweep template needs r eps entries");
  std::sort(q_list.begin(), q_list.end());
  q_list.erase(std::unique(q_list.begin(), q_list.end()), q_list.end());

  std::vector<SweepRow> rows;
  for (std::uint32_t qv : q_list) {
    SweepRow row;
    row.q = qv;
    row.n = tmpl.n;
    row.r = tmpl.r;
    try {
      FieldPtr field = Field::make_q(qv);
      std::vector<Shift> shifts;
      auto custom = tmpl.alpha_by_q.find(qv);
      if (custom != tmpl.alpha_by_q.end()) {
        if (static_cast<int>(custom->second.size()) != tmpl.r)
          fail(errc::invalid_spec, "alpha override must list r shifts");
        for (int j = 0; j < tmpl.r; ++j)
          shifts.push_back({Poly::from_indices(field, custom->second[j]), tmpl.eps[j]});
      } else {
        if (static_cast<std::uint32_t>(tmpl.r) > qv) {
          row.status = "skipped";
          rows.push_back(row);
          continue;
        }
        for (int j = 0; j < tmpl.r; ++j)
          shifts.push_back({Poly::constant(field, field->elem(j)), tmpl.eps[j]});
      }
      CorrelationSpec spec = CorrelationSpec::make(field, tmpl.n, std::move(shifts));
      auto t0 = std::chrono::steady_clock::now();
      CorrelationResult direct = correlation_direct(spec, budget, workers);
      CorrelationResult charsum = correlation_charsum(spec, budget, workers);
      auto t1 = std::chrono::steady_clock::now();
      if (direct.value != charsum.value)
        fail(errc::consistency_failure,
             "methods disagree on " + spec.str() + ": direct=" + std::to_string(direct.value) +
                 " charsum=" + std::to_string(charsum.value));
      row.c_direct = direct.value;
      row.c_charsum = charsum.value;
      row.bound = direct.bound;
      row.normalized = static_cast<long double>(direct.value) / direct.den;
      row.normalized_bound = direct.bound / direct.den;
      if (timings)
        row.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      row.status = "ok";
    } catch (const Error& e) {
      row.status = std::string("error:") + errc_name(e.code());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chowlaff
