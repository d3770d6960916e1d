#include "chowlaff/selftest.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "chowlaff/badset.hpp"
#include "chowlaff/chowla.hpp"
#include "chowlaff/mobius.hpp"

namespace chowlaff {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void emit(std::ostream& out, const CheckResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.name << " -- " << r.detail
      << " (" << buf << ")\n"
      << std::flush;
}

CheckResult timed(int id, const std::string& name,
                  const std::function<std::pair<bool, std::string>()>& body,
                  double time_limit = 0) {
  CheckResult r;
  r.id = id;
  r.name = name;
  auto t0 = Clock::now();
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = detail;
  } catch (const Error& e) {
    r.pass = false;
    r.detail = e.what();
  }
  r.seconds = elapsed(t0);
  if (time_limit > 0 && r.seconds >= time_limit) {
    r.pass = false;
    r.detail += "; runtime target " + std::to_string(static_cast<int>(time_limit)) + "s missed";
  }
  return r;
}

std::vector<std::vector<int>> eps_patterns(int r) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> eps(r);
    bool all_even = true;
    for (int j = 0; j < r; ++j) {
      eps[j] = (mask >> j) & 1 ? 2 : 1;
      if (eps[j] == 1) all_even = false;
    }
    if (!all_even) out.push_back(std::move(eps));
  }
  return out;
}

CorrelationSpec const_shift_spec(const FieldPtr& field, int n, const std::vector<int>& eps) {
  std::vector<Shift> shifts;
  for (std::size_t j = 0; j < eps.size(); ++j)
    shifts.push_back({Poly::constant(field, field->elem(static_cast<std::uint32_t>(j))), eps[j]});
  return CorrelationSpec::make(field, n, std::move(shifts));
}

// stdout capture of a spawned command; returns (exit code, output)
std::pair<int, std::string> run_command(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

MultiPoly random_multipoly(const FieldPtr& field, int m, int d, std::mt19937_64& rng) {
  while (true) {
    MultiPoly h(field, m);
    std::uint64_t nterms = 1 + rng() % (2 * d + 2);
    for (std::uint64_t t = 0; t < nterms; ++t) {
      MultiPoly::Exps e{0, 0, 0};
      while (true) {
        int sum = 0;
        for (int i = 0; i < m; ++i) {
          e[i] = static_cast<std::uint16_t>(rng() % (d + 1));
          sum += e[i];
        }
        if (sum <= d) break;
      }
      h.add_term(e, Fe{static_cast<std::uint32_t>(rng() % field->q())});
    }
    if (!h.is_zero()) return h;
  }
}

}  // namespace

std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = lo | 1; q <= hi; q += 2) {
    std::uint32_t p = q;
    for (std::uint32_t d = 3; d * d <= q; d += 2)
      if (q % d == 0) {
        p = d;
        break;
      }
    std::uint32_t t = q;
    while (t % p == 0) t /= p;
    if (t == 1 && q >= 3) out.push_back(q);
  }
  return out;
}

std::vector<CheckResult> run_acceptance(std::ostream& out, int workers, std::uint64_t budget,
                                        const std::string& cli_path) {
  std::vector<CheckResult> results;
  auto push = [&](CheckResult r) {
    emit(out, r);
    results.push_back(std::move(r));
  };

  const std::vector<std::uint32_t> scan_qs = {3, 5, 7, 9, 11};
  std::map<std::pair<std::uint32_t, int>, MobiusScanReport> scans;

  // 1: the two Möbius routes agree on every monic polynomial, deg 1..5
  push(timed(1, "Pellet equivalence, deg 1..5, q in {3,5,7,9,11}, single worker", [&] {
    std::uint64_t total = 0;
    for (std::uint32_t q : scan_qs) {
      FieldPtr field = Field::make_q(q);
      for (int n = 1; n <= 5; ++n) {
        MobiusScanReport rep = mobius_consistency_scan(field, n, budget, 1);
        total += rep.total;
        scans[{q, n}] = rep;
      }
    }
    return std::make_pair(true, std::to_string(total) + " polynomials, exact agreement");
  }, 60.0));

  // 2: sum of mu over M_n vanishes and the squarefree count is exact
  push(timed(2, "sum mu = 0 and #squarefree = q^n - q^{n-1}, n in 2..5", [&] {
    std::uint64_t cells = 0;
    for (std::uint32_t q : scan_qs)
      for (int n = 2; n <= 5; ++n) {
        const MobiusScanReport& rep = scans.at({q, n});
        std::uint64_t expect_sf = rep.total - rep.total / q;
        if (rep.sum != 0)
          return std::make_pair(false, "nonzero Mobius sum at q=" + std::to_string(q) +
                                           " n=" + std::to_string(n) + ": " +
                                           std::to_string(rep.sum));
        if (rep.squarefree() != expect_sf)
          return std::make_pair(false, "squarefree count off at q=" + std::to_string(q) +
                                           " n=" + std::to_string(n));
        ++cells;
      }
    return std::make_pair(true, std::to_string(cells) + " (q,n) cells exact");
  }));

  // 3 + the bound side of 5 share the same matrix of correlation cells
  struct Cell {
    CorrelationSpec spec;
    CorrelationResult direct;
  };
  std::vector<Cell> cells;
  push(timed(3, "direct = character-sum on the full (q,n,r,eps) matrix", [&] {
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
      FieldPtr field = Field::make_q(q);
      for (int n : {2, 3})
        for (int r : {2, 3})
          for (const auto& eps : eps_patterns(r)) {
            CorrelationSpec spec = const_shift_spec(field, n, eps);
            CorrelationResult cd = correlation_direct(spec, budget, workers);
            CorrelationResult cc = correlation_charsum(spec, budget, workers);
            if (cd.value != cc.value)
              return std::make_pair(false, "mismatch at " + spec.str() + ": direct=" +
                                               std::to_string(cd.value) + " charsum=" +
                                               std::to_string(cc.value));
            cells.push_back({spec, cd});
          }
    }
    return std::make_pair(true, std::to_string(cells.size()) + " cells, exact equality");
  }));

  // 4: one pinned value, confirmed by both routes
  push(timed(4, "C(0,1;2) over F_3 with eps=(1,1) equals -3", [&] {
    FieldPtr f3 = Field::make_q(3);
    CorrelationSpec spec = const_shift_spec(f3, 2, {1, 1});
    std::int64_t cd = correlation_direct(spec, budget, workers).value;
    std::int64_t cc = correlation_charsum(spec, budget, workers).value;
    bool ok = cd == -3 && cc == -3;
    return std::make_pair(ok, "direct=" + std::to_string(cd) +
                                  " charsum=" + std::to_string(cc));
  }));

  // 5: |C| <= 2rn q^{n-1/2} + 3rn^2 q^{n-1} on the matrix and the sweep
  push(timed(5, "correlation bound on the matrix plus the sweep q=3..81, n=2, r=2", [&] {
    for (const Cell& c : cells)
      if (c.direct.bound_trivial ||
          static_cast<long double>(std::llabs(c.direct.value)) > c.direct.bound)
        return std::make_pair(false, "bound violated at " + c.spec.str());
    SweepTemplate tmpl;
    tmpl.n = 2;
    tmpl.r = 2;
    tmpl.eps = {1, 2};
    auto rows = sweep(tmpl, odd_prime_powers(3, 81), budget, workers, false);
    for (const SweepRow& row : rows) {
      if (row.status != "ok")
        return std::make_pair(false, "sweep row q=" + std::to_string(row.q) + " status " +
                                         row.status);
      if (static_cast<long double>(std::llabs(row.c_direct)) > row.bound)
        return std::make_pair(false, "sweep bound violated at q=" + std::to_string(row.q));
    }
    return std::make_pair(true, std::to_string(cells.size()) + " cells + " +
                                    std::to_string(rows.size()) + " sweep rows within bound");
  }, 300.0));

  // 6: bad-set cardinalities
  push(timed(6, "bad-set bounds, #A_2 = 0, and #A_3 = 7 over F_7", [&] {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
      FieldPtr field = Field::make_q(q);
      for (int n : {3, 4}) {
        CorrelationSpec spec = const_shift_spec(field, n, {1, 1});
        BadSetReport rep = badset_scan(spec, 0, budget, workers);
        if (!rep.bounds_hold)
          return std::make_pair(false, "cardinality bound violated at q=" + std::to_string(q) +
                                           " n=" + std::to_string(n));
        if (!rep.cover_holds)
          return std::make_pair(false, "cover property violated at q=" + std::to_string(q) +
                                           " n=" + std::to_string(n));
        if (q == 7 && n == 3 && rep.count_A != 7)
          return std::make_pair(false, "#A_3 over F_7 is " + std::to_string(rep.count_A) +
                                           ", expected 7");
      }
      CorrelationSpec spec2 = const_shift_spec(field, 2, {1, 1});
      BadSetReport rep2 = badset_scan(spec2, 0, budget, workers);
      if (rep2.count_A != 0)
        return std::make_pair(false, "#A_2 nonzero at q=" + std::to_string(q));
    }
    return std::make_pair(true, std::string("n in {3,4} and n=2 over q in {3,...,13}: all bounds exact"));
  }));

  // 7: per-fiber character bound on every good fiber
  push(timed(7, "good-fiber character sums within (deg P - 1) sqrt(q)", [&] {
    std::uint64_t checked = 0;
    for (std::uint32_t q : {5u, 7u, 9u}) {
      FieldPtr field = Field::make_q(q);
      for (const auto& eps : {std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
        CorrelationSpec spec = const_shift_spec(field, 3, eps);
        for (std::uint64_t idx = 0; idx < spec.fibers(); ++idx) {
          FiberCoeffs fc = FiberCoeffs::from_index(field, 3, idx);
          if (!good_predicate(fc, spec, 0)) continue;
          ++checked;
          if (!weil_fiber_check(fc, spec, 0))
            return std::make_pair(false, "fiber bound violated at q=" + std::to_string(q) +
                                             " a-index " + std::to_string(idx));
        }
      }
    }
    return std::make_pair(true, std::to_string(checked) + " good fibers, 100% within bound");
  }));

  // 8: degree structure of the fiber polynomial and its critical-value roots
  push(timed(8, "deg D_f = n-1 (or n-2 when p | n, a_{n-1} != 0) and critical values", [&] {
    std::uint64_t fibers_checked = 0;
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
      FieldPtr field = Field::make_q(q);
      for (int n : {2, 3, 4}) {
        bool coprime = n % static_cast<int>(field->p()) != 0;
        std::uint64_t total = 1;
        for (int e = 0; e + 1 < n; ++e) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          FiberCoeffs fc = FiberCoeffs::from_index(field, n, idx);
          Poly d = dpoly(fc, Poly::zero(field));
          if (coprime) {
            if (d.deg() != n - 1)
              return std::make_pair(false, "deg D != n-1 at q=" + std::to_string(q) +
                                               " n=" + std::to_string(n) + " a-index " +
                                               std::to_string(idx));
          } else if (!(fc.a_top() == field->zero())) {
            if (d.deg() != n - 2)
              return std::make_pair(false, "deg D != n-2 at q=" + std::to_string(q) +
                                               " n=" + std::to_string(n) + " a-index " +
                                               std::to_string(idx));
          }
          if (coprime || !(fc.a_top() == field->zero())) {
            if (!dpoly_root_check(fc))
              return std::make_pair(false, "critical value is not a root of D at q=" +
                                               std::to_string(q) + " n=" + std::to_string(n) +
                                               " a-index " + std::to_string(idx));
          }
          ++fibers_checked;
        }
      }
    }
    return std::make_pair(true, std::to_string(fibers_checked) + " fibers, exact degrees");
  }));

  // 9: closed formulas for n = 2 and n = 3. The t-discriminant of the
  // cubic fiber polynomial is 16(a^2-3b)^3; the sign-flipped variant is
  // refuted by a pinned counterexample.
  push(timed(9, "quadratic/cubic fiber formulas (disc_t D = +16(a^2-3b)^3)", [&] {
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
      FieldPtr field = Field::make_q(q);
      Fe m4 = field->from_int(-4);
      for (std::uint32_t av = 0; av < q; ++av) {
        Fe a{av};
        FiberCoeffs fc{field, 2, {a}};
        Poly d = dpoly(fc, Poly::zero(field));
        if (d != Poly(field, {field->mul(a, a), m4}))
          return std::make_pair(false, "quadratic formula fails at q=" + std::to_string(q));
      }
    }
    for (std::uint32_t q : {5u, 7u}) {
      FieldPtr field = Field::make_q(q);
      if (!cubic_formula_check(field))
        return std::make_pair(false, "cubic formulas fail at q=" + std::to_string(q));
    }
    {
      // -16(a^2-3b)^3 is refuted at q=7, a=b=1: disc_t D = 5, flipped sign gives 2
      FieldPtr f7 = Field::make_q(7);
      FiberCoeffs fc{f7, 3, {f7->one(), f7->one()}};
      Fe lhs = discriminant(dpoly(fc, Poly::zero(f7)));
      Fe flipped = f7->mul(f7->from_int(-16), f7->pow(f7->from_int(-2), 3));
      if (lhs == flipped)
        return std::make_pair(false, std::string("sign counterexample unexpectedly matches"));
    }
    {
      FieldPtr f9 = Field::make_q(9);
      if (!cubic_formula_check(f9))
        return std::make_pair(false, std::string("3 | q branch fails at q=9"));
    }
    return std::make_pair(true,
                          std::string("exact over q in {3,5,7,9} (quadratic), {5,7} (cubic, ") +
                              "+16 sign confirmed, -16 refuted), q=9 (3 | q branch)");
  }));

  // 10: determinant identity
  push(timed(10, "det M(rho) = (rho1 - rho2)^4, exhaustive", [&] {
    for (std::uint32_t q : {5u, 7u, 9u})
      if (!det_identity_exhaustive(Field::make_q(q)))
        return std::make_pair(false, "identity fails at q=" + std::to_string(q));
    return std::make_pair(true, std::string("all rho pairs over q in {5,7,9}"));
  }));

  // 11: zero-count bound on random multivariate polynomials
  push(timed(11, "zero count <= d q^{m-1} on 100 random polynomials per (m,d,q)", [&] {
    std::uint64_t instances = 0;
    for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
      FieldPtr field = Field::make_q(q);
      for (int m = 1; m <= 3; ++m)
        for (int d = 1; d <= 4; ++d) {
          std::mt19937_64 rng(q * 1000 + m * 10 + d);
          for (int t = 0; t < 100; ++t) {
            MultiPoly h = random_multipoly(field, m, d, rng);
            std::uint64_t zeros = mv_count_zeros(h, budget);
            std::uint64_t qm1 = 1;
            for (int i = 0; i + 1 < m; ++i) qm1 *= q;
            if (zeros > static_cast<std::uint64_t>(h.total_degree()) * qm1 ||
                zeros > static_cast<std::uint64_t>(d) * qm1)
              return std::make_pair(false, "bound violated at q=" + std::to_string(q) + " m=" +
                                               std::to_string(m) + " d=" + std::to_string(d));
            ++instances;
          }
        }
    }
    return std::make_pair(true, std::to_string(instances) + " instances within bound");
  }));

  // 12: weighted homogeneity of the discriminant
  push(timed(12, "disc(f_lambda) = lambda^{n(n-1)} disc(f), all monic f, n <= 4, q <= 7", [&] {
    std::uint64_t checked = 0;
    for (std::uint32_t q : {3u, 5u, 7u}) {
      FieldPtr field = Field::make_q(q);
      for (int n = 1; n <= 4; ++n) {
        std::uint64_t total = 1;
        for (int e = 0; e < n; ++e) total *= q;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          Poly f = Poly::monic_from_index(field, n, idx);
          Fe disc_f = discriminant(f);
          for (std::uint32_t lv = 1; lv < q; ++lv) {
            Fe lambda{lv};
            std::vector<Fe> cs(n + 1);
            for (int i = 0; i <= n; ++i)
              cs[i] = field->mul(f.coeff(i), field->pow(lambda, n - i));
            Fe lhs = discriminant(Poly(field, std::move(cs)));
            Fe rhs = field->mul(field->pow(lambda, static_cast<std::uint64_t>(n) * (n - 1)),
                                disc_f);
            if (!(lhs == rhs))
              return std::make_pair(false, "scaling fails at q=" + std::to_string(q) + " n=" +
                                               std::to_string(n) + " f=" + f.str() +
                                               " lambda=" + std::to_string(lv));
            ++checked;
          }
        }
      }
    }
    return std::make_pair(true, std::to_string(checked) + " (f, lambda) pairs exact");
  }));

  // 13: sweep output is byte-identical across worker counts
  push(timed(13, "sweep byte-determinism across worker counts {1,4}", [&] {
    if (cli_path.empty()) return std::make_pair(false, std::string("no CLI path provided"));
    std::string base = "'" + cli_path + "' sweep --n 2 --r 2 --eps 1,2 --q 3,5,7,9,11,13,25,27";
    auto [code1, out1] = run_command(base + " --workers 1");
    auto [code4, out4] = run_command(base + " --workers 4");
    if (code1 != 0 || code4 != 0)
      return std::make_pair(false, "sweep exited with " + std::to_string(code1) + "/" +
                                       std::to_string(code4));
    if (out1 != out4) return std::make_pair(false, std::string("outputs differ between worker counts"));
    return std::make_pair(true, std::to_string(out1.size()) + " bytes, identical");
  }));

  int failed = 0;
  for (const CheckResult& r : results)
    if (!r.pass) ++failed;
  out << (failed == 0 ? "all 13 criteria passed\n"
                      : std::to_string(failed) + " of 13 criteria FAILED\n");
  return results;
}

std::vector<CheckResult> run_verify(std::ostream& out, const FieldPtr& field, int n,
                                    std::uint64_t seed, int workers, std::uint64_t budget) {
  std::vector<CheckResult> results;
  int id = 0;
  auto push = [&](CheckResult r) {
    emit(out, r);
    results.push_back(std::move(r));
  };
  const std::uint32_t q = field->q();

  push(timed(++id, "Pellet scan, deg 1.." + std::to_string(n), [&] {
    std::uint64_t total = 0;
    for (int m = 1; m <= n; ++m) {
      MobiusScanReport rep = mobius_consistency_scan(field, m, budget, workers);
      total += rep.total;
      if (m > 1 && rep.sum != 0)
        return std::make_pair(false, "nonzero Mobius sum at n=" + std::to_string(m));
      if (m > 1 && rep.squarefree() != rep.total - rep.total / q)
        return std::make_pair(false, "squarefree count off at n=" + std::to_string(m));
    }
    return std::make_pair(true, std::to_string(total) + " polynomials agree");
  }));

  if (n >= 2 && q >= 2) {
    push(timed(++id, "method equivalence, r=2", [&] {
      std::uint64_t cells = 0;
      for (int m = 2; m <= std::min(n, 3); ++m)
        for (const auto& eps : {std::vector<int>{1, 1}, std::vector<int>{1, 2}}) {
          CorrelationSpec spec = const_shift_spec(field, m, eps);
          CorrelationResult cd = correlation_direct(spec, budget, workers);
          CorrelationResult cc = correlation_charsum(spec, budget, workers);
          if (cd.value != cc.value)
            return std::make_pair(false, "mismatch at " + spec.str());
          if (!cd.bound_trivial &&
              static_cast<long double>(std::llabs(cd.value)) > cd.bound)
            return std::make_pair(false, "bound violated at " + spec.str());
          ++cells;
        }
      return std::make_pair(true, std::to_string(cells) + " cells, exact");
    }));

    push(timed(++id, "fiber degree structure at n=" + std::to_string(n), [&] {
      bool coprime = n % static_cast<int>(field->p()) != 0;
      std::uint64_t total = 1;
      for (int e = 0; e + 1 < n; ++e) {
        total *= q;
        if (total > budget) return std::make_pair(false, std::string("q^{n-1} over budget"));
      }
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        FiberCoeffs fc = FiberCoeffs::from_index(field, n, idx);
        Poly d = dpoly(fc, Poly::zero(field));
        int want = coprime ? n - 1 : (fc.a_top() == field->zero() ? -2 : n - 2);
        if (want >= 0 && d.deg() != want)
          return std::make_pair(false, "degree rule fails at a-index " + std::to_string(idx));
        if (n <= 4 && (coprime || !(fc.a_top() == field->zero())) && !dpoly_root_check(fc))
          return std::make_pair(false, "critical-value root check fails at a-index " +
                                           std::to_string(idx));
      }
      return std::make_pair(true, std::to_string(total) + " fibers");
    }));
  }

  push(timed(++id, "closed cubic formulas", [&] {
    bool ok = cubic_formula_check(field);
    return std::make_pair(ok, ok ? (field->p() == 3 ? std::string("3 | q branch exact")
                                                    : std::string("coefficients and disc_t exact"))
                                 : std::string("formula mismatch"));
  }));

  if (q >= 5) {
    push(timed(++id, "determinant identity", [&] {
      bool ok = det_identity_exhaustive(field);
      return std::make_pair(ok, ok ? "all rho pairs" : "identity fails");
    }));
  }

  if (n >= 2) {
    push(timed(++id, "good-fiber character bound", [&] {
      int m = std::min(n, 3);
      CorrelationSpec spec = const_shift_spec(field, m, {1, 1});
      std::uint64_t good = 0;
      for (std::uint64_t idx = 0; idx < spec.fibers(); ++idx) {
        FiberCoeffs fc = FiberCoeffs::from_index(field, m, idx);
        if (!good_predicate(fc, spec, 0)) continue;
        ++good;
        if (!weil_fiber_check(fc, spec, 0))
          return std::make_pair(false, "fiber bound violated at a-index " + std::to_string(idx));
      }
      return std::make_pair(true, std::to_string(good) + " good fibers within bound");
    }));
  }

  push(timed(++id, "zero-count bound samples", [&] {
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= 3; ++m)
      for (int d = 1; d <= 4; ++d)
        for (int t = 0; t < 20; ++t) {
          MultiPoly h = random_multipoly(field, m, d, rng);
          std::uint64_t qm1 = 1;
          for (int i = 0; i + 1 < m; ++i) qm1 *= q;
          if (mv_count_zeros(h, budget) > static_cast<std::uint64_t>(d) * qm1)
            return std::make_pair(false, "bound violated at m=" + std::to_string(m) +
                                             " d=" + std::to_string(d));
        }
    return std::make_pair(true, std::string("240 samples within bound"));
  }));

  if (n >= 2) {
    push(timed(++id, "bad-set scan at n=" + std::to_string(n), [&] {
      CorrelationSpec spec = const_shift_spec(field, n, {1, 1});
      BadSetReport rep = badset_scan(spec, 0, budget, workers);
      bool ok = rep.bounds_hold && rep.cover_holds;
      std::ostringstream os;
      os << "#A=" << rep.count_A << " #B=" << rep.count_B << " good=" << rep.count_good
         << " edge=" << rep.edge_count;
      return std::make_pair(ok, os.str());
    }));
  }

  int failed = 0;
  for (const CheckResult& r : results)
    if (!r.pass) ++failed;
  out << (failed == 0 ? "all checks passed\n" : std::to_string(failed) + " checks FAILED\n");
  return results;
}

}  // namespace chowlaff
