#include "chowlaff/mobius.hpp"

#include <optional>
#include <string>

#include "parallel.hpp"

namespace chowlaff {

int mobius_factor(const Poly& f) {
  if (!f.field() || f.is_zero()) fail(errc::zero_polynomial, "mu of zero polynomial");
  if (f.deg() == 0) return 1;
  Poly m = f.monic();
  if (!is_squarefree(m)) return 0;
  return factor_count(m) % 2 == 0 ? 1 : -1;
}

int mobius_pellet(const Poly& f) {
  if (!f.field() || f.is_zero()) fail(errc::zero_polynomial, "mu of zero polynomial");
  if (f.field()->p() == 2) fail(errc::even_characteristic, "Pellet route needs odd q");
  int c = f.field()->chi2(discriminant(f));
  return f.deg() % 2 == 0 ? c : -c;
}

MobiusScanReport mobius_consistency_scan(const FieldPtr& field, int n, std::uint64_t budget,
                                         int workers) {
  if (n < 1) fail(errc::invalid_spec, "scan degree must be >= 1");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= field->q();
    if (total > budget)
      fail(errc::budget_exceeded,
           "scan of q^n = " + std::to_string(total) + "+ polynomials over budget");
  }

  struct Part {
    MobiusScanReport tally;
    std::optional<std::pair<std::uint64_t, std::string>> mismatch;  // lowest index first
  };
  auto parts = run_chunked<Part>(total, workers, [&](std::uint64_t lo, std::uint64_t hi) {
    Part part;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      Poly f = Poly::monic_from_index(field, n, idx);
      int mf = mobius_factor(f);
      int mp = mobius_pellet(f);
      if (mf != mp && !part.mismatch) {
        part.mismatch = {idx, "pellet disagrees with factorization: q=" +
                                  std::to_string(field->q()) + " n=" + std::to_string(n) +
                                  " F=" + f.str() + " mu_factor=" + std::to_string(mf) +
                                  " mu_pellet=" + std::to_string(mp)};
      }
      part.tally.sum += mf;
      if (mf == 0) ++part.tally.zeros;
      else if (mf > 0) ++part.tally.plus;
      else ++part.tally.minus;
    }
    return part;
  });

  MobiusScanReport report;
  report.q = field->q();
  report.n = n;
  report.total = total;
  std::optional<std::pair<std::uint64_t, std::string>> first_mismatch;
  for (const Part& p : parts) {
    report.sum += p.tally.sum;
    report.zeros += p.tally.zeros;
    report.plus += p.tally.plus;
    report.minus += p.tally.minus;
    if (p.mismatch && (!first_mismatch || p.mismatch->first < first_mismatch->first))
      first_mismatch = p.mismatch;
  }
  if (first_mismatch) fail(errc::consistency_failure, first_mismatch->second);
  return report;
}

}  // namespace chowlaff
