#pragma once

#include <cstdint>

#include "chowlaff/fpoly.hpp"

namespace chowlaff {

/// mu via the factor structure: 0 unless squarefree, else (-1)^r with
/// r the number of distinct monic irreducible factors. Units are
/// ignored; nonzero constants give 1 (empty product).
int mobius_factor(const Poly& f);

/// mu via Pellet's formula (-1)^{deg F} chi2(disc F); no factorization
/// anywhere on this path. Requires deg >= 1 and odd characteristic.
int mobius_pellet(const Poly& f);

struct MobiusScanReport {
  std::uint32_t q = 0;
  int n = 0;
  std::uint64_t total = 0;       // q^n monic polynomials scanned
  std::uint64_t zeros = 0;       // mu = 0, i.e. not squarefree
  std::uint64_t plus = 0;        // mu = +1
  std::uint64_t minus = 0;       // mu = -1
  std::int64_t sum = 0;          // sum of mu over M_n
  std::uint64_t squarefree() const { return total - zeros; }
};

/// Checks mobius_factor == mobius_pellet on every monic polynomial of
/// degree n, in canonical index order, and tallies the values. Throws
/// ConsistencyFailure with the first counterexample on disagreement.
MobiusScanReport mobius_consistency_scan(const FieldPtr& field, int n,
                                         std::uint64_t budget = kDefaultBudget,
                                         int workers = 1);

}  // namespace chowlaff
