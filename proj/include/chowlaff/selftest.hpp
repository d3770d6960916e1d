#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chowlaff/ffield.hpp"

namespace chowlaff {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// The curated acceptance matrix: thirteen numbered checks covering the
/// Pellet equivalence, both correlation routes, the correlation bound,
/// the bad-set cardinalities, the per-fiber character bound, the fiber
/// polynomial degree structure, the closed small-degree formulas, the
/// zero-count lemma, discriminant homogeneity, and byte-determinism of
/// the sweep output. Prints one pass/fail line per check as it
/// completes. `cli_path` is the batch executable used for the
/// determinism check.
std::vector<CheckResult> run_acceptance(std::ostream& out, int workers, std::uint64_t budget,
                                        const std::string& cli_path);

/// Field-parameterized identity suite behind `verify`: Pellet scans up
/// to degree n, method equivalence, fiber degree structure, cubic
/// formulas, the determinant identity, good-fiber character bounds,
/// zero-count samples, and a bad-set scan. Prints a pass/fail table.
std::vector<CheckResult> run_verify(std::ostream& out, const FieldPtr& field, int n,
                                    std::uint64_t seed, int workers, std::uint64_t budget);

/// All odd prime powers in [lo, hi].
std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi);

}  // namespace chowlaff
