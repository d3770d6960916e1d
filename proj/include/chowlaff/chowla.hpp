#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chowlaff/fpoly.hpp"

namespace chowlaff {

struct Shift {
  Poly alpha;
  int eps = 1;  // 1 or 2
};

/// The tuple (q, n, (alpha_j, eps_j)) defining an autocorrelation sum
/// C = sum over monic F of degree n of prod_j mu(F + alpha_j)^{eps_j}.
class CorrelationSpec {
 public:
  static CorrelationSpec make(FieldPtr field, int n, std::vector<Shift> shifts);

  const FieldPtr& field() const { return field_; }
  int n() const { return n_; }
  int r() const { return static_cast<int>(shifts_.size()); }
  const std::vector<Shift>& shifts() const { return shifts_; }
  std::uint32_t q() const { return field_->q(); }
  std::uint64_t qn() const;       // q^n
  std::uint64_t fibers() const;   // q^{n-1}
  int eps_sum() const;
  std::string str() const;

 private:
  CorrelationSpec() = default;
  FieldPtr field_;
  int n_ = 0;
  std::vector<Shift> shifts_;
};

enum class Method { direct, charsum };

struct BoundValue {
  long double value = 0;  // conservatively rounded upward
  bool trivial = false;   // q^n fallback outside the n>1, r>1 regime
};

/// 2rn q^{n-1/2} + 3rn^2 q^{n-1}, the irrational part computed in
/// 80-bit precision and rounded up (exactly, when q is a perfect
/// square) so that |C| <= bound can never fail spuriously.
BoundValue theorem_bound(const CorrelationSpec& spec);

struct CorrelationResult {
  std::int64_t value = 0;
  std::int64_t num = 0;       // normalized value as the exact rational num/den
  std::uint64_t den = 1;      // = q^n
  long double bound = 0;
  bool bound_trivial = false;
  Method method = Method::direct;
  std::uint64_t summands = 0;  // q^n
  std::uint64_t skipped = 0;   // summands with some mu(F+alpha_j) = 0
};

/// Exact sum via the factorization-based Möbius function.
CorrelationResult correlation_direct(const CorrelationSpec& spec,
                                     std::uint64_t budget = kDefaultBudget, int workers = 1);

/// Exact sum via discriminants and the quadratic character only,
/// organized fiber-by-fiber: outer loop over the non-constant
/// coefficients a of f = x^n + a_{n-1}x^{n-1} + ... + a_1 x, inner
/// loop over the constant term t, evaluating chi2 of
/// prod_j D_{f+alpha_j}(t)^{eps_j}.
CorrelationResult correlation_charsum(const CorrelationSpec& spec,
                                      std::uint64_t budget = kDefaultBudget, int workers = 1);

struct SweepTemplate {
  int n = 2;
  int r = 2;
  std::vector<int> eps;  // size r, entries in {1,2}, not all 2
  /// Overrides the default constant shifts alpha_j = element j-1; maps
  /// q to r coefficient-index lists (lowest degree first).
  std::map<std::uint32_t, std::vector<std::vector<std::uint32_t>>> alpha_by_q;
};

struct SweepRow {
  std::uint32_t q = 0;
  int n = 0;
  int r = 0;
  std::int64_t c_direct = 0;
  std::int64_t c_charsum = 0;
  long double bound = 0;
  long double normalized = 0;        // C / q^n
  long double normalized_bound = 0;  // bound / q^n
  std::int64_t wall_ms = 0;          // 0 unless timings were requested
  std::string status = "ok";         // ok | skipped | error:<code>
};

/// One row per q, ascending; per-row failures are recorded in the
/// status column without aborting the sweep.
std::vector<SweepRow> sweep(const SweepTemplate& tmpl, std::vector<std::uint32_t> q_list,
                            std::uint64_t budget = kDefaultBudget, int workers = 1,
                            bool timings = false);

}  // namespace chowlaff
