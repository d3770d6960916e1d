#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chowlaff/chowla.hpp"
#include "chowlaff/fpoly.hpp"

namespace chowlaff {

/// The non-leading, non-constant coefficients a_1..a_{n-1} of
/// f(x) = x^n + a_{n-1}x^{n-1} + ... + a_1 x, indexing one fiber of
/// the decomposition of the monic polynomials F = f + t.
struct FiberCoeffs {
  FieldPtr field;
  int n = 0;
  std::vector<Fe> a;  // a[j] = a_{j+1}, length n-1

  static FiberCoeffs from_index(const FieldPtr& f, int n, std::uint64_t idx);
  Poly f_poly() const;
  Fe a_top() const { return a.empty() ? Fe{0} : a.back(); }  // a_{n-1}
};

/// D_{f+alpha}(t) = disc_x(f(x) + alpha(x) + t) as a polynomial in t,
/// of degree <= n-1, built by sampling the discriminant at n+1 values
/// of t and interpolating. When q < n+1 the samples are taken in the
/// smallest extension F_{q^m} with q^m >= n+1; the interpolated
/// coefficients are checked to lie in the base field before projecting
/// back down.
Poly dpoly(const FiberCoeffs& fc, const Poly& alpha);

/// Every critical value -f(rho), for rho a root of f' in F_q (and in
/// F_{q^2}, F_{q^3} when n <= 4), must be a root of D_f.
bool dpoly_root_check(const FiberCoeffs& fc);

/// True iff D_{f+alpha_i} has positive degree, is squarefree, and is
/// coprime (by gcd) to every other D_{f+alpha_j}.
bool good_predicate(const FiberCoeffs& fc, const CorrelationSpec& spec, std::size_t i);

struct BadSetReport {
  std::uint32_t q = 0;
  int n = 0;
  int r = 0;
  std::size_t chosen_i = 0;
  std::uint64_t count_A = 0;
  std::uint64_t count_B = 0;          // size of the union of the B(j)
  std::vector<std::uint64_t> count_B_per_j;  // indexed by shift, entry i unused
  std::uint64_t count_good = 0;
  std::uint64_t edge_count = 0;     // p | n and (a_{n-1} = 0 or a_{n-1} + A_{n-1} = 0)
  std::uint64_t edge_excluded = 0;  // edge fibers with every D constant, kept out of A and B
  std::uint64_t bound_A = 0;        // 3 n^2 q^{n-2}
  std::uint64_t bound_B = 0;        // 3 (r-1) n^2 q^{n-2}
  bool bounds_hold = false;
  bool cover_holds = false;  // good <=> not in A, B, or the excluded edge set
  std::vector<std::vector<std::uint32_t>> witnesses_A;                    // up to 10 a-vectors
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> witnesses_B;
};

/// Exhaustive classification of all a in F_q^{n-1} into the bad sets
/// A (D_{f+alpha_i} constant or with vanishing discriminant) and B(j)
/// (D_{f+alpha_i} and D_{f+alpha_j} not coprime), with the cardinality
/// bounds and the cover property verified. Requires eps_i odd, n >= 2.
BadSetReport badset_scan(const CorrelationSpec& spec, std::size_t i,
                         std::uint64_t budget = kDefaultBudget, int workers = 1);

/// On a good fiber: |sum_t chi2(prod_j D_j(t)^{eps_j})| must not
/// exceed (deg P - 1) sqrt(q), compared exactly as S^2 <= (deg P-1)^2 q.
bool weil_fiber_check(const FiberCoeffs& fc, const CorrelationSpec& spec, std::size_t i);

/// Character sum of one fiber, sum_t chi2(prod_j D_{f+alpha_j}(t)^{eps_j}).
std::int64_t fiber_char_sum(const FiberCoeffs& fc, const CorrelationSpec& spec);

/// det of the 3x3 matrix with rows (3r1^2, 2r1, 1), (3r2^2, 2r2, 1),
/// (r2^3-r1^3, r2^2-r1^2, r2-r1) equals (r1-r2)^4; random pairs.
bool det_identity_check(const FieldPtr& field, int trials, std::uint64_t seed = 0);
/// Same identity over every pair (rho1, rho2), equal pairs included.
bool det_identity_exhaustive(const FieldPtr& field);

/// For every (a, b): the fiber polynomial of x^3 + a x^2 + b x matches
/// the closed cubic formulas: coefficient triple
/// (a^2 b^2 - 4 b^3, 18ab - 4a^3, -27) and disc_t D = 16 (a^2 - 3b)^3
/// when 3 does not divide q, and D(t) = (a^2 b^2 - 4 b^3) - 4 a^3 t
/// when it does.
bool cubic_formula_check(const FieldPtr& field);

}  // namespace chowlaff
