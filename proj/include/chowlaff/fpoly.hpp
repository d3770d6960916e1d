#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowlaff/ffield.hpp"

namespace chowlaff {

/// Dense univariate polynomial over a fixed field. Coefficients are
/// stored lowest degree first with no trailing zeros; the zero
/// polynomial has an empty coefficient vector and degree neg_inf_deg.
/// Values are immutable once built; all operations are pure.
class Poly {
 public:
  static constexpr int neg_inf_deg = -1;

  Poly() = default;  // fieldless placeholder for containers; unusable in arithmetic
  explicit Poly(FieldPtr f) : field_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<Fe> coeffs);

  static Poly zero(const FieldPtr& f) { return Poly(f); }
  static Poly one(const FieldPtr& f) { return Poly(f, {f->one()}); }
  static Poly x(const FieldPtr& f) { return Poly(f, {f->zero(), f->one()}); }
  static Poly constant(const FieldPtr& f, Fe c) { return Poly(f, {c}); }
  static Poly monomial(const FieldPtr& f, int deg, Fe c);
  /// Coefficients given as canonical element indices, lowest degree first.
  static Poly from_indices(const FieldPtr& f, const std::vector<std::uint32_t>& idx);
  /// Coefficients given as integers, each reduced mod p.
  static Poly from_ints(const FieldPtr& f, const std::vector<std::int64_t>& cs);
  /// idx-th monic polynomial of degree n in the canonical enumeration:
  /// the base-q digits of idx are the element indices of c_0..c_{n-1}.
  static Poly monic_from_index(const FieldPtr& f, int n, std::uint64_t idx);

  const FieldPtr& field() const { return field_; }
  int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Fe coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Fe{0};
  }
  Fe lc() const { return coeffs_.empty() ? Fe{0} : coeffs_.back(); }
  const std::vector<Fe>& coeffs() const { return coeffs_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator/(const Poly& o) const;
  Poly operator%(const Poly& o) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(Fe c) const;
  Poly add_constant(Fe c) const;
  Poly monic() const;
  Poly derivative() const;
  Fe eval(Fe c) const;

  /// "[c0,c1,...]" with canonical element indices, the CLI input format.
  std::string str() const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Fe> coeffs_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Resultant via the Euclidean remainder chain with sign and
/// leading-coefficient bookkeeping. Res(c, G) = c^{deg G} for nonzero
/// constants c.
Fe resultant(const Poly& f, const Poly& g);

/// disc F = (-1)^{n(n-1)/2} lc^{n - deg F' - 2} Res(F, F'); degree-1
/// inputs give 1 (empty product) and p-th powers (F' = 0) give 0.
Fe discriminant(const Poly& f);

/// gcd(F, F') is constant. p-th powers of positive degree are not
/// squarefree. Equivalent to disc != 0 for deg >= 1.
bool is_squarefree(const Poly& f);

/// Lagrange interpolation through pairwise-distinct nodes; the result
/// has degree < #points.
Poly interpolate(const FieldPtr& f, const std::vector<std::pair<Fe, Fe>>& points);

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);

/// F = g^p with g recovered coefficient-wise (c -> c^{p^{k-1}}).
Poly pth_root(const Poly& f);

/// Number of distinct monic irreducible factors, computed as the
/// nullity of (Frobenius - id) on F_q[x]/F. Does not factor F.
int factor_count(const Poly& f);

/// Complete factorization into (monic irreducible, multiplicity),
/// sorted by (degree, coefficient indices). Equal-degree splitting
/// uses a deterministic seeded random source.
std::vector<std::pair<Poly, int>> factorize(const Poly& f, std::uint64_t seed = 0);

/// Sparse multivariate polynomial in at most 3 variables; exists to
/// check zero-count bounds by exhaustive evaluation.
class MultiPoly {
 public:
  using Exps = std::array<std::uint16_t, 3>;

  MultiPoly(FieldPtr f, int nvars);
  static MultiPoly from_terms(const FieldPtr& f, int nvars,
                              const std::vector<std::pair<Exps, Fe>>& terms);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // neg_inf for the zero polynomial
  const std::map<Exps, Fe>& terms() const { return terms_; }
  void add_term(Exps e, Fe c);

  Fe eval(const std::vector<Fe>& point) const;

 private:
  FieldPtr field_;
  int nvars_;
  std::map<Exps, Fe> terms_;
};

/// Exact zero count over F_q^m by exhaustive evaluation.
std::uint64_t mv_count_zeros(const MultiPoly& h, std::uint64_t budget = kDefaultBudget);

}  // namespace chowlaff
