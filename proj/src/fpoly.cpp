#include "chowlaff/fpoly.hpp"

#include <algorithm>
#include <random>

namespace chowlaff {

namespace {

const FieldPtr& common_field(const Poly& a, const Poly& b) {
  if (!a.field() || !b.field()) fail(errc::field_mismatch, "operation on fieldless polynomial");
  if (a.field() != b.field() && !a.field()->compatible(*b.field()))
    fail(errc::field_mismatch, "polynomials over different fields");
  return a.field();
}

}  // namespace

Poly::Poly(FieldPtr f, std::vector<Fe> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == Fe{0}) coeffs_.pop_back();
}

Poly Poly::monomial(const FieldPtr& f, int deg, Fe c) {
  if (c == Fe{0}) return Poly(f);
  std::vector<Fe> cs(deg + 1, Fe{0});
  cs[deg] = c;
  return Poly(f, std::move(cs));
}

Poly Poly::from_indices(const FieldPtr& f, const std::vector<std::uint32_t>& idx) {
  std::vector<Fe> cs;
  cs.reserve(idx.size());
  for (std::uint32_t v : idx) cs.push_back(f->elem(v));
  return Poly(f, std::move(cs));
}

Poly Poly::from_ints(const FieldPtr& f, const std::vector<std::int64_t>& ints) {
  std::vector<Fe> cs;
  cs.reserve(ints.size());
  for (std::int64_t v : ints) cs.push_back(f->from_int(v));
  return Poly(f, std::move(cs));
}

Poly Poly::monic_from_index(const FieldPtr& f, int n, std::uint64_t idx) {
  std::vector<Fe> cs(n + 1, Fe{0});
  for (int i = 0; i < n; ++i) {
    cs[i] = Fe{static_cast<std::uint32_t>(idx % f->q())};
    idx /= f->q();
  }
  cs[n] = f->one();
  return Poly(f, std::move(cs));
}

Poly Poly::operator+(const Poly& o) const {
  const FieldPtr& f = common_field(*this, o);
  std::vector<Fe> cs(std::max(coeffs_.size(), o.coeffs_.size()), Fe{0});
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = f->add(coeff(i), o.coeff(i));
  return Poly(f, std::move(cs));
}

Poly Poly::operator-(const Poly& o) const {
  const FieldPtr& f = common_field(*this, o);
  std::vector<Fe> cs(std::max(coeffs_.size(), o.coeffs_.size()), Fe{0});
  for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = f->sub(coeff(i), o.coeff(i));
  return Poly(f, std::move(cs));
}

Poly Poly::operator-() const {
  std::vector<Fe> cs(coeffs_);
  for (Fe& c : cs) c = field_->neg(c);
  return Poly(field_, std::move(cs));
}

Poly Poly::operator*(const Poly& o) const {
  const FieldPtr& f = common_field(*this, o);
  if (is_zero() || o.is_zero()) return Poly(f);
  std::vector<Fe> cs(coeffs_.size() + o.coeffs_.size() - 1, Fe{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == Fe{0}) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      cs[i + j] = f->add(cs[i + j], f->mul(coeffs_[i], o.coeffs_[j]));
  }
  return Poly(f, std::move(cs));
}

Poly Poly::operator/(const Poly& o) const { return divmod(*this, o).first; }
Poly Poly::operator%(const Poly& o) const { return divmod(*this, o).second; }

bool Poly::operator==(const Poly& o) const {
  if (!field_ || !o.field_) return coeffs_.empty() && o.coeffs_.empty() && field_ == o.field_;
  if (field_ != o.field_ && !field_->compatible(*o.field_)) return false;
  return coeffs_ == o.coeffs_;
}

Poly Poly::scaled(Fe c) const {
  if (c == Fe{0}) return Poly(field_);
  std::vector<Fe> cs(coeffs_);
  for (Fe& x : cs) x = field_->mul(x, c);
  return Poly(field_, std::move(cs));
}

Poly Poly::add_constant(Fe c) const {
  std::vector<Fe> cs(coeffs_);
  if (cs.empty()) cs.push_back(c);
  else cs[0] = field_->add(cs[0], c);
  return Poly(field_, std::move(cs));
}

Poly Poly::monic() const {
  if (is_zero() || lc() == field_->one()) return *this;
  return scaled(field_->inv(lc()));
}

Poly Poly::derivative() const {
  if (deg() < 1) return Poly(field_);
  std::vector<Fe> cs(coeffs_.size() - 1, Fe{0});
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    cs[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i)), coeffs_[i]);
  return Poly(field_, std::move(cs));
}

Fe Poly::eval(Fe c) const {
  Fe acc{0};
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = field_->add(field_->mul(acc, c), coeffs_[i]);
  return acc;
}

std::string Poly::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs_[i].v);
  }
  return s + "]";
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const FieldPtr& f = common_field(a, b);
  if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
  if (a.deg() < b.deg()) return {Poly(f), a};
  std::vector<Fe> rem(a.coeffs());
  std::vector<Fe> quo(a.deg() - b.deg() + 1, Fe{0});
  Fe binv = f->inv(b.lc());
  for (int d = a.deg(); d >= b.deg(); --d) {
    Fe c = rem[d];
    if (c == Fe{0}) continue;
    Fe qc = f->mul(c, binv);
    quo[d - b.deg()] = qc;
    for (int j = 0; j <= b.deg(); ++j)
      rem[d - b.deg() + j] = f->sub(rem[d - b.deg() + j], f->mul(qc, b.coeff(j)));
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  common_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Fe resultant(const Poly& f, const Poly& g) {
  const FieldPtr& fd = common_field(f, g);
  if (f.is_zero() || g.is_zero()) fail(errc::zero_polynomial, "resultant of zero polynomial");
  Poly a = f, b = g;
  Fe acc = fd->one();
  bool negate = false;
  if (a.deg() == 0) return fd->pow(a.lc(), b.deg());
  while (true) {
    if (b.deg() == 0) {
      Fe r = fd->mul(acc, fd->pow(b.lc(), a.deg()));
      return negate ? fd->neg(r) : r;
    }
    Poly r = a % b;
    if (r.is_zero()) return fd->zero();  // positive-degree common factor
    // Res(a,b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} Res(b, r)
    if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
    acc = fd->mul(acc, fd->pow(b.lc(), a.deg() - r.deg()));
    a = std::move(b);
    b = std::move(r);
  }
}

Fe discriminant(const Poly& f) {
  const FieldPtr& fd = f.field();
  if (!fd) fail(errc::field_mismatch, "discriminant of fieldless polynomial");
  if (f.is_zero()) fail(errc::zero_polynomial, "discriminant of zero polynomial");
  const int n = f.deg();
  if (n < 1) fail(errc::constant_polynomial, "discriminant needs degree >= 1");
  if (n == 1) return fd->one();
  Poly fp = f.derivative();
  if (fp.is_zero()) return fd->zero();  // p-th power, all roots repeated
  Fe res = resultant(f, fp);
  int e = n - fp.deg() - 2;
  Fe scale = e >= 0 ? fd->pow(f.lc(), e) : fd->pow(fd->inv(f.lc()), -e);
  Fe r = fd->mul(scale, res);
  // (-1)^{n(n-1)/2}
  if (n % 4 == 2 || n % 4 == 3) r = fd->neg(r);
  return r;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) fail(errc::zero_polynomial, "squarefree test of zero polynomial");
  if (f.deg() == 0) return true;
  Poly fp = f.derivative();
  if (fp.is_zero()) return false;
  return gcd(f, fp).deg() == 0;
}

Poly interpolate(const FieldPtr& f, const std::vector<std::pair<Fe, Fe>>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        fail(errc::duplicate_node, "repeated interpolation node");
  Poly result(f);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Poly basis = Poly::one(f);
    Fe denom = f->one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly(f, {f->neg(points[j].first), f->one()});
      denom = f->mul(denom, f->sub(points[i].first, points[j].first));
    }
    result = result + basis.scaled(f->div(points[i].second, denom));
  }
  return result;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  common_field(base, mod);
  if (mod.deg() < 1) fail(errc::constant_polynomial, "powmod modulus must have degree >= 1");
  Poly r = Poly::one(base.field()) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

Poly pth_root(const Poly& f) {
  const FieldPtr& fd = f.field();
  const std::uint32_t p = fd->p();
  if (f.deg() % static_cast<int>(p) != 0 && !f.is_zero() && f.deg() != 0)
    fail(errc::invalid_spec, "not a p-th power");
  std::vector<Fe> cs(f.deg() / p + 1, Fe{0});
  std::uint64_t root_exp = 1;  // c^{p^{k-1}} is the p-th root of c
  for (std::uint32_t i = 1; i < fd->k(); ++i) root_exp *= p;
  for (int i = 0; i <= f.deg(); ++i) {
    if (i % p == 0)
      cs[i / p] = fd->pow(f.coeff(i), root_exp);
    else if (!(f.coeff(i) == Fe{0}))
      fail(errc::invalid_spec, "not a p-th power");
  }
  return Poly(fd, std::move(cs));
}

int factor_count(const Poly& f) {
  const FieldPtr& fd = f.field();
  if (!fd || f.is_zero()) fail(errc::zero_polynomial, "factor count of zero polynomial");
  const int n = f.deg();
  if (n < 1) fail(errc::constant_polynomial, "factor count needs degree >= 1");
  Poly m = f.monic();
  // columns of the Frobenius matrix: (x^q)^i mod m for i = 0..n-1
  Poly xq = powmod(Poly::x(fd), fd->q(), m);
  std::vector<std::vector<Fe>> mat(n, std::vector<Fe>(n, Fe{0}));
  Poly cur = Poly::one(fd);
  for (int i = 0; i < n; ++i) {
    if (i > 0) cur = (cur * xq) % m;
    for (int r = 0; r < n; ++r) mat[r][i] = cur.coeff(r);
  }
  for (int i = 0; i < n; ++i) mat[i][i] = fd->sub(mat[i][i], fd->one());
  // rank by Gaussian elimination
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (!(mat[r][col] == Fe{0})) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(mat[rank], mat[pivot]);
    Fe inv = fd->inv(mat[rank][col]);
    for (int c = col; c < n; ++c) mat[rank][c] = fd->mul(mat[rank][c], inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || mat[r][col] == Fe{0}) continue;
      Fe factor = mat[r][col];
      for (int c = col; c < n; ++c)
        mat[r][c] = fd->sub(mat[r][c], fd->mul(factor, mat[rank][c]));
    }
    ++rank;
  }
  return n - rank;
}

namespace {

Poly random_poly(const FieldPtr& fd, int max_deg, std::mt19937_64& rng) {
  std::vector<Fe> cs(max_deg + 1);
  for (Fe& c : cs) c = Fe{static_cast<std::uint32_t>(rng() % fd->q())};
  return Poly(fd, std::move(cs));
}

// one irreducible factor of squarefree g whose factors all have degree d
Poly edf_one(const Poly& g, int d, std::mt19937_64& rng) {
  const FieldPtr& fd = g.field();
  if (g.deg() == d) return g.monic();
  std::uint64_t qd = 1;
  for (int i = 0; i < d; ++i) {
    if (qd > (std::uint64_t{1} << 62) / fd->q())
      fail(errc::budget_exceeded, "equal-degree splitting exponent overflow");
    qd *= fd->q();
  }
  while (true) {
    Poly u = random_poly(fd, 2 * d - 1, rng);
    if (u.is_zero()) continue;
    Poly w = powmod(u, (qd - 1) / 2, g) - Poly::one(fd);
    Poly h = gcd(w, g);
    if (h.deg() > 0 && h.deg() < g.deg())
      return edf_one(h.deg() <= g.deg() - h.deg() ? h : g / h, d, rng);
  }
}

Poly find_irreducible_factor(const Poly& f, std::mt19937_64& rng) {
  const FieldPtr& fd = f.field();
  if (f.derivative().is_zero()) return find_irreducible_factor(pth_root(f), rng);
  Poly s = (f / gcd(f, f.derivative())).monic();  // squarefree, same distinct factors
  Poly h = Poly::x(fd) % s;
  for (int d = 1; 2 * d <= s.deg(); ++d) {
    h = powmod(h, fd->q(), s);  // x^{q^d} mod s
    Poly g = gcd(h - (Poly::x(fd) % s), s);
    if (g.deg() > 0) return edf_one(g, d, rng);
  }
  return s;  // no factor of degree <= deg/2, so s is irreducible
}

}  // namespace

std::vector<std::pair<Poly, int>> factorize(const Poly& f, std::uint64_t seed) {
  const FieldPtr& fd = f.field();
  if (!fd || f.is_zero()) fail(errc::zero_polynomial, "factorization of zero polynomial");
  if (f.deg() < 1) fail(errc::constant_polynomial, "factorization needs degree >= 1");
  std::mt19937_64 rng(seed);
  Poly rem = f.monic();
  std::vector<std::pair<Poly, int>> out;
  while (rem.deg() >= 1) {
    Poly p = find_irreducible_factor(rem, rng);
    int mult = 0;
    while (true) {
      auto [quo, r] = divmod(rem, p);
      if (!r.is_zero()) break;
      rem = quo;
      ++mult;
    }
    out.emplace_back(std::move(p), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    const auto& ca = a.first.coeffs();
    const auto& cb = b.first.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
      if (!(ca[i] == cb[i])) return ca[i].v < cb[i].v;
    return false;
  });
  return out;
}

MultiPoly::MultiPoly(FieldPtr f, int nvars) : field_(std::move(f)), nvars_(nvars) {
  if (nvars < 1 || nvars > 3) fail(errc::invalid_spec, "MultiPoly supports 1..3 variables");
}

MultiPoly MultiPoly::from_terms(const FieldPtr& f, int nvars,
                                const std::vector<std::pair<Exps, Fe>>& terms) {
  MultiPoly h(f, nvars);
  for (const auto& [e, c] : terms) h.add_term(e, c);
  return h;
}

void MultiPoly::add_term(Exps e, Fe c) {
  for (int i = nvars_; i < 3; ++i)
    if (e[i] != 0) fail(errc::invalid_spec, "exponent on unused variable");
  auto it = terms_.find(e);
  Fe sum = it == terms_.end() ? c : field_->add(it->second, c);
  if (sum == Fe{0}) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[e] = sum;
  }
}

int MultiPoly::total_degree() const {
  int d = Poly::neg_inf_deg;
  for (const auto& [e, c] : terms_) d = std::max(d, int(e[0]) + int(e[1]) + int(e[2]));
  return d;
}

Fe MultiPoly::eval(const std::vector<Fe>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    fail(errc::invalid_spec, "evaluation point has wrong arity");
  Fe acc{0};
  for (const auto& [e, c] : terms_) {
    Fe t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) t = field_->mul(t, field_->pow(point[i], e[i]));
    acc = field_->add(acc, t);
  }
  return acc;
}

std::uint64_t mv_count_zeros(const MultiPoly& h, std::uint64_t budget) {
  if (h.is_zero()) fail(errc::zero_polynomial, "zero-count of the zero polynomial");
  const FieldPtr& fd = h.field();
  const int m = h.nvars();
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) total *= fd->q();
  if (total > budget)
    fail(errc::budget_exceeded, "enumeration of " + std::to_string(total) + " points over budget");
  std::uint64_t zeros = 0;
  std::vector<Fe> pt(m, Fe{0});
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < m; ++i) {
      pt[i] = Fe{static_cast<std::uint32_t>(t % fd->q())};
      t /= fd->q();
    }
    if (h.eval(pt) == Fe{0}) ++zeros;
  }
  return zeros;
}

}  // namespace chowlaff
