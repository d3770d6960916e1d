#include "chowlaff/ffield.hpp"

#include <algorithm>
#include <string>

namespace chowlaff {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --- minimal F_p[x] arithmetic on coefficient vectors (low degree first),
// used only to pick the field modulus before any Field exists ---

using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  // reduce mod monic m
  const std::size_t k = m.size() - 1;
  for (std::size_t d = c.size(); d-- > k;) {
    std::uint32_t lead = c[d];
    if (lead == 0) continue;
    c[d] = 0;
    for (std::size_t j = 0; j < k; ++j)
      c[d - k + j] = (c[d - k + j] + static_cast<std::uint64_t>(lead) * (p - m[j] % p)) % p;
  }
  c.resize(std::min(c.size(), k));
  ptrim(c);
  return c;
}

PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& m, std::uint32_t p) {
  PPoly r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, m, p);
    base = pmulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
  // b nonzero, not necessarily monic
  ptrim(a);
  const std::size_t db = b.size() - 1;
  std::uint32_t binv = 1;
  {  // inverse of lc(b) mod p by Fermat
    std::uint64_t base = b.back(), r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    binv = static_cast<std::uint32_t>(r);
  }
  while (a.size() > db) {
    std::uint32_t factor = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.back()) * binv % p);
    std::size_t shift = a.size() - 1 - db;
    if (factor != 0)
      for (std::size_t j = 0; j <= db; ++j)
        a[shift + j] = (a[shift + j] + static_cast<std::uint64_t>(factor) * (p - b[j] % p)) % p;
    ptrim(a);
    if (a.empty()) break;
  }
  return a;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin test: m (monic, degree k) is irreducible over F_p iff
// x^{p^k} == x (mod m) and gcd(x^{p^{k/l}} - x, m) = 1 for each prime l | k.
bool irreducible(const PPoly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  PPoly x{0, 1};
  std::uint64_t pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  PPoly xq = ppowmod(x, pk, m, p);
  if (xq != pmulmod(x, {1}, m, p)) return false;
  std::uint32_t rem = static_cast<std::uint32_t>(k);
  for (std::uint32_t l = 2; l <= rem; ++l) {
    if (rem % l != 0) continue;
    while (rem % l == 0) rem /= l;
    std::uint64_t pd = 1;
    for (std::size_t i = 0; i < k / l; ++i) pd *= p;
    PPoly h = ppowmod(x, pd, m, p);
    // h - x
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    ptrim(h);
    PPoly g = pgcd(m, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr Field::make(std::uint32_t p, std::uint32_t k, TableMode mode) {
  if (!is_prime(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
  if (p == 2) fail(errc::even_characteristic, "q must be odd");
  if (k < 1) fail(errc::invalid_spec, "extension degree k must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > hard_bound)
      fail(errc::bound_exceeded, "q = p^k exceeds the field bound " + std::to_string(hard_bound));
  }
  bool tables = mode == TableMode::on || (mode == TableMode::automatic && q <= table_bound);
  if (mode == TableMode::on && q > table_bound)
    fail(errc::bound_exceeded, "q = " + std::to_string(q) + " exceeds the table bound");

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);
  if (k == 1) {
    f->modulus_ = {0, 1};
  } else {
    // first monic irreducible of degree k in canonical index order
    PPoly m(k + 1, 0);
    m[k] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < k; ++i) {
        m[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      if (irreducible(m, p)) {
        found = true;
        break;
      }
    }
    if (!found) fail(errc::consistency_failure, "no irreducible modulus found");  // cannot happen
    f->modulus_ = m;
  }
  if (tables) f->build_tables();
  return f;
}

FieldPtr Field::make_q(std::uint32_t q, TableMode mode) {
  if (q < 3) fail(errc::invalid_spec, "q must be an odd prime power >= 3");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t k = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) fail(errc::not_prime, std::to_string(q) + " is not a prime power");
  return make(p, k, mode);
}

Fe Field::add(Fe a, Fe b) const {
  check(a);
  check(b);
  if (k_ == 1) {
    std::uint32_t s = a.v + b.v;
    return Fe{s >= q_ ? s - q_ : s};
  }
  std::uint32_t r = 0, mul = 1, av = a.v, bv = b.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = av % p_ + bv % p_;
    if (d >= p_) d -= p_;
    r += d * mul;
    mul *= p_;
    av /= p_;
    bv /= p_;
  }
  return Fe{r};
}

Fe Field::neg(Fe a) const {
  check(a);
  if (k_ == 1) return Fe{a.v == 0 ? 0 : q_ - a.v};
  std::uint32_t r = 0, mul = 1, av = a.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = av % p_;
    r += (d == 0 ? 0 : p_ - d) * mul;
    mul *= p_;
    av /= p_;
  }
  return Fe{r};
}

Fe Field::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe Field::mul_direct(Fe a, Fe b) const {
  if (k_ == 1)
    return Fe{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  std::vector<std::uint32_t> da = digits(a), db = digits(b);
  std::vector<std::uint32_t> c(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < k_; ++j)
      c[i + j] = (c[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
  }
  for (std::size_t d = c.size(); d-- > k_;) {
    std::uint32_t lead = c[d];
    if (lead == 0) continue;
    c[d] = 0;
    for (std::uint32_t j = 0; j < k_; ++j)
      c[d - k_ + j] =
          (c[d - k_ + j] + static_cast<std::uint64_t>(lead) * (p_ - modulus_[j])) % p_;
  }
  std::uint32_t r = 0, mul = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += c[i] * mul;
    mul *= p_;
  }
  return Fe{r};
}

Fe Field::pow_direct(Fe a, std::uint64_t e) const {
  if (a.v == 0) return e == 0 ? one() : zero();
  Fe r = one(), base = a;
  e %= (q_ - 1);  // a != 0, so orders divide q-1
  while (e) {
    if (e & 1) r = mul_direct(r, base);
    base = mul_direct(base, base);
    e >>= 1;
  }
  return r;
}

Fe Field::inv_direct(Fe a) const { return pow_direct(a, q_ - 2); }

int Field::chi2_direct(Fe a) const {
  if (a.v == 0) return 0;
  return pow_direct(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

Fe Field::mul(Fe a, Fe b) const {
  check(a);
  check(b);
  if (!tables_) return mul_direct(a, b);
  if (a.v == 0 || b.v == 0) return zero();
  return Fe{exp_[log_[a.v] + log_[b.v]]};
}

Fe Field::inv(Fe a) const {
  check(a);
  if (a.v == 0) fail(errc::division_by_zero, "inverse of zero");
  if (!tables_) return inv_direct(a);
  return Fe{exp_[q_ - 1 - log_[a.v]]};
}

Fe Field::div(Fe a, Fe b) const {
  check(a);
  check(b);
  if (b.v == 0) fail(errc::division_by_zero, "division by zero");
  if (!tables_) return mul_direct(a, inv_direct(b));
  if (a.v == 0) return zero();
  return Fe{exp_[log_[a.v] + (q_ - 1) - log_[b.v]]};
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  check(a);
  if (!tables_) return pow_direct(a, e);
  if (a.v == 0) return e == 0 ? one() : zero();
  std::uint64_t le = static_cast<std::uint64_t>(log_[a.v]) * (e % (q_ - 1)) % (q_ - 1);
  return Fe{exp_[le]};
}

int Field::chi2(Fe a) const {
  check(a);
  if (!tables_) return chi2_direct(a);
  return chi_[a.v];
}

std::vector<std::uint32_t> Field::digits(Fe a) const {
  check(a);
  std::vector<std::uint32_t> d(k_);
  std::uint32_t v = a.v;
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

void Field::build_tables() {
  // primitive element: first index whose order is exactly q-1
  std::uint32_t n = q_ - 1;
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t t = n;
    for (std::uint32_t d = 2; d * d <= t; ++d)
      if (t % d == 0) {
        prime_factors.push_back(d);
        while (t % d == 0) t /= d;
      }
    if (t > 1) prime_factors.push_back(t);
  }
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (std::uint32_t l : prime_factors)
      if (pow_direct(Fe{g}, n / l) == one()) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      break;
    }
  }
  exp_.assign(2 * n, 0);
  log_.assign(q_, 0);
  Fe cur = one();
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = cur.v;
    exp_[i + n] = cur.v;
    log_[cur.v] = i;
    cur = mul_direct(cur, Fe{generator_});
  }
  chi_.assign(q_, 0);
  for (std::uint32_t v = 1; v < q_; ++v) chi_[v] = (log_[v] % 2 == 0) ? 1 : -1;
  tables_ = true;
}

Embedding::Embedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
  if (base_->p() != ext_->p() || ext_->k() % base_->k() != 0)
    fail(errc::invalid_spec, "no embedding: target is not an extension of the source field");
  const std::uint32_t q = base_->q(), k = base_->k();
  up_.resize(q);
  if (k == 1) {
    for (std::uint32_t v = 0; v < q; ++v) up_[v] = Fe{v};  // prime subfield = constants
  } else {
    // first root of the base modulus inside ext, canonical order
    const auto& m = base_->modulus();
    Fe rho = ext_->zero();
    bool found = false;
    for (std::uint32_t c = 0; c < ext_->q(); ++c) {
      Fe x{c}, acc = ext_->zero();
      for (std::size_t i = m.size(); i-- > 0;)
        acc = ext_->add(ext_->mul(acc, x), Fe{m[i]});
      if (acc == ext_->zero()) {
        rho = x;
        found = true;
        break;
      }
    }
    if (!found) fail(errc::consistency_failure, "base modulus has no root in extension");
    std::vector<Fe> rho_pow(k, ext_->one());
    for (std::uint32_t i = 1; i < k; ++i) rho_pow[i] = ext_->mul(rho_pow[i - 1], rho);
    for (std::uint32_t v = 0; v < q; ++v) {
      auto dig = base_->digits(Fe{v});
      Fe acc = ext_->zero();
      for (std::uint32_t i = 0; i < k; ++i)
        acc = ext_->add(acc, ext_->mul(Fe{dig[i]}, rho_pow[i]));
      up_[v] = acc;
    }
  }
  down_.reserve(q);
  for (std::uint32_t v = 0; v < q; ++v) down_.emplace(up_[v].v, v);
}

}  // namespace chowlaff
