#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chowlaff/errors.hpp"

namespace chowlaff {

/// Default cap on the number of summands any single enumeration may touch.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Element of some Field, stored as its canonical index in [0, q).
/// For q = p^k the index encodes the coefficient vector of the residue
/// in base p: index = c0 + c1*p + ... + c_{k-1}*p^{k-1}.
struct Fe {
  std::uint32_t v = 0;
  friend bool operator==(Fe, Fe) = default;
};

enum class TableMode { automatic, on, off };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^k} with q = p^k odd. Immutable after construction, shareable
/// across threads. Arithmetic runs either through log/antilog tables
/// (built for q <= table_bound) or through the direct coefficient-vector
/// path; the direct path is the oracle for the tables.
class Field {
 public:
  static constexpr std::uint32_t table_bound = 1u << 16;
  static constexpr std::uint32_t hard_bound = 1u << 20;

  /// Deterministic construction: the modulus is the first monic
  /// irreducible of degree k over F_p in canonical index order.
  static FieldPtr make(std::uint32_t p, std::uint32_t k,
                       TableMode mode = TableMode::automatic);
  /// Factors q and delegates to make(); q must be an odd prime power.
  static FieldPtr make_q(std::uint32_t q, TableMode mode = TableMode::automatic);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  bool tables_on() const { return tables_; }
  /// Modulus as k+1 base-p coefficients, lowest degree first, monic.
  /// For k = 1 this is the formal (and unused) x - 0.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// Same mathematical field: equal (p, k, modulus); table mode ignored.
  bool compatible(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  Fe elem(std::uint32_t index) const {
    check(Fe{index});
    return Fe{index};
  }
  /// Integer constant n*1, i.e. n mod p embedded as a constant.
  Fe from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fe{static_cast<std::uint32_t>(r)};
  }

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const;
  Fe pow(Fe a, std::uint64_t e) const;

  /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise
  /// (Euler criterion a^((q-1)/2); log-parity shortcut in table mode).
  int chi2(Fe a) const;

  /// Base-p coefficient vector of an element, length k.
  std::vector<std::uint32_t> digits(Fe a) const;

  ~Field() = default;
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void check(Fe a) const {
    if (a.v >= q_) fail(errc::field_mismatch, "element index out of range for this field");
  }

  Fe mul_direct(Fe a, Fe b) const;
  Fe pow_direct(Fe a, std::uint64_t e) const;
  Fe inv_direct(Fe a) const;
  int chi2_direct(Fe a) const;
  void build_tables();

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  bool tables_ = false;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> log_;   // index -> discrete log, log_[0] unused
  std::vector<std::uint32_t> exp_;   // length 2(q-1), exp_[i] = g^i
  std::vector<std::int8_t> chi_;     // cached character values
};

/// Deterministic embedding of base = F_{p^k} into ext = F_{p^{k*m}}:
/// the image of the base generator is the first root (in canonical
/// order) of the base modulus inside ext. For k = 1 the map is the
/// identity on constant indices.
class Embedding {
 public:
  Embedding(FieldPtr base, FieldPtr ext);

  Fe up(Fe a) const { return up_[a.v]; }
  std::optional<Fe> down(Fe b) const {
    auto it = down_.find(b.v);
    if (it == down_.end()) return std::nullopt;
    return Fe{it->second};
  }
  const FieldPtr& base() const { return base_; }
  const FieldPtr& ext() const { return ext_; }

 private:
  FieldPtr base_, ext_;
  std::vector<Fe> up_;
  std::unordered_map<std::uint32_t, std::uint32_t> down_;
};

}  // namespace chowlaff
