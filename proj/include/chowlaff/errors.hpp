#pragma once

#include <stdexcept>
#include <string>

namespace chowlaff {

enum class errc {
  not_prime,
  even_characteristic,
  bound_exceeded,
  division_by_zero,
  field_mismatch,
  zero_polynomial,
  constant_polynomial,
  duplicate_node,
  budget_exceeded,
  invalid_spec,
  consistency_failure,
};

const char* errc_name(errc e);

/// Single exception type for the whole library; the code distinguishes
/// the failure class, the message carries the specifics (and, for
/// consistency failures, the full counterexample).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace chowlaff
