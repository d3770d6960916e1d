#include "chowlaff/errors.hpp"

namespace chowlaff {

const char* errc_name(errc e) {
  switch (e) {
    case errc::not_prime: return "NotPrime";
    case errc::even_characteristic: return "EvenCharacteristic";
    case errc::bound_exceeded: return "BoundExceeded";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::constant_polynomial: return "ConstantPolynomial";
    case errc::duplicate_node: return "DuplicateNode";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::consistency_failure: return "ConsistencyFailure";
  }
  return "UnknownError";
}

}  // namespace chowlaff
