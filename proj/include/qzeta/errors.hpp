#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qzeta {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Series inversion requires the constant term to be a unit of the
/// integer coefficient ring, i.e. +1 or -1.
class NonUnitConstantTerm : public Error {
public:
    explicit NonUnitConstantTerm(const std::string& what) : Error(what) {}
};

/// Comparison was requested through an order exceeding an operand's order.
class OrderTooSmall : public Error {
public:
    explicit OrderTooSmall(const std::string& what) : Error(what) {}
};

/// A divisor sum that must be exactly divisible turned out not to be.
class NonIntegralResult : public Error {
public:
    explicit NonIntegralResult(const std::string& what) : Error(what) {}
};

/// Numeric summation/product failed to reach the tolerance within the
/// configured term ceiling.
class NoConvergence : public Error {
public:
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

/// Identity id not present in the catalog.
class UnknownIdentity : public Error {
public:
    explicit UnknownIdentity(const std::string& what) : Error(what) {}
};

}  // namespace qzeta
