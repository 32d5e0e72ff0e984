#pragma once

#include <stdexcept>
#include <string>

namespace dtsm {

/// Malformed or missing input data (bad CSV rows, absent fixings, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (non-convergent quadrature, singular innovation matrix, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dtsm
