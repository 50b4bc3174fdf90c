// errors.hpp — Exception taxonomy shared by the library and the CLI

#pragma once

#include <stdexcept>
#include <string>

namespace qupair {

// Invalid physical input (negative coupling, weight outside [0,1], ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent run configuration (bad topology/bath combination, bad keys).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerics failed to meet a required tolerance (quadrature, trace drift).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured memory/size cap.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qupair
