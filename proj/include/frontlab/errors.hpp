#pragma once

#include <stdexcept>
#include <string>

namespace frontlab {

/// Base class for all solver and validation failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The shooting trajectory crossed phi = 0 with negative slope (speed below minimal).
class OvershootError : public Error {
public:
    OvershootError(double c, double z_cross)
        : Error("profile overshoot at c=" + std::to_string(c) +
                ", phi crossed 0 near z=" + std::to_string(z_cross)),
          c(c), z_cross(z_cross) {}
    double c;
    double z_cross;
};

/// Integration window ended before the trajectory reached the far limit.
class DomainTooSmallError : public Error {
public:
    explicit DomainTooSmallError(const std::string& what) : Error(what) {}
};

class BracketExpansionError : public Error {
public:
    explicit BracketExpansionError(const std::string& what) : Error(what) {}
};

/// Root pair would be complex: c below 2*sqrt(f'(0)).
class ComplexRootsError : public Error {
public:
    explicit ComplexRootsError(const std::string& what) : Error(what) {}
};

class NoCrossingError : public Error {
public:
    explicit NoCrossingError(const std::string& what) : Error(what) {}
};

class NonMonotoneError : public Error {
public:
    explicit NonMonotoneError(const std::string& what) : Error(what) {}
};

class MultipleCrossingsError : public Error {
public:
    MultipleCrossingsError(std::size_t column, const std::string& what)
        : Error(what), column(column) {}
    std::size_t column;
};

class EmptyBandError : public Error {
public:
    explicit EmptyBandError(const std::string& what) : Error(what) {}
};

/// Time stepper detected unbounded values.
class BlowUpError : public Error {
public:
    explicit BlowUpError(const std::string& what) : Error(what) {}
};

/// Speed/decay classification criteria disagree.
class InconsistentClassificationError : public Error {
public:
    explicit InconsistentClassificationError(const std::string& what) : Error(what) {}
};

/// Modulation constants exceed the epsilon budget q(inf) <= eps.
class EpsilonBudgetError : public Error {
public:
    explicit EpsilonBudgetError(const std::string& what) : Error(what) {}
};

/// Constant-ladder search ran out of candidates without a certificate.
class SearchExhaustedError : public Error {
public:
    SearchExhaustedError(const std::string& what, double worst_violation)
        : Error(what), worst_violation(worst_violation) {}
    double worst_violation;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

class FitError : public Error {
public:
    explicit FitError(const std::string& what) : Error(what) {}
};

}  // namespace frontlab
