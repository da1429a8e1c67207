#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gtrig/types.hpp"

namespace gtrig {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input or violated precondition. The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A root of P lies on, or within the guard distance of, an integer.
class NearIntegerRootError : public InputError {
public:
    NearIntegerRootError(const std::string& what, Complex root, double distance)
        : InputError(what), root_(root), distance_(distance) {}

    Complex root() const noexcept { return root_; }
    double distance() const noexcept { return distance_; }

private:
    Complex root_;
    double distance_;
};

/// Numerical failure (non-convergence, singular system). CLI exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, ComplexVector best, double residual)
        : NumericalError(what), best_(std::move(best)), residual_(residual) {}

    const ComplexVector& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }

private:
    ComplexVector best_;
    double residual_;
};

class SingularMatrixError : public NumericalError {
public:
    SingularMatrixError(const std::string& what, std::size_t pivot)
        : NumericalError(what), pivot_(pivot) {}

    std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

/// An exponent in an exponential sum would leave the double range.
class OverflowError : public NumericalError {
public:
    OverflowError(const std::string& what, Complex root) : NumericalError(what), root_(root) {}

    Complex root() const noexcept { return root_; }

private:
    Complex root_;
};

}  // namespace gtrig
