#ifndef HTRI_ERRORS_HPP
#define HTRI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace htri {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation at a pole of the gamma function (nonpositive integer argument).
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Series hit its term cap before meeting the termination criterion.
class NoConvergence : public std::runtime_error {
public:
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// A quadrature node evaluated to NaN/Inf.
class NonFiniteError : public std::runtime_error {
public:
    explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace htri

#endif
