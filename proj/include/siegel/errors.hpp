#ifndef SIEGEL_ERRORS_HPP
#define SIEGEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace siegel {

// Argument outside a function's domain (x <= 0, |nu| > 2, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Evaluation requested inside a pole guard band; carries the offending argument.
class pole_error : public domain_error {
public:
    pole_error(const std::string& msg, double arg)
        : domain_error(msg + " (argument " + std::to_string(arg) + ")"), arg_(arg) {}
    double argument() const { return arg_; }

private:
    double arg_;
};

// A truncation/iteration budget was exhausted before the tolerance was met.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller-side contract was violated (bad bracket, wrong regime, mis-flagged spec).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

} // namespace siegel

#endif
