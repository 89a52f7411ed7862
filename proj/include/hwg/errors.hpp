#ifndef HWG_ERRORS_HPP
#define HWG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hwg {

// Invalid parameters or descriptors (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver failed to converge (CLI exit code 3).
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}
    double best_residual() const { return best_residual_; }

private:
    double best_residual_;
};

// A mathematically guaranteed property failed numerically, e.g. a ground-state
// energy slope coming out nonnegative (CLI exit code 4).
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hwg

#endif
