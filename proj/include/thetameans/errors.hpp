// Exception types shared by all theta-means modules.
#ifndef THETAMEANS_ERRORS_HPP
#define THETAMEANS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thetameans {

// Argument outside a documented precondition (wrong sign, wrong interval, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// Parameter set for which the requested formula does not exist
// (e.g. a connection formula in the logarithmic case c-a-b integral).
struct invalid_parameter : std::invalid_argument {
    explicit invalid_parameter(const std::string& msg) : std::invalid_argument(msg) {}
};

// An iterative scheme hit its cap before reaching the requested tolerance.
struct non_convergence : std::runtime_error {
    explicit non_convergence(const std::string& msg) : std::runtime_error(msg) {}
};

// Point where no evaluation route of the single-valued extension applies.
struct unsupported_region : std::domain_error {
    explicit unsupported_region(const std::string& msg) : std::domain_error(msg) {}
};

// Moebius denominator vanished.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& msg) : std::domain_error(msg) {}
};

// A validated internal invariant failed; indicates a bug, not bad input.
struct numerics_bug : std::logic_error {
    explicit numerics_bug(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace thetameans

#endif
