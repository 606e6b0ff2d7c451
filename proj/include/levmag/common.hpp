#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace levmag {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kMu0 = 1.25663706212e-6;  // vacuum permeability [T m/A]
inline constexpr double kGravity = 9.80665;       // standard gravity [m/s^2]
inline constexpr double kHbar = 1.054571817e-34;  // reduced Planck constant [J s]

// Error taxonomy. Warnings (truncation tails, ill-conditioning) go through
// warn() instead and never abort a computation.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoEquilibriumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CrossCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Prints "[levmag] warning: <msg>" to stderr. Set LEVMAG_QUIET=1 to suppress.
void warn(const std::string& msg);

}  // namespace levmag
