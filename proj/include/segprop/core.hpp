#pragma once

// Problem configuration, complex evolution time and numeric policy shared by
// every other part of the library.
//
// Conventions:
//   * time evolution factor is exp(-i E dt / hbar) for every boundary pairing
//   * Euclidean time is dt = -i tau, tau > 0
//   * defaults are hbar = m = 1; L is free

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace segprop {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid physical input (bad config, position outside the segment, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A series needed more terms than NumericPolicy::max_terms allows, or has no
/// certifiable truncation at all (undamped real time).
class TruncationError : public Error {
public:
    using Error::Error;
};

enum class BoundaryKind { Dirichlet, Neumann };

struct SegmentConfig {
    double length = 1.0;
    double mass = 1.0;
    double hbar = 1.0;
    BoundaryKind left = BoundaryKind::Dirichlet;
    BoundaryKind right = BoundaryKind::Dirichlet;
};

/// Two-letter code, left endpoint first: "DD", "NN", "ND", "DN".
std::string bc_code(const SegmentConfig& cfg);
std::string bc_code(BoundaryKind left, BoundaryKind right);

/// Parses "DD", "NN", "ND" or "DN" (case-insensitive) into cfg.left/right.
void set_bc(SegmentConfig& cfg, std::string_view code);

/// Every violated invariant of cfg, empty when the config is usable.
std::vector<std::string> validate_config(const SegmentConfig& cfg);

/// Throws DomainError listing every problem reported by validate_config.
void require_valid(const SegmentConfig& cfg);

enum class RealTimeMode { Reject, Allow };

/// Complex interval dt = t1 - t0. Admissible iff im(dt) < 0, or im(dt) == 0
/// with RealTimeMode::Allow (distribution-valued, conditionally convergent).
class EvolutionTime {
public:
    static EvolutionTime make(Complex delta, RealTimeMode mode = RealTimeMode::Reject);
    static EvolutionTime euclidean(double tau);

    Complex delta() const noexcept { return delta_; }
    bool is_real_time() const noexcept { return delta_.imag() == 0.0; }

    /// tau for a purely imaginary dt = -i tau; empty otherwise.
    std::optional<double> tau() const noexcept;

    /// |im(dt)|, the damping that makes every series here converge.
    double damping() const noexcept { return -delta_.imag(); }

private:
    explicit EvolutionTime(Complex d) : delta_(d) {}
    Complex delta_;
};

/// Shorthand for EvolutionTime::euclidean.
EvolutionTime make_euclidean(double tau);

struct NumericPolicy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    long max_terms = 100000;

    void validate() const;
};

inline double energy_of(double k, double mass, double hbar) {
    return hbar * hbar * k * k / (2.0 * mass);
}

inline double wavenumber_of(double energy, double mass, double hbar) {
    return std::sqrt(2.0 * mass * energy) / hbar;
}

}  // namespace segprop
