#pragma once

// Eigenmodes of -hbar^2/(2m) d^2/dx^2 on [0, L] and the spectral-sum
// propagator built from them.
//
//   DD: k = n pi / L,        n >= 1, sqrt(2/L) sin(k x)
//   NN: k = n pi / L,        n >= 0, sqrt(2/L) cos(k x), n = 0 -> sqrt(1/L)
//   ND: k = (n - 1/2) pi / L, n >= 1, sqrt(2/L) cos(k x)
//   DN: k = (n - 1/2) pi / L, n >= 1, sqrt(2/L) sin(k x)
//
// DN is ND under x -> L - x: cos(k (L - x)) = (-1)^(n+1) sin(k x), so the two
// give identical kernels with the arguments mirrored.

#include <cstddef>
#include <vector>

#include "segprop/core.hpp"

namespace segprop {

enum class ModeShape { SinLike, CosLike };

struct Mode {
    long n = 0;
    double k = 0.0;
    double energy = 0.0;
    double norm = 0.0;
    ModeShape shape_left = ModeShape::SinLike;
    bool zero_mode = false;  // the constant NN ground state

    /// psi(x) = norm * cos(k x - phase).
    double phase() const noexcept { return shape_left == ModeShape::SinLike ? 0.5 * kPi : 0.0; }
};

/// Mode number `index` counted from zero for the given boundary pairing.
Mode mode_at(const SegmentConfig& cfg, std::size_t index);

class Spectrum {
public:
    Spectrum(SegmentConfig cfg, std::size_t count);

    const SegmentConfig& config() const noexcept { return cfg_; }
    const std::vector<Mode>& modes() const noexcept { return modes_; }
    std::size_t size() const noexcept { return modes_.size(); }
    const Mode& operator[](std::size_t i) const { return modes_[i]; }

    /// A new spectrum holding the first `count` modes.
    Spectrum extended(std::size_t count) const;

private:
    SegmentConfig cfg_;
    std::vector<Mode> modes_;
};

/// The first `count` modes in increasing k.
Spectrum modes(const SegmentConfig& cfg, std::size_t count);

/// Normalized psi(x); x must lie in [0, L].
double eigenfunction(const Mode& mode, const SegmentConfig& cfg, double x);

/// Same as eigenfunction() without the range check; d psi / dx.
double eigenfunction_derivative(const Mode& mode, double x);

struct KernelResult {
    Complex value;
    long terms_used = 0;
    double tail_bound = 0.0;
};

/// sum_n exp(-i E_n dt / hbar) psi_n(x) psi_n(y), truncated once the
/// geometric tail majorant drops below policy.abs_tol. Physical positions are
/// in [0, L]; the sum is also evaluated on [-L, 2L] as its reflected extension.
KernelResult spectral_kernel(const SegmentConfig& cfg, double x, double y, const EvolutionTime& dt,
                             const NumericPolicy& policy = {});

/// sum_n exp(-i E_n dt / hbar), the trace of the propagator.
KernelResult trace(const SegmentConfig& cfg, const EvolutionTime& dt, const NumericPolicy& policy = {});

}  // namespace segprop
