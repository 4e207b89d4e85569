#pragma once

// Free-particle kernel, the method-of-images propagator on [0, L], and the
// spectral-vs-image comparison.
//
// The image propagator is
//
//     K(y, x; dt) = sum_r eps_r G(y_r - x; dt)
//
// with G the free kernel and eps_r from images.hpp. Summed in shell order
// r = 0, 1, -1, 2, -2, ... so that truncation is symmetric.

#include "segprop/core.hpp"
#include "segprop/images.hpp"
#include "segprop/spectral.hpp"

namespace segprop {

/// sqrt(m / (2 pi i hbar dt)) exp(i m d^2 / (2 hbar dt)), principal branch
/// with arg(dt) in (-pi, 0]. For dt = -i tau this is the heat kernel.
Complex free_kernel(double displacement, const EvolutionTime& dt, double mass, double hbar);

/// Image sum with the reflection phases of cfg's endpoints. Like
/// spectral_kernel, accepts positions in [-L, 2L].
KernelResult image_kernel(const SegmentConfig& cfg, double x, double y, const EvolutionTime& dt,
                          const NumericPolicy& policy = {});

/// Image sum with an explicit phase rule (the endpoints of cfg are ignored).
KernelResult image_kernel(const SegmentConfig& cfg, const PhaseRule& rule, double x, double y,
                          const EvolutionTime& dt, const NumericPolicy& policy = {});

struct ComparisonReport {
    KernelResult spectral;
    KernelResult image;
    double abs_diff = 0.0;
    double rel_diff = 0.0;  // abs_diff / max(|spectral|, |image|, 1e-300)
};

ComparisonReport compare_kernels(const SegmentConfig& cfg, double x, double y, const EvolutionTime& dt,
                                 const NumericPolicy& policy = {});

}  // namespace segprop
