#pragma once

// Reflection off a finite step V(x) = h for x > 0 at energy 0 < E < h, and the
// bound states of the symmetric finite well of width L and wall height h.
//
//   k = sqrt(2 m E) / hbar,  q = sqrt(2 m (h - E)) / hbar
//   R = (k - i q) / (k + i q) = exp(-i theta),  theta = 2 atan2(q, k) in (0, pi)
//
// Weighting every wall reflection by R, a round trip across the well picks up
// exp(2 i k L) R^2; bound states sit where that equals one:
//
//   k L - theta(E) = n pi,  n = 0, 1, 2, ...

#include <vector>

#include "segprop/core.hpp"

namespace segprop {

struct BarrierScattering {
    double energy = 0.0;
    double height = 0.0;
    double k = 0.0;
    double q = 0.0;
    Complex reflection;
    double theta = 0.0;
};

BarrierScattering reflection(double energy, double height, double mass = 1.0, double hbar = 1.0);

/// theta = 2 atan2(q, k); the phase lost on reflection.
double reflection_phase(double k, double q);

struct WellLevel {
    long n = 0;
    double k = 0.0;
    double energy = 0.0;
};

struct WellLevels {
    double length = 0.0;
    double height = 0.0;
    std::vector<WellLevel> levels;
};

/// Roots of k L - theta(E(k)) = n pi on (0, sqrt(2 m h) / hbar), found by a
/// scan with step pi / (10 L) and bisection to machine precision.
WellLevels well_levels_quantization(double length, double height, double mass = 1.0, double hbar = 1.0,
                                    const NumericPolicy& policy = {});

/// Independent reference: even states tan(kL/2) = q/k, odd states
/// -cot(kL/2) = q/k, bracketed and bisected. Levels are numbered 0, 1, ...
WellLevels well_levels_oracle(double length, double height, double mass = 1.0, double hbar = 1.0);

}  // namespace segprop
