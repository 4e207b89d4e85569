#include "segprop/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace segprop {

namespace {

void require_physical(double mass, double hbar) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("m must be > 0");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw DomainError("hbar must be > 0");
}

void require_well(double length, double height, double mass, double hbar) {
    if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("L must be > 0");
    if (!(height > 0.0) || !std::isfinite(height)) throw DomainError("h must be > 0");
    require_physical(mass, hbar);
}

}  // namespace

double reflection_phase(double k, double q) { return 2.0 * std::atan2(q, k); }

BarrierScattering reflection(double energy, double height, double mass, double hbar) {
    require_physical(mass, hbar);
    if (!std::isfinite(energy) || !std::isfinite(height)) throw DomainError("E and h must be finite");
    if (!(energy > 0.0)) throw DomainError("E must be > 0");
    if (!(energy < height)) throw DomainError("E must be below the barrier height h (0 < E < h)");

    BarrierScattering s;
    s.energy = energy;
    s.height = height;
    s.k = wavenumber_of(energy, mass, hbar);
    s.q = wavenumber_of(height - energy, mass, hbar);
    s.reflection = Complex(s.k, -s.q) / Complex(s.k, s.q);
    s.theta = reflection_phase(s.k, s.q);
    return s;
}

WellLevels well_levels_quantization(double length, double height, double mass, double hbar,
                                    const NumericPolicy& policy) {
    require_well(length, height, mass, hbar);
    policy.validate();

    const double k_max = wavenumber_of(height, mass, hbar);
    const double kmax_sq = k_max * k_max;
    // k L - theta(k), increasing from -pi at k = 0 to k_max L at k = k_max
    auto condition = [&](double k) {
        const double q = std::sqrt(std::max(kmax_sq - k * k, 0.0));
        return k * length - reflection_phase(k, q);
    };

    const double max_step = kPi / (10.0 * length);
    const double intervals = std::ceil(k_max / max_step);
    if (intervals > static_cast<double>(policy.max_terms)) {
        throw TruncationError("well scan needs " + std::to_string(static_cast<long>(intervals)) +
                              " intervals, above max_terms");
    }
    const long steps = std::max(1L, static_cast<long>(intervals));
    const double step = k_max / static_cast<double>(steps);
    const double top = k_max * length;  // n pi must stay below this (E < h)

    WellLevels out{length, height, {}};
    double ka = 0.0;
    double ga = condition(ka);
    for (long i = 1; i <= steps; ++i) {
        const double kb = (i == steps) ? k_max : static_cast<double>(i) * step;
        const double gb = condition(kb);
        for (long n = std::max(0L, static_cast<long>(std::floor(ga / kPi)) + 1);; ++n) {
            const double level = static_cast<double>(n) * kPi;
            if (level > gb || level >= top) break;
            double lo = ka;
            double hi = kb;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                (condition(mid) < level ? lo : hi) = mid;
            }
            const double k = 0.5 * (lo + hi);
            out.levels.push_back({n, k, energy_of(k, mass, hbar)});
        }
        ka = kb;
        ga = gb;
    }
    return out;
}

}  // namespace segprop
