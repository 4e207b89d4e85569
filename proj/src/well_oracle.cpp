// Reference solver for the symmetric finite square well by wavefunction
// matching. Shares nothing with the reflection-phase solver in barrier.cpp
// beyond the physical constants.
//
// With z = k L / 2 and z0 = sqrt(2 m h) L / (2 hbar), w = sqrt(z0^2 - z^2):
//   even:  tan z = w / z   <=>  z sin z - w cos z = 0
//   odd:  -cot z = w / z   <=>  z cos z + w sin z = 0
// Both forms are pole-free on (0, z0).

#include <algorithm>
#include <cmath>

#include "segprop/barrier.hpp"

namespace segprop {

WellLevels well_levels_oracle(double length, double height, double mass, double hbar) {
    if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("L must be > 0");
    if (!(height > 0.0) || !std::isfinite(height)) throw DomainError("h must be > 0");
    if (!(mass > 0.0) || !(hbar > 0.0)) throw DomainError("m and hbar must be > 0");

    const double z0 = std::sqrt(2.0 * mass * height) * length / (2.0 * hbar);
    auto w = [z0](double z) { return std::sqrt(std::max(z0 * z0 - z * z, 0.0)); };
    auto even = [&](double z) { return z * std::sin(z) - w(z) * std::cos(z); };
    auto odd = [&](double z) { return z * std::cos(z) + w(z) * std::sin(z); };

    std::vector<double> roots;
    auto scan = [&](auto&& f) {
        const double step = kPi / 64.0;
        double a = 1e-12 * z0;
        double fa = f(a);
        while (a < z0) {
            const double b = std::min(a + step, z0);
            const double fb = f(b);
            if (fa == 0.0) {
                roots.push_back(a);
            } else if (fa * fb < 0.0) {
                double lo = a, hi = b, flo = fa;
                while (true) {
                    const double mid = lo + 0.5 * (hi - lo);
                    if (mid == lo || mid == hi) break;
                    const double fm = f(mid);
                    if ((fm < 0.0) == (flo < 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push_back(0.5 * (lo + hi));
            }
            a = b;
            fa = fb;
        }
    };
    scan(even);
    scan(odd);
    std::sort(roots.begin(), roots.end());

    WellLevels out{length, height, {}};
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i] >= z0) continue;
        const double k = 2.0 * roots[i] / length;
        out.levels.push_back({static_cast<long>(out.levels.size()), k, hbar * hbar * k * k / (2.0 * mass)});
    }
    return out;
}

}  // namespace segprop
