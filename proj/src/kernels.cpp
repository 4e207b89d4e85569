#include "segprop/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace segprop {

Complex free_kernel(double displacement, const EvolutionTime& dt, double mass, double hbar) {
    const Complex i_dt = Complex(0.0, 1.0) * dt.delta();
    const Complex prefactor = std::sqrt(mass / (2.0 * kPi * hbar * i_dt));
    const Complex exponent = Complex(0.0, mass * displacement * displacement / (2.0 * hbar)) / dt.delta();
    return prefactor * std::exp(exponent);
}

KernelResult image_kernel(const SegmentConfig& cfg, double x, double y, const EvolutionTime& dt,
                          const NumericPolicy& policy) {
    return image_kernel(cfg, PhaseRule::from_config(cfg), x, y, dt, policy);
}

KernelResult image_kernel(const SegmentConfig& cfg, const PhaseRule& rule, double x, double y,
                          const EvolutionTime& dt, const NumericPolicy& policy) {
    require_valid(cfg);
    policy.validate();
    const double L = cfg.length;
    if (!(x >= -L && x <= 2.0 * L)) throw DomainError("x must lie in [-L, 2L]");
    if (!(y >= -L && y <= 2.0 * L)) throw DomainError("y must lie in [-L, 2L]");
    if (dt.damping() <= 0.0) {
        throw TruncationError("image series has no certified truncation in undamped real time; use a damped dt");
    }

    // |G(d)| = |prefactor| exp(-beta d^2)
    const Complex delta = dt.delta();
    const double beta = cfg.mass * dt.damping() / (2.0 * cfg.hbar * std::norm(delta));
    const double prefactor = std::abs(free_kernel(0.0, dt, cfg.mass, cfg.hbar));

    auto term = [&](long r) { return phase(rule, r) * free_kernel(image_point(r, y, L) - x, dt, cfg.mass, cfg.hbar); };

    KernelResult out;
    Complex sum = term(0);
    long terms = 1;
    // For x, y in [0, L] the images of shell s lie in [sL, (s+1)L] or
    // [-sL, (1-s)L], so every shell beyond s is at distance >= s L from x.
    // Positions outside the segment shrink that by their overhang.
    auto overhang = [L](double p) { return std::max({0.0, -p, p - L}); };
    const double excess = overhang(x) + overhang(y);
    for (long s = 1;; ++s) {
        if (terms + 2 > policy.max_terms) {
            throw TruncationError("image series did not reach abs_tol within max_terms=" +
                                  std::to_string(policy.max_terms));
        }
        sum += term(s) + term(-s);
        terms += 2;
        const double gap = static_cast<double>(s) * L - excess;
        if (gap <= 0.0) continue;
        const double ratio = std::exp(-2.0 * beta * gap * L);
        if (ratio >= 1.0) continue;
        const double tail = 2.0 * prefactor * std::exp(-beta * gap * gap) / (1.0 - ratio);
        if (tail < policy.abs_tol) {
            out.value = sum;
            out.terms_used = terms;
            out.tail_bound = tail;
            return out;
        }
    }
}

ComparisonReport compare_kernels(const SegmentConfig& cfg, double x, double y, const EvolutionTime& dt,
                                 const NumericPolicy& policy) {
    ComparisonReport report;
    report.spectral = spectral_kernel(cfg, x, y, dt, policy);
    report.image = image_kernel(cfg, x, y, dt, policy);
    report.abs_diff = std::abs(report.spectral.value - report.image.value);
    const double scale = std::max({std::abs(report.spectral.value), std::abs(report.image.value), 1e-300});
    report.rel_diff = report.abs_diff / scale;
    return report;
}

}  // namespace segprop
