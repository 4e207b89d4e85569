#include "segprop/spectral.hpp"

#include <cmath>
#include <string>

namespace segprop {

namespace {

bool same_kind(const SegmentConfig& cfg) { return cfg.left == cfg.right; }

void require_on_segment(const SegmentConfig& cfg, double x, const char* name) {
    if (!(x >= 0.0 && x <= cfg.length)) {
        throw DomainError(std::string(name) + " must lie in [0, L]");
    }
}

// Kernels extend analytically past the walls; [-L, 2L] covers one reflection,
// enough for difference stencils that straddle an endpoint.
void require_near_segment(const SegmentConfig& cfg, double x, const char* name) {
    if (!(x >= -cfg.length && x <= 2.0 * cfg.length)) {
        throw DomainError(std::string(name) + " must lie in [-L, 2L]");
    }
}

// Geometric majorant for sum_{j >= 0} exp(-a (k + j dk)^2), k > 0:
// (k + j dk)^2 >= k^2 + 2 j k dk.
double gaussian_tail(double a, double k, double dk) {
    const double ratio = std::exp(-2.0 * a * k * dk);
    if (ratio >= 1.0) return HUGE_VAL;
    return std::exp(-a * k * k) / (1.0 - ratio);
}

void require_damped(const EvolutionTime& dt) {
    if (dt.damping() <= 0.0) {
        throw TruncationError("spectral series has no certified truncation in undamped real time; use a damped dt");
    }
}

// Shared driver: accumulates weight(mode) * exp(-i E dt / hbar) until the
// remaining modes are bounded by policy.abs_tol.
template <class Weight>
KernelResult sum_modes(const SegmentConfig& cfg, const EvolutionTime& dt, const NumericPolicy& policy,
                       double weight_bound, Weight&& weight) {
    require_damped(dt);
    const Complex rate = Complex(0.0, -1.0 / cfg.hbar) * dt.delta();
    const double a = cfg.hbar * dt.damping() / (2.0 * cfg.mass);
    const double dk = kPi / cfg.length;

    KernelResult out;
    Complex sum = 0.0;
    for (long j = 0; j < policy.max_terms; ++j) {
        const Mode mode = mode_at(cfg, static_cast<std::size_t>(j));
        sum += weight(mode) * std::exp(rate * mode.energy);
        const double next_k = mode_at(cfg, static_cast<std::size_t>(j + 1)).k;
        const double tail = weight_bound * gaussian_tail(a, next_k, dk);
        if (tail < policy.abs_tol) {
            out.value = sum;
            out.terms_used = j + 1;
            out.tail_bound = tail;
            return out;
        }
    }
    throw TruncationError("spectral series did not reach abs_tol within max_terms=" +
                          std::to_string(policy.max_terms) + " (tau too small for the requested tolerance)");
}

}  // namespace

Mode mode_at(const SegmentConfig& cfg, std::size_t index) {
    const double L = cfg.length;
    const double j = static_cast<double>(index);
    Mode m;
    m.norm = std::sqrt(2.0 / L);
    if (same_kind(cfg)) {
        if (cfg.left == BoundaryKind::Dirichlet) {
            m.n = static_cast<long>(index) + 1;
            m.k = (j + 1.0) * kPi / L;
            m.shape_left = ModeShape::SinLike;
        } else {
            m.n = static_cast<long>(index);
            m.k = j * kPi / L;
            m.shape_left = ModeShape::CosLike;
            if (index == 0) {
                m.zero_mode = true;
                m.norm = std::sqrt(1.0 / L);
            }
        }
    } else {
        m.n = static_cast<long>(index) + 1;
        m.k = (j + 0.5) * kPi / L;
        m.shape_left = cfg.left == BoundaryKind::Dirichlet ? ModeShape::SinLike : ModeShape::CosLike;
    }
    m.energy = energy_of(m.k, cfg.mass, cfg.hbar);
    return m;
}

Spectrum::Spectrum(SegmentConfig cfg, std::size_t count) : cfg_(cfg) {
    require_valid(cfg_);
    if (count == 0) throw DomainError("mode count must be >= 1");
    modes_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) modes_.push_back(mode_at(cfg_, i));
}

Spectrum Spectrum::extended(std::size_t count) const { return Spectrum(cfg_, count); }

Spectrum modes(const SegmentConfig& cfg, std::size_t count) { return Spectrum(cfg, count); }

double eigenfunction(const Mode& mode, const SegmentConfig& cfg, double x) {
    require_on_segment(cfg, x, "x");
    return mode.norm * std::cos(mode.k * x - mode.phase());
}

double eigenfunction_derivative(const Mode& mode, double x) {
    return -mode.norm * mode.k * std::sin(mode.k * x - mode.phase());
}

KernelResult spectral_kernel(const SegmentConfig& cfg, double x, double y, const EvolutionTime& dt,
                             const NumericPolicy& policy) {
    require_valid(cfg);
    policy.validate();
    require_near_segment(cfg, x, "x");
    require_near_segment(cfg, y, "y");
    return sum_modes(cfg, dt, policy, 2.0 / cfg.length, [&](const Mode& mode) {
        // grouped so that swapping x and y is bit-exact
        return mode.norm * mode.norm * (std::cos(mode.k * x - mode.phase()) * std::cos(mode.k * y - mode.phase()));
    });
}

KernelResult trace(const SegmentConfig& cfg, const EvolutionTime& dt, const NumericPolicy& policy) {
    require_valid(cfg);
    policy.validate();
    return sum_modes(cfg, dt, policy, 1.0, [](const Mode&) { return 1.0; });
}

}  // namespace segprop
