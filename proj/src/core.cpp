#include "segprop/core.hpp"

#include <cctype>
#include <cmath>

namespace segprop {

namespace {

char bc_letter(BoundaryKind kind) { return kind == BoundaryKind::Dirichlet ? 'D' : 'N'; }

void check_positive(std::vector<std::string>& errors, double value, const char* name) {
    if (std::isnan(value) || value <= 0.0) {
        errors.push_back(std::string(name) + " must be > 0");
    } else if (!std::isfinite(value)) {
        errors.push_back(std::string(name) + " must be finite");
    }
}

}  // namespace

std::string bc_code(BoundaryKind left, BoundaryKind right) {
    return {bc_letter(left), bc_letter(right)};
}

std::string bc_code(const SegmentConfig& cfg) { return bc_code(cfg.left, cfg.right); }

void set_bc(SegmentConfig& cfg, std::string_view code) {
    auto parse = [&](char c) {
        switch (std::toupper(static_cast<unsigned char>(c))) {
            case 'D': return BoundaryKind::Dirichlet;
            case 'N': return BoundaryKind::Neumann;
            default: throw DomainError("boundary code must be one of DD, NN, ND, DN; got '" + std::string(code) + "'");
        }
    };
    if (code.size() != 2) {
        throw DomainError("boundary code must be one of DD, NN, ND, DN; got '" + std::string(code) + "'");
    }
    cfg.left = parse(code[0]);
    cfg.right = parse(code[1]);
}

std::vector<std::string> validate_config(const SegmentConfig& cfg) {
    std::vector<std::string> errors;
    check_positive(errors, cfg.length, "L");
    check_positive(errors, cfg.mass, "m");
    check_positive(errors, cfg.hbar, "hbar");
    return errors;
}

void require_valid(const SegmentConfig& cfg) {
    const auto errors = validate_config(cfg);
    if (errors.empty()) return;
    std::string msg = "invalid segment config: ";
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (i) msg += "; ";
        msg += errors[i];
    }
    throw DomainError(msg);
}

EvolutionTime EvolutionTime::make(Complex delta, RealTimeMode mode) {
    if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) {
        throw DomainError("evolution time must be finite");
    }
    if (delta.imag() > 0.0) {
        throw DomainError("evolution time must have im(dt) <= 0 (lower half plane)");
    }
    if (delta.imag() == 0.0) {
        if (mode == RealTimeMode::Reject) {
            throw DomainError("real evolution time requires explicit real-time mode; use tau or a damped dt");
        }
        if (delta.real() == 0.0) throw DomainError("evolution time must be nonzero");
    }
    return EvolutionTime(delta);
}

EvolutionTime EvolutionTime::euclidean(double tau) {
    if (!std::isfinite(tau) || !(tau > 0.0)) {
        throw DomainError("tau must be positive and finite");
    }
    return EvolutionTime(Complex(0.0, -tau));
}

std::optional<double> EvolutionTime::tau() const noexcept {
    if (delta_.real() != 0.0) return std::nullopt;
    return -delta_.imag();
}

EvolutionTime make_euclidean(double tau) { return EvolutionTime::euclidean(tau); }

void NumericPolicy::validate() const {
    if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw DomainError("abs_tol must lie in (0, 1)");
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
}

}  // namespace segprop
