#include "segprop/images.hpp"

#include <cmath>
#include <cstdlib>

namespace segprop {

namespace {

bool is_unit(Complex z) { return std::abs(std::abs(z) - 1.0) <= 1e-12; }

Complex ipow(Complex base, long e) {
    Complex result{1.0, 0.0};
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace

PhaseRule PhaseRule::from_boundaries(BoundaryKind left, BoundaryKind right) {
    auto factor = [](BoundaryKind k) { return k == BoundaryKind::Dirichlet ? Complex(-1.0, 0.0) : Complex(1.0, 0.0); };
    return PhaseRule(factor(left), factor(right));
}

PhaseRule PhaseRule::general(Complex left_phase, Complex right_phase) {
    if (!is_unit(left_phase) || !is_unit(right_phase)) {
        throw DomainError("reflection phases must have unit modulus");
    }
    return PhaseRule(left_phase, right_phase);
}

double image_point(long r, double y, double L) {
    const double rl = static_cast<double>(r);
    return (r % 2 == 0) ? rl * L + y : (rl + 1.0) * L - y;
}

BounceCounts bounce_counts(long r) {
    const long n = std::labs(r);
    const long first = (n + 1) / 2;  // the wall hit first is hit ceil(|r|/2) times
    const long second = n / 2;
    if (r >= 0) return {second, first};
    return {first, second};
}

Complex phase(const PhaseRule& rule, long r) {
    const BounceCounts b = bounce_counts(r);
    return ipow(rule.left_phase(), b.left) * ipow(rule.right_phase(), b.right);
}

ImagePath image_path(const PhaseRule& rule, long r, double y, double L) {
    return {r, image_point(r, y, L), bounce_counts(r), phase(rule, r)};
}

long shell_index(long i) {
    if (i == 0) return 0;
    const long shell = (i + 1) / 2;
    return (i % 2 == 1) ? shell : -shell;
}

std::vector<PathVertex> classical_path(long r, double x, double y, double t0, double t1, double L) {
    if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("L must be > 0");
    if (!(x >= 0.0 && x <= L) || !(y >= 0.0 && y <= L)) throw DomainError("x and y must lie in [0, L]");
    if (!(t1 > t0)) throw DomainError("classical path needs t1 > t0");

    const double target = image_point(r, y, L);
    const double span = target - x;
    const double duration = t1 - t0;

    std::vector<PathVertex> path;
    path.reserve(static_cast<std::size_t>(std::labs(r)) + 2);
    path.push_back({t0, x});

    // wall lines crossed by the unfolded straight line, in crossing order
    const long n = std::labs(r);
    for (long i = 0; i < n; ++i) {
        const long line = r > 0 ? i + 1 : -i;
        const double wall = static_cast<double>(line) * L;
        const double frac = span != 0.0 ? (wall - x) / span : 0.0;
        path.push_back({t0 + frac * duration, (std::labs(line) % 2 == 1) ? L : 0.0});
    }
    path.push_back({t1, y});
    return path;
}

}  // namespace segprop
