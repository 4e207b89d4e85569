#include "segprop/quadrature.hpp"

#include <cmath>
#include <utility>

#include "segprop/core.hpp"

namespace segprop {

namespace {

// (P_n(z), P_n'(z)) by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double z) {
    double p0 = 1.0;
    double p1 = z;
    for (std::size_t j = 2; j <= n; ++j) {
        const double dj = static_cast<double>(j);
        const double p2 = ((2.0 * dj - 1.0) * z * p1 - (dj - 1.0) * p0) / dj;
        p0 = p1;
        p1 = p2;
    }
    const double dn = static_cast<double>(n);
    return {p1, dn * (z * p1 - p0) / (z * z - 1.0)};
}

}  // namespace

// Newton iteration on P_n from the Tricomi initial guess.
GaussLegendre::GaussLegendre(std::size_t nodes) : x_(nodes), w_(nodes) {
    if (nodes == 0) throw DomainError("Gauss-Legendre rule needs at least one node");
    const std::size_t n = nodes;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, z);
            const double step = p / dp;
            z -= step;
            if (std::abs(step) <= 1e-16) break;
        }
        const double dp = legendre(n, z).second;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        x_[i] = -z;
        x_[n - 1 - i] = z;
        w_[i] = w;
        w_[n - 1 - i] = w;
    }
    if (n % 2 == 1) x_[n / 2] = 0.0;
}

}  // namespace segprop
