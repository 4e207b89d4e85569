#pragma once

#include <cstddef>
#include <vector>

namespace segprop {

/// Gauss-Legendre rule with a runtime node count, mapped onto [a, b].
class GaussLegendre {
public:
    explicit GaussLegendre(std::size_t nodes = 128);

    std::size_t size() const noexcept { return x_.size(); }

    /// Nodes and weights on [-1, 1].
    const std::vector<double>& nodes() const noexcept { return x_; }
    const std::vector<double>& weights() const noexcept { return w_; }

    template <class F>
    auto integrate(F&& f, double a, double b) const {
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (b + a);
        decltype(f(mid)) sum{};
        for (std::size_t i = 0; i < x_.size(); ++i) {
            sum += w_[i] * f(mid + half * x_[i]);
        }
        return half * sum;
    }

private:
    std::vector<double> x_;
    std::vector<double> w_;
};

}  // namespace segprop
