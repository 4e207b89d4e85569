#pragma once

// Classical reflected paths on [0, L] and their auxiliary phases.
//
// Unfolding the segment across the lines x = jL turns the path with r
// reflections into a straight line from x to the image point
//
//     y_r = r L + y        (r even)
//     y_r = (r + 1) L - y  (r odd)
//
// For r > 0 the first reflection happens at the right endpoint and the walls
// alternate from there; for r < 0 the first one is at the left endpoint. The
// phase of a path is the product of one per-endpoint factor per reflection.

#include <utility>
#include <vector>

#include "segprop/core.hpp"

namespace segprop {

struct BounceCounts {
    long left = 0;
    long right = 0;

    friend bool operator==(const BounceCounts&, const BounceCounts&) = default;
};

/// Per-reflection phase factor at each endpoint.
class PhaseRule {
public:
    /// -1 at a Dirichlet endpoint, +1 at a Neumann endpoint.
    static PhaseRule from_boundaries(BoundaryKind left, BoundaryKind right);
    static PhaseRule from_config(const SegmentConfig& cfg) { return from_boundaries(cfg.left, cfg.right); }

    /// Arbitrary unit phases, e.g. exp(-i theta) for a finite wall.
    static PhaseRule general(Complex left_phase, Complex right_phase);

    Complex left_phase() const noexcept { return left_; }
    Complex right_phase() const noexcept { return right_; }

private:
    PhaseRule(Complex l, Complex r) : left_(l), right_(r) {}
    Complex left_;
    Complex right_;
};

struct ImagePath {
    long r = 0;
    double y_image = 0.0;
    BounceCounts bounces;
    Complex epsilon{1.0, 0.0};
};

double image_point(long r, double y, double L);

BounceCounts bounce_counts(long r);

/// left_phase^bounces_left * right_phase^bounces_right.
Complex phase(const PhaseRule& rule, long r);

ImagePath image_path(const PhaseRule& rule, long r, double y, double L);

/// Image index of the i-th term in shell order 0, 1, -1, 2, -2, ...
long shell_index(long i);

struct PathVertex {
    double t = 0.0;
    double x = 0.0;

    friend bool operator==(const PathVertex&, const PathVertex&) = default;
};

/// Polyline of the classical path with image index r, folded into [0, L].
/// |r| interior vertices, each on a wall.
std::vector<PathVertex> classical_path(long r, double x, double y, double t0, double t1, double L);

}  // namespace segprop
