#pragma once

#include <optional>
#include <vector>

#include "strat/rational.hpp"

namespace strat {

// Exact convex-geometry kernels. All functions are pure and run entirely in
// rational arithmetic; there are no tolerances anywhere in this module.

enum class HullPosition { Outside, Boundary, Interior };

// Unique point of conv(points) minimizing <p,p> with respect to ip.
// Wolfe's method over exact rationals; terminates in finitely many steps.
RationalVector min_norm_point(const std::vector<RationalVector>& points,
                              const InnerProduct& ip);

// Position of the origin relative to conv(points). Interior is judged in the
// ambient space: the origin must be a strictly positive convex combination
// AND the hull must be full-dimensional in the ambient rank.
HullPosition hull_position_of_origin(const std::vector<RationalVector>& points,
                                     const InnerProduct& ip);

struct RayWindow {
    Rational lo;
    Rational hi;
};

// {s >= 0 : s * direction in conv(points)} as a closed interval, or nullopt
// when the ray misses the hull. Endpoints are exact.
std::optional<RayWindow> ray_hull_window(const RationalVector& direction,
                                         const std::vector<RationalVector>& points,
                                         const InnerProduct& ip);

// Dimension of the affine span; 0 for a single point.
int affine_rank(const std::vector<RationalVector>& points);

// ---------------------------------------------------------------------------
// Small exact LP solver (dense simplex, Bland's rule). Exposed so that other
// modules can pose their own feasibility questions; tiny sizes only.
// ---------------------------------------------------------------------------

namespace lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status;
    Rational objective;        // valid when Optimal
    std::vector<Rational> x;   // valid when Optimal
};

// minimize c.x subject to A x = b, x >= 0.
Result solve(const std::vector<std::vector<Rational>>& a,
             const std::vector<Rational>& b,
             const std::vector<Rational>& c);

}  // namespace lp

}  // namespace strat
