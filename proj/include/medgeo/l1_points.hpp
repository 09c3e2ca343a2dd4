#pragma once

#include <vector>

#include "medgeo/finite_metric.hpp"
#include "medgeo/rational.hpp"

namespace medgeo {

/// Finite list of points in Q^dim carrying the l1 metric.
struct L1Points {
    int dim = 0;
    std::vector<std::vector<Rat>> points;

    int size() const { return int(points.size()); }
    void validate() const;
};

Rat l1_dist(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// Induced l1 metric. Duplicate points require allow_pseudo.
FiniteMetric l1_metric(const L1Points& p, bool allow_pseudo = false);

struct MedianClosureResult {
    L1Points points;      // input points first (exact duplicates dropped),
                          // then new points in rounds, each round sorted
                          // lexicographically by coordinates
    FiniteMetric metric;  // induced l1 metric on the closure (strict)
};

/**
 * Closure of the point list under the coordinatewise median. Always finite:
 * each coordinate of a generated point is one of the input values on that
 * axis. `max_points` is a resource guard, not a mathematical cap.
 */
MedianClosureResult median_closure(const L1Points& p, std::size_t max_points = 1000000);

} // namespace medgeo
