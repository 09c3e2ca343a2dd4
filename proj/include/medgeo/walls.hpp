#pragma once

#include <utility>
#include <vector>

#include "medgeo/bitset.hpp"
#include "medgeo/finite_metric.hpp"
#include "medgeo/median_ops.hpp"

namespace medgeo {

/**
 * A wall is the bipartition {h, h^c} of the point set, carrying a positive
 * weight. h may be empty or the whole set; such walls separate nothing.
 */
struct Wall {
    PointSet h;
    Rat weight;
};

struct WallSpace {
    int n = 0;
    std::vector<Wall> walls;

    int wall_count() const { return int(walls.size()); }
    void validate() const;
    bool separates(int w, int x, int y) const {
        return walls[w].h.test(x) != walls[w].h.test(y);
    }
};

/// W(F|G): walls with F entirely on one side and G entirely on the other.
/// W(A|A) = empty for non-empty A; W(empty|empty) = all walls.
WallFamily wall_interval(const WallSpace& ws, const PointSet& F, const PointSet& G);
WallFamily wall_interval(const WallSpace& ws, int x, int y);

/// Total weight of walls separating x and y (the wall pseudo-metric).
Rat wall_pdist(const WallSpace& ws, int x, int y);

/// The two disjoint families W(F u F'|G u G') and W(F u G'|G u F'), whose
/// union is checked against the explicit intersection of the inputs.
std::pair<WallFamily, WallFamily> ring_intersect(const WallSpace& ws, const PointSet& F,
                                                 const PointSet& G, const PointSet& F2,
                                                 const PointSet& G2);

struct SplitFamily {
    PointSet S, T;
    WallFamily family;
};

/// Decomposition of the complement of W(F|G) into the families W(S|T) over
/// the bipartitions S u T = F u G other than {F, G}. Verified to partition
/// the complement exactly.
std::vector<SplitFamily> ring_complement(const WallSpace& ws, const PointSet& F,
                                         const PointSet& G);

/// Two points (p,q) with W(p|q) = W(F|G), computed by the inductive
/// projection argument (singleton case via the median, merges via
/// projection onto the target pair). Requires a median metric.
std::pair<int, int> reduce_to_pair(const FiniteMetric& m, const PointSet& F, const PointSet& G);

/**
 * Canonical convex-wall structure of a finite median metric:
 *  (i)   cover graph: (x,y) is an edge iff I(x,y) = {x,y};
 *  (ii)  oriented edges grouped into parallelism classes (connected
 *        components of the rectangle relation);
 *  (iii) each class yields the halfspace h = { z : m(x,y,z) = x } for its
 *        lexicographically smallest oriented representative (x,y), with
 *        weight d(x,y);
 *  (iv)  convexity of both sides and the identity
 *        sum of weights over W(x|y) = d(x,y) are verified for all pairs.
 */
WallSpace extract_convex_walls(const FiniteMetric& m);

/// Parts W(x_i|x_{i+1}) of a geodesic sequence; asserted to partition
/// W(x_1|x_k).
std::vector<WallFamily> geodesic_wall_decomposition(const WallSpace& ws,
                                                    const std::vector<int>& seq);

/**
 * Geodesic refinement of I(a,b) along a disjoint wall-interval
 * decomposition W(a|b) = W(x_1|y_1) u ... u W(x_k|y_k):
 * a geodesic sequence of 2^k points and a partition of the 2^k - 1 gap
 * positions into blocks I_1..I_k with |I_j| = 2^(j-1),
 * W(x_j|y_j) = union of W(a_i|a_{i+1}) over i in I_j, and
 * d(x_j,y_j) = sum of d(a_i,a_{i+1}) over I_j.
 */
struct SubdivisionResult {
    std::vector<int> sequence;             // 2^k points (duplicates retained)
    std::vector<std::vector<int>> blocks;  // blocks[j] = 1-based gap positions I_{j+1}
};

SubdivisionResult subdivide_interval(const FiniteMetric& m, const WallSpace& ws, int a, int b,
                                     const std::vector<std::pair<int, int>>& pairs);

/// Convenience overload extracting the convex walls of m first.
SubdivisionResult subdivide_interval(const FiniteMetric& m, int a, int b,
                                     const std::vector<std::pair<int, int>>& pairs);

} // namespace medgeo
