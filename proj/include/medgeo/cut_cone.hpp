#pragma once

#include <vector>

#include "medgeo/finite_metric.hpp"
#include "medgeo/l1_points.hpp"
#include "medgeo/simplex.hpp"
#include "medgeo/walls.hpp"

namespace medgeo {

/**
 * Nonnegative combination of cut semimetrics reproducing a distance matrix:
 * for every pair, sum of weight(S) * delta_S(x,y) = d(x,y), where
 * delta_S(x,y) = 1 iff S separates x from y. Cuts are canonical: point 0
 * is never inside S (delta_S = delta_{S^c}).
 */
struct CutDecomposition {
    std::vector<PointSet> cuts;
    std::vector<Rat> weights;
};

struct CutConeResult {
    bool embeddable = false;
    CutDecomposition decomposition; // when embeddable
    FarkasCertificate certificate;  // when not
};

/// Exact feasibility of the cut-cone system for a finite metric.
/// 2^(n-1) - 1 cut variables; n beyond `cap` throws cap_exceeded.
CutConeResult cut_cone_decompose(const FiniteMetric& m, int cap = 12);

/// Same system on raw symmetric entries (no triangle validation), with an
/// optional slack on every equality. Used by the approximate kernel path.
CutConeResult cut_cone_decompose_raw(int n, const std::vector<Rat>& dist, const Rat& slack,
                                     int cap = 12);

/// One l1 coordinate per wall: weight(w) if w separates x from the base
/// point, else 0. Pairwise l1 distances equal the wall pseudo-metric
/// exactly.
L1Points walls_to_embedding(const WallSpace& ws, int x0);

} // namespace medgeo
