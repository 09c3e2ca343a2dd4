#pragma once

#include <vector>

#include "medgeo/finite_metric.hpp"
#include "medgeo/walls.hpp"

namespace medgeo {

/**
 * An admissible section: one halfspace per wall (bit w set = the section
 * picks h_w, clear = it picks the complement), closed under passing to
 * larger halfspaces. Sections only make sense relative to the wall space
 * they were built from; wall_count records that universe.
 */
struct AdmissibleSection {
    Bitset choice;
    int wall_count() const { return choice.size(); }
};

/// sigma_x: the section picking, for every wall, the side containing x.
AdmissibleSection section_of_point(const WallSpace& ws, int x);

/// All admissible sections, in lexicographic order of the choice tuple
/// (wall 0 first, side h^c before side h). Throws cap_exceeded beyond
/// `cap` walls.
std::vector<AdmissibleSection> enumerate_sections(const WallSpace& ws, int cap = 20);

/// Majority vote per wall. The result of the vote over admissible sections
/// is admissible.
AdmissibleSection boolean_median(const AdmissibleSection& s1, const AdmissibleSection& s2,
                                 const AdmissibleSection& s3);

/**
 * The medianization: all admissible sections with the weighted
 * symmetric-difference metric, plus the isometric embedding iota mapping
 * each point x to its section sigma_x. Wall weights are strictly positive,
 * so distinct sections are at positive distance and the section metric is
 * already its own metric quotient.
 */
struct MedianizedSpace {
    WallSpace source;
    std::vector<AdmissibleSection> sections;
    FiniteMetric metric;
    std::vector<int> iota;
};

MedianizedSpace medianize(const WallSpace& ws, int cap = 20);

/// Edges of the cube-complex 1-skeleton: section pairs differing on exactly
/// one wall, labeled with that wall and its weight.
struct CubeEdge {
    int u, v;
    int wall;
    Rat weight;
};

std::vector<CubeEdge> cube_adjacency(const MedianizedSpace& ms);

/// The wall structure the medianization carries: for each source wall w,
/// the halfspace of all sections choosing h_w, with the same weight.
WallSpace section_walls(const MedianizedSpace& ms);

} // namespace medgeo
