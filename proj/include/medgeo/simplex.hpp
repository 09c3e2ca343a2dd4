#pragma once

#include <vector>

#include "medgeo/rational.hpp"

namespace medgeo {

/**
 * Equality-form feasibility instance: find lambda >= 0 with A lambda = b.
 * With slack > 0 each equality relaxes to |A_i lambda - b_i| <= slack
 * (two inequalities per row internally).
 */
struct LpInstance {
    int rows = 0, cols = 0;
    std::vector<Rat> A; // row-major rows x cols
    std::vector<Rat> b;
    Rat slack{0};

    const Rat& at(int i, int j) const { return A[std::size_t(i) * cols + j]; }
    void validate() const;
};

/// Dual vector proving infeasibility: y^T A <= 0 componentwise and
/// y^T b - slack * |y|_1 > 0, all exact.
struct FarkasCertificate {
    std::vector<Rat> y;
};

struct LpResult {
    bool feasible = false;
    std::vector<Rat> x;            // when feasible
    FarkasCertificate certificate; // when infeasible
};

/// Exact two-phase-style feasibility via phase-1 simplex with Bland's rule.
/// Exactly one of solution / certificate is produced, and each is
/// re-verified against the instance before returning.
LpResult lp_feasible(const LpInstance& in);

/// Exact re-verification helpers (also used by external consumers of
/// serialized certificates).
bool verify_solution(const LpInstance& in, const std::vector<Rat>& x);
bool verify_farkas(const LpInstance& in, const std::vector<Rat>& y);

} // namespace medgeo
