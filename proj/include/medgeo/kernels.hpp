#pragma once

#include <cstdint>
#include <vector>

#include "medgeo/cut_cone.hpp"
#include "medgeo/rational.hpp"

namespace medgeo {

/**
 * Symmetric nonnegative kernel with zero diagonal. `approx` marks entries
 * that are dyadic approximations of irrational values (Schoenberg powers,
 * square roots); exact-path decisions refuse nothing but downstream checks
 * then carry the documented tolerances.
 */
struct Kernel {
    int n = 0;
    std::vector<Rat> psi;
    bool approx = false;

    const Rat& at(int i, int j) const { return psi[std::size_t(i) * n + j]; }
    void validate() const;
};

/// Entrywise tolerance constants of the approximate path.
Rat dyadic_entry_error();  // 2^-48
Rat approx_slack();        // 2^-24

struct CndVerdict {
    bool cnd = true;
    std::vector<Rat> violation; // lambda with sum 0 and quadratic form > 0
    Rat form_value{0};          // exact value of the form at the violation
};

/**
 * Conditionally negative definite test: exact positive semidefiniteness of
 * P[i][j] = psi(x_i, x0) + psi(x_j, x0) - psi(x_i, x_j) over the points
 * other than the base, by symmetric elimination with diagonal pivoting
 * (zero pivots recurse on the complement). With tol > 0 the test allows
 * the form to reach tol * |v|^2, i.e. decides PSD of P + tol*I.
 */
CndVerdict is_cnd(const Kernel& k, const Rat& tol = Rat(0), int base = 0);

/**
 * Entrywise power psi^alpha for alpha in (0,1]. Entries whose power is
 * rational stay exact; the rest become dyadic floors with error < 2^-48
 * and the result is flagged approximate.
 */
Kernel schoenberg_power(const Kernel& k, const Rat& alpha);

/// Pull-back along an index map: psi'(i,j) = psi(f(i), f(j)).
Kernel pull_back(const Kernel& k, const std::vector<int>& f);

struct TriangleCheck {
    bool ok = true;
    int i = -1, j = -1, k = -1;
};

/// Triangle inequality over all triples (with slack 2^-24 for approximate
/// kernels, exact otherwise).
TriangleCheck kernel_triangle(const Kernel& k);

enum class Tri { yes, no, unknown };

struct MeasureDefiniteVerdict {
    Tri verdict = Tri::unknown;
    bool triangle_failed = false;
    TriangleCheck triangle;
    CutDecomposition decomposition; // when yes
    FarkasCertificate certificate;  // when no via the LP
    Rat slack{0};                   // LP slack used (0 on the exact path)
};

/// Measure-definite (type 1) decision: triangle precheck, then the cut-cone
/// feasibility system. Approximate kernels run with slack 2^-24 on every
/// equality. Sizes beyond `cap` throw cap_exceeded.
MeasureDefiniteVerdict is_measure_definite(const Kernel& k, int cap = 12);

struct HypermetricVerdict {
    bool passed_at_bound = true;
    std::vector<long long> violation; // integers, sum 1, form > 0
    Rat form_value{0};
};

/**
 * Exhaustive hypermetric test over integer vectors with |lambda_i| <= B and
 * sum 1. A pass is only a pass *at this bound*, never a proof of
 * hypermetricity. Enumeration beyond `enum_cap` vectors throws cap_exceeded.
 */
HypermetricVerdict is_hypermetric_bounded(const Kernel& k, long long B,
                                          std::uint64_t enum_cap = std::uint64_t(1) << 24);

struct HierarchyVerdict {
    Tri type1 = Tri::unknown;
    MeasureDefiniteVerdict type1_detail;
    Tri hypermetric_at_bound = Tri::unknown;
    long long bound = 0;
    HypermetricVerdict hypermetric_detail;
    Tri negative_type = Tri::unknown;
    CndVerdict cnd_detail;
    Tri sqrt_type1 = Tri::unknown; // sqrt(psi) measure definite, approximate path
    MeasureDefiniteVerdict sqrt_detail;
};

/**
 * Runs the three hierarchy tests plus the square-root embedding check and
 * asserts the sound implications on the outputs:
 * type1 = yes forces hypermetric-at-B = yes and negative_type = yes, and
 * a CND kernel's square root must be measure definite (within LP slack).
 * Any observed inversion raises verification_error.
 */
HierarchyVerdict classify(const Kernel& k, long long B = 3, int lp_cap = 12);

} // namespace medgeo
