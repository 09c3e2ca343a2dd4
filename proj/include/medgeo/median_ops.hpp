#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "medgeo/bitset.hpp"
#include "medgeo/finite_metric.hpp"

namespace medgeo {

bool is_between(const FiniteMetric& m, int a, int x, int b);

/// I(a,b): all points x with d(a,x) + d(x,b) = d(a,b).
PointSet interval(const FiniteMetric& m, int a, int b);

/// M(a,b,c) = I(a,b) & I(b,c) & I(a,c).
PointSet median_set(const FiniteMetric& m, int a, int b, int c);

struct MedianVerdict {
    bool is_median;
    int a = -1, b = -1, c = -1; // lexicographically smallest failing triple
};

/// Verdict over all triples. Requires a strict metric; pseudo-metric inputs
/// are rejected (take metric_quotient first). The triple scan is O(n^3);
/// `brute_cap` guards it (cap_exceeded beyond, raise it knowingly).
MedianVerdict is_median(const FiniteMetric& m, int brute_cap = 64);

/// The unique median point of a triple; throws non_median_error otherwise.
int median_point(const FiniteMetric& m, int a, int b, int c);

/// The unique point of Y between x and every point of Y, if one exists.
std::optional<int> gate(const FiniteMetric& m, int x, const PointSet& Y);

struct Rectangle {
    int a, b, c, d;
};

/// True iff (a,b,c), (b,c,d), (c,d,a) and (d,a,b) are all geodesic.
bool is_rectangle(const FiniteMetric& m, int a, int b, int c, int d);

/// The unique rectangle [x',a',y',b'] with x' = m(x,a,b), y' = m(y,a,b),
/// a' = m(a,x',y'), b' = m(b,x',y').
Rectangle central_rectangle(const FiniteMetric& m, int x, int a, int y, int b);

/// (m(x,a,b), m(y,a,b)).
std::pair<int, int> project_pair(const FiniteMetric& m, int x, int y, int a, int b);

/// For x,y in I(a,b): (p,q) = (m(a,x,y), m(b,x,y)); (a,p,q,b) is geodesic
/// and [p,x,q,y] is a rectangle.
std::pair<int, int> straighten_path(const FiniteMetric& m, int a, int x, int y, int b);

/// Points in the triple intersection of 2*delta-approximate intervals.
PointSet delta_median_set(const FiniteMetric& m, int a, int b, int c, const Rat& delta);

/**
 * All-pairs interval table: one bitset per pair, built in O(n^3). The bulk
 * algorithms (median verdicts, wall extraction) run off this table.
 */
struct IntervalTable {
    explicit IntervalTable(const FiniteMetric& m);

    const PointSet& interval(int a, int b) const { return tab_[std::size_t(a) * n + b]; }
    PointSet median_set(int a, int b, int c) const {
        PointSet s = interval(a, b);
        s &= interval(b, c);
        s &= interval(a, c);
        return s;
    }
    /// Index of the unique median point, or -1 when missing/not unique.
    int unique_median(int a, int b, int c) const {
        PointSet s = median_set(a, b, c);
        return s.count() == 1 ? s.first() : -1;
    }

    int n;

private:
    std::vector<PointSet> tab_;
};

} // namespace medgeo
