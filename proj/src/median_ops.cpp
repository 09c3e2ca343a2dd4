#include "medgeo/median_ops.hpp"

namespace medgeo {

bool is_between(const FiniteMetric& m, int a, int x, int b) {
    return m.between(a, x, b);
}

PointSet interval(const FiniteMetric& m, int a, int b) {
    m.check(a);
    m.check(b);
    PointSet s(m.size());
    for (int x = 0; x < m.size(); ++x)
        if (m.between(a, x, b)) s.set(x);
    return s;
}

PointSet median_set(const FiniteMetric& m, int a, int b, int c) {
    m.check(a);
    m.check(b);
    m.check(c);
    PointSet s(m.size());
    for (int x = 0; x < m.size(); ++x)
        if (m.between(a, x, b) && m.between(b, x, c) && m.between(a, x, c)) s.set(x);
    return s;
}

MedianVerdict is_median(const FiniteMetric& m, int brute_cap) {
    if (!m.is_strict())
        throw invalid_input("is_median requires a strict metric; apply metric_quotient first");
    if (m.size() > brute_cap)
        throw cap_exceeded("is_median triple scan capped at " + std::to_string(brute_cap) +
                           " points (" + std::to_string(m.size()) + " given)");
    IntervalTable t(m);
    const int n = m.size();
    // Degenerate triples (repeated points) always have exactly one median
    // point in a strict metric, so a < b < c suffices; scanning in
    // lexicographic order makes the witness the smallest failing triple.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (t.unique_median(a, b, c) < 0) return MedianVerdict{false, a, b, c};
    return MedianVerdict{true};
}

int median_point(const FiniteMetric& m, int a, int b, int c) {
    PointSet s = median_set(m, a, b, c);
    if (s.count() != 1) throw non_median_error(a, b, c);
    return s.first();
}

std::optional<int> gate(const FiniteMetric& m, int x, const PointSet& Y) {
    m.check(x);
    if (Y.size() != m.size()) throw invalid_input("point set size mismatch");
    if (Y.none()) throw invalid_input("gate of an empty set");
    std::optional<int> found;
    Y.for_each([&](int p) {
        if (found) return;
        bool ok = true;
        Y.for_each([&](int y) { ok = ok && m.between(x, p, y); });
        if (ok) found = p;
    });
    return found;
}

bool is_rectangle(const FiniteMetric& m, int a, int b, int c, int d) {
    return m.between(a, b, c) && m.between(b, c, d) && m.between(c, d, a) && m.between(d, a, b);
}

std::pair<int, int> project_pair(const FiniteMetric& m, int x, int y, int a, int b) {
    return {median_point(m, x, a, b), median_point(m, y, a, b)};
}

Rectangle central_rectangle(const FiniteMetric& m, int x, int a, int y, int b) {
    auto [x1, y1] = project_pair(m, x, y, a, b);
    int a1 = median_point(m, a, x1, y1);
    int b1 = median_point(m, b, x1, y1);
    return Rectangle{x1, a1, y1, b1};
}

std::pair<int, int> straighten_path(const FiniteMetric& m, int a, int x, int y, int b) {
    if (!m.between(a, x, b) || !m.between(a, y, b))
        throw invalid_input("straighten_path requires x and y in I(a,b)");
    return {median_point(m, a, x, y), median_point(m, b, x, y)};
}

PointSet delta_median_set(const FiniteMetric& m, int a, int b, int c, const Rat& delta) {
    m.check(a);
    m.check(b);
    m.check(c);
    if (delta.is_negative()) throw invalid_input("negative delta");
    Rat slack = delta + delta;
    PointSet s(m.size());
    for (int x = 0; x < m.size(); ++x)
        if (m.between_slack(a, x, b, slack) && m.between_slack(b, x, c, slack) &&
            m.between_slack(a, x, c, slack))
            s.set(x);
    return s;
}

IntervalTable::IntervalTable(const FiniteMetric& m) : n(m.size()) {
    tab_.assign(std::size_t(n) * n, PointSet(n));
    for (int a = 0; a < n; ++a) {
        tab_[std::size_t(a) * n + a].set(a);
        if (!m.is_strict()) {
            // zero-distance twins of a also lie in I(a,a)
            for (int x = 0; x < n; ++x)
                if (m.between(a, x, a)) tab_[std::size_t(a) * n + a].set(x);
        }
        for (int b = a + 1; b < n; ++b) {
            PointSet& s = tab_[std::size_t(a) * n + b];
            for (int x = 0; x < n; ++x)
                if (m.between(a, x, b)) s.set(x);
            tab_[std::size_t(b) * n + a] = s;
        }
    }
}

} // namespace medgeo
