#include "medgeo/l1_points.hpp"

#include <algorithm>
#include <map>

namespace medgeo {

void L1Points::validate() const {
    if (dim < 0) throw invalid_input("negative dimension");
    for (const auto& pt : points)
        if (int(pt.size()) != dim) throw invalid_input("point dimension mismatch");
}

Rat l1_dist(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]).abs();
    return s;
}

FiniteMetric l1_metric(const L1Points& p, bool allow_pseudo) {
    p.validate();
    const int n = p.size();
    std::vector<Rat> d(std::size_t(n) * n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat v = l1_dist(p.points[i], p.points[j]);
            d[std::size_t(i) * n + j] = v;
            d[std::size_t(j) * n + i] = v;
        }
    return FiniteMetric(n, std::move(d), {}, allow_pseudo);
}

MedianClosureResult median_closure(const L1Points& p, std::size_t max_points) {
    p.validate();
    const int dim = p.dim;

    std::vector<std::vector<Rat>> pts;
    std::map<std::vector<Rat>, int> seen;
    for (const auto& pt : p.points)
        if (seen.emplace(pt, int(pts.size())).second) pts.push_back(pt);

    // Breadth-first closure: each round only needs triples touching a point
    // added in the previous round.
    std::size_t fresh_begin = 0;
    while (fresh_begin < pts.size()) {
        std::size_t fresh_end = pts.size();
        std::vector<std::vector<Rat>> added;
        std::vector<Rat> med(dim);
        for (std::size_t i = 0; i < fresh_end; ++i)
            for (std::size_t j = i + 1; j < fresh_end; ++j)
                for (std::size_t k = j + 1; k < fresh_end; ++k) {
                    if (k < fresh_begin) continue; // all three already processed
                    for (int c = 0; c < dim; ++c)
                        med[c] = median3(pts[i][c], pts[j][c], pts[k][c]);
                    if (seen.emplace(med, -1).second) added.push_back(med);
                }
        std::sort(added.begin(), added.end());
        for (auto& pt : added) {
            seen[pt] = int(pts.size());
            pts.push_back(std::move(pt));
        }
        if (pts.size() > max_points) throw cap_exceeded("median closure exceeded max_points");
        fresh_begin = fresh_end;
    }

    L1Points out{dim, std::move(pts)};
    FiniteMetric metric = l1_metric(out, false);
    return MedianClosureResult{std::move(out), std::move(metric)};
}

} // namespace medgeo
