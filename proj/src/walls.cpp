#include "medgeo/walls.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace medgeo {

void WallSpace::validate() const {
    if (n < 0) throw invalid_input("negative point count");
    for (const Wall& w : walls) {
        if (w.h.size() != n) throw invalid_input("halfspace universe size mismatch");
        if (!w.weight.is_positive()) throw invalid_input("wall weight must be positive");
    }
}

WallFamily wall_interval(const WallSpace& ws, const PointSet& F, const PointSet& G) {
    if (F.size() != ws.n || G.size() != ws.n) throw invalid_input("point set size mismatch");
    WallFamily fam(ws.wall_count());
    for (int w = 0; w < ws.wall_count(); ++w) {
        const PointSet& h = ws.walls[w].h;
        bool fwd = F.subset_of(h) && G.disjoint(h);
        bool bwd = G.subset_of(h) && F.disjoint(h);
        if (fwd || bwd) fam.set(w);
    }
    return fam;
}

WallFamily wall_interval(const WallSpace& ws, int x, int y) {
    if (x < 0 || x >= ws.n || y < 0 || y >= ws.n) throw invalid_input("point index out of range");
    WallFamily fam(ws.wall_count());
    if (x == y) return fam;
    for (int w = 0; w < ws.wall_count(); ++w)
        if (ws.separates(w, x, y)) fam.set(w);
    return fam;
}

Rat wall_pdist(const WallSpace& ws, int x, int y) {
    if (x < 0 || x >= ws.n || y < 0 || y >= ws.n) throw invalid_input("point index out of range");
    Rat total(0);
    if (x == y) return total;
    for (int w = 0; w < ws.wall_count(); ++w)
        if (ws.separates(w, x, y)) total += ws.walls[w].weight;
    return total;
}

std::pair<WallFamily, WallFamily> ring_intersect(const WallSpace& ws, const PointSet& F,
                                                 const PointSet& G, const PointSet& F2,
                                                 const PointSet& G2) {
    WallFamily part1 = wall_interval(ws, F | F2, G | G2);
    WallFamily part2 = wall_interval(ws, F | G2, G | F2);
    WallFamily explicit_meet = wall_interval(ws, F, G) & wall_interval(ws, F2, G2);
    if (part1.intersects(part2) || (part1 | part2) != explicit_meet)
        throw verification_error("wall-interval intersection identity failed");
    return {part1, part2};
}

std::vector<SplitFamily> ring_complement(const WallSpace& ws, const PointSet& F,
                                         const PointSet& G) {
    if (F.size() != ws.n || G.size() != ws.n) throw invalid_input("point set size mismatch");
    if (F.none() || G.none()) throw invalid_input("ring_complement requires non-empty sets");

    PointSet U = F | G;
    std::vector<int> elems = U.indices();
    const int m = int(elems.size());
    if (m > 62) throw cap_exceeded("too many points in F u G for split enumeration");

    std::vector<SplitFamily> parts;
    // Unordered splits {S,T} of U: fix the smallest element of U inside S.
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (m - 1)); ++mask) {
        PointSet S(ws.n), T(ws.n);
        S.set(elems[0]);
        for (int i = 1; i < m; ++i)
            ((mask >> (i - 1)) & 1) ? S.set(elems[i]) : T.set(elems[i]);
        if ((S == F && T == G) || (S == G && T == F)) continue;
        parts.push_back(SplitFamily{S, T, wall_interval(ws, S, T)});
    }

    // The parts plus W(F|G) must partition the full wall set.
    WallFamily covered = wall_interval(ws, F, G);
    for (const SplitFamily& p : parts) {
        if (covered.intersects(p.family))
            throw verification_error("wall-interval complement parts overlap");
        covered |= p.family;
    }
    if (covered != Bitset::full(ws.wall_count()))
        throw verification_error("wall-interval complement parts do not cover");
    return parts;
}

std::pair<int, int> reduce_to_pair(const FiniteMetric& m, const PointSet& F, const PointSet& G) {
    if (F.size() != m.size() || G.size() != m.size())
        throw invalid_input("point set size mismatch");
    if (F.none() || G.none()) throw invalid_input("reduce_to_pair requires non-empty sets");

    std::vector<int> fs = F.indices(), gs = G.indices();

    // W(x | y,z) = W(x | m(x,y,z)); larger sets split off their last element
    // and merge by projecting one reduced pair onto the other.
    auto merge = [&](std::pair<int, int> ab, std::pair<int, int> cd) {
        return std::pair<int, int>{median_point(m, cd.first, ab.first, ab.second),
                                   median_point(m, cd.second, ab.first, ab.second)};
    };

    std::function<std::pair<int, int>(int, int)> rec = [&](int nf, int ng) -> std::pair<int, int> {
        if (nf == 1 && ng == 1) return {fs[0], gs[0]};
        if (nf > 1) {
            int x = fs[nf - 1];
            auto ab = rec(nf - 1, ng);
            std::vector<int> single{x};
            // W({x}|G) by recursing with F temporarily = {x}
            std::swap(fs, single);
            auto cd = rec(1, ng);
            std::swap(fs, single);
            return merge(ab, cd);
        }
        int y = gs[ng - 1];
        auto ab = rec(1, ng - 1);
        std::vector<int> single{y};
        std::swap(gs, single);
        auto cd = rec(1, 1);
        std::swap(gs, single);
        return merge(ab, cd);
    };

    return rec(int(fs.size()), int(gs.size()));
}

namespace {

struct Dsu {
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    std::vector<int> parent;
};

} // namespace

WallSpace extract_convex_walls(const FiniteMetric& m) {
    const int n = m.size();
    if (!m.is_strict())
        throw invalid_input("extract_convex_walls requires a strict metric; apply metric_quotient first");
    IntervalTable table(m);

    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (table.unique_median(a, b, c) < 0) throw non_median_error(a, b, c);

    // (i) cover graph
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (table.interval(x, y).count() == 2) edges.push_back({x, y});

    // (ii) parallelism classes of oriented edges; oriented edge 2e is
    // (x,y), 2e+1 is (y,x). (a,b) and (d,c) are parallel iff [a,b,c,d]
    // is a rectangle.
    const int E = int(edges.size());
    Dsu dsu(2 * E);
    for (int e = 0; e < E; ++e)
        for (int f = e + 1; f < E; ++f) {
            auto [x, y] = edges[e];
            auto [u, v] = edges[f];
            if (is_rectangle(m, x, y, v, u)) {
                dsu.unite(2 * e, 2 * f);
                dsu.unite(2 * e + 1, 2 * f + 1);
            } else if (is_rectangle(m, x, y, u, v)) {
                dsu.unite(2 * e, 2 * f + 1);
                dsu.unite(2 * e + 1, 2 * f);
            }
        }

    // (iii) one wall per unordered class pair, from the lexicographically
    // smallest oriented representative.
    std::vector<std::pair<int, int>> rep(2 * E, {n, n});
    for (int o = 0; o < 2 * E; ++o) {
        int r = dsu.find(o);
        std::pair<int, int> oriented =
            (o & 1) ? std::pair<int, int>{edges[o >> 1].second, edges[o >> 1].first}
                    : edges[o >> 1];
        rep[r] = std::min(rep[r], oriented);
    }
    WallSpace ws;
    ws.n = n;
    std::vector<bool> done(2 * E, false);
    std::vector<std::pair<int, int>> reps;
    for (int e = 0; e < E; ++e) {
        int r0 = dsu.find(2 * e), r1 = dsu.find(2 * e + 1);
        if (done[r0]) continue;
        done[r0] = done[r1] = true;
        reps.push_back(std::min(rep[r0], rep[r1]));
    }
    std::sort(reps.begin(), reps.end());
    for (auto [x, y] : reps) {
        PointSet h(n);
        for (int z = 0; z < n; ++z) {
            int med = table.unique_median(x, y, z);
            if (med != x && med != y)
                throw verification_error("median of a cover edge escaped the edge");
            if (med == x) h.set(z);
        }
        ws.walls.push_back(Wall{h, m.dist(x, y)});
    }

    // (iv) verification: both sides convex, and the wall measure reproduces
    // the metric exactly.
    for (const Wall& w : ws.walls) {
        const PointSet& h = w.h;
        PointSet hc = h.complement();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (h.test(a) && h.test(b) && !table.interval(a, b).subset_of(h))
                    throw verification_error("extracted halfspace is not convex");
                if (!h.test(a) && !h.test(b) && !table.interval(a, b).subset_of(hc))
                    throw verification_error("complement of extracted halfspace is not convex");
            }
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Rat total(0);
            for (int w = 0; w < ws.wall_count(); ++w)
                if (ws.separates(w, x, y)) total += ws.walls[w].weight;
            if (total != m.dist(x, y))
                throw verification_error("wall measure does not reproduce the metric at pair (" +
                                         std::to_string(x) + "," + std::to_string(y) + ")");
        }
    return ws;
}

std::vector<WallFamily> geodesic_wall_decomposition(const WallSpace& ws,
                                                    const std::vector<int>& seq) {
    if (seq.empty()) throw invalid_input("empty sequence");
    Rat total(0);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) total += wall_pdist(ws, seq[i], seq[i + 1]);
    if (total != wall_pdist(ws, seq.front(), seq.back()))
        throw invalid_input("sequence is not geodesic for the wall pseudo-metric");

    std::vector<WallFamily> parts;
    WallFamily covered(ws.wall_count());
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        WallFamily part = wall_interval(ws, seq[i], seq[i + 1]);
        if (covered.intersects(part))
            throw verification_error("geodesic wall decomposition parts overlap");
        covered |= part;
        parts.push_back(std::move(part));
    }
    if (covered != wall_interval(ws, seq.front(), seq.back()))
        throw verification_error("geodesic wall decomposition does not cover");
    return parts;
}

namespace {

struct SubdivisionRec {
    const FiniteMetric& m;

    SubdivisionResult run(int a, int b, const std::vector<std::pair<int, int>>& pairs) {
        const std::size_t k = pairs.size();
        if (k == 1) return SubdivisionResult{{a, b}, {{1}}};

        // Project every pair into I(a,b); wall families are preserved.
        std::vector<std::pair<int, int>> proj(k);
        for (std::size_t j = 0; j < k; ++j)
            proj[j] = {median_point(m, pairs[j].first, a, b),
                       median_point(m, pairs[j].second, a, b)};

        // Straighten (a, x_1, y_1, b) to the geodesic (a, p1, q1, b).
        int p1 = median_point(m, a, proj[0].first, proj[0].second);
        int q1 = median_point(m, b, proj[0].first, proj[0].second);

        // Remaining pairs straighten and then split across the two
        // subintervals I(a,p1) and I(q1,b).
        std::vector<std::pair<int, int>> left, right;
        for (std::size_t j = 1; j < k; ++j) {
            int pj = median_point(m, a, proj[j].first, proj[j].second);
            int qj = median_point(m, b, proj[j].first, proj[j].second);
            left.push_back({median_point(m, pj, a, p1), median_point(m, qj, a, p1)});
            right.push_back({median_point(m, pj, q1, b), median_point(m, qj, q1, b)});
        }

        SubdivisionResult L = run(a, p1, left);
        SubdivisionResult R = run(q1, b, right);

        const int shift = int(L.sequence.size()); // 2^(k-1)
        SubdivisionResult out;
        out.sequence = L.sequence;
        out.sequence.insert(out.sequence.end(), R.sequence.begin(), R.sequence.end());
        out.blocks.resize(k);
        out.blocks[0] = {shift}; // the middle gap carries pair 1
        for (std::size_t j = 1; j < k; ++j) {
            out.blocks[j] = L.blocks[j - 1];
            for (int pos : R.blocks[j - 1]) out.blocks[j].push_back(pos + shift);
        }
        return out;
    }
};

} // namespace

SubdivisionResult subdivide_interval(const FiniteMetric& m, const WallSpace& ws, int a, int b,
                                     const std::vector<std::pair<int, int>>& pairs) {
    m.check(a);
    m.check(b);
    for (auto [x, y] : pairs) {
        m.check(x);
        m.check(y);
    }
    if (ws.n != m.size()) throw invalid_input("wall space does not match metric");
    if (pairs.size() > 20) throw cap_exceeded("too many pairs (2^k sequence)");

    // Hypothesis: the wall-intervals of the pairs partition W(a|b).
    WallFamily target = wall_interval(ws, a, b);
    WallFamily covered(ws.wall_count());
    std::vector<WallFamily> fams;
    for (auto [x, y] : pairs) {
        WallFamily f = wall_interval(ws, x, y);
        if (covered.intersects(f)) {
            int w = (covered & f).first();
            throw invalid_input("wall-interval decomposition is not disjoint (wall " +
                                std::to_string(w) + ")");
        }
        covered |= f;
        fams.push_back(std::move(f));
    }
    if (covered != target) {
        int w = (covered ^ target).first();
        throw invalid_input("wall-interval decomposition does not match W(a|b) (wall " +
                            std::to_string(w) + ")");
    }

    if (pairs.empty()) {
        if (a != b) throw invalid_input("empty decomposition requires a = b");
        return SubdivisionResult{{a}, {}};
    }

    SubdivisionResult res = SubdivisionRec{m}.run(a, b, pairs);

    // Postconditions are proved; failing any of them is a bug.
    const std::size_t k = pairs.size();
    if (res.sequence.size() != (std::size_t(1) << k))
        throw verification_error("subdivision sequence has wrong length");
    if (!m.is_geodesic(res.sequence))
        throw verification_error("subdivision sequence is not geodesic");
    for (std::size_t j = 0; j < k; ++j) {
        if (res.blocks[j].size() != (std::size_t(1) << j))
            throw verification_error("subdivision block has wrong size");
        WallFamily fam(ws.wall_count());
        Rat len(0);
        for (int pos : res.blocks[j]) {
            int u = res.sequence[pos - 1], v = res.sequence[pos];
            WallFamily f = wall_interval(ws, u, v);
            if (fam.intersects(f)) throw verification_error("subdivision block families overlap");
            fam |= f;
            len += m.dist(u, v);
        }
        if (fam != fams[j]) throw verification_error("subdivision block families do not match");
        if (len != m.dist(pairs[j].first, pairs[j].second))
            throw verification_error("subdivision block lengths do not add up");
    }
    return res;
}

SubdivisionResult subdivide_interval(const FiniteMetric& m, int a, int b,
                                     const std::vector<std::pair<int, int>>& pairs) {
    return subdivide_interval(m, extract_convex_walls(m), a, b, pairs);
}

} // namespace medgeo
