// Acceptance suite: one line per criterion, exit code = number of failures.
// Every check is exact (zero tolerance) unless the criterion itself states a
// slack; those slacks are pinned here as constants, not read from anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "medgeo/cut_cone.hpp"
#include "medgeo/json_io.hpp"
#include "medgeo/kernels.hpp"
#include "medgeo/median_ops.hpp"
#include "medgeo/medianization.hpp"
#include "medgeo/walls.hpp"

using namespace medgeo;

namespace {

int g_failures = 0;

double run_criterion(int number, const std::string& label, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
        body();
    } catch (const std::exception& e) {
        failure = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty()) {
        std::printf("PASS  criterion %d: %s  [%.2fs]\n", number, label.c_str(), secs);
    } else {
        std::printf("FAIL  criterion %d: %s  [%.2fs]\n      %s\n", number, label.c_str(), secs,
                    failure.c_str());
        ++g_failures;
    }
    return secs;
}

struct check_failed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw check_failed(what);
}

std::string fx(const char* name) {
    return std::string(MEDGEO_FIXTURES_DIR) + "/" + name;
}

L1Points random_generators(std::mt19937_64& rng, int count, int dim) {
    L1Points p;
    p.dim = dim;
    for (int i = 0; i < count; ++i) {
        std::vector<Rat> pt;
        for (int c = 0; c < dim; ++c) pt.push_back(Rat(long(rng() % 7), 1 + long(rng() % 3)));
        p.points.push_back(std::move(pt));
    }
    return p;
}

WallSpace random_walls(std::mt19937_64& rng, int max_points, int max_walls) {
    WallSpace ws;
    ws.n = 2 + int(rng() % std::max(1, max_points - 1));
    int k = 1 + int(rng() % max_walls);
    for (int w = 0; w < k; ++w) {
        PointSet h(ws.n);
        for (int i = 0; i < ws.n; ++i)
            if (rng() % 2) h.set(i);
        ws.walls.push_back(Wall{h, Rat(1 + long(rng() % 4), 1 + long(rng() % 3))});
    }
    return ws;
}

Kernel kernel_from_metric(const FiniteMetric& m) {
    Kernel k;
    k.n = m.size();
    k.psi = m.dist_matrix();
    return k;
}

// shared corpus for criteria 2 and 5
struct ClosureInstance {
    MedianClosureResult closure;
    WallSpace walls;
};
std::vector<ClosureInstance> g_closures;

void criterion_1() {
    struct Case {
        const char* file;
        int expected;
    };
    auto t0 = std::chrono::steady_clock::now();
    for (Case c : {Case{"y0_points.json", 5}, Case{"yhalf_points.json", 12},
                   Case{"y1_points.json", 8}}) {
        L1Points gens = points_from_json(load_json_file(fx(c.file)));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                expect(l1_dist(gens.points[i], gens.points[j]) == Rat(2),
                       std::string(c.file) + ": generator distance is not exactly 2");
        MedianClosureResult res = median_closure(gens);
        expect(res.points.size() == c.expected,
               std::string(c.file) + ": closure has " + std::to_string(res.points.size()) +
                   " points, expected " + std::to_string(c.expected));
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(secs < 1.0, "median-hull computation took " + std::to_string(secs) + "s (budget 1s)");
}

void criterion_2() {
    std::mt19937_64 rng(20211);
    auto t0 = std::chrono::steady_clock::now();
    g_closures.clear();
    for (int t = 0; t < 100; ++t) {
        int gens = 3 + int(rng() % 4); // 3 to 6 generators in Q^3
        MedianClosureResult res = median_closure(random_generators(rng, gens, 3));
        WallSpace ws = extract_convex_walls(res.metric); // verifies internally as well
        const int n = res.metric.size();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Rat total(0);
                for (int w = 0; w < ws.wall_count(); ++w)
                    if (ws.separates(w, x, y)) total += ws.walls[w].weight;
                expect(total == res.metric.dist(x, y),
                       "wall measure mismatch at pair (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
            }
        g_closures.push_back(ClosureInstance{std::move(res), std::move(ws)});
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(secs < 30.0, "criterion 2 took " + std::to_string(secs) + "s (budget 30s)");
}

void criterion_3() {
    std::mt19937_64 rng(30211);
    for (int t = 0; t < 100; ++t) {
        WallSpace ws = random_walls(rng, 6, 8);
        MedianizedSpace ms = medianize(ws);
        MedianVerdict v = is_median(ms.metric, ms.metric.size());
        expect(v.is_median, "medianization metric is not median");
        for (int x = 0; x < ws.n; ++x)
            for (int y = 0; y < ws.n; ++y)
                expect(ms.metric.dist(ms.iota[x], ms.iota[y]) == wall_pdist(ws, x, y),
                       "iota is not isometric");
        MedianizedSpace ms2 = medianize(section_walls(ms));
        expect(ms2.sections.size() == ms.sections.size(), "idempotence: section count changed");
        for (std::size_t i = 0; i < ms.sections.size(); ++i)
            expect(ms2.sections[i].choice == ms.sections[i].choice,
                   "idempotence: section set changed");
        for (int i = 0; i < ms.metric.size(); ++i)
            for (int j = 0; j < ms.metric.size(); ++j)
                expect(ms2.metric.dist(i, j) == ms.metric.dist(i, j),
                       "idempotence: metric changed");
    }
}

void criterion_4() {
    std::mt19937_64 rng(40211);
    int done = 0;
    while (done < 100) {
        int w = 2 + int(rng() % 3), h = 2 + int(rng() % 2);
        L1Points grid;
        grid.dim = 2;
        for (int x = 0; x < w; ++x)
            for (int y = 0; y < h; ++y) grid.points.push_back({Rat(x), Rat(y)});
        FiniteMetric m = l1_metric(grid);
        WallSpace ws = extract_convex_walls(m);
        const int n = m.size();
        int a = int(rng() % n), b = int(rng() % n);
        if (a == b) continue;

        // random monotone staircase from a to b, cut into <= 3 blocks
        auto coord = [&](int p, int c) { return grid.points[p][c]; };
        std::vector<int> path{a};
        int cur = a;
        while (cur != b) {
            long cx = coord(cur, 0).num().get_si(), cy = coord(cur, 1).num().get_si();
            long bx = coord(b, 0).num().get_si(), by = coord(b, 1).num().get_si();
            bool step_x;
            if (cx == bx) step_x = false;
            else if (cy == by) step_x = true;
            else step_x = rng() % 2;
            long nx = cx + (step_x ? (bx > cx ? 1 : -1) : 0);
            long ny = cy + (step_x ? 0 : (by > cy ? 1 : -1));
            cur = int(nx * h + ny);
            path.push_back(cur);
        }
        int blocks = 1 + int(rng() % 3);
        if (int(path.size()) - 1 < blocks) continue;
        // cut points: split the step sequence into `blocks` contiguous runs
        std::vector<int> cuts{0};
        while (int(cuts.size()) < blocks) {
            int c = 1 + int(rng() % (path.size() - 1));
            bool dup = false;
            for (int e : cuts) dup = dup || e == c;
            if (!dup) cuts.push_back(c);
        }
        cuts.push_back(int(path.size()) - 1);
        std::sort(cuts.begin(), cuts.end());
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            pairs.push_back({path[cuts[i]], path[cuts[i + 1]]});

        SubdivisionResult res = subdivide_interval(m, ws, a, b, pairs);
        // re-verify the postconditions independently of the library's own check
        expect(res.sequence.size() == (std::size_t(1) << pairs.size()), "sequence length");
        expect(m.is_geodesic(res.sequence), "sequence not geodesic");
        Rat total(0);
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            expect(res.blocks[j].size() == (std::size_t(1) << j), "block size");
            WallFamily fam(ws.wall_count());
            Rat len(0);
            for (int pos : res.blocks[j]) {
                WallFamily f = wall_interval(ws, res.sequence[pos - 1], res.sequence[pos]);
                expect(fam.disjoint(f), "block families overlap");
                fam |= f;
                len += m.dist(res.sequence[pos - 1], res.sequence[pos]);
            }
            expect(fam == wall_interval(ws, pairs[j].first, pairs[j].second),
                   "block family mismatch");
            expect(len == m.dist(pairs[j].first, pairs[j].second), "block length mismatch");
            total += len;
        }
        expect(total == m.dist(a, b), "total length mismatch");
        ++done;
    }
}

void criterion_5() {
    std::mt19937_64 rng(50211);
    expect(!g_closures.empty(), "criterion 2 corpus missing");
    int lp_runs = 0;
    for (const ClosureInstance& inst : g_closures) {
        const FiniteMetric& m = inst.closure.metric;
        int base = int(rng() % m.size());
        L1Points emb = walls_to_embedding(inst.walls, base);
        for (int x = 0; x < m.size(); ++x)
            for (int y = 0; y < m.size(); ++y)
                expect(l1_dist(emb.points[x], emb.points[y]) == m.dist(x, y),
                       "embedding distance mismatch");
        if (m.size() <= 12) {
            CutConeResult r = cut_cone_decompose(m, 12);
            expect(r.embeddable, "median metric reported as not l1-embeddable");
            ++lp_runs;
        }
    }
    // the cap itself is exercised by a 12-point median space
    MedianClosureResult y12 = median_closure(points_from_json(load_json_file(fx("yhalf_points.json"))));
    expect(y12.metric.size() == 12, "Y_1/2 closure size");
    CutConeResult r = cut_cone_decompose(y12.metric, 12);
    expect(r.embeddable, "12-point median metric reported as not embeddable");
    expect(lp_runs >= 20, "too few LP instances within the cap: " + std::to_string(lp_runs));
}

void criterion_6() {
    std::mt19937_64 rng(60211);
    const Rat tau = approx_slack();           // 2^-24 for the CND tolerance
    int type1_yes = 0;
    for (int t = 0; t < 200; ++t) {
        int n = 3 + int(rng() % 4);
        int dim = 1 + int(rng() % 3);
        std::vector<std::vector<Rat>> pts(n, std::vector<Rat>(dim));
        for (auto& p : pts)
            for (Rat& c : p) c = Rat(long(rng() % 9), 1 + long(rng() % 3));
        Kernel k;
        k.n = n;
        k.psi.assign(std::size_t(n) * n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rat q(0);
                for (int c = 0; c < dim; ++c) {
                    Rat d = pts[i][c] - pts[j][c];
                    q += d * d;
                }
                k.psi[std::size_t(i) * n + j] = q;
                k.psi[std::size_t(j) * n + i] = q;
            }
        // (a) exact CND
        expect(is_cnd(k).cnd, "squared-Euclidean kernel failed is_cnd");
        // (b) Schoenberg powers within tau
        for (const Rat& alpha : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
            Kernel p = schoenberg_power(k, alpha);
            expect(is_cnd(p, p.approx ? tau : Rat(0)).cnd,
                   "Schoenberg power failed is_cnd at alpha = " + alpha.str());
        }
        // (c) sqrt of a CND kernel is measure definite within the LP slack
        MeasureDefiniteVerdict md = is_measure_definite(schoenberg_power(k, Rat(1, 2)), 12);
        expect(md.verdict == Tri::yes, "sqrt of CND kernel not measure definite");

        // (d) the chain on an l1 metric (classify raises on any inversion)
        if (t % 4 == 0) {
            MedianClosureResult res = median_closure(random_generators(rng, 2 + int(rng() % 2), 3));
            if (res.metric.size() <= 6) {
                HierarchyVerdict v = classify(kernel_from_metric(res.metric), 3, 12);
                expect(v.type1 == Tri::yes, "l1 metric not recognized as type 1");
                expect(v.hypermetric_at_bound == Tri::yes, "type-1 instance failed hypermetric");
                expect(v.negative_type == Tri::yes, "type-1 instance failed CND");
                ++type1_yes;
            }
        }
    }
    expect(type1_yes >= 20, "too few type-1-yes instances: " + std::to_string(type1_yes));
}

void criterion_7() {
    for (auto [w, h] : {std::pair<int, int>{4, 4}, {5, 3}}) {
        L1Points grid;
        grid.dim = 2;
        for (int x = 0; x < w; ++x)
            for (int y = 0; y < h; ++y) grid.points.push_back({Rat(x), Rat(y)});
        FiniteMetric m = l1_metric(grid);
        const int n = m.size();
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    PointSet ms = median_set(m, a, b, c);
                    expect(ms.count() == 1, "grid triple without unique median");
                    int med = ms.first();
                    for (const Rat& delta : {Rat(0), Rat(1, 2), Rat(1)}) {
                        PointSet s = delta_median_set(m, a, b, c, delta);
                        Rat triple = Rat(3) * delta;
                        for (int z = 0; z < n; ++z) {
                            if (m.dist(med, z) <= delta)
                                expect(s.test(z), "delta-ball point missing from delta-median set");
                            if (s.test(z))
                                expect(m.dist(med, z) <= triple,
                                       "delta-median point outside the 3*delta ball");
                        }
                    }
                }
    }
}

void criterion_8() {
    std::mt19937_64 rng(80211);
    for (int t = 0; t < 100; ++t) {
        WallSpace ws = random_walls(rng, 6, 8);
        auto pick = [&](bool nonempty) {
            PointSet s(ws.n);
            for (int i = 0; i < ws.n; ++i)
                if (rng() % 3 == 0) s.set(i);
            if (nonempty && s.none()) s.set(int(rng() % ws.n));
            return s;
        };
        PointSet F = pick(true), G = pick(true), F2 = pick(true), G2 = pick(true);
        auto [p1, p2] = ring_intersect(ws, F, G, F2, G2); // identity checked inside
        WallFamily explicit_meet = wall_interval(ws, F, G) & wall_interval(ws, F2, G2);
        expect(p1.disjoint(p2), "ring intersection parts overlap");
        expect((p1 | p2) == explicit_meet, "ring intersection mismatch");

        PointSet Fc(ws.n), Gc(ws.n);
        Fc.set(int(rng() % ws.n));
        Gc.set(int(rng() % ws.n));
        if (rng() % 2) Gc.set(int(rng() % ws.n));
        auto parts = ring_complement(ws, Fc, Gc); // partition checked inside
        WallFamily covered = wall_interval(ws, Fc, Gc);
        for (const auto& p : parts) {
            expect(covered.disjoint(p.family), "ring complement parts overlap");
            covered |= p.family;
        }
        expect(covered == Bitset::full(ws.wall_count()), "ring complement does not cover");
    }
}

} // namespace

int main() {
    auto suite_start = std::chrono::steady_clock::now();
    double total = 0;
    total += run_criterion(1, "median-hull counts for the three 4-generator fixtures", criterion_1);
    total += run_criterion(2, "exact wall-measure identity on 100 random median closures",
                           criterion_2);
    total += run_criterion(3, "medianization: median + isometric + idempotent on 100 wall spaces",
                           criterion_3);
    total += run_criterion(4, "interval subdivision postconditions on 100 grid decompositions",
                           criterion_4);
    total += run_criterion(5, "embedding round-trip and cut-cone feasibility on median inputs",
                           criterion_5);
    total += run_criterion(6, "kernel chain (CND, Schoenberg, sqrt embedding, hierarchy) x200",
                           criterion_6);
    total += run_criterion(7, "delta-median sandwich on Z^2 grids", criterion_7);
    total += run_criterion(8, "ring calculus identities on 100 random wall spaces", criterion_8);
    double suite =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
    run_criterion(9, "suite runtime under 5 minutes with the LP cap at 12 points", [&] {
        expect(suite < 300.0, "acceptance suite took " + std::to_string(suite) + "s");
    });
    std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
