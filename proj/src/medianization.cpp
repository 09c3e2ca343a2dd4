#include "medgeo/medianization.hpp"

#include <algorithm>
#include <functional>

namespace medgeo {

AdmissibleSection section_of_point(const WallSpace& ws, int x) {
    if (x < 0 || x >= ws.n) throw invalid_input("point index out of range");
    Bitset choice(ws.wall_count());
    for (int w = 0; w < ws.wall_count(); ++w)
        if (ws.walls[w].h.test(x)) choice.set(w);
    return AdmissibleSection{choice};
}

namespace {

// sub[i][j] packs the four containment bits side(i,s) <= side(j,t) as
// bit (2s + t). Sides: 1 = h, 0 = h^c.
std::vector<std::uint8_t> containment_table(const WallSpace& ws) {
    const int k = ws.wall_count();
    std::vector<PointSet> side1(k), side0(k);
    for (int i = 0; i < k; ++i) {
        side1[i] = ws.walls[i].h;
        side0[i] = ws.walls[i].h.complement();
    }
    std::vector<std::uint8_t> sub(std::size_t(k) * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::uint8_t bits = 0;
            if (side0[i].subset_of(side0[j])) bits |= 1 << 0;
            if (side0[i].subset_of(side1[j])) bits |= 1 << 1;
            if (side1[i].subset_of(side0[j])) bits |= 1 << 2;
            if (side1[i].subset_of(side1[j])) bits |= 1 << 3;
            sub[std::size_t(i) * k + j] = bits;
        }
    return sub;
}

} // namespace

std::vector<AdmissibleSection> enumerate_sections(const WallSpace& ws, int cap) {
    ws.validate();
    const int k = ws.wall_count();
    if (k > cap) throw cap_exceeded("wall count " + std::to_string(k) + " exceeds cap " +
                                    std::to_string(cap));
    std::vector<std::uint8_t> sub = containment_table(ws);
    auto contained = [&](int i, int si, int j, int sj) {
        return (sub[std::size_t(i) * k + j] >> (2 * si + sj)) & 1;
    };

    std::vector<AdmissibleSection> out;
    Bitset choice(k);
    // Depth-first over walls, side 0 (= h^c) before side 1; valid leaves
    // come out in lexicographic order of the choice tuple.
    std::vector<int> pick(k, -1);
    std::function<void(int)> dfs = [&](int w) {
        if (w == k) {
            out.push_back(AdmissibleSection{choice});
            return;
        }
        for (int s = 0; s <= 1; ++s) {
            // Upward closure: a chosen side contained in the rejected side
            // of any wall (or of its own wall) kills the assignment.
            if (contained(w, s, w, 1 - s)) continue;
            bool ok = true;
            for (int j = 0; j < w && ok; ++j) {
                if (contained(w, s, j, 1 - pick[j])) ok = false;
                if (contained(j, pick[j], w, 1 - s)) ok = false;
            }
            if (!ok) continue;
            pick[w] = s;
            if (s) choice.set(w);
            dfs(w + 1);
            if (s) choice.reset(w);
            pick[w] = -1;
        }
    };
    dfs(0);
    return out;
}

AdmissibleSection boolean_median(const AdmissibleSection& s1, const AdmissibleSection& s2,
                                 const AdmissibleSection& s3) {
    if (s1.wall_count() != s2.wall_count() || s1.wall_count() != s3.wall_count())
        throw invalid_input("sections over different wall spaces");
    Bitset m = (s1.choice & s2.choice) | (s1.choice & s3.choice) | (s2.choice & s3.choice);
    return AdmissibleSection{m};
}

MedianizedSpace medianize(const WallSpace& ws, int cap) {
    std::vector<AdmissibleSection> sections = enumerate_sections(ws, cap);
    const int s = int(sections.size());

    std::vector<Rat> d(std::size_t(s) * s, Rat(0));
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            Bitset diff = sections[i].choice ^ sections[j].choice;
            Rat v(0);
            diff.for_each([&](int w) { v += ws.walls[w].weight; });
            d[std::size_t(i) * s + j] = v;
            d[std::size_t(j) * s + i] = v;
        }
    FiniteMetric metric(s, std::move(d), {}, false);

    std::vector<int> iota(ws.n, -1);
    for (int x = 0; x < ws.n; ++x) {
        AdmissibleSection sx = section_of_point(ws, x);
        for (int i = 0; i < s; ++i)
            if (sections[i].choice == sx.choice) {
                iota[x] = i;
                break;
            }
        if (iota[x] < 0) throw verification_error("point section missing from enumeration");
    }
    return MedianizedSpace{ws, std::move(sections), std::move(metric), std::move(iota)};
}

std::vector<CubeEdge> cube_adjacency(const MedianizedSpace& ms) {
    std::vector<CubeEdge> edges;
    const int s = int(ms.sections.size());
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            Bitset diff = ms.sections[i].choice ^ ms.sections[j].choice;
            if (diff.count() == 1) {
                int w = diff.first();
                edges.push_back(CubeEdge{i, j, w, ms.source.walls[w].weight});
            }
        }
    return edges;
}

WallSpace section_walls(const MedianizedSpace& ms) {
    WallSpace out;
    out.n = int(ms.sections.size());
    for (int w = 0; w < ms.source.wall_count(); ++w) {
        PointSet h(out.n);
        for (int i = 0; i < out.n; ++i)
            if (ms.sections[i].choice.test(w)) h.set(i);
        out.walls.push_back(Wall{h, ms.source.walls[w].weight});
    }
    return out;
}

} // namespace medgeo
