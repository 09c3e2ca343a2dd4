#include "medgeo/cut_cone.hpp"

namespace medgeo {

CutConeResult cut_cone_decompose_raw(int n, const std::vector<Rat>& dist, const Rat& slack,
                                     int cap) {
    if (n < 0 || dist.size() != std::size_t(n) * n) throw invalid_input("distance matrix size mismatch");
    if (n > cap || n > 30)
        throw cap_exceeded("cut cone instance with " + std::to_string(n) + " points exceeds cap " +
                           std::to_string(std::min(cap, 30)));

    const int rows = n * (n - 1) / 2;
    const std::uint64_t ncuts = n >= 1 ? (std::uint64_t(1) << (n - 1)) - 1 : 0;
    LpInstance lp;
    lp.rows = rows;
    lp.cols = int(ncuts);
    lp.slack = slack;
    lp.A.assign(std::size_t(rows) * ncuts, Rat(0));
    lp.b.resize(rows);

    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++row) {
            lp.b[row] = dist[std::size_t(i) * n + j];
            // cut mask bit t corresponds to point t+1; point 0 is never cut
            for (std::uint64_t mask = 1; mask <= ncuts; ++mask) {
                bool si = i > 0 && ((mask >> (i - 1)) & 1);
                bool sj = j > 0 && ((mask >> (j - 1)) & 1);
                if (si != sj) lp.A[std::size_t(row) * ncuts + (mask - 1)] = Rat(1);
            }
        }

    LpResult res = lp_feasible(lp);
    CutConeResult out;
    if (!res.feasible) {
        out.embeddable = false;
        out.certificate = std::move(res.certificate);
        return out;
    }
    out.embeddable = true;
    for (std::uint64_t mask = 1; mask <= ncuts; ++mask) {
        const Rat& w = res.x[mask - 1];
        if (w.is_zero()) continue;
        PointSet S(n);
        for (int t = 1; t < n; ++t)
            if ((mask >> (t - 1)) & 1) S.set(t);
        out.decomposition.cuts.push_back(S);
        out.decomposition.weights.push_back(w);
    }

    // The defining equalities are the contract; re-sum the decomposition.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat total(0);
            for (std::size_t c = 0; c < out.decomposition.cuts.size(); ++c)
                if (out.decomposition.cuts[c].test(i) != out.decomposition.cuts[c].test(j))
                    total += out.decomposition.weights[c];
            if ((total - dist[std::size_t(i) * n + j]).abs() > slack)
                throw verification_error("cut decomposition fails re-summation");
        }
    return out;
}

CutConeResult cut_cone_decompose(const FiniteMetric& m, int cap) {
    return cut_cone_decompose_raw(m.size(), m.dist_matrix(), Rat(0), cap);
}

L1Points walls_to_embedding(const WallSpace& ws, int x0) {
    if (x0 < 0 || x0 >= ws.n) throw invalid_input("base point index out of range");
    L1Points out;
    out.dim = ws.wall_count();
    out.points.resize(ws.n);
    for (int x = 0; x < ws.n; ++x) {
        out.points[x].assign(out.dim, Rat(0));
        for (int w = 0; w < ws.wall_count(); ++w)
            if (ws.separates(w, x, x0)) out.points[x][w] = ws.walls[w].weight;
    }
    return out;
}

} // namespace medgeo
