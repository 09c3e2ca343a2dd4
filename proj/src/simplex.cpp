#include "medgeo/simplex.hpp"

namespace medgeo {

void LpInstance::validate() const {
    if (rows < 0 || cols < 0) throw invalid_input("negative LP dimensions");
    if (A.size() != std::size_t(rows) * cols) throw invalid_input("LP matrix size mismatch");
    if (b.size() != std::size_t(rows)) throw invalid_input("LP rhs size mismatch");
    if (slack.is_negative()) throw invalid_input("negative LP slack");
}

bool verify_solution(const LpInstance& in, const std::vector<Rat>& x) {
    if (x.size() != std::size_t(in.cols)) return false;
    for (const Rat& v : x)
        if (v.is_negative()) return false;
    for (int i = 0; i < in.rows; ++i) {
        Rat lhs(0);
        for (int j = 0; j < in.cols; ++j)
            if (!x[j].is_zero() && !in.at(i, j).is_zero()) lhs += in.at(i, j) * x[j];
        if ((lhs - in.b[i]).abs() > in.slack) return false;
    }
    return true;
}

bool verify_farkas(const LpInstance& in, const std::vector<Rat>& y) {
    if (y.size() != std::size_t(in.rows)) return false;
    for (int j = 0; j < in.cols; ++j) {
        Rat col(0);
        for (int i = 0; i < in.rows; ++i)
            if (!y[i].is_zero()) col += y[i] * in.at(i, j);
        if (col.is_positive()) return false;
    }
    Rat value(0), norm1(0);
    for (int i = 0; i < in.rows; ++i) {
        value += y[i] * in.b[i];
        norm1 += y[i].abs();
    }
    return value - in.slack * norm1 > Rat(0);
}

namespace {

/// Phase-1 simplex on A lambda = b, lambda >= 0 with artificial variables.
/// Returns either a feasible point or the simplex multipliers proving
/// infeasibility (y^T A <= 0, y^T b > 0 for the system as given).
struct Phase1 {
    int m, n; // rows, structural columns
    std::vector<std::vector<Rat>> T; // m x (n + m) tableau
    std::vector<Rat> rhs;            // >= 0 throughout
    std::vector<bool> flipped;
    std::vector<int> basis;

    Phase1(const std::vector<Rat>& A, const std::vector<Rat>& b, int rows, int cols)
        : m(rows), n(cols), T(rows), rhs(rows), flipped(rows, false), basis(rows) {
        for (int i = 0; i < m; ++i) {
            T[i].assign(n + m, Rat(0));
            bool neg = b[std::size_t(i)].is_negative();
            flipped[i] = neg;
            rhs[i] = neg ? -b[std::size_t(i)] : b[std::size_t(i)];
            for (int j = 0; j < n; ++j) {
                const Rat& v = A[std::size_t(i) * cols + j];
                T[i][j] = neg ? -v : v;
            }
            T[i][n + i] = Rat(1);
            basis[i] = n + i;
        }
    }

    // reduced costs for the cost vector (0,...,0, 1,...,1)
    std::vector<Rat> r;
    Rat z{0};

    void init_costs() {
        r.assign(n + m, Rat(0));
        for (int j = 0; j < n + m; ++j) {
            Rat s(0);
            for (int i = 0; i < m; ++i) s += T[i][j];
            Rat c = j >= n ? Rat(1) : Rat(0);
            r[j] = c - s;
        }
        z = Rat(0);
        for (int i = 0; i < m; ++i) z += rhs[i];
    }

    void pivot(int pi, int pj) {
        Rat pv = T[pi][pj];
        for (Rat& v : T[pi]) v /= pv;
        rhs[pi] /= pv;
        for (int i = 0; i < m; ++i) {
            if (i == pi || T[i][pj].is_zero()) continue;
            Rat f = T[i][pj];
            for (int j = 0; j < n + m; ++j)
                if (!T[pi][j].is_zero()) T[i][j] -= f * T[pi][j];
            rhs[i] -= f * rhs[pi];
        }
        if (!r[pj].is_zero()) {
            Rat f = r[pj];
            for (int j = 0; j < n + m; ++j)
                if (!T[pi][j].is_zero()) r[j] -= f * T[pi][j];
            z += f * rhs[pi]; // objective falls by |r_e| * step
        }
        basis[pi] = pj;
    }

    void solve() {
        init_costs();
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n + m; ++j)
                if (r[j].is_negative()) { enter = j; break; } // Bland
            if (enter < 0) return;
            int leave = -1;
            Rat best(0);
            for (int i = 0; i < m; ++i) {
                if (!T[i][enter].is_positive()) continue;
                Rat ratio = rhs[i] / T[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw verification_error("phase-1 simplex unbounded");
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult lp_feasible(const LpInstance& in) {
    in.validate();

    // Expand the slack relaxation into equality form with slack columns.
    const bool relaxed = in.slack.is_positive();
    int rows = relaxed ? 2 * in.rows : in.rows;
    int cols = relaxed ? in.cols + 2 * in.rows : in.cols;
    std::vector<Rat> A(std::size_t(rows) * cols, Rat(0));
    std::vector<Rat> b(rows, Rat(0));
    if (!relaxed) {
        A = in.A;
        b = in.b;
    } else {
        for (int i = 0; i < in.rows; ++i) {
            for (int j = 0; j < in.cols; ++j) {
                A[std::size_t(2 * i) * cols + j] = in.at(i, j);
                A[std::size_t(2 * i + 1) * cols + j] = in.at(i, j);
            }
            A[std::size_t(2 * i) * cols + in.cols + 2 * i] = Rat(1);        // + s_i
            A[std::size_t(2 * i + 1) * cols + in.cols + 2 * i + 1] = Rat(-1); // - t_i
            b[2 * i] = in.b[i] + in.slack;
            b[2 * i + 1] = in.b[i] - in.slack;
        }
    }

    Phase1 px(A, b, rows, cols);
    px.solve();

    LpResult out;
    if (px.z.is_zero()) {
        out.feasible = true;
        out.x.assign(in.cols, Rat(0));
        for (int i = 0; i < rows; ++i)
            if (px.basis[i] < in.cols) out.x[px.basis[i]] = px.rhs[i];
        if (!verify_solution(in, out.x))
            throw verification_error("LP solution fails re-verification");
        return out;
    }

    // Simplex multipliers from the reduced costs of the artificial columns.
    std::vector<Rat> yexp(rows);
    for (int i = 0; i < rows; ++i) {
        Rat pi = Rat(1) - px.r[cols + i];
        yexp[i] = px.flipped[i] ? -pi : pi;
    }
    out.feasible = false;
    if (!relaxed) {
        out.certificate.y = std::move(yexp);
    } else {
        out.certificate.y.resize(in.rows);
        for (int i = 0; i < in.rows; ++i) out.certificate.y[i] = yexp[2 * i] + yexp[2 * i + 1];
    }
    if (!verify_farkas(in, out.certificate.y))
        throw verification_error("Farkas certificate fails re-verification");
    return out;
}

} // namespace medgeo
