#include "medgeo/kernels.hpp"

#include <algorithm>
#include <functional>

namespace medgeo {

void Kernel::validate() const {
    if (n < 0) throw invalid_input("negative kernel size");
    if (psi.size() != std::size_t(n) * n) throw invalid_input("kernel matrix size mismatch");
    for (int i = 0; i < n; ++i) {
        if (!at(i, i).is_zero()) throw invalid_input("kernel diagonal must be zero");
        for (int j = i + 1; j < n; ++j) {
            if (at(i, j) != at(j, i)) throw invalid_input("kernel not symmetric");
            if (at(i, j).is_negative()) throw invalid_input("kernel entries must be nonnegative");
        }
    }
}

Rat dyadic_entry_error() {
    return Rat::dyadic(mpz_class(1), 48);
}

Rat approx_slack() {
    return Rat::dyadic(mpz_class(1), 24);
}

CndVerdict is_cnd(const Kernel& k, const Rat& tol, int base) {
    k.validate();
    if (tol.is_negative()) throw invalid_input("negative tolerance");
    if (base < 0 || base >= std::max(k.n, 1)) throw invalid_input("base point out of range");
    CndVerdict out;
    if (k.n <= 1) return out;

    std::vector<int> pts;
    for (int i = 0; i < k.n; ++i)
        if (i != base) pts.push_back(i);
    const int m = int(pts.size());

    // P + tol*I, P[i][j] = psi(p_i, base) + psi(p_j, base) - psi(p_i, p_j)
    std::vector<Rat> A(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            A[std::size_t(i) * m + j] =
                k.at(pts[i], base) + k.at(pts[j], base) - k.at(pts[i], pts[j]);
            if (i == j) A[std::size_t(i) * m + j] += tol;
        }
    auto a = [&](int i, int j) -> Rat& { return A[std::size_t(i) * m + j]; };

    // Congruence transform U with invariant A = U P0 U^T.
    std::vector<Rat> U(std::size_t(m) * m, Rat(0));
    for (int i = 0; i < m; ++i) U[std::size_t(i) * m + i] = Rat(1);
    auto u = [&](int i, int j) -> Rat& { return U[std::size_t(i) * m + j]; };

    std::vector<bool> active(m, true);

    auto report = [&](const std::vector<Rat>& w) {
        // v = U^T w; lambda over all n points with the base absorbing -sum
        std::vector<Rat> v(m, Rat(0));
        for (int i = 0; i < m; ++i)
            if (!w[i].is_zero())
                for (int j = 0; j < m; ++j) v[j] += w[i] * u(i, j);
        std::vector<Rat> lambda(k.n, Rat(0));
        Rat sum(0);
        for (int i = 0; i < m; ++i) {
            lambda[pts[i]] = v[i];
            sum += v[i];
        }
        lambda[base] = -sum;
        // exact re-evaluation of the quadratic form
        Rat q(0);
        for (int i = 0; i < k.n; ++i)
            for (int j = i + 1; j < k.n; ++j)
                if (!lambda[i].is_zero() && !lambda[j].is_zero())
                    q += Rat(2) * lambda[i] * lambda[j] * k.at(i, j);
        Rat vv(0);
        for (const Rat& c : v) vv += c * c;
        if (!(q > tol * vv))
            throw verification_error("CND violation fails re-evaluation");
        out.cnd = false;
        out.violation = std::move(lambda);
        out.form_value = q;
    };

    for (;;) {
        int neg = -1, pos = -1;
        for (int i = 0; i < m; ++i) {
            if (!active[i]) continue;
            if (a(i, i).is_negative()) { neg = i; break; }
            if (pos < 0 && a(i, i).is_positive()) pos = i;
        }
        if (neg >= 0) {
            std::vector<Rat> w(m, Rat(0));
            w[neg] = Rat(1);
            report(w);
            return out;
        }
        if (pos < 0) {
            // all active diagonal entries are zero; any nonzero off-diagonal
            // entry yields an indefinite 2x2 block
            for (int i = 0; i < m; ++i) {
                if (!active[i]) continue;
                for (int j = i + 1; j < m; ++j) {
                    if (!active[j]) continue;
                    if (!a(i, j).is_zero()) {
                        std::vector<Rat> w(m, Rat(0));
                        w[i] = Rat(1);
                        w[j] = a(i, j).is_positive() ? Rat(-1) : Rat(1);
                        report(w);
                        return out;
                    }
                }
            }
            return out; // remaining block is zero: PSD
        }
        // eliminate around the positive pivot
        int p = pos;
        for (int i = 0; i < m; ++i) {
            if (!active[i] || i == p || a(i, p).is_zero()) continue;
            Rat f = a(i, p) / a(p, p);
            for (int j = 0; j < m; ++j) {
                if (active[j] && !a(p, j).is_zero()) a(i, j) -= f * a(p, j);
                if (!u(p, j).is_zero()) u(i, j) -= f * u(p, j);
            }
        }
        // symmetric column elimination: after the row step the matrix is
        // restored to symmetric form by zeroing the pivot column
        for (int i = 0; i < m; ++i)
            if (i != p) {
                a(i, p) = Rat(0);
                a(p, i) = Rat(0);
            }
        active[p] = false;
    }
}

namespace {

/// x^(u/v) for x >= 0: exact rational when possible, else the dyadic floor
/// m/2^48. Sets `exact` accordingly.
Rat rational_power(const Rat& x, unsigned long u, unsigned long v, bool* exact) {
    if (x.is_zero()) {
        *exact = true;
        return Rat(0);
    }
    mpz_class pn, qn;
    mpz_pow_ui(pn.get_mpz_t(), x.num().get_mpz_t(), u);
    mpz_pow_ui(qn.get_mpz_t(), x.den().get_mpz_t(), u);

    mpz_class rp, rq;
    bool ep = mpz_root(rp.get_mpz_t(), pn.get_mpz_t(), v) != 0;
    bool eq = mpz_root(rq.get_mpz_t(), qn.get_mpz_t(), v) != 0;
    if (ep && eq) {
        *exact = true;
        return Rat(rp, rq);
    }

    const unsigned prec = 48;
    mpz_class shifted = pn;
    mpz_mul_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), std::size_t(prec) * v);
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), shifted.get_mpz_t(), qn.get_mpz_t());
    mpz_class m;
    mpz_root(m.get_mpz_t(), z.get_mpz_t(), v);
    auto too_big = [&](const mpz_class& c) {
        mpz_class cp;
        mpz_pow_ui(cp.get_mpz_t(), c.get_mpz_t(), v);
        return cp * qn > shifted;
    };
    while (too_big(m)) m -= 1;
    while (!too_big(m + 1)) m += 1;
    *exact = false;
    return Rat::dyadic(m, prec);
}

} // namespace

Kernel schoenberg_power(const Kernel& k, const Rat& alpha) {
    k.validate();
    if (!alpha.is_positive() || alpha > Rat(1))
        throw invalid_input("Schoenberg exponent must lie in (0,1]");
    if (alpha == Rat(1)) return k;

    if (!alpha.num().fits_ulong_p() || !alpha.den().fits_ulong_p())
        throw invalid_input("Schoenberg exponent too large");
    unsigned long u = mpz_get_ui(alpha.num().get_mpz_t());
    unsigned long v = mpz_get_ui(alpha.den().get_mpz_t());

    Kernel out;
    out.n = k.n;
    out.psi.assign(std::size_t(k.n) * k.n, Rat(0));
    out.approx = k.approx;
    for (int i = 0; i < k.n; ++i)
        for (int j = i + 1; j < k.n; ++j) {
            bool exact = true;
            Rat w = rational_power(k.at(i, j), u, v, &exact);
            if (!exact) out.approx = true;
            out.psi[std::size_t(i) * k.n + j] = w;
            out.psi[std::size_t(j) * k.n + i] = w;
        }
    return out;
}

Kernel pull_back(const Kernel& k, const std::vector<int>& f) {
    k.validate();
    const int m = int(f.size());
    for (int x : f)
        if (x < 0 || x >= k.n) throw invalid_input("pull-back index out of range");
    Kernel out;
    out.n = m;
    out.approx = k.approx;
    out.psi.assign(std::size_t(m) * m, Rat(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.psi[std::size_t(i) * m + j] = k.at(f[i], f[j]);
    return out;
}

TriangleCheck kernel_triangle(const Kernel& k) {
    Rat slack = k.approx ? approx_slack() : Rat(0);
    for (int i = 0; i < k.n; ++i)
        for (int j = 0; j < k.n; ++j)
            for (int l = 0; l < k.n; ++l)
                if (k.at(i, l) > k.at(i, j) + k.at(j, l) + slack)
                    return TriangleCheck{false, i, j, l};
    return TriangleCheck{};
}

MeasureDefiniteVerdict is_measure_definite(const Kernel& k, int cap) {
    k.validate();
    MeasureDefiniteVerdict out;
    out.triangle = kernel_triangle(k);
    if (!out.triangle.ok) {
        out.verdict = Tri::no;
        out.triangle_failed = true;
        return out;
    }
    out.slack = k.approx ? approx_slack() : Rat(0);
    CutConeResult res = cut_cone_decompose_raw(k.n, k.psi, out.slack, cap);
    if (res.embeddable) {
        out.verdict = Tri::yes;
        out.decomposition = std::move(res.decomposition);
    } else {
        out.verdict = Tri::no;
        out.certificate = std::move(res.certificate);
    }
    return out;
}

HypermetricVerdict is_hypermetric_bounded(const Kernel& k, long long B, std::uint64_t enum_cap) {
    k.validate();
    if (B < 1) throw invalid_input("hypermetric bound must be >= 1");
    const int n = k.n;
    HypermetricVerdict out;
    if (n == 0) return out;

    std::vector<long long> lam(n, 0);
    std::uint64_t visited = 0;
    // depth-first over positions; q carries the partial quadratic form,
    // sigma the partial coefficient sum
    std::function<bool(int, Rat, long long)> dfs = [&](int t, Rat q, long long sigma) -> bool {
        if (t == n) {
            if (sigma == 1 && q.is_positive()) {
                out.passed_at_bound = false;
                out.violation = lam;
                out.form_value = q;
                return true;
            }
            return false;
        }
        if (++visited > enum_cap) throw cap_exceeded("hypermetric enumeration cap exceeded");
        long long rest = n - 1 - t;
        Rat s(0);
        for (int i = 0; i < t; ++i)
            if (lam[i] != 0) s += Rat(lam[i]) * k.at(i, t);
        for (long long l = -B; l <= B; ++l) {
            long long target = 1 - sigma - l;
            if (target > B * rest || target < -B * rest) continue;
            lam[t] = l;
            Rat q2 = q;
            if (l != 0) q2 += Rat(2 * l) * s;
            if (dfs(t + 1, q2, sigma + l)) return true;
        }
        lam[t] = 0;
        return false;
    };
    dfs(0, Rat(0), 0);
    return out;
}

HierarchyVerdict classify(const Kernel& k, long long B, int lp_cap) {
    HierarchyVerdict out;
    out.bound = B;

    try {
        out.type1_detail = is_measure_definite(k, lp_cap);
        out.type1 = out.type1_detail.verdict;
    } catch (const cap_exceeded&) {
        out.type1 = Tri::unknown;
    }

    try {
        out.hypermetric_detail = is_hypermetric_bounded(k, B);
        out.hypermetric_at_bound = out.hypermetric_detail.passed_at_bound ? Tri::yes : Tri::no;
    } catch (const cap_exceeded&) {
        out.hypermetric_at_bound = Tri::unknown;
    }

    out.cnd_detail = is_cnd(k, k.approx ? approx_slack() : Rat(0));
    out.negative_type = out.cnd_detail.cnd ? Tri::yes : Tri::no;

    if (out.negative_type == Tri::yes) {
        try {
            Kernel root = schoenberg_power(k, Rat(1, 2));
            out.sqrt_detail = is_measure_definite(root, lp_cap);
            out.sqrt_type1 = out.sqrt_detail.verdict;
        } catch (const cap_exceeded&) {
            out.sqrt_type1 = Tri::unknown;
        }
    }

    // Sound fragment of the hierarchy chain; inversions are bugs. The
    // square-root assertion only applies to exact inputs, where CND is a
    // certainty rather than a within-tolerance reading.
    if (out.type1 == Tri::yes && out.hypermetric_at_bound == Tri::no)
        throw verification_error("type-1 kernel failed a hypermetric test");
    if (out.type1 == Tri::yes && out.negative_type == Tri::no)
        throw verification_error("type-1 kernel failed the CND test");
    if (!k.approx && out.negative_type == Tri::yes && out.sqrt_type1 == Tri::no)
        throw verification_error("square root of a CND kernel is not measure definite");
    return out;
}

} // namespace medgeo
