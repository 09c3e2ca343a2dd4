#include "medgeo/finite_metric.hpp"

#include <numeric>

namespace medgeo {

FiniteMetric::FiniteMetric(int n, std::vector<Rat> dist_row_major,
                           std::vector<std::string> labels, bool allow_pseudo)
    : n_(n), allow_pseudo_(allow_pseudo), labels_(std::move(labels)), d_(std::move(dist_row_major)) {
    if (n_ < 0) throw invalid_input("negative point count");
    if (d_.size() != std::size_t(n_) * n_) throw invalid_input("distance matrix size mismatch");
    if (!labels_.empty() && labels_.size() != std::size_t(n_))
        throw invalid_input("label count does not match point count");
    validate();
}

void FiniteMetric::validate() {
    for (int i = 0; i < n_; ++i) {
        if (!d_[idx(i, i)].is_zero()) throw invalid_input("nonzero diagonal entry");
        for (int j = i + 1; j < n_; ++j) {
            const Rat& v = d_[idx(i, j)];
            if (v != d_[idx(j, i)]) throw invalid_input("distance matrix not symmetric");
            if (v.is_negative()) throw invalid_input("negative distance");
            if (v.is_zero()) {
                strict_ = false;
                if (!allow_pseudo_)
                    throw invalid_input("zero distance between distinct points (pseudo-metric not allowed here)");
            }
        }
    }

    // Exact integer rescaling by the lcm of all denominators.
    mpz_class lcm = 1;
    for (const Rat& v : d_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
    std::vector<mpz_class> scaled(d_.size());
    bool fits = true;
    for (std::size_t k = 0; k < d_.size(); ++k) {
        scaled[k] = d_[k].num() * (lcm / d_[k].den());
        if (!scaled[k].fits_slong_p() || scaled[k] > mpz_class(std::int64_t(1) << 62))
            fits = false;
    }
    if (fits) {
        fast_ = true;
        sd_.resize(d_.size());
        for (std::size_t k = 0; k < d_.size(); ++k) sd_[k] = scaled[k].get_si();
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (sd_[idx(i, k)] > sd_[idx(i, j)] + sd_[idx(j, k)])
                        throw invalid_input("triangle inequality fails for triple (" +
                                            std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + ")");
    } else {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (d_[idx(i, k)] > d_[idx(i, j)] + d_[idx(j, k)])
                        throw invalid_input("triangle inequality fails for triple (" +
                                            std::to_string(i) + "," + std::to_string(j) + "," +
                                            std::to_string(k) + ")");
    }
}

bool FiniteMetric::between_slack(int a, int x, int b, const Rat& slack) const {
    check(a);
    check(x);
    check(b);
    return d_[idx(a, x)] + d_[idx(x, b)] <= d_[idx(a, b)] + slack;
}

bool FiniteMetric::is_geodesic(const std::vector<int>& seq) const {
    if (seq.empty()) throw invalid_input("empty sequence");
    for (int p : seq) check(p);
    if (fast_) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) total += sd_[idx(seq[i], seq[i + 1])];
        return total == sd_[idx(seq.front(), seq.back())];
    }
    Rat total(0);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) total += d_[idx(seq[i], seq[i + 1])];
    return total == d_[idx(seq.front(), seq.back())];
}

FiniteMetric metric_quotient(const FiniteMetric& m, std::vector<int>* cls) {
    const int n = m.size();
    std::vector<int> rep(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (rep[i] >= 0) continue;
        int c = int(reps.size());
        rep[i] = c;
        for (int j = i + 1; j < n; ++j)
            if (rep[j] < 0 && m.dist(i, j).is_zero()) rep[j] = c;
        reps.push_back(i);
    }
    const int q = int(reps.size());
    std::vector<Rat> d(std::size_t(q) * q, Rat(0));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) d[std::size_t(a) * q + b] = m.dist(reps[a], reps[b]);
    std::vector<std::string> labels;
    if (!m.labels().empty()) {
        labels.reserve(q);
        for (int a = 0; a < q; ++a) labels.push_back(m.labels()[reps[a]]);
    }
    if (cls) *cls = rep;
    return FiniteMetric(q, std::move(d), std::move(labels), false);
}

} // namespace medgeo
