#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "medgeo/bitset.hpp"
#include "medgeo/rational.hpp"

namespace medgeo {

/**
 * Finite (pseudo-)metric space with an exact rational distance matrix.
 *
 * Construction validates symmetry, a zero diagonal, nonnegativity and the
 * triangle inequality for every triple; strictness (d(i,j) > 0 for i != j)
 * is additionally required unless allow_pseudo is set.
 *
 * Internally the matrix is rescaled to integers by the common denominator;
 * when those fit comfortably in 64 bits all betweenness arithmetic runs on
 * machine words. This is an exact rescaling, never an approximation.
 */
class FiniteMetric {
public:
    FiniteMetric(int n, std::vector<Rat> dist_row_major,
                 std::vector<std::string> labels = {}, bool allow_pseudo = false);

    int size() const { return n_; }
    bool allow_pseudo() const { return allow_pseudo_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rat>& dist_matrix() const { return d_; }

    const Rat& dist(int i, int j) const {
        check(i);
        check(j);
        return d_[std::size_t(i) * n_ + j];
    }

    /// True when no two distinct points are at distance zero.
    bool is_strict() const { return strict_; }

    /// Exact test of d(a,x) + d(x,b) == d(a,b).
    bool between(int a, int x, int b) const {
        check(a);
        check(x);
        check(b);
        if (fast_) {
            const std::int64_t* row = sd_.data();
            return row[idx(a, x)] + row[idx(x, b)] == row[idx(a, b)];
        }
        return d_[idx(a, x)] + d_[idx(x, b)] == d_[idx(a, b)];
    }

    /// d(a,x) + d(x,b) <= d(a,b) + slack.
    bool between_slack(int a, int x, int b, const Rat& slack) const;

    bool is_geodesic(const std::vector<int>& seq) const;

    void check(int i) const {
        if (i < 0 || i >= n_) throw invalid_input("point index out of range");
    }

private:
    std::size_t idx(int i, int j) const { return std::size_t(i) * n_ + j; }
    void validate();

    int n_;
    bool allow_pseudo_;
    bool strict_ = true;
    std::vector<std::string> labels_;
    std::vector<Rat> d_;

    bool fast_ = false;                // integer rescaling fits in int64
    std::vector<std::int64_t> sd_;     // d * lcm(denominators), when fast_
};

/// Merges zero-distance classes into single points (class representative =
/// smallest index). `cls`, when given, receives the point -> class map.
FiniteMetric metric_quotient(const FiniteMetric& m, std::vector<int>* cls = nullptr);

} // namespace medgeo
