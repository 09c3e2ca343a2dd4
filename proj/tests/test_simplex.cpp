#include <doctest.h>

#include <random>

#include "medgeo/simplex.hpp"

using namespace medgeo;

namespace {

LpInstance make(int rows, int cols, std::vector<long> a, std::vector<long> b) {
    LpInstance in;
    in.rows = rows;
    in.cols = cols;
    for (long v : a) in.A.push_back(Rat(v));
    for (long v : b) in.b.push_back(Rat(v));
    return in;
}

} // namespace

TEST_CASE("one equation, one variable") {
    LpResult r = lp_feasible(make(1, 1, {1}, {1}));
    REQUIRE(r.feasible);
    CHECK(r.x == std::vector<Rat>{Rat(1)});
}

TEST_CASE("contradictory equalities produce a Farkas certificate") {
    // lambda = 1 and lambda = 2 simultaneously
    LpInstance in = make(2, 1, {1, 1}, {1, 2});
    LpResult r = lp_feasible(in);
    REQUIRE(!r.feasible);
    CHECK(verify_farkas(in, r.certificate.y));
}

TEST_CASE("negative rhs needs a sign flip, not a crash") {
    // -lambda = -3  =>  lambda = 3
    LpResult r = lp_feasible(make(1, 1, {-1}, {-3}));
    REQUIRE(r.feasible);
    CHECK(r.x == std::vector<Rat>{Rat(3)});
}

TEST_CASE("infeasible by sign: lambda >= 0 cannot hit a negative combination") {
    // lambda1 + lambda2 = -1
    LpInstance in = make(1, 2, {1, 1}, {-1});
    LpResult r = lp_feasible(in);
    REQUIRE(!r.feasible);
    CHECK(verify_farkas(in, r.certificate.y));
}

TEST_CASE("random feasible systems re-verify") {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 60; ++t) {
        int rows = 1 + int(rng() % 4), cols = 1 + int(rng() % 6);
        std::vector<Rat> xstar(cols);
        for (Rat& v : xstar) v = Rat(long(rng() % 5), 1 + long(rng() % 3));
        LpInstance in;
        in.rows = rows;
        in.cols = cols;
        in.A.resize(std::size_t(rows) * cols);
        in.b.assign(rows, Rat(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                in.A[std::size_t(i) * cols + j] = Rat(long(rng() % 7) - 3);
                in.b[i] += in.A[std::size_t(i) * cols + j] * xstar[j];
            }
        LpResult r = lp_feasible(in);
        REQUIRE(r.feasible); // xstar is a witness
        CHECK(verify_solution(in, r.x));
    }
}

TEST_CASE("exactly one of solution and certificate, both verified") {
    std::mt19937_64 rng(83);
    int feas = 0, infeas = 0;
    for (int t = 0; t < 80; ++t) {
        int rows = 1 + int(rng() % 4), cols = 1 + int(rng() % 4);
        LpInstance in;
        in.rows = rows;
        in.cols = cols;
        in.A.resize(std::size_t(rows) * cols);
        in.b.resize(rows);
        for (Rat& v : in.A) v = Rat(long(rng() % 9) - 4);
        for (Rat& v : in.b) v = Rat(long(rng() % 9) - 4);
        LpResult r = lp_feasible(in);
        if (r.feasible) {
            ++feas;
            CHECK(verify_solution(in, r.x));
            CHECK(r.certificate.y.empty());
        } else {
            ++infeas;
            CHECK(verify_farkas(in, r.certificate.y));
            CHECK(r.x.empty());
        }
    }
    CHECK(feas > 0);
    CHECK(infeas > 0);
}

TEST_CASE("slack mode relaxes equalities to intervals") {
    LpInstance in = make(1, 1, {1}, {1});
    in.b[0] = Rat(1);
    in.slack = Rat(1, 4);

    SUBCASE("within slack") {
        // the system lambda = 1 +- 1/4 admits lambda = 1
        LpResult r = lp_feasible(in);
        REQUIRE(r.feasible);
        CHECK(verify_solution(in, r.x));
    }
    SUBCASE("two rows apart by more than twice the slack are infeasible") {
        LpInstance in2 = make(2, 1, {1, 1}, {1, 2});
        in2.slack = Rat(1, 4);
        LpResult r = lp_feasible(in2);
        REQUIRE(!r.feasible);
        CHECK(verify_farkas(in2, r.certificate.y));
    }
    SUBCASE("two rows apart by less than twice the slack are feasible") {
        LpInstance in3 = make(2, 1, {1, 1}, {1, 2});
        in3.slack = Rat(1, 2);
        LpResult r = lp_feasible(in3);
        REQUIRE(r.feasible);
        CHECK(verify_solution(in3, r.x)); // lambda = 3/2 works
    }
}

TEST_CASE("dimension mismatches are rejected") {
    LpInstance in = make(2, 1, {1}, {1, 2}); // A too small
    CHECK_THROWS_AS(lp_feasible(in), invalid_input);
}
