#include "doctest.h"

#include "groth/grothendieck.hpp"
#include "groth/identities.hpp"
#include "groth/parallel.hpp"
#include "groth/suite.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace groth;
using namespace testing_helpers;

TEST_CASE("thread cap") {
    set_num_threads(3);
    CHECK(num_threads() == 3);
    set_num_threads(0);
    CHECK(num_threads() >= 1);
}

TEST_CASE("multiplication: serial, parallel and the naive oracle") {
    Universe u(4, 3);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        Polynomial p = random_polynomial(u, rng, 40, 4);
        Polynomial q = random_polynomial(u, rng, 40, 4);
        Polynomial s = mul_serial(p, q);
        CHECK(s == oracle::naive_mul(p, q));
        for (int t : {1, 2, 4}) CHECK(mul_parallel(p, q, t) == s);
    }
}

TEST_CASE("determinant: serial, parallel and Leibniz") {
    Universe u(3, 3);
    PolyMatrix m = vandermonde_lemma_matrix(3, u);
    Polynomial s = determinant_serial(m);
    CHECK(s == oracle::leibniz_det(m));
    for (int t : {1, 2, 4}) CHECK(determinant_parallel(m, t) == s);
}

TEST_CASE("results do not depend on the thread count") {
    set_num_threads(1);
    Polynomial g1 = g_tableau(Partition{3, 2}, 3);
    auto r1 = verify_gm_type(Partition{2, 1}, 2, 4);
    set_num_threads(4);
    Polynomial g4 = g_tableau(Partition{3, 2}, 3);
    auto r4 = verify_gm_type(Partition{2, 1}, 2, 4);
    set_num_threads(0);
    CHECK(g1 == g4);
    CHECK(r1.lhs == r4.lhs);
    CHECK(r1.rhs == r4.rhs);
    CHECK(r1.to_json().dump().size() > 0);
}

TEST_CASE("tableau and subset sums across thread counts") {
    Universe u(3, 4);
    Polynomial ref = tableau_sum_serial(Partition{2, 2}, 3, u);
    for (int t : {1, 2, 3, 8}) CHECK(tableau_sum_parallel(Partition{2, 2}, 3, u, t) == ref);
    Universe v(4, 0);
    SubsetFn f = [&](const Subset& s) { return clear_denominator_gm(s, 4, v).cofactor; };
    Polynomial sref = subset_sum_serial(4, 2, v, f);
    for (int t : {1, 2, 3, 8}) CHECK(subset_sum_parallel(4, 2, v, f, t) == sref);
}
