#include "doctest.h"

#include "groth/identities.hpp"
#include "groth/suite.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace groth;
using namespace testing_helpers;

TEST_CASE("identity tags round trip") {
    CHECK(all_identities().size() == 11);
    for (auto k : all_identities()) CHECK(parse_identity(to_string(k)) == k);
    CHECK_FALSE(parse_identity("milne"));
}

TEST_CASE("k-subsets match the bitmask oracle") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) CHECK(k_subsets(n, k) == oracle::subsets(n, k));
    CHECK(k_subsets(3, 4).empty());
    CHECK(complement({2, 4}, 5) == Subset{1, 3, 5});
}

TEST_CASE("denominator clearing examples") {
    Universe u(2, 0);
    SubsetTerm t = clear_denominator_gm({1}, 2, u);
    CHECK(t.sign == 1);
    CHECK(t.cofactor == Polynomial::one(u));
    CHECK(t.complement == Subset{2});
    Universe v(4, 0);
    SubsetTerm full = clear_denominator_gm({1, 2, 3, 4}, 4, v);
    CHECK(full.cofactor == full_vandermonde(4, v));
    CHECK(cross_product_gm({1, 2, 3, 4}, 4, v) == Polynomial::one(v));
    CHECK_THROWS_AS(clear_denominator_gm({3}, 2, u), PreconditionViolated);
}

TEST_CASE("clearing soundness in both orientations") {
    for (int n = 1; n <= 5; ++n) {
        Universe u(n, 0);
        const Polynomial V = full_vandermonde(n, u);
        for (int k = 0; k <= n; ++k)
            for (const Subset& s : k_subsets(n, k)) {
                SubsetTerm gm = clear_denominator_gm(s, n, u);
                CHECK(C(u, gm.sign) * gm.cofactor * cross_product_gm(s, n, u) == V);
                SubsetTerm fnr = clear_denominator_fnr(s, n, u);
                CHECK(C(u, fnr.sign) * fnr.cofactor * cross_product_fnr(s, n, u) == V);
            }
    }
}

TEST_CASE("subset sums are the same serially and in parallel") {
    Universe u(5, 2);
    SubsetFn term = [&](const Subset& s) {
        Polynomial p = Polynomial::one(u);
        for (int i : s) p = p * circle_plus(u, i, 1);
        return p;
    };
    for (int k = 0; k <= 5; ++k) CHECK(subset_sum_serial(5, k, u, term) == subset_sum_parallel(5, k, u, term, 4));
}

TEST_CASE("gm_type examples") {
    auto r = verify_gm_type(Partition{1}, 1, 2);
    CHECK(r.pass);
    CHECK(r.exact);
    Universe u = r.lhs.universe();
    CHECK(r.lhs == X(u, 1) - X(u, 2));
    CHECK(verify_gm_type(Partition{2, 1}, 2, 3).pass);
    CHECK(verify_gm_type(Partition{3, 3, 1}, 3, 4).pass);
    CHECK(verify_gm_type(Partition{2, 0}, 2, 2).pass);
    CHECK_THROWS_AS(verify_gm_type(Partition{1}, 3, 2), PreconditionViolated);
    CHECK_THROWS_AS(verify_gm_type(Partition{1, 1}, 1, 2), PreconditionViolated);
}

// With the stated convention the left side is 0; the cleared right side is
// not, unless beta = 0. See the zero-case notes in the README.
TEST_CASE("gm_type zero case") {
    auto r = verify_gm_type(Partition{0}, 1, 2);
    CHECK(r.params["zero_case"] == true);
    CHECK(r.lhs.is_zero());
    Universe u = r.rhs.universe();
    CHECK(r.rhs == -B(u) * (X(u, 1) - X(u, 2)));
    CHECK_FALSE(r.pass);
    CHECK(r.witness.has_value());
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k < n; ++k)
            for (const Partition& lambda : {Partition{}, Partition{1}, Partition{2, 1}}) {
                if (lambda.length() > k || lambda.part(k) - n + k >= 0) continue;
                ClearedIdentity c = cleared_gm(lambda, k, n, Method::tableau);
                Polynomial rhs = c.rhs();
                CHECK(specialize_beta_zero(rhs).is_zero());
                Universe big(n, std::max(rhs.universe().n_y, n - 2));
                CHECK(gm_extended_numerator(lambda, k, n, big) == embed(rhs, big));
            }
}

TEST_CASE("gm_type agrees across evaluation methods") {
    for (Method m : {Method::determinant, Method::divided_difference}) {
        VerifyOptions opt;
        opt.method = m;
        CHECK(verify_gm_type(Partition{2, 1}, 2, 3, opt).pass);
        CHECK(verify_gm_type(Partition{3, 1}, 2, 3, opt).rhs == verify_gm_type(Partition{3, 1}, 2, 3).rhs);
    }
}

TEST_CASE("fnr_type examples") {
    CHECK(verify_fnr_type(Partition{0}, 1, 1, 2).pass);
    CHECK(verify_fnr_type(Partition{1}, 1, 3, 3).pass);
    CHECK(verify_fnr_type(Partition{2, 1}, 2, 4, 3).pass);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            auto r = verify_fnr_type(Partition{}, k, k, n);
            CHECK(r.pass);
            Polynomial g = verify_good_k_general(n, k).rhs;
            Universe big(n, std::max(r.rhs.universe().n_y, g.universe().n_y));
            CHECK(embed(r.rhs, big) == embed(g, big));
        }
    CHECK_THROWS_AS(verify_fnr_type(Partition{2}, 1, 1, 2), PreconditionViolated);
    CHECK_THROWS_AS(verify_fnr_type(Partition{1}, 3, 4, 2), PreconditionViolated);
}

TEST_CASE("Vandermonde-type lemma") {
    auto one = verify_vandermonde_lemma(1);
    CHECK(one.pass);
    CHECK(one.lhs == Polynomial::one(one.lhs.universe()));
    auto two = verify_vandermonde_lemma(2);
    CHECK(two.pass);
    Universe u = two.lhs.universe();
    CHECK(two.lhs == X(u, 1) - X(u, 2));
    CHECK(verify_vandermonde_lemma(4).pass);
    CHECK(determinant(vandermonde_lemma_matrix(3, Universe(3, 2))) == full_vandermonde(3, Universe(3, 2)));
}

TEST_CASE("e_beta examples") {
    Universe u(0, 2);
    Polynomial b = B(u), y1 = Y(u, 1), y2 = Y(u, 2);
    CHECK(e_beta(0, 2) == (C(u, 1) + b * y1) * (C(u, 1) + b * y2));
    CHECK(e_beta(1, 2) == y1 + y2 + C(u, 2) * b * y1 * y2);
    CHECK(e_beta(3, 2).is_zero());
    CHECK(e_beta(-1, 2).is_zero());
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) CHECK(specialize_beta_zero(e_beta(k, n)) == oracle::elementary(k, n));
}

TEST_CASE("e_beta recurrence") {
    CHECK(verify_e_beta_recurrence(1, 2).pass);
    CHECK(verify_e_beta_recurrence(0, 3).pass);
    CHECK(verify_e_beta_recurrence(3, 3).pass);
    CHECK(verify_e_beta_recurrence(5, 3).pass);
}

TEST_CASE("Good and Louck type corollaries") {
    CHECK(verify_good_general(1).pass);
    auto two = verify_good_general(2);
    CHECK(two.pass);
    Universe u = two.rhs.universe();
    CHECK(two.rhs == X(u, 1) - X(u, 2));
    CHECK(verify_good_general(4).pass);
    for (int n = 1; n <= 4; ++n) CHECK(verify_louck_general(n - 1, n).rhs == verify_good_general(n).rhs);
    CHECK(verify_louck_general(2, 2).pass);
    CHECK(verify_louck_general(5, 3).pass);
    CHECK_THROWS_AS(verify_louck_general(1, 3), PreconditionViolated);
}

TEST_CASE("Good-k corollary") {
    for (int n = 1; n <= 4; ++n) {
        auto top = verify_good_k_general(n, n);
        CHECK(top.pass);
        CHECK(top.rhs == full_vandermonde(n, top.rhs.universe()));
    }
    for (int n = 2; n <= 4; ++n) {
        auto r = verify_good_k_general(n, n - 1);
        CHECK(r.pass);
        CHECK(r.rhs == embed(verify_good_general(n).rhs, r.rhs.universe()));
    }
    CHECK(verify_good_k_general(4, 2).pass);
    CHECK_THROWS_AS(verify_good_k_general(3, 4), PreconditionViolated);
}

TEST_CASE("classical specializations") {
    auto gm = verify_classical_gm(Partition{2, 1}, 2, 3);
    CHECK(gm.pass);
    CHECK(gm.lhs.universe() == Universe(3, 0));
    CHECK(gm.note.find("coherent") != std::string::npos);
    // the classical zero case holds
    CHECK(verify_classical_gm(Partition{0}, 1, 2).pass);
    CHECK(verify_classical_gm(Partition{1, 0}, 2, 4).pass);
    CHECK(verify_classical_fnr(Partition{1}, 1, 2, 2).pass);
    CHECK(verify_classical_louck(3, 2).pass);
    auto good = verify_classical_good(3, 100);
    CHECK(good.pass);
    CHECK(good.params["reciprocal_failures"] == 0);
}

TEST_CASE("Good's identity in reciprocal form") {
    std::vector<Rational> x{Rational(2), Rational(5)};
    CHECK(good_reciprocal_sum(x) == 1);
    CHECK(1 / (1 - Rational(2, 5)) == Rational(5, 3));
    CHECK(1 / (1 - Rational(5, 2)) == Rational(-2, 3));
    CHECK_THROWS_AS(good_reciprocal_sum({Rational(1), Rational(1)}), DivisionByZero);
}

TEST_CASE("schur_ssyt and complete homogeneous") {
    CHECK(schur_ssyt(Partition{2, 1}, 3) == oracle::ssyt_monomial_sum(Partition{2, 1}, 3));
    CHECK(complete_homogeneous(2, 3) == schur_ssyt(Partition{2}, 3));
    CHECK(complete_homogeneous(0, 2) == Polynomial::one(Universe(2, 0)));
    CHECK(complete_homogeneous(-1, 2).is_zero());
}

TEST_CASE("fast_check") {
    Universe u(3, 2);
    std::mt19937_64 rng(2);
    Polynomial p = random_polynomial(u, rng, 10, 3);
    CHECK_FALSE(fast_check(p, p, 20, 1));
    auto w = fast_check(p, p + X(u, 1), 5, 1);
    REQUIRE(w.has_value());
    CHECK(eval_rational(p, *w) != eval_rational(p + X(u, 1), *w));
    auto again = fast_check(p, p + X(u, 1), 5, 1);
    CHECK(to_json(*again) == to_json(*w));
    std::mt19937_64 r1(4);
    for (int i = 0; i < 50; ++i) {
        RationalPoint pt = random_point(u, r1);
        CHECK(pt.x.size() == 3);
        CHECK(pt.y.size() == 2);
        for (std::size_t a = 0; a < pt.x.size(); ++a) {
            CHECK(pt.x[a] != 0);
            for (std::size_t b = a + 1; b < pt.x.size(); ++b) CHECK(pt.x[a] != pt.x[b]);
        }
    }
}

TEST_CASE("fast-only mode is labeled as sampling") {
    VerifyOptions opt;
    opt.fast_only = true;
    opt.seed = 7;
    auto r = verify_gm_type(Partition{2, 1}, 2, 3, opt);
    CHECK(r.pass);
    CHECK_FALSE(r.exact);
    CHECK(r.to_json()["mode"] == "sampling");
    opt.fast_only = false;
    opt.fast_trials = 8;
    auto e = verify_gm_type(Partition{2, 1}, 2, 3, opt);
    CHECK(e.pass);
    CHECK(e.exact);
}

TEST_CASE("report json") {
    auto r = verify_good_general(2);
    json j = r.to_json();
    CHECK(j["identity"] == "good_general");
    CHECK(j["params"]["n"] == 2);
    CHECK(j["verdict"] == "pass");
    CHECK(j["lhs_terms"] == 2);
    CHECK(j["rhs_terms"] == 2);
    CHECK(j["witness"].is_null());
    CHECK(j.contains("elapsed_ms"));
    auto bad = verify_gm_type(Partition{0}, 1, 2).to_json();
    CHECK(bad["verdict"] == "fail");
    CHECK(bad["witness"].is_object());
}
