#include "doctest.h"

#include "groth/grothendieck.hpp"
#include "groth/suite.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace groth;
using namespace testing_helpers;

namespace {

Polynomial def_ex(Universe u) {
    auto op = [&](int i, int j) { return circle_plus(u, i, j); };
    return op(1, 1) * op(1, 2) * op(2, 1) + op(1, 1) * op(2, 3) * op(2, 1) +
           B(u) * op(1, 1) * op(1, 2) * op(2, 3) * op(2, 1);
}

}  // namespace

TEST_CASE("method names") {
    CHECK(parse_method("tableau") == Method::tableau);
    CHECK(parse_method("divided-difference") == Method::divided_difference);
    CHECK(parse_method("divided_difference") == Method::divided_difference);
    CHECK_FALSE(parse_method("bogus"));
    CHECK(to_string(Method::determinant) == "determinant");
}

TEST_CASE("g_tableau examples") {
    Universe u = default_universe(Partition{2, 1}, 2);
    CHECK(u == Universe(2, 3));
    CHECK(g_tableau(Partition{2, 1}, 2) == def_ex(u));
    CHECK(g_tableau(Partition{1, 1, 1}, 2).is_zero());
    CHECK(g_tableau(Partition{}, 3) == Polynomial::one(Universe(3, 2)));
}

TEST_CASE("g_determinant examples") {
    CHECK(g_determinant(Partition{2, 1}, 2) == g_tableau(Partition{2, 1}, 2));
    for (int n = 1; n <= 4; ++n) CHECK(g_determinant(Partition{}, n) == Polynomial::one(default_universe({}, n)));
    CHECK(g_determinant(Partition{2, 1}, 3) == g_tableau(Partition{2, 1}, 3));
    CHECK_THROWS_AS(g_determinant(Partition{1, 1, 1}, 2), InvalidShape);
}

TEST_CASE("determinant numerator of the (2,1) example") {
    Universe u(2, 3);
    CHECK(g_determinant_numerator(Partition{2, 1}, 2, u) == def_ex(u) * (X(u, 1) - X(u, 2)));
    const int seq[] = {2, 1};
    CHECK(determinant_numerator(seq, u) == g_determinant_numerator(Partition{2, 1}, 2, u));
    const int negative[] = {-2, 0};
    CHECK_THROWS_AS(determinant_numerator(negative, u), std::invalid_argument);
}

TEST_CASE("grassmannian permutations") {
    auto w = grassmannian_from_partition(Partition{2, 1}, 2, 4);
    CHECK(std::vector<int>(w.word().begin(), w.word().end()) == std::vector<int>{2, 4, 1, 3});
    CHECK(w.descent() == 2);
    CHECK(w.length() == 3);
    CHECK(w.partition() == Partition{2, 1});
    auto id = grassmannian_from_partition(Partition{}, 2, 3);
    CHECK(std::vector<int>(id.word().begin(), id.word().end()) == std::vector<int>{1, 2, 3});
    CHECK_FALSE(id.descent());
    CHECK_THROWS_AS(grassmannian_from_partition(Partition{2, 1}, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(GrassmannianPermutation({2, 1, 3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(GrassmannianPermutation({3, 2, 1}), std::invalid_argument);
    for (const Partition& lambda : partitions_in_box(3, 3))
        for (int n = std::max(lambda.length(), 1); n <= 3; ++n) {
            auto g = grassmannian_from_partition(lambda, n, n + lambda.max_part());
            CHECK(g.partition(n) == lambda);
            CHECK(g.length() == lambda.size());
        }
}

TEST_CASE("pi chains end at the longest element") {
    auto w = grassmannian_from_partition(Partition{2, 1}, 2, 4);
    auto chain = pi_chain(w);
    CHECK(static_cast<int>(chain.size()) == 6 - w.length());
    std::vector<int> word(w.word().begin(), w.word().end());
    for (int i : chain) std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
    CHECK(word == std::vector<int>{4, 3, 2, 1});
}

TEST_CASE("pi operator examples") {
    Universe u(2, 1);
    CHECK(pi_operator(X(u, 1), 1) == Polynomial::one(u));
    CHECK(pi_operator(Polynomial::one(u), 1) == -B(u));
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10; ++i) {
        Polynomial f = random_polynomial(Universe(3, 2), rng, 8, 3);
        Polynomial once = pi_operator(f, 1);
        CHECK(pi_operator(once, 1) == -B(f.universe()) * once);
        CHECK(once == pi_operator_reference(f, 1));
        CHECK(pi_operator(f, 2) == pi_operator_reference(f, 2));
    }
    CHECK_THROWS_AS(pi_operator(X(u, 1), 2), IndexOutOfUniverse);
    CHECK_THROWS_AS(pi_operator(X(u, 1), 0), IndexOutOfUniverse);
}

TEST_CASE("top seed") {
    Universe u(3, 2);
    CHECK(top_seed(3) == circle_plus(u, 1, 1) * circle_plus(u, 1, 2) * circle_plus(u, 2, 1));
    CHECK(top_seed(1) == Polynomial::one(Universe(1, 0)));
}

TEST_CASE("g_divided_difference examples") {
    CHECK(g_divided_difference(Partition{2, 1}, 2, 4) == g_tableau(Partition{2, 1}, 2));
    for (int n = 1; n <= 4; ++n)
        CHECK(g_divided_difference(Partition{}, n, n) == Polynomial::one(Universe(n, n - 1)));
    CHECK(g_divided_difference(Partition{1}, 1, 2) == circle_plus(Universe(1, 1), 1, 1));
}

TEST_CASE("divided differences do not depend on the embedding size") {
    for (const Partition& lambda : partitions_in_box(2, 2))
        for (int n = std::max(lambda.length(), 1); n <= 2; ++n) {
            const int p = n + lambda.max_part();
            Polynomial a = g_divided_difference(lambda, n, p);
            Polynomial b = g_divided_difference(lambda, n, p + 1);
            Universe big = b.universe();
            CHECK_MESSAGE(embed(a, big) == b, lambda.to_string() << " n=" << n);
        }
}

TEST_CASE("cross-method agreement on small shapes") {
    for (const Partition& lambda : partitions_in_box(2, 2))
        for (int n = 1; n <= 3; ++n) {
            Universe u = default_universe(lambda, n);
            Polynomial t = evaluate(Method::tableau, lambda, n, u);
            CHECK(evaluate(Method::determinant, lambda, n, u) == t);
            CHECK(evaluate(Method::divided_difference, lambda, n, u) == t);
        }
}

TEST_CASE("zero convention") {
    Universe u = default_universe(Partition{1, 1, 1}, 2);
    for (Method m : {Method::tableau, Method::determinant, Method::divided_difference})
        CHECK(evaluate(m, Partition{1, 1, 1}, 2, u).is_zero());
    CHECK(g_tableau(Partition{2, 2, 2}, 2).is_zero());
}

TEST_CASE("restrict examples") {
    Universe u(2, 1);
    const int s2[] = {2};
    CHECK(restrict(Method::tableau, Partition{1}, s2, 2, u) == circle_plus(u, 2, 1));
    Universe v = default_universe(Partition{2, 1}, 3);
    const int all[] = {1, 2, 3};
    CHECK(restrict(Method::tableau, Partition{2, 1}, all, 3, v) == g_tableau(Partition{2, 1}, 3, v));
    const int s13[] = {1, 3};
    const int map13[] = {1, 3};
    CHECK(restrict(Method::determinant, Partition{2, 1}, s13, 3, v) ==
          relabel_x(g_tableau(Partition{2, 1}, 2, Universe(2, v.n_y)), map13, v));
    const int bad[] = {3};
    CHECK_THROWS_AS(restrict(Method::tableau, Partition{1}, bad, 2, u), std::invalid_argument);
    const int unsorted[] = {2, 1};
    CHECK_THROWS_AS(restrict(Method::tableau, Partition{1}, unsorted, 2, u), std::invalid_argument);
    CHECK(restrict(Method::tableau, Partition{}, std::span<const int>{}, 2, u) == Polynomial::one(u));
}

TEST_CASE("schur and factorial schur") {
    Universe u2(2, 0);
    CHECK(schur(Partition{2, 1}, 2) == X(u2, 1) * X(u2, 1) * X(u2, 2) + X(u2, 1) * X(u2, 2) * X(u2, 2));
    CHECK(schur(Partition{2, 1}, 2) == oracle::ssyt_monomial_sum(Partition{2, 1}, 2));
    for (int n = 1; n <= 4; ++n) {
        Universe u(n, 0);
        Polynomial sum(u);
        for (int i = 1; i <= n; ++i) sum = sum + X(u, i);
        CHECK(schur(Partition{1}, n) == sum);
    }
    Universe f = default_universe(Partition{1}, 2);
    // the box filled with 2 has content 0, so it contributes x2 (+) y2
    CHECK(factorial_schur(Partition{1}, 2) == X(f, 1) + X(f, 2) + Y(f, 1) + Y(f, 2));
    // the worked (2,1) expansion at beta = 0, y = 0
    const Variable vars[] = {Variable::beta(), Variable::y(1), Variable::y(2), Variable::y(3)};
    Universe e(2, 3);
    CHECK(embed(substitute_zero(def_ex(e), vars), u2) == oracle::ssyt_monomial_sum(Partition{2, 1}, 2));
}

TEST_CASE("schur matches the SSYT oracle") {
    for (const Partition& lambda : partitions_in_box(3, 3))
        for (int n = 1; n <= 3; ++n)
            CHECK_MESSAGE(schur(lambda, n) == oracle::ssyt_monomial_sum(lambda, n), lambda.to_string() << " n=" << n);
}

TEST_CASE("lowest beta-degree component at y=0 is the Schur polynomial") {
    for (const Partition& lambda : partitions_in_box(2, 3))
        for (int n = 1; n <= 3; ++n) {
            Polynomial g = g_tableau(lambda, n);
            std::vector<Variable> ys;
            for (int j = 1; j <= g.universe().n_y; ++j) ys.push_back(Variable::y(j));
            Polynomial g0 = substitute_zero(g, ys);
            // keep the terms of x-degree |lambda| (the beta^0 layer after y=0)
            std::vector<Term> low;
            for (const auto& t : g0.terms())
                if (t.monomial.degree() == static_cast<unsigned>(lambda.size()) && t.monomial[0] == 0) low.push_back(t);
            Polynomial lowest = embed(Polynomial::from_terms(g.universe(), low), Universe(n, 0));
            CHECK(lowest == schur(lambda, n));
            if (!g0.is_zero()) CHECK(g0.min_degree_in(Variable::beta()) == 0);
        }
}

TEST_CASE("determinant numerator is antisymmetric and the quotient symmetric") {
    for (const Partition& lambda : {Partition{2, 1}, Partition{2}, Partition{1, 1}, Partition{3, 1}})
        for (int n = std::max(lambda.length(), 2); n <= 3; ++n) {
            Universe u = default_universe(lambda, n);
            Polynomial num = g_determinant_numerator(lambda, n, u);
            Polynomial g = g_determinant(lambda, n, u);
            for (int i = 1; i < n; ++i) {
                CHECK(swap_x(num, i) == -num);
                CHECK(swap_x(g, i) == g);
            }
        }
}

TEST_CASE("parallel and serial tableau sums agree on a larger shape") {
    Universe u(4, 6);
    CHECK(tableau_sum_parallel(Partition{3, 2, 1}, 4, u, 4) == tableau_sum_serial(Partition{3, 2, 1}, 4, u));
}
