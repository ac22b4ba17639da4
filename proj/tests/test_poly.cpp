#include "doctest.h"

#include "groth/json_io.hpp"
#include "groth/poly.hpp"
#include "groth/suite.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace groth;
using namespace testing_helpers;

TEST_CASE("universe slots and variable names") {
    Universe u(2, 3);
    CHECK(u.size() == 6);
    CHECK(u.slot(Variable::beta()) == 0);
    CHECK(u.slot(Variable::x(2)) == 2);
    CHECK(u.slot(Variable::y(1)) == 3);
    CHECK(u.variable_at(5) == Variable::y(3));
    CHECK(Variable::y(5).name() == "y5");
    CHECK(Variable::beta().name() == "b");
    CHECK_FALSE(u.contains(Variable::x(3)));
    CHECK_THROWS_AS(u.slot(Variable::y(4)), IndexOutOfUniverse);
    CHECK_THROWS_AS(Universe(-1, 0), std::invalid_argument);
}

TEST_CASE("monomial order is graded lex with beta heaviest") {
    Universe u(2, 2);
    auto mono = [&](std::initializer_list<std::pair<Variable, unsigned>> e) {
        Monomial m(u.size());
        for (auto [v, k] : e) m.set(u.slot(v), k);
        return m;
    };
    // higher degree first
    CHECK(mono({{Variable::y(2), 2}}) > mono({{Variable::beta(), 1}}));
    // same degree: beta beats x1 beats y1
    CHECK(mono({{Variable::beta(), 1}}) > mono({{Variable::x(1), 1}}));
    CHECK(mono({{Variable::x(1), 1}}) > mono({{Variable::x(2), 1}}));
    CHECK(mono({{Variable::x(2), 1}}) > mono({{Variable::y(1), 1}}));
    CHECK(mono({{Variable::x(1), 1}, {Variable::y(2), 1}}) > mono({{Variable::x(2), 2}}));
    Polynomial p = X(u, 2) + B(u) + Y(u, 1) * Y(u, 1) + C(u, 3);
    CHECK(p.to_string() == "y1^2 + b + x2 + 3");
    CHECK(p.is_canonical());
    CHECK(p.leading_term().monomial == mono({{Variable::y(1), 2}}));
}

TEST_CASE("exponent overflow is reported") {
    Monomial m(3);
    CHECK_THROWS_AS(m.set(1, 256), std::overflow_error);
}

TEST_CASE("add examples") {
    Universe u(1, 1);
    CHECK((X(u, 1) + -X(u, 1)).is_zero());
    CHECK((X(u, 1) + Y(u, 1)) + B(u) * X(u, 1) * Y(u, 1) == circle_plus(u, 1, 1));
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        Polynomial p = random_polynomial(u, rng, 6, 3);
        CHECK(p + Polynomial(u) == p);
    }
    CHECK_THROWS_AS(X(u, 1) + X(Universe(1, 2), 1), UniverseMismatch);
}

TEST_CASE("mul examples") {
    Universe u(2, 1);
    CHECK((X(u, 1) - X(u, 2)) * (X(u, 1) + X(u, 2)) == X(u, 1) * X(u, 1) - X(u, 2) * X(u, 2));
    Polynomial p = circle_plus(u, 1, 1);
    CHECK(p * Polynomial::one(u) == p);
    Polynomial lhs = circle_plus(u, 1, 1) * one_plus_beta_x(u, 2);
    Polynomial b = B(u), x1 = X(u, 1), x2 = X(u, 2), y1 = Y(u, 1);
    Polynomial hand = oracle::naive_mul(x1, C(u, 1)) + b * x1 * x2 + y1 + b * x2 * y1 + b * x1 * y1 + b * b * x1 * x2 * y1;
    CHECK(lhs == hand);
    CHECK_THROWS_AS(mul(X(u, 1), X(Universe(2, 2), 1)), UniverseMismatch);
}

TEST_CASE("mul agrees with the naive oracle, serial and parallel") {
    Universe u(3, 3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = random_polynomial(u, rng, 30, 4), q = random_polynomial(u, rng, 30, 4);
        Polynomial expect = oracle::naive_mul(p, q);
        CHECK(mul_serial(p, q) == expect);
        CHECK(mul_parallel(p, q, 3) == expect);
    }
}

TEST_CASE("pow") {
    Universe u(1, 1);
    CHECK(pow(X(u, 1), 0) == Polynomial::one(u));
    CHECK(pow(one_plus_beta_x(u, 1), 3) ==
          one_plus_beta_x(u, 1) * one_plus_beta_x(u, 1) * one_plus_beta_x(u, 1));
}

TEST_CASE("circle_plus examples") {
    Universe u(2, 2);
    Polynomial c = circle_plus(u, 1, 1);
    CHECK(c == X(u, 1) + Y(u, 1) + B(u) * X(u, 1) * Y(u, 1));
    const Variable beta[] = {Variable::beta()};
    CHECK(substitute_zero(c, beta) == X(u, 1) + Y(u, 1));
    const Variable y1[] = {Variable::y(1)};
    CHECK(substitute_zero(c, y1) == X(u, 1));
    CHECK_THROWS_AS(circle_plus(u, 3, 1), IndexOutOfUniverse);
    CHECK_THROWS_AS(circle_plus(u, 1, 3), IndexOutOfUniverse);
}

TEST_CASE("bracket_pow examples") {
    Universe u(2, 3);
    CHECK(bracket_pow(u, 1, 0, 0) == Polynomial::one(u));
    CHECK(bracket_pow(u, 1, 0, 2) == circle_plus(u, 1, 1) * circle_plus(u, 1, 2));
    CHECK(bracket_pow(u, 2, 1, 1) == X(u, 2) + Y(u, 2) + B(u) * X(u, 2) * Y(u, 2));
    CHECK_THROWS_AS(bracket_pow(u, 1, 2, 2), IndexOutOfUniverse);
}

TEST_CASE("substitute examples") {
    Universe u(2, 3);
    Polynomial c = circle_plus(u, 1, 1);
    const Binding b0[] = {{Variable::beta(), Polynomial(u)}};
    CHECK(substitute(c, b0) == X(u, 1) + Y(u, 1));
    const Binding b1[] = {{Variable::beta(), Polynomial(u)}, {Variable::y(1), Polynomial(u)}};
    CHECK(substitute(c, b1) == X(u, 1));
    // swap x1 <-> x2 simultaneously
    const Binding sw[] = {{Variable::x(1), X(u, 2)}, {Variable::x(2), X(u, 1)}};
    CHECK(substitute(X(u, 1) * X(u, 1) + X(u, 2), sw) == X(u, 2) * X(u, 2) + X(u, 1));
    CHECK(swap_x(X(u, 1) * X(u, 1) + X(u, 2), 1) == X(u, 2) * X(u, 2) + X(u, 1));
    // non-constant image
    const Binding sq[] = {{Variable::y(1), X(u, 1) + C(u, 1)}};
    CHECK(substitute(Y(u, 1) * Y(u, 1), sq) == X(u, 1) * X(u, 1) + C(u, 2) * X(u, 1) + C(u, 1));
}

TEST_CASE("relabel and embed") {
    Universe small(2, 1), big(3, 2);
    Polynomial p = circle_plus(small, 1, 1) * X(small, 2);
    const int targets[] = {1, 3};
    CHECK(relabel_x(p, targets, big) == circle_plus(big, 1, 1) * X(big, 3));
    CHECK(embed(p, big) == circle_plus(big, 1, 1) * X(big, 2));
    CHECK_THROWS_AS(embed(p, Universe(1, 1)), UniverseMismatch);
    CHECK(embed(X(big, 1), Universe(1, 0)) == X(Universe(1, 0), 1));
}

TEST_CASE("exact_div examples") {
    Universe u(2, 3);
    Polynomial x1 = X(u, 1), x2 = X(u, 2);
    CHECK(exact_div(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_polynomial(u, rng, 8, 3), d = random_polynomial(u, rng, 4, 2);
        if (d.is_zero()) d = x1 + C(u, 1);
        CHECK(exact_div(p * d, d) == p);
    }
    CHECK_THROWS_AS(exact_div(x1 + C(u, 1), x2), NotDivisible);
    CHECK_THROWS_AS(exact_div(x1, Polynomial(u)), DivisionByZero);
}

TEST_CASE("exact_div on the (2,1) determinant numerator") {
    Universe u(2, 3);
    auto op = [&](int i, int j) { return circle_plus(u, i, j); };
    PolyMatrix m{{bracket_pow(u, 1, 0, 3), bracket_pow(u, 1, 0, 1) * one_plus_beta_x(u, 1)},
                 {bracket_pow(u, 2, 0, 3), bracket_pow(u, 2, 0, 1) * one_plus_beta_x(u, 2)}};
    Polynomial expansion = op(1, 1) * op(1, 2) * op(2, 1) + op(1, 1) * op(2, 3) * op(2, 1) +
                           B(u) * op(1, 1) * op(1, 2) * op(2, 3) * op(2, 1);
    CHECK(exact_div(determinant(m), X(u, 1) - X(u, 2)) == expansion);
}

TEST_CASE("determinant examples") {
    Universe u(3, 1);
    Polynomial p = circle_plus(u, 1, 1);
    CHECK(determinant({{p}}) == p);
    PolyMatrix m{{circle_plus(u, 1, 1), one_plus_beta_x(u, 1)}, {circle_plus(u, 2, 1), one_plus_beta_x(u, 2)}};
    CHECK(determinant(m) == X(u, 1) - X(u, 2));
    PolyMatrix rep{{X(u, 1), Y(u, 1)}, {X(u, 1), Y(u, 1)}};
    CHECK(determinant(rep).is_zero());
    CHECK_THROWS_AS(determinant({{X(u, 1), X(u, 2)}}), std::invalid_argument);
}

TEST_CASE("determinant agrees with Leibniz expansion, serial and parallel") {
    Universe u(2, 1);
    std::mt19937_64 rng(3);
    for (int size = 1; size <= 5; ++size) {
        for (int rep = 0; rep < 4; ++rep) {
            PolyMatrix m(static_cast<std::size_t>(size));
            for (auto& row : m)
                for (int j = 0; j < size; ++j) row.push_back(random_polynomial(u, rng, 3, 2));
            Polynomial expect = oracle::leibniz_det(m);
            CHECK(determinant_serial(m) == expect);
            CHECK(determinant_parallel(m, 3) == expect);
        }
    }
}

TEST_CASE("determinant is multilinear and alternating") {
    Universe u(2, 1);
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        PolyMatrix m(3);
        for (auto& row : m)
            for (int j = 0; j < 3; ++j) row.push_back(random_polynomial(u, rng, 3, 2));
        PolyMatrix swapped = m;
        std::swap(swapped[0], swapped[1]);
        CHECK(determinant(swapped) == -determinant(m));
        // linear in row 0
        std::vector<Polynomial> extra;
        for (int j = 0; j < 3; ++j) extra.push_back(random_polynomial(u, rng, 3, 2));
        PolyMatrix a = m, b = m;
        for (int j = 0; j < 3; ++j) {
            a[0][static_cast<std::size_t>(j)] = m[0][static_cast<std::size_t>(j)] + extra[static_cast<std::size_t>(j)];
            b[0][static_cast<std::size_t>(j)] = extra[static_cast<std::size_t>(j)];
        }
        CHECK(determinant(a) == determinant(m) + determinant(b));
    }
}

TEST_CASE("vandermonde examples") {
    Universe u(3, 0);
    const int one[] = {1}, two[] = {1, 2}, three[] = {1, 2, 3};
    CHECK(vandermonde(u, one) == Polynomial::one(u));
    CHECK(vandermonde(u, std::span<const int>{}) == Polynomial::one(u));
    CHECK(vandermonde(u, two) == X(u, 1) - X(u, 2));
    CHECK(vandermonde(u, three) == (X(u, 1) - X(u, 2)) * (X(u, 1) - X(u, 3)) * (X(u, 2) - X(u, 3)));
    const int dup[] = {1, 1};
    CHECK_THROWS_AS(vandermonde(u, dup), std::invalid_argument);
}

TEST_CASE("eval_rational examples") {
    Universe u(2, 1);
    RationalPoint pt{Rational(0), {Rational(3), Rational(3)}, {Rational(0)}};
    CHECK(eval_rational(X(u, 1) - X(u, 2), pt) == 0);
    RationalPoint one{Rational(1), {Rational(1), Rational(2)}, {Rational(1)}};
    CHECK(eval_rational(circle_plus(u, 1, 1), one) == 3);
    RationalPoint bad{Rational(1), {Rational(1)}, {}};
    CHECK_THROWS_AS(eval_rational(X(u, 1), bad), UniverseMismatch);
}

TEST_CASE("text, latex and json forms") {
    Universe u(2, 2);
    Polynomial p = B(u) * B(u) * X(u, 1) * Y(u, 2) - C(u, 3) * X(u, 2) + C(u, 1);
    CHECK(p.to_string() == "b^2*x1*y2 - 3*x2 + 1");
    CHECK(to_latex(p) == "\\beta^{2} x_{1} y_{2} - 3 x_{2} + 1");
    CHECK(Polynomial(u).to_string() == "0");
    json j = to_json(p);
    CHECK(j["universe"]["n_x"] == 2);
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][0]["exps"]["b"] == 2);
    CHECK(j["terms"][1]["coeff"] == "-3");
    CHECK(polynomial_from_json(j) == p);
    Integer big("123456789012345678901234567890");
    Polynomial q = Polynomial::constant(u, big) * X(u, 1);
    CHECK(polynomial_from_json(to_json(q)) == q);
}

TEST_CASE("canonical form is idempotent") {
    Universe u(2, 2);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = random_polynomial(u, rng, 10, 4);
        CHECK(p.is_canonical());
        std::vector<Term> terms(p.terms().begin(), p.terms().end());
        std::reverse(terms.begin(), terms.end());
        CHECK(Polynomial::from_terms(u, terms) == p);
    }
}
