#pragma once

// Exact sparse multivariate polynomials over Z in the variables
// beta, x_1..x_{n_x}, y_1..y_{n_y}.
//
// Monomial order: graded lexicographic, with beta > x_1 > ... > x_{n_x}
// > y_1 > ... > y_{n_y}. Terms are stored in *descending* order, so the
// first term is the leading term. All output (text, LaTeX, JSON) follows
// this order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "groth/errors.hpp"

namespace groth {

using Integer = mpz_class;
using Rational = mpq_class;

enum class VarKind : std::uint8_t { beta, x, y };

struct Variable {
    VarKind kind = VarKind::beta;
    int index = 0;  // 1-based for x and y; 0 for beta

    static constexpr Variable beta() { return {VarKind::beta, 0}; }
    static constexpr Variable x(int i) { return {VarKind::x, i}; }
    static constexpr Variable y(int j) { return {VarKind::y, j}; }

    friend constexpr bool operator==(const Variable&, const Variable&) = default;
    friend constexpr auto operator<=>(const Variable&, const Variable&) = default;

    std::string name() const;  // "b", "x3", "y5"
};

struct Universe {
    int n_x = 0;
    int n_y = 0;

    Universe() = default;
    Universe(int nx, int ny);

    std::size_t size() const { return 1u + static_cast<std::size_t>(n_x + n_y); }
    bool contains(Variable v) const;
    // Dense slot: beta = 0, x_i = i, y_j = n_x + j.
    std::size_t slot(Variable v) const;
    Variable variable_at(std::size_t slot) const;

    friend bool operator==(const Universe&, const Universe&) = default;
};

// Dense exponent vector over a universe. Exponents are stored in a byte
// each; exceeding 255 in any variable throws std::overflow_error.
class Monomial {
  public:
    using Exponents = boost::container::small_vector<std::uint8_t, 24>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    std::size_t nvars() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    unsigned operator[](std::size_t slot) const { return exps_[slot]; }
    void set(std::size_t slot, unsigned e);
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial operator/(const Monomial& other) const;  // requires divides

    std::size_t hash() const;
    const Exponents& exponents() const { return exps_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }
    // Graded lex; larger means earlier in canonical output.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  private:
    Exponents exps_;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial monomial;
    Integer coeff;
};

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Universe u) : universe_(u) {}

    static Polynomial constant(Universe u, const Integer& c);
    static Polynomial variable(Universe u, Variable v);
    static Polynomial one(Universe u) { return constant(u, 1); }
    // Canonicalizes an arbitrary bag of terms (merges duplicates, drops zeros).
    static Polynomial from_terms(Universe u, std::vector<Term> terms);
    // Adopts terms already strictly descending with nonzero coefficients.
    static Polynomial from_canonical(Universe u, std::vector<Term> terms);

    const Universe& universe() const { return universe_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const Term& leading_term() const { return terms_.front(); }

    unsigned total_degree() const;
    unsigned degree_in(Variable v) const;
    unsigned min_degree_in(Variable v) const;
    bool uses(Variable v) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);
    Polynomial& operator*=(const Integer& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const Integer& c) { return p *= c; }

    // Structural equality: same universe and identical canonical term lists.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;  // e.g. "b*x1^2*y1 - 3*x2 + 1"

    // True if terms are strictly descending with no zero coefficients.
    bool is_canonical() const;

  private:
    friend class PolynomialBuilder;
    Universe universe_;
    std::vector<Term> terms_;
};

// Hash-accumulating builder used by the kernels. finish() canonicalizes.
class PolynomialBuilder {
  public:
    explicit PolynomialBuilder(Universe u);
    ~PolynomialBuilder();
    PolynomialBuilder(PolynomialBuilder&&) noexcept;
    PolynomialBuilder& operator=(PolynomialBuilder&&) noexcept;

    void add(const Monomial& m, const Integer& c);
    void add(const Polynomial& p);
    void add_product(const Polynomial& p, const Polynomial& q);
    Polynomial finish() &&;

  private:
    struct Impl;
    Universe universe_;
    Impl* impl_;
};

void require_same_universe(const Polynomial& p, const Polynomial& q, const char* op);

Polynomial add(const Polynomial& p, const Polynomial& q);
// Dispatches to the OpenMP kernel when more than one thread is configured
// and the operands are large enough; otherwise identical to mul_serial.
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial mul_serial(const Polynomial& p, const Polynomial& q);
Polynomial mul_parallel(const Polynomial& p, const Polynomial& q, int threads);
Polynomial pow(const Polynomial& p, unsigned e);

// x_i + y_j + beta x_i y_j
Polynomial circle_plus(Universe u, int i, int j);
// (x_i (+) y_{shift+1}) ... (x_i (+) y_{shift+len}); len = 0 gives 1.
Polynomial bracket_pow(Universe u, int i, int shift, int len);
// 1 + beta x_i
Polynomial one_plus_beta_x(Universe u, int i);
// prod_{a<b} (x_{idx[a]} - x_{idx[b]}), in the given order.
Polynomial vandermonde(Universe u, std::span<const int> indices);

struct Binding {
    Variable var;
    Polynomial image;  // over the target universe
};

// Simultaneous substitution. Unbound variables carry over to `target`
// (which must contain them when they occur in p).
Polynomial substitute(const Polynomial& p, std::span<const Binding> bindings, Universe target);
Polynomial substitute(const Polynomial& p, std::span<const Binding> bindings);
Polynomial substitute_zero(const Polynomial& p, std::span<const Variable> vars);
// Maps x_r -> x_{targets[r-1]}; y and beta unchanged. Pure exponent move.
Polynomial relabel_x(const Polynomial& p, std::span<const int> targets, Universe target);
// Reinterprets p in another universe; throws if p uses a variable absent there.
Polynomial embed(const Polynomial& p, Universe target);
// Swaps x_i and x_{i+1}.
Polynomial swap_x(const Polynomial& p, int i);

// Returns q with p = q*d. Multivariate long division in the canonical order.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Laplace expansion with memoization over column subsets.
Polynomial determinant(const PolyMatrix& m);
Polynomial determinant_serial(const PolyMatrix& m);
Polynomial determinant_parallel(const PolyMatrix& m, int threads);

struct RationalPoint {
    Rational beta;
    std::vector<Rational> x;  // x[i-1]
    std::vector<Rational> y;  // y[j-1]

    Universe universe() const {
        return {static_cast<int>(x.size()), static_cast<int>(y.size())};
    }
    const Rational& value(Variable v) const;
};

Rational eval_rational(const Polynomial& p, const RationalPoint& pt);

std::string to_latex(const Polynomial& p);

}  // namespace groth
