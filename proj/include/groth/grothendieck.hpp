#pragma once

// Three constructions of the factorial Grothendieck polynomial G_lambda(x|y):
//   tableau          sum over set-valued tableaux of shape lambda in [n]
//   determinant      det([x_i|y]^{lambda_j+n-j} (1+beta x_i)^{j-1}) / prod_{i<j}(x_i-x_j)
//   divided-difference  pi-operators applied to the top seed of S_p along a
//                    chain down to the Grassmannian permutation of lambda
//
// Unless a universe is passed explicitly, results live in
// Universe(n, lambda_1 + n - 1), which is shared by all three methods.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "groth/poly.hpp"
#include "groth/tableaux.hpp"

namespace groth {

enum class Method { tableau, determinant, divided_difference };

std::string to_string(Method m);
std::optional<Method> parse_method(const std::string& s);

Universe default_universe(const Partition& shape, int n);

class GrassmannianPermutation {
  public:
    // Validates bijectivity on [p] and the single-descent condition.
    explicit GrassmannianPermutation(std::vector<int> word);

    std::span<const int> word() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }
    std::optional<int> descent() const { return descent_; }
    int length() const;  // number of inversions
    // lambda_i = w_{n-i+1} - (n-i+1) where n is the descent (or n_hint for
    // the identity, which has no descent).
    Partition partition(int n_hint = 0) const;

  private:
    std::vector<int> word_;
    std::optional<int> descent_;
};

int inversions(std::span<const int> word);

GrassmannianPermutation grassmannian_from_partition(const Partition& shape, int n, int p);

Polynomial g_tableau(const Partition& shape, int n);
Polynomial g_tableau(const Partition& shape, int n, Universe u);

// Shape is zero-padded to n parts; a shape with more than n nonzero parts
// throws InvalidShape.
Polynomial g_determinant(const Partition& shape, int n);
Polynomial g_determinant(const Partition& shape, int n, Universe u);
// The numerator determinant alone.
Polynomial g_determinant_numerator(const Partition& shape, int n, Universe u);
// Same numerator for an arbitrary integer sequence a_1..a_n (not necessarily
// a partition); requires a_j + n - j >= 0.
Polynomial determinant_numerator(std::span<const int> seq, Universe u);

// pi_i f = ((1 + beta x_{i+1}) f - (1 + beta x_i) s_i f) / (x_i - x_{i+1})
// pi_operator uses a term-wise closed form of the divided difference;
// pi_operator_reference forms the numerator and calls exact_div.
Polynomial pi_operator(const Polynomial& f, int i);
Polynomial pi_operator_reference(const Polynomial& f, int i);

// Indices i_1..i_L with w = w0 s_{i_L} ... s_{i_1}; the polynomial is
// pi_{i_1} ... pi_{i_L} applied to the seed. Each step from w picks the
// smallest i with l(w s_i) > l(w).
std::vector<int> pi_chain(const GrassmannianPermutation& w);

// prod_{i+j<=p} (x_i (+) y_j) over Universe(p, p-1)
Polynomial top_seed(int p);

// Result lives in Universe(n, p - 1).
Polynomial g_divided_difference(const Partition& shape, int n, int p);
Polynomial g_divided_difference(const Partition& shape, int n);  // p = n + lambda_1

Polynomial evaluate(Method m, const Partition& shape, int n, Universe u);

// G_lambda(x_S|y): computed in k = |S| variables, then x_r -> x_{S[r]}.
// S must be strictly increasing inside [n]; the result is over `u`
// (u.n_x >= n).
Polynomial restrict(Method m, const Partition& shape, std::span<const int> subset, int n, Universe u);

// beta -> 0 (and y -> 0 for schur) applied to g_tableau.
Polynomial factorial_schur(const Partition& shape, int n);
Polynomial factorial_schur(const Partition& shape, int n, Universe u);
Polynomial schur(const Partition& shape, int n);
Polynomial schur(const Partition& shape, int n, Universe u);

// beta -> 0 and every y_j -> 0.
Polynomial specialize_classical(const Polynomial& p);
Polynomial specialize_beta_zero(const Polynomial& p);

}  // namespace groth
