#include "groth/grothendieck.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace groth {

std::string to_string(Method m) {
    switch (m) {
        case Method::tableau: return "tableau";
        case Method::determinant: return "determinant";
        case Method::divided_difference: return "divided-difference";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& s) {
    if (s == "tableau") return Method::tableau;
    if (s == "determinant") return Method::determinant;
    if (s == "divided-difference" || s == "divided_difference") return Method::divided_difference;
    return std::nullopt;
}

Universe default_universe(const Partition& shape, int n) {
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    return Universe(n, shape.max_part() + n - 1);
}

// ---------------------------------------------------------------------------
// Grassmannian permutations

int inversions(std::span<const int> word) {
    int inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    return inv;
}

GrassmannianPermutation::GrassmannianPermutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> sorted(word_);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i + 1)) throw std::invalid_argument("word is not a permutation of [p]");
    for (std::size_t i = 0; i + 1 < word_.size(); ++i) {
        if (word_[i] > word_[i + 1]) {
            if (descent_) throw std::invalid_argument("permutation has more than one descent");
            descent_ = static_cast<int>(i + 1);
        }
    }
}

int GrassmannianPermutation::length() const { return inversions(word_); }

Partition GrassmannianPermutation::partition(int n_hint) const {
    const int n = descent_.value_or(n_hint);
    if (n < 0 || n > size()) throw std::invalid_argument("descent position out of range");
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        const int pos = n - i + 1;
        parts.push_back(word_[static_cast<std::size_t>(pos - 1)] - pos);
    }
    return Partition(std::move(parts));
}

GrassmannianPermutation grassmannian_from_partition(const Partition& shape, int n, int p) {
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    auto lam = shape.padded(n);
    if (p < n + shape.max_part())
        throw std::invalid_argument("embedding size p=" + std::to_string(p) + " is smaller than n + lambda_1 = " +
                                    std::to_string(n + shape.max_part()));
    std::vector<int> word;
    std::vector<bool> used(static_cast<std::size_t>(p) + 1, false);
    for (int j = 1; j <= n; ++j) {
        int v = lam[static_cast<std::size_t>(n - j)] + j;
        word.push_back(v);
        used[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= p; ++v)
        if (!used[static_cast<std::size_t>(v)]) word.push_back(v);
    return GrassmannianPermutation(std::move(word));
}

// ---------------------------------------------------------------------------
// Tableau and determinant methods

Polynomial g_tableau(const Partition& shape, int n) { return g_tableau(shape, n, default_universe(shape, n)); }

Polynomial g_tableau(const Partition& shape, int n, Universe u) { return tableau_sum(shape, n, u); }

Polynomial determinant_numerator(std::span<const int> seq, Universe u) {
    const int n = static_cast<int>(seq.size());
    if (u.n_x < n) throw IndexOutOfUniverse("g_determinant: universe has fewer than n x-variables");
    PolyMatrix m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const Polynomial ob = one_plus_beta_x(u, i);
        Polynomial obpow = Polynomial::one(u);
        for (int j = 1; j <= n; ++j) {
            const int len = seq[static_cast<std::size_t>(j - 1)] + n - j;
            if (len < 0) throw std::invalid_argument("determinant_numerator: negative bracket exponent");
            m[static_cast<std::size_t>(i - 1)].push_back(mul(bracket_pow(u, i, 0, len), obpow));
            obpow = mul(obpow, ob);
        }
    }
    return determinant(m);
}

Polynomial g_determinant_numerator(const Partition& shape, int n, Universe u) {
    auto lam = shape.padded(n);
    return determinant_numerator(lam, u);
}

Polynomial g_determinant(const Partition& shape, int n) {
    return g_determinant(shape, n, default_universe(shape, n));
}

Polynomial g_determinant(const Partition& shape, int n, Universe u) {
    Polynomial num = g_determinant_numerator(shape, n, u);
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    try {
        return exact_div(num, vandermonde(u, idx));
    } catch (const NotDivisible&) {
        throw std::logic_error("g_determinant: numerator not divisible by the Vandermonde product");
    }
}

// ---------------------------------------------------------------------------
// Divided differences

Polynomial pi_operator_reference(const Polynomial& f, int i) {
    const Universe& u = f.universe();
    if (i < 1 || i + 1 > u.n_x) throw IndexOutOfUniverse("pi_operator: index " + std::to_string(i) + " out of range");
    Polynomial num = mul(one_plus_beta_x(u, i + 1), f) - mul(one_plus_beta_x(u, i), swap_x(f, i));
    Polynomial den = Polynomial::variable(u, Variable::x(i)) - Polynomial::variable(u, Variable::x(i + 1));
    return exact_div(num, den);
}

Polynomial pi_operator(const Polynomial& f, int i) {
    const Universe& u = f.universe();
    if (i < 1 || i + 1 > u.n_x) throw IndexOutOfUniverse("pi_operator: index " + std::to_string(i) + " out of range");
    // pi_i f = d_i((1 + beta x_{i+1}) f) with d_i the ordinary divided
    // difference; each term of f contributes m and beta*x_{i+1}*m.
    const auto si = static_cast<std::size_t>(i);
    const auto sj = si + 1;
    PolynomialBuilder out(u);
    Integer neg;
    auto emit = [&](const Monomial& base, const Integer& coeff) {
        const unsigned a = base[si], b = base[sj];
        if (a == b) return;
        const unsigned lo = std::min(a, b), gap = (a > b ? a - b : b - a);
        const Integer* c = &coeff;
        if (a < b) {
            neg = -coeff;
            c = &neg;
        }
        Monomial m = base;
        for (unsigned s = 0; s < gap; ++s) {
            m.set(si, lo + gap - 1 - s);
            m.set(sj, lo + s);
            out.add(m, *c);
        }
    };
    for (const auto& t : f.terms()) {
        emit(t.monomial, t.coeff);
        Monomial shifted = t.monomial;
        shifted.set(0, shifted[0] + 1);
        shifted.set(sj, shifted[sj] + 1);
        emit(shifted, t.coeff);
    }
    return std::move(out).finish();
}

std::vector<int> pi_chain(const GrassmannianPermutation& w) {
    std::vector<int> word(w.word().begin(), w.word().end());
    std::vector<int> chain;
    while (true) {
        std::size_t i = 0;
        while (i + 1 < word.size() && word[i] > word[i + 1]) ++i;
        if (i + 1 >= word.size()) break;  // w0 reached
        chain.push_back(static_cast<int>(i + 1));
        std::swap(word[i], word[i + 1]);
    }
    return chain;
}

Polynomial top_seed(int p) {
    if (p < 1) throw std::invalid_argument("top_seed: p must be positive");
    Universe u(p, p - 1);
    Polynomial seed = Polynomial::one(u);
    for (int i = 1; i < p; ++i)
        for (int j = 1; i + j <= p; ++j) seed = mul(seed, circle_plus(u, i, j));
    return seed;
}

Polynomial g_divided_difference(const Partition& shape, int n, int p) {
    GrassmannianPermutation w = grassmannian_from_partition(shape, n, p);
    std::vector<int> chain = pi_chain(w);
    Polynomial f = top_seed(p);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) f = pi_operator(f, *it);
    try {
        return embed(f, Universe(n, p - 1));
    } catch (const UniverseMismatch&) {
        throw std::logic_error("g_divided_difference: result depends on x-variables beyond n");
    }
}

Polynomial g_divided_difference(const Partition& shape, int n) {
    return g_divided_difference(shape, n, n + shape.max_part());
}

Polynomial evaluate(Method m, const Partition& shape, int n, Universe u) {
    switch (m) {
        case Method::tableau: return g_tableau(shape, n, u);
        // More than n nonzero parts: G_lambda = 0, as the tableau sum gives.
        case Method::determinant:
            if (shape.length() > n) return Polynomial(u);
            return g_determinant(shape, n, u);
        case Method::divided_difference:
            if (shape.length() > n) return Polynomial(u);
            return embed(g_divided_difference(shape, n), u);
    }
    return Polynomial(u);
}

Polynomial restrict(Method m, const Partition& shape, std::span<const int> subset, int n, Universe u) {
    for (std::size_t r = 0; r < subset.size(); ++r) {
        if (subset[r] < 1 || subset[r] > n) throw std::invalid_argument("restrict: S is not a subset of [n]");
        if (r > 0 && subset[r] <= subset[r - 1]) throw std::invalid_argument("restrict: S must be strictly increasing");
    }
    if (u.n_x < n) throw IndexOutOfUniverse("restrict: universe has fewer than n x-variables");
    const int k = static_cast<int>(subset.size());
    if (k == 0) return shape.empty() ? Polynomial::one(u) : Polynomial(u);
    Universe local(k, std::max(u.n_y, shape.max_part() + k - 1));
    Polynomial g = evaluate(m, shape, k, local);
    return relabel_x(g, subset, u);
}

// ---------------------------------------------------------------------------
// Specializations

Polynomial specialize_beta_zero(const Polynomial& p) {
    const Variable b[] = {Variable::beta()};
    return substitute_zero(p, b);
}

Polynomial specialize_classical(const Polynomial& p) {
    std::vector<Variable> vars{Variable::beta()};
    for (int j = 1; j <= p.universe().n_y; ++j) vars.push_back(Variable::y(j));
    return embed(substitute_zero(p, vars), Universe(p.universe().n_x, 0));
}

Polynomial factorial_schur(const Partition& shape, int n) {
    return factorial_schur(shape, n, default_universe(shape, n));
}

Polynomial factorial_schur(const Partition& shape, int n, Universe u) {
    return specialize_beta_zero(g_tableau(shape, n, u));
}

Polynomial schur(const Partition& shape, int n) { return schur(shape, n, default_universe(shape, n)); }

Polynomial schur(const Partition& shape, int n, Universe u) { return specialize_classical(g_tableau(shape, n, u)); }

}  // namespace groth
