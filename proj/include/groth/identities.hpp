#pragma once

// Exact verification of the subset-sum identities for factorial Grothendieck
// polynomials and their classical specializations.
//
// Every identity of the form  L = sum_S T_S / D_S  is multiplied through by
// the full Vandermonde product V = prod_{i<j} (x_i - x_j). For each k-subset
// S of [n],
//     V = sign(S) * V(S) * V(S^c) * prod_{i in S, j in S^c} (x_i - x_j)
// with sign(S) = (-1)^{-C(k+1,2) + sum S}; with the reversed cross product
// prod (x_j - x_i) the sign becomes (-1)^{nk - C(k,2) + sum S}. The cleared
// sides L*V and sum_S sign(S) V(S) V(S^c) T_S are then compared as canonical
// polynomials.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "groth/grothendieck.hpp"
#include "groth/json_io.hpp"
#include "groth/poly.hpp"
#include "groth/tableaux.hpp"

namespace groth {

enum class IdentityKind {
    gm_type,
    fnr_type,
    vandermonde_lemma,
    e_beta_recurrence,
    good_general,
    louck_general,
    good_k_general,
    classical_gm,
    classical_good,
    classical_louck,
    classical_fnr,
};

std::string to_string(IdentityKind k);
std::optional<IdentityKind> parse_identity(const std::string& s);
const std::vector<IdentityKind>& all_identities();

struct IdentityReport {
    IdentityKind identity{};
    json params = json::object();
    Polynomial lhs;
    Polynomial rhs;
    bool pass = false;
    // false when only the sampling pre-check ran (no proof).
    bool exact = true;
    std::optional<RationalPoint> witness;
    std::int64_t elapsed_ms = 0;
    std::string note;

    json to_json() const;
};

struct VerifyOptions {
    Method method = Method::tableau;
    unsigned fast_trials = 0;  // random-point pre-filter before canonical comparison
    std::uint64_t seed = 0;
    bool fast_only = false;    // sampling only; report.exact = false
};

// ---------------------------------------------------------------------------
// Denominator clearing

using Subset = std::vector<int>;

// k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);
Subset complement(const Subset& s, int n);

struct SubsetTerm {
    Subset subset;
    Subset complement;
    int sign = 1;
    Polynomial cofactor;  // V(S) * V(S^c)
};

// sign * cofactor * prod_{i in S, j in S^c}(x_i - x_j) = V([n])
SubsetTerm clear_denominator_gm(const Subset& s, int n, Universe u);
// sign * cofactor * prod_{i in S, j in S^c}(x_j - x_i) = V([n])
SubsetTerm clear_denominator_fnr(const Subset& s, int n, Universe u);

Polynomial cross_product_gm(const Subset& s, int n, Universe u);
Polynomial cross_product_fnr(const Subset& s, int n, Universe u);
Polynomial full_vandermonde(int n, Universe u);

// sum_{S in C([n],k)} term(S), evaluated concurrently; summed in subset order.
using SubsetFn = std::function<Polynomial(const Subset&)>;
Polynomial subset_sum_serial(int n, int k, Universe u, const SubsetFn& term);
Polynomial subset_sum_parallel(int n, int k, Universe u, const SubsetFn& term, int threads);
Polynomial subset_sum(int n, int k, Universe u, const SubsetFn& term);

// Cleared sides with the individual subset terms kept, for term-wise checks.
struct ClearedIdentity {
    Polynomial lhs;
    std::vector<Subset> subsets;
    std::vector<Polynomial> rhs_terms;

    Polynomial rhs() const;
};

// Main cleared constructions. lambda has k parts (zeros allowed).
ClearedIdentity cleared_gm(const Partition& lambda, int k, int n, Method method);
ClearedIdentity cleared_fnr(const Partition& lambda, int k, int m, int n, Method method);

// Shifted shape (lambda_1-n+k, ..., lambda_k-n+k); nullopt in the zero case
// lambda_k - n + k < 0.
std::optional<Partition> gm_shifted_shape(const Partition& lambda, int k, int n);
// ((m-k)^{n-k}, lambda_1, ..., lambda_k)
Partition fnr_shape(const Partition& lambda, int k, int m, int n);

// det([x_i|y]^{a_j+n-j}(1+beta x_i)^{j-1}) for the shifted sequence
// a = (lambda_1-n+k, ..., lambda_k-n+k, 0, ..., 0), which need not be a
// partition. Used to diagnose the zero case.
Polynomial gm_extended_numerator(const Partition& lambda, int k, int n, Universe u);

Universe gm_universe(const Partition& lambda, int k, int n);
Universe fnr_universe(const Partition& lambda, int k, int m, int n);

// ---------------------------------------------------------------------------
// Verifiers

IdentityReport verify_gm_type(const Partition& lambda, int k, int n, const VerifyOptions& opt = {});
IdentityReport verify_fnr_type(const Partition& lambda, int k, int m, int n, const VerifyOptions& opt = {});
IdentityReport verify_vandermonde_lemma(int n, const VerifyOptions& opt = {});
IdentityReport verify_e_beta_recurrence(int k, int n, const VerifyOptions& opt = {});
IdentityReport verify_good_general(int n, const VerifyOptions& opt = {});
IdentityReport verify_louck_general(int m, int n, const VerifyOptions& opt = {});
IdentityReport verify_good_k_general(int n, int k, const VerifyOptions& opt = {});

IdentityReport verify_classical_gm(const Partition& lambda, int k, int n, const VerifyOptions& opt = {});
IdentityReport verify_classical_fnr(const Partition& lambda, int k, int m, int n, const VerifyOptions& opt = {});
IdentityReport verify_classical_louck(int m, int n, const VerifyOptions& opt = {});
// Polynomial form plus the reciprocal form at `points` random rational points.
IdentityReport verify_classical_good(int n, unsigned points = 100, const VerifyOptions& opt = {});

// Lemma matrix: [x_r|y]^{n-c} (1 + beta x_r)^{c-1}.
PolyMatrix vandermonde_lemma_matrix(int n, Universe u);

// E^(beta)_k(Y_n) = sum_{|S|=k} y_S prod_{j notin S}(1 + beta y_j); zero
// unless 0 <= k <= n. Over Universe(0, n) unless given.
Polynomial e_beta(int k, int n);
Polynomial e_beta(int k, int n, Universe u);

// Schur polynomial as the sum of x^T over semistandard tableaux.
Polynomial schur_ssyt(const Partition& shape, int n);
// Complete homogeneous h_d(x_1..x_n) over Universe(n, 0); zero for d < 0.
Polynomial complete_homogeneous(int d, int n);

// Good's identity in its reciprocal form: sum_i prod_{j != i} (1 - x_i/x_j)^{-1}.
Rational good_reciprocal_sum(const std::vector<Rational>& x);

// ---------------------------------------------------------------------------
// Randomized pre-check

// Random point with pairwise-distinct nonzero x coordinates.
RationalPoint random_point(Universe u, std::mt19937_64& rng);

// Evaluates both sides at `trials` random points; returns the first point
// where they differ. Deterministic in `seed`.
std::optional<RationalPoint> fast_check(const Polynomial& lhs, const Polynomial& rhs, unsigned trials,
                                        std::uint64_t seed);

}  // namespace groth
