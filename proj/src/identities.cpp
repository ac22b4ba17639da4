#include "groth/identities.hpp"

#include <algorithm>
#include <numeric>

#include "groth/parallel.hpp"

namespace groth {

std::string to_string(IdentityKind k) {
    switch (k) {
        case IdentityKind::gm_type: return "gm_type";
        case IdentityKind::fnr_type: return "fnr_type";
        case IdentityKind::vandermonde_lemma: return "vandermonde_lemma";
        case IdentityKind::e_beta_recurrence: return "e_beta_recurrence";
        case IdentityKind::good_general: return "good_general";
        case IdentityKind::louck_general: return "louck_general";
        case IdentityKind::good_k_general: return "good_k_general";
        case IdentityKind::classical_gm: return "classical_gm";
        case IdentityKind::classical_good: return "classical_good";
        case IdentityKind::classical_louck: return "classical_louck";
        case IdentityKind::classical_fnr: return "classical_fnr";
    }
    return "?";
}

const std::vector<IdentityKind>& all_identities() {
    static const std::vector<IdentityKind> all{
        IdentityKind::gm_type,        IdentityKind::fnr_type,        IdentityKind::vandermonde_lemma,
        IdentityKind::e_beta_recurrence, IdentityKind::good_general, IdentityKind::louck_general,
        IdentityKind::good_k_general, IdentityKind::classical_gm,    IdentityKind::classical_good,
        IdentityKind::classical_louck, IdentityKind::classical_fnr,
    };
    return all;
}

std::optional<IdentityKind> parse_identity(const std::string& s) {
    for (auto k : all_identities())
        if (to_string(k) == s) return k;
    return std::nullopt;
}

json IdentityReport::to_json() const {
    json j;
    j["identity"] = to_string(identity);
    j["params"] = params;
    j["verdict"] = pass ? "pass" : "fail";
    j["elapsed_ms"] = elapsed_ms;
    j["lhs_terms"] = lhs.size();
    j["rhs_terms"] = rhs.size();
    j["witness"] = witness ? groth::to_json(*witness) : json(nullptr);
    j["mode"] = exact ? "exact" : "sampling";
    return j;
}

// ---------------------------------------------------------------------------
// Subsets and denominator clearing

std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

Subset complement(const Subset& s, int n) {
    Subset c;
    for (int i = 1; i <= n; ++i)
        if (std::find(s.begin(), s.end(), i) == s.end()) c.push_back(i);
    return c;
}

Polynomial full_vandermonde(int n, Universe u) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 1);
    return vandermonde(u, idx);
}

Polynomial cross_product_gm(const Subset& s, int n, Universe u) {
    Polynomial r = Polynomial::one(u);
    for (int i : s)
        for (int j : complement(s, n))
            r = mul(r, Polynomial::variable(u, Variable::x(i)) - Polynomial::variable(u, Variable::x(j)));
    return r;
}

Polynomial cross_product_fnr(const Subset& s, int n, Universe u) {
    Polynomial r = Polynomial::one(u);
    for (int i : s)
        for (int j : complement(s, n))
            r = mul(r, Polynomial::variable(u, Variable::x(j)) - Polynomial::variable(u, Variable::x(i)));
    return r;
}

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

long subset_sum_of(const Subset& s) { return std::accumulate(s.begin(), s.end(), 0L); }

SubsetTerm make_subset_term(const Subset& s, int n, Universe u, int sign) {
    SubsetTerm t;
    t.subset = s;
    t.complement = complement(s, n);
    t.sign = sign;
    t.cofactor = mul(vandermonde(u, t.subset), vandermonde(u, t.complement));
    return t;
}

void check_subset(const Subset& s, int n) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > n) throw PreconditionViolated("subset S must lie in [n]");
        if (i > 0 && s[i] <= s[i - 1]) throw PreconditionViolated("subset S must be strictly increasing");
    }
}

}  // namespace

SubsetTerm clear_denominator_gm(const Subset& s, int n, Universe u) {
    check_subset(s, n);
    const long k = static_cast<long>(s.size());
    // (-1)^{-C(k+1,2) + sum S}; the sign of the exponent does not affect parity.
    return make_subset_term(s, n, u, parity_sign(k * (k + 1) / 2 + subset_sum_of(s)));
}

SubsetTerm clear_denominator_fnr(const Subset& s, int n, Universe u) {
    check_subset(s, n);
    const long k = static_cast<long>(s.size());
    return make_subset_term(s, n, u, parity_sign(static_cast<long>(n) * k - k * (k - 1) / 2 + subset_sum_of(s)));
}

namespace {

std::vector<Polynomial> map_subsets(const std::vector<Subset>& subsets, Universe u, const SubsetFn& term,
                                    int threads) {
    std::vector<Polynomial> out(subsets.size(), Polynomial(u));
    const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for num_threads(std::max(threads, 1)) schedule(dynamic) if (threads > 1)
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = term(subsets[static_cast<std::size_t>(i)]);
    for (const auto& p : out)
        if (!(p.universe() == u)) throw UniverseMismatch("subset term is not over the identity universe");
    return out;
}

Polynomial sum_in_order(const std::vector<Polynomial>& terms, Universe u) {
    PolynomialBuilder b(u);
    for (const auto& t : terms) b.add(t);
    return std::move(b).finish();
}

}  // namespace

Polynomial subset_sum_serial(int n, int k, Universe u, const SubsetFn& term) {
    return sum_in_order(map_subsets(k_subsets(n, k), u, term, 1), u);
}

Polynomial subset_sum_parallel(int n, int k, Universe u, const SubsetFn& term, int threads) {
    return sum_in_order(map_subsets(k_subsets(n, k), u, term, threads), u);
}

Polynomial subset_sum(int n, int k, Universe u, const SubsetFn& term) {
    return subset_sum_parallel(n, k, u, term, num_threads());
}

Polynomial ClearedIdentity::rhs() const { return sum_in_order(rhs_terms, lhs.universe()); }

// ---------------------------------------------------------------------------
// Main constructions

std::optional<Partition> gm_shifted_shape(const Partition& lambda, int k, int n) {
    const int shift = n - k;
    if (lambda.part(k) - shift < 0) return std::nullopt;
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) parts.push_back(lambda.part(i) - shift);
    return Partition(std::move(parts));
}

Partition fnr_shape(const Partition& lambda, int k, int m, int n) {
    std::vector<int> parts(static_cast<std::size_t>(n - k), m - k);
    for (int i = 1; i <= k; ++i) parts.push_back(lambda.part(i));
    return Partition(std::move(parts));
}

Universe gm_universe(const Partition& lambda, int k, int n) { return Universe(n, std::max(0, lambda.max_part() + k - 1)); }

Universe fnr_universe(const Partition& lambda, int k, int m, int n) {
    const int mu1 = n > k ? m - k : lambda.max_part();
    return Universe(n, std::max({m, mu1 + n - 1, lambda.max_part() + k - 1, 0}));
}

namespace {

void check_gm(const Partition& lambda, int k, int n) {
    if (n < 1) throw PreconditionViolated("gm_type: n must be positive");
    if (k < 1 || k > n) throw PreconditionViolated("gm_type: requires 1 <= k <= n (k = number of parts of lambda)");
    if (lambda.length() > k) throw PreconditionViolated("gm_type: lambda must have at most k parts");
}

void check_fnr(const Partition& lambda, int k, int m, int n) {
    if (n < 1) throw PreconditionViolated("fnr_type: n must be positive");
    if (k < 0 || k > n) throw PreconditionViolated("fnr_type: requires 0 <= k <= n");
    if (lambda.length() > k) throw PreconditionViolated("fnr_type: lambda must have at most k parts");
    if (lambda.max_part() > m - k)
        throw PreconditionViolated("fnr_type: FNR-type identity requires lambda_1 <= m - k (got lambda_1=" +
                                   std::to_string(lambda.max_part()) + ", m-k=" + std::to_string(m - k) + ")");
}

Polynomial prod_pow(Universe u, const Subset& idx, unsigned e, const std::function<Polynomial(int)>& f) {
    Polynomial r = Polynomial::one(u);
    for (int i : idx) r = mul(r, pow(f(i), e));
    return r;
}

}  // namespace

ClearedIdentity cleared_gm(const Partition& lambda, int k, int n, Method method) {
    check_gm(lambda, k, n);
    const Universe u = gm_universe(lambda, k, n);
    ClearedIdentity c;
    const Polynomial V = full_vandermonde(n, u);
    auto shifted = gm_shifted_shape(lambda, k, n);
    c.lhs = shifted ? mul(evaluate(method, *shifted, n, u), V) : Polynomial(u);

    const Polynomial base = evaluate(method, lambda, k, Universe(k, u.n_y));
    c.subsets = k_subsets(n, k);
    c.rhs_terms = map_subsets(
        c.subsets, u,
        [&](const Subset& s) {
            SubsetTerm st = clear_denominator_gm(s, n, u);
            Polynomial t = mul(st.cofactor, relabel_x(base, s, u));
            t = mul(t, prod_pow(u, st.complement, static_cast<unsigned>(k), [&](int j) { return one_plus_beta_x(u, j); }));
            return st.sign < 0 ? -t : t;
        },
        num_threads());
    return c;
}

ClearedIdentity cleared_fnr(const Partition& lambda, int k, int m, int n, Method method) {
    check_fnr(lambda, k, m, n);
    const Universe u = fnr_universe(lambda, k, m, n);
    ClearedIdentity c;
    const Polynomial V = full_vandermonde(n, u);
    c.lhs = mul(evaluate(method, fnr_shape(lambda, k, m, n), n, u), V);

    Polynomial base = Polynomial::one(Universe(k, u.n_y));
    if (k > 0) base = evaluate(method, lambda, k, Universe(k, u.n_y));
    c.subsets = k_subsets(n, k);
    c.rhs_terms = map_subsets(
        c.subsets, u,
        [&](const Subset& s) {
            SubsetTerm st = clear_denominator_fnr(s, n, u);
            Polynomial t = mul(st.cofactor, relabel_x(base, s, u));
            t = mul(t, prod_pow(u, st.subset, static_cast<unsigned>(n - k), [&](int i) { return one_plus_beta_x(u, i); }));
            t = mul(t, prod_pow(u, st.complement, 1, [&](int j) { return bracket_pow(u, j, 0, m); }));
            return st.sign < 0 ? -t : t;
        },
        num_threads());
    return c;
}

// ---------------------------------------------------------------------------
// Randomized pre-check

RationalPoint random_point(Universe u, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 9), small(-5, 5);
    RationalPoint pt;
    pt.beta = Rational(small(rng), den(rng));
    pt.beta.canonicalize();
    while (static_cast<int>(pt.x.size()) < u.n_x) {
        int a = num(rng);
        if (a == 0) continue;
        Rational v(a, den(rng));
        v.canonicalize();
        if (std::find(pt.x.begin(), pt.x.end(), v) != pt.x.end()) continue;
        pt.x.push_back(v);
    }
    for (int j = 0; j < u.n_y; ++j) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        pt.y.push_back(v);
    }
    return pt;
}

std::optional<RationalPoint> fast_check(const Polynomial& lhs, const Polynomial& rhs, unsigned trials,
                                        std::uint64_t seed) {
    require_same_universe(lhs, rhs, "fast_check");
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < trials; ++t) {
        RationalPoint pt = random_point(lhs.universe(), rng);
        if (eval_rational(lhs, pt) != eval_rational(rhs, pt)) return pt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verifiers

namespace {

using Clock = std::chrono::steady_clock;

IdentityReport finish(IdentityKind kind, json params, Polynomial lhs, Polynomial rhs, const VerifyOptions& opt,
                      Clock::time_point start) {
    IdentityReport r;
    r.identity = kind;
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    require_same_universe(r.lhs, r.rhs, "identity report");
    unsigned trials = opt.fast_trials;
    if (opt.fast_only && trials == 0) trials = 16;
    if (trials > 0) r.witness = fast_check(r.lhs, r.rhs, trials, opt.seed);
    if (r.witness) {
        r.pass = false;
    } else if (opt.fast_only) {
        r.pass = true;
        r.exact = false;
    } else {
        r.pass = r.lhs == r.rhs;
        if (!r.pass) r.witness = fast_check(r.lhs, r.rhs, 32, opt.seed);
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
}

json lambda_json(const Partition& lambda, int k) {
    json a = json::array();
    for (int i = 1; i <= k; ++i) a.push_back(lambda.part(i));
    return a;
}

// sum_i sign_i V([n]\i) [x_i|y]^e prod_{j != i}(1 + beta x_j), i.e. the
// single-subset identities with cleared denominators.
ClearedIdentity cleared_single_row(int e, int n, Universe u, const Polynomial& lhs_before_clearing) {
    ClearedIdentity c;
    c.lhs = mul(lhs_before_clearing, full_vandermonde(n, u));
    c.subsets = k_subsets(n, 1);
    c.rhs_terms = map_subsets(
        c.subsets, u,
        [&](const Subset& s) {
            SubsetTerm st = clear_denominator_gm(s, n, u);
            Polynomial t = mul(st.cofactor, bracket_pow(u, s[0], 0, e));
            t = mul(t, prod_pow(u, st.complement, 1, [&](int j) { return one_plus_beta_x(u, j); }));
            return st.sign < 0 ? -t : t;
        },
        num_threads());
    return c;
}

ClearedIdentity cleared_good(int n) {
    if (n < 1) throw PreconditionViolated("good_general: n must be positive");
    Universe u(n, n - 1);
    return cleared_single_row(n - 1, n, u, Polynomial::one(u));
}

ClearedIdentity cleared_louck(int m, int n, Method method) {
    if (n < 1) throw PreconditionViolated("louck_general: n must be positive");
    if (m < n - 1) throw PreconditionViolated("louck_general: requires m >= n - 1 so that h_{m-n+1} has a nonnegative index");
    Universe u(n, m);
    return cleared_single_row(m, n, u, evaluate(method, Partition{m - n + 1}, n, u));
}

// Lifts the per-term coherence check into a report: both the classical
// sides and the specialized general sides must agree term by term.
IdentityReport finish_classical(IdentityKind kind, json params, const ClearedIdentity& general,
                                const ClearedIdentity& classical, const VerifyOptions& opt, Clock::time_point start) {
    bool coherent = specialize_classical(general.lhs) == classical.lhs &&
                    general.rhs_terms.size() == classical.rhs_terms.size();
    for (std::size_t i = 0; coherent && i < general.rhs_terms.size(); ++i)
        coherent = specialize_classical(general.rhs_terms[i]) == classical.rhs_terms[i];
    IdentityReport r = finish(kind, std::move(params), classical.lhs, classical.rhs(), opt, start);
    if (!opt.fast_only && !coherent) {
        r.pass = false;
        r.note = "specialization of the general identity does not match the classical form term by term";
    } else if (!opt.fast_only) {
        r.note = "specialization coherent term by term";
    }
    return r;
}

ClearedIdentity classical_subset_form(int n, int k, const Polynomial& lhs, const Polynomial& base, bool fnr,
                                      int m) {
    const Universe u0(n, 0);
    ClearedIdentity c;
    c.lhs = mul(lhs, full_vandermonde(n, u0));
    c.subsets = k_subsets(n, k);
    c.rhs_terms = map_subsets(
        c.subsets, u0,
        [&](const Subset& s) {
            SubsetTerm st = fnr ? clear_denominator_fnr(s, n, u0) : clear_denominator_gm(s, n, u0);
            Polynomial t = mul(st.cofactor, relabel_x(base, s, u0));
            if (fnr)
                t = mul(t, prod_pow(u0, st.complement, static_cast<unsigned>(m),
                                    [&](int j) { return Polynomial::variable(u0, Variable::x(j)); }));
            return st.sign < 0 ? -t : t;
        },
        num_threads());
    return c;
}

}  // namespace

IdentityReport verify_gm_type(const Partition& lambda, int k, int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity c = cleared_gm(lambda, k, n, opt.method);
    const bool zero_case = !gm_shifted_shape(lambda, k, n).has_value();
    json params{{"lambda", lambda_json(lambda, k)}, {"n", n}, {"k", k}, {"method", to_string(opt.method)},
                {"zero_case", zero_case}};
    Polynomial rhs = c.rhs();
    IdentityReport r = finish(IdentityKind::gm_type, std::move(params), std::move(c.lhs), rhs, opt, start);
    if (zero_case && !r.pass && !opt.fast_only) {
        // Diagnostic only; the verdict stays with the stated zero convention.
        Universe u(n, std::max(rhs.universe().n_y, n - 2));
        bool match = gm_extended_numerator(lambda, k, n, u) == embed(rhs, u);
        bool vanishes_classically = specialize_beta_zero(rhs).is_zero();
        r.params["rhs_is_extended_determinant"] = match;
        r.params["rhs_vanishes_at_beta_zero"] = vanishes_classically;
        r.note = std::string("zero case: cleared RHS is nonzero") +
                 (match ? "; it equals det([x_i|y]^{a_j+n-j}(1+beta x_i)^{j-1}) for the shifted sequence a" : "") +
                 (vanishes_classically ? "; it vanishes at beta=0" : "");
    }
    return r;
}

Polynomial gm_extended_numerator(const Partition& lambda, int k, int n, Universe u) {
    check_gm(lambda, k, n);
    std::vector<int> seq(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= k; ++i) seq[static_cast<std::size_t>(i - 1)] = lambda.part(i) - n + k;
    return determinant_numerator(seq, u);
}

IdentityReport verify_fnr_type(const Partition& lambda, int k, int m, int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity c = cleared_fnr(lambda, k, m, n, opt.method);
    json params{{"lambda", lambda_json(lambda, k)}, {"n", n}, {"k", k}, {"m", m}, {"method", to_string(opt.method)}};
    return finish(IdentityKind::fnr_type, std::move(params), std::move(c.lhs), c.rhs(), opt, start);
}

PolyMatrix vandermonde_lemma_matrix(int n, Universe u) {
    PolyMatrix mat(static_cast<std::size_t>(n));
    for (int r = 1; r <= n; ++r) {
        Polynomial ob = Polynomial::one(u);
        for (int c = 1; c <= n; ++c) {
            mat[static_cast<std::size_t>(r - 1)].push_back(mul(bracket_pow(u, r, 0, n - c), ob));
            ob = mul(ob, one_plus_beta_x(u, r));
        }
    }
    return mat;
}

IdentityReport verify_vandermonde_lemma(int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    if (n < 1) throw PreconditionViolated("vandermonde_lemma: n must be positive");
    Universe u(n, n - 1);
    Polynomial lhs = determinant(vandermonde_lemma_matrix(n, u));
    return finish(IdentityKind::vandermonde_lemma, json{{"n", n}}, std::move(lhs), full_vandermonde(n, u), opt, start);
}

Polynomial e_beta(int k, int n) { return e_beta(k, n, Universe(0, std::max(n, 0))); }

Polynomial e_beta(int k, int n, Universe u) {
    if (n < 0) throw PreconditionViolated("e_beta: n must be nonnegative");
    if (u.n_y < n) throw IndexOutOfUniverse("e_beta: universe needs n_y >= n");
    if (k < 0 || k > n) return Polynomial(u);
    const Polynomial beta = Polynomial::variable(u, Variable::beta());
    PolynomialBuilder b(u);
    for (const Subset& s : k_subsets(n, k)) {
        Polynomial t = Polynomial::one(u);
        for (int j = 1; j <= n; ++j) {
            const Polynomial yj = Polynomial::variable(u, Variable::y(j));
            if (std::find(s.begin(), s.end(), j) != s.end())
                t = mul(t, yj);
            else
                t = mul(t, Polynomial::one(u) + mul(beta, yj));
        }
        b.add(t);
    }
    return std::move(b).finish();
}

IdentityReport verify_e_beta_recurrence(int k, int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    if (n < 1) throw PreconditionViolated("e_beta_recurrence: n must be positive");
    Universe u(0, n);
    const Polynomial yn = Polynomial::variable(u, Variable::y(n));
    const Polynomial factor = Polynomial::one(u) + mul(Polynomial::variable(u, Variable::beta()), yn);
    Polynomial lhs = e_beta(k, n, u);
    Polynomial rhs = mul(factor, e_beta(k, n - 1, u)) + mul(yn, e_beta(k - 1, n - 1, u));
    return finish(IdentityKind::e_beta_recurrence, json{{"n", n}, {"k", k}}, std::move(lhs), std::move(rhs), opt, start);
}

IdentityReport verify_good_general(int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity c = cleared_good(n);
    return finish(IdentityKind::good_general, json{{"n", n}}, std::move(c.lhs), c.rhs(), opt, start);
}

IdentityReport verify_louck_general(int m, int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity c = cleared_louck(m, n, opt.method);
    json params{{"n", n}, {"m", m}, {"method", to_string(opt.method)}};
    return finish(IdentityKind::louck_general, std::move(params), std::move(c.lhs), c.rhs(), opt, start);
}

IdentityReport verify_good_k_general(int n, int k, const VerifyOptions& opt) {
    auto start = Clock::now();
    if (n < 1) throw PreconditionViolated("good_k_general: n must be positive");
    if (k < 0 || k > n) throw PreconditionViolated("good_k_general: requires 0 <= k <= n");
    Universe u(n, k);
    Polynomial lhs = full_vandermonde(n, u);
    Polynomial rhs = subset_sum(n, k, u, [&](const Subset& s) {
        SubsetTerm st = clear_denominator_fnr(s, n, u);
        Polynomial t = mul(st.cofactor, prod_pow(u, st.subset, static_cast<unsigned>(n - k),
                                                 [&](int i) { return one_plus_beta_x(u, i); }));
        t = mul(t, prod_pow(u, st.complement, 1, [&](int j) { return bracket_pow(u, j, 0, k); }));
        return st.sign < 0 ? -t : t;
    });
    return finish(IdentityKind::good_k_general, json{{"n", n}, {"k", k}}, std::move(lhs), std::move(rhs), opt, start);
}

// ---------------------------------------------------------------------------
// Classical specializations

Polynomial schur_ssyt(const Partition& shape, int n) {
    const Universe u(n, 0);
    PolynomialBuilder b(u);
    TableauStream stream(shape, n, true);
    while (auto t = stream.next()) {
        Monomial m(u.size());
        for (EntrySet s : t->fill()) {
            std::size_t slot = u.slot(Variable::x(set_min(s)));
            m.set(slot, m[slot] + 1);
        }
        b.add(m, 1);
    }
    return std::move(b).finish();
}

Polynomial complete_homogeneous(int d, int n) {
    const Universe u(n, 0);
    if (d < 0 || n < 1) return d == 0 ? Polynomial::one(u) : Polynomial(u);
    std::vector<Term> terms;
    Monomial m(u.size());
    auto rec = [&](auto& self, int var, int left) -> void {
        if (var == n) {
            m.set(static_cast<std::size_t>(var), static_cast<unsigned>(left));
            terms.push_back(Term{m, 1});
            m.set(static_cast<std::size_t>(var), 0);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.set(static_cast<std::size_t>(var), static_cast<unsigned>(e));
            self(self, var + 1, left - e);
        }
        m.set(static_cast<std::size_t>(var), 0);
    };
    rec(rec, 1, d);
    return Polynomial::from_terms(u, std::move(terms));
}

Rational good_reciprocal_sum(const std::vector<Rational>& x) {
    Rational total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rational term = 1;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j == i) continue;
            Rational f = 1 - x[i] / x[j];
            if (f == 0) throw DivisionByZero("good_reciprocal_sum: coordinates must be distinct");
            term /= f;
        }
        total += term;
    }
    return total;
}

IdentityReport verify_classical_gm(const Partition& lambda, int k, int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity general = cleared_gm(lambda, k, n, opt.method);
    auto shifted = gm_shifted_shape(lambda, k, n);
    Polynomial lhs = shifted ? schur_ssyt(*shifted, n) : Polynomial(Universe(n, 0));
    ClearedIdentity classical = classical_subset_form(n, k, lhs, schur_ssyt(lambda, k), false, 0);
    json params{{"lambda", lambda_json(lambda, k)}, {"n", n}, {"k", k}, {"zero_case", !shifted.has_value()}};
    return finish_classical(IdentityKind::classical_gm, std::move(params), general, classical, opt, start);
}

IdentityReport verify_classical_fnr(const Partition& lambda, int k, int m, int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity general = cleared_fnr(lambda, k, m, n, opt.method);
    Polynomial base = k > 0 ? schur_ssyt(lambda, k) : Polynomial::one(Universe(0, 0));
    ClearedIdentity classical =
        classical_subset_form(n, k, schur_ssyt(fnr_shape(lambda, k, m, n), n), base, true, m);
    json params{{"lambda", lambda_json(lambda, k)}, {"n", n}, {"k", k}, {"m", m}};
    return finish_classical(IdentityKind::classical_fnr, std::move(params), general, classical, opt, start);
}

IdentityReport verify_classical_louck(int m, int n, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity general = cleared_louck(m, n, opt.method);
    const Universe u0(n, 0);
    ClearedIdentity classical;
    classical.lhs = mul(complete_homogeneous(m - n + 1, n), full_vandermonde(n, u0));
    classical.subsets = k_subsets(n, 1);
    for (const auto& s : classical.subsets) {
        SubsetTerm st = clear_denominator_gm(s, n, u0);
        Polynomial t = mul(st.cofactor, pow(Polynomial::variable(u0, Variable::x(s[0])), static_cast<unsigned>(m)));
        classical.rhs_terms.push_back(st.sign < 0 ? -t : t);
    }
    return finish_classical(IdentityKind::classical_louck, json{{"n", n}, {"m", m}}, general, classical, opt, start);
}

IdentityReport verify_classical_good(int n, unsigned points, const VerifyOptions& opt) {
    auto start = Clock::now();
    ClearedIdentity general = cleared_good(n);
    const Universe u0(n, 0);
    ClearedIdentity classical;
    classical.lhs = full_vandermonde(n, u0);
    classical.subsets = k_subsets(n, 1);
    for (const auto& s : classical.subsets) {
        SubsetTerm st = clear_denominator_gm(s, n, u0);
        Polynomial t = mul(st.cofactor, pow(Polynomial::variable(u0, Variable::x(s[0])), static_cast<unsigned>(n - 1)));
        classical.rhs_terms.push_back(st.sign < 0 ? -t : t);
    }
    IdentityReport r = finish_classical(IdentityKind::classical_good, json{{"n", n}, {"points", points}}, general,
                                        classical, opt, start);

    // Reciprocal form at exact rational points with distinct nonzero coordinates.
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    unsigned failures = 0;
    for (unsigned t = 0; t < points; ++t) {
        RationalPoint pt = random_point(u0, rng);
        if (good_reciprocal_sum(pt.x) != 1) {
            ++failures;
            if (!r.witness) r.witness = pt;
        }
    }
    r.params["reciprocal_failures"] = failures;
    if (failures > 0) r.pass = false;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return r;
}

}  // namespace groth
