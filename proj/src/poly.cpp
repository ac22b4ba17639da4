#include "groth/poly.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "groth/parallel.hpp"

namespace groth {

// ---------------------------------------------------------------------------
// Variables and universes

std::string Variable::name() const {
    switch (kind) {
        case VarKind::beta: return "b";
        case VarKind::x: return "x" + std::to_string(index);
        case VarKind::y: return "y" + std::to_string(index);
    }
    return "?";
}

Universe::Universe(int nx, int ny) : n_x(nx), n_y(ny) {
    if (nx < 0 || ny < 0) throw std::invalid_argument("universe sizes must be nonnegative");
}

bool Universe::contains(Variable v) const {
    switch (v.kind) {
        case VarKind::beta: return true;
        case VarKind::x: return v.index >= 1 && v.index <= n_x;
        case VarKind::y: return v.index >= 1 && v.index <= n_y;
    }
    return false;
}

std::size_t Universe::slot(Variable v) const {
    if (!contains(v)) {
        throw IndexOutOfUniverse("variable " + v.name() + " is outside universe (n_x=" +
                                 std::to_string(n_x) + ", n_y=" + std::to_string(n_y) + ")");
    }
    switch (v.kind) {
        case VarKind::beta: return 0;
        case VarKind::x: return static_cast<std::size_t>(v.index);
        case VarKind::y: return static_cast<std::size_t>(n_x + v.index);
    }
    return 0;
}

Variable Universe::variable_at(std::size_t s) const {
    if (s == 0) return Variable::beta();
    if (s <= static_cast<std::size_t>(n_x)) return Variable::x(static_cast<int>(s));
    return Variable::y(static_cast<int>(s) - n_x);
}

// ---------------------------------------------------------------------------
// Monomials

void Monomial::set(std::size_t slot, unsigned e) {
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    degree_ = degree_ - exps_[slot] + e;
    exps_[slot] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t s = 0; s < exps_.size(); ++s)
        if (exps_[s] > other.exps_[s]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t s = 0; s < exps_.size(); ++s) {
        unsigned e = unsigned{exps_[s]} + other.exps_[s];
        if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
        r.exps_[s] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r(*this);
    for (std::size_t s = 0; s < exps_.size(); ++s) r.exps_[s] = exps_[s] - other.exps_[s];
    r.degree_ = degree_ - other.degree_;
    return r;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t s = 0; s < a.exps_.size(); ++s)
        if (a.exps_[s] != b.exps_[s]) return a.exps_[s] <=> b.exps_[s];
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Builder

struct PolynomialBuilder::Impl {
    std::unordered_map<Monomial, Integer, MonomialHash> acc;
};

PolynomialBuilder::PolynomialBuilder(Universe u) : universe_(u), impl_(new Impl) {}
PolynomialBuilder::~PolynomialBuilder() { delete impl_; }
PolynomialBuilder::PolynomialBuilder(PolynomialBuilder&& o) noexcept
    : universe_(o.universe_), impl_(o.impl_) {
    o.impl_ = nullptr;
}
PolynomialBuilder& PolynomialBuilder::operator=(PolynomialBuilder&& o) noexcept {
    if (this != &o) {
        delete impl_;
        universe_ = o.universe_;
        impl_ = o.impl_;
        o.impl_ = nullptr;
    }
    return *this;
}

void PolynomialBuilder::add(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = impl_->acc.try_emplace(m, c);
    if (!inserted) it->second += c;
}

void PolynomialBuilder::add(const Polynomial& p) {
    if (!(p.universe() == universe_)) throw UniverseMismatch("builder: universe mismatch");
    for (const auto& t : p.terms()) add(t.monomial, t.coeff);
}

void PolynomialBuilder::add_product(const Polynomial& p, const Polynomial& q) {
    if (!(p.universe() == universe_) || !(q.universe() == universe_))
        throw UniverseMismatch("builder: universe mismatch");
    Integer c;
    for (const auto& a : p.terms())
        for (const auto& b : q.terms()) {
            mpz_mul(c.get_mpz_t(), a.coeff.get_mpz_t(), b.coeff.get_mpz_t());
            add(a.monomial * b.monomial, c);
        }
}

Polynomial PolynomialBuilder::finish() && {
    Polynomial p(universe_);
    p.terms_.reserve(impl_->acc.size());
    for (auto& [m, c] : impl_->acc)
        if (c != 0) p.terms_.push_back(Term{m, std::move(c)});
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    impl_->acc.clear();
    return p;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(Universe u, const Integer& c) {
    Polynomial p(u);
    if (c != 0) p.terms_.push_back(Term{Monomial(u.size()), c});
    return p;
}

Polynomial Polynomial::variable(Universe u, Variable v) {
    Polynomial p(u);
    Monomial m(u.size());
    m.set(u.slot(v), 1);
    p.terms_.push_back(Term{std::move(m), 1});
    return p;
}

Polynomial Polynomial::from_terms(Universe u, std::vector<Term> terms) {
    PolynomialBuilder b(u);
    for (auto& t : terms) {
        if (t.monomial.nvars() != u.size()) throw UniverseMismatch("from_terms: monomial size mismatch");
        b.add(t.monomial, t.coeff);
    }
    return std::move(b).finish();
}

Polynomial Polynomial::from_canonical(Universe u, std::vector<Term> terms) {
    Polynomial p(u);
    p.terms_ = std::move(terms);
    if (!p.is_canonical()) throw std::logic_error("from_canonical: terms are not in canonical form");
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

unsigned Polynomial::total_degree() const {
    return terms_.empty() ? 0u : terms_.front().monomial.degree();
}

unsigned Polynomial::degree_in(Variable v) const {
    std::size_t s = universe_.slot(v);
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial[s]);
    return d;
}

unsigned Polynomial::min_degree_in(Variable v) const {
    std::size_t s = universe_.slot(v);
    unsigned d = terms_.empty() ? 0u : 255u;
    for (const auto& t : terms_) d = std::min(d, t.monomial[s]);
    return d;
}

bool Polynomial::uses(Variable v) const {
    if (!universe_.contains(v)) return false;
    return degree_in(v) > 0;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

void require_same_universe(const Polynomial& p, const Polynomial& q, const char* op) {
    if (!(p.universe() == q.universe())) {
        throw UniverseMismatch(std::string(op) + ": universe mismatch ((" +
                               std::to_string(p.universe().n_x) + "," +
                               std::to_string(p.universe().n_y) + ") vs (" +
                               std::to_string(q.universe().n_x) + "," +
                               std::to_string(q.universe().n_y) + "))");
    }
}

namespace {

// Merge of two canonical term lists with sign on the second operand.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto cmp = a[i].monomial <=> b[j].monomial;
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(b[j++]);
            if (negate_b) out.back().coeff = -out.back().coeff;
        } else {
            Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back(Term{a[i].monomial, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        out.push_back(b[j]);
        if (negate_b) out.back().coeff = -out.back().coeff;
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    require_same_universe(*this, q, "add");
    if (q.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = q.terms_;
        return *this;
    }
    terms_ = merge_terms(terms_, q.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    require_same_universe(*this, q, "sub");
    terms_ = merge_terms(terms_, q.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
    *this = mul(*this, q);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.universe_ == b.universe_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

bool Polynomial::is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff == 0) return false;
        if (terms_[i].monomial.nvars() != universe_.size()) return false;
        if (i > 0 && !(terms_[i - 1].monomial > terms_[i].monomial)) return false;
    }
    return true;
}

namespace {

void write_monomial_text(std::ostream& os, const Monomial& m, const Universe& u) {
    bool first = true;
    for (std::size_t s = 0; s < m.nvars(); ++s) {
        if (m[s] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << u.variable_at(s).name();
        if (m[s] > 1) os << '^' << m[s];
    }
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        bool neg = t.coeff < 0;
        Integer mag = abs(t.coeff);
        if (i == 0) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        if (t.monomial.is_one()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            write_monomial_text(os, t.monomial, universe_);
        }
    }
    return os.str();
}

std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    const Universe& u = p.universe();
    std::ostringstream os;
    auto terms = p.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        bool neg = t.coeff < 0;
        Integer mag = abs(t.coeff);
        if (i == 0) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        if (t.monomial.is_one()) {
            os << mag.get_str();
            continue;
        }
        bool first = true;
        if (mag != 1) {
            os << mag.get_str();
            first = false;
        }
        for (std::size_t s = 0; s < t.monomial.nvars(); ++s) {
            unsigned e = t.monomial[s];
            if (e == 0) continue;
            if (!first) os << ' ';
            first = false;
            Variable v = u.variable_at(s);
            if (v.kind == VarKind::beta)
                os << "\\beta";
            else
                os << (v.kind == VarKind::x ? "x" : "y") << "_{" << v.index << '}';
            if (e > 1) os << "^{" << e << '}';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Arithmetic

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul_serial(const Polynomial& p, const Polynomial& q) {
    require_same_universe(p, q, "mul");
    Polynomial r(p.universe());
    if (p.is_zero() || q.is_zero()) return r;
    PolynomialBuilder b(p.universe());
    b.add_product(p, q);
    return std::move(b).finish();
}

Polynomial mul_parallel(const Polynomial& p, const Polynomial& q, int threads) {
    require_same_universe(p, q, "mul");
    if (threads <= 1 || p.size() < 2) return mul_serial(p, q);
    const Polynomial& big = p.size() >= q.size() ? p : q;
    const Polynomial& small = p.size() >= q.size() ? q : p;
    const auto bt = big.terms();
    const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(threads) * 4, bt.size());
    std::vector<Polynomial> partial(chunks, Polynomial(p.universe()));

#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t lo = bt.size() * c / chunks;
        const std::size_t hi = bt.size() * (c + 1) / chunks;
        PolynomialBuilder b(p.universe());
        Integer prod;
        for (std::size_t i = lo; i < hi; ++i)
            for (const auto& s : small.terms()) {
                mpz_mul(prod.get_mpz_t(), bt[i].coeff.get_mpz_t(), s.coeff.get_mpz_t());
                b.add(bt[i].monomial * s.monomial, prod);
            }
        partial[c] = std::move(b).finish();
    }

    // Pairwise tree reduction in fixed index order.
    for (std::size_t stride = 1; stride < chunks; stride *= 2) {
#pragma omp parallel for num_threads(threads) schedule(static)
        for (std::size_t c = 0; c < chunks; c += 2 * stride)
            if (c + stride < chunks) partial[c] += partial[c + stride];
    }
    return std::move(partial[0]);
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    const int t = num_threads();
    if (t > 1 && p.size() * q.size() >= 20000) return mul_parallel(p, q, t);
    return mul_serial(p, q);
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial result = Polynomial::one(p.universe());
    Polynomial base = p;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

Polynomial circle_plus(Universe u, int i, int j) {
    Variable xi = Variable::x(i), yj = Variable::y(j);
    if (!u.contains(xi) || !u.contains(yj)) {
        throw IndexOutOfUniverse("circle_plus(" + std::to_string(i) + "," + std::to_string(j) +
                                 "): index outside universe (n_x=" + std::to_string(u.n_x) +
                                 ", n_y=" + std::to_string(u.n_y) + ")");
    }
    std::vector<Term> terms;
    Monomial mx(u.size()), my(u.size()), mb(u.size());
    mx.set(u.slot(xi), 1);
    my.set(u.slot(yj), 1);
    mb.set(0, 1);
    mb.set(u.slot(xi), 1);
    mb.set(u.slot(yj), 1);
    terms.push_back({mx, 1});
    terms.push_back({my, 1});
    terms.push_back({mb, 1});
    return Polynomial::from_terms(u, std::move(terms));
}

Polynomial bracket_pow(Universe u, int i, int shift, int len) {
    if (shift < 0 || len < 0) throw std::invalid_argument("bracket_pow: shift and length must be >= 0");
    if (shift + len > u.n_y) {
        throw IndexOutOfUniverse("bracket_pow: needs y_" + std::to_string(shift + len) +
                                 " but n_y=" + std::to_string(u.n_y));
    }
    if (!u.contains(Variable::x(i))) throw IndexOutOfUniverse("bracket_pow: x index outside universe");
    Polynomial r = Polynomial::one(u);
    for (int t = 1; t <= len; ++t) r = mul(r, circle_plus(u, i, shift + t));
    return r;
}

Polynomial one_plus_beta_x(Universe u, int i) {
    Polynomial bx = Polynomial::variable(u, Variable::beta()) * Polynomial::variable(u, Variable::x(i));
    return Polynomial::one(u) + bx;
}

Polynomial vandermonde(Universe u, std::span<const int> indices) {
    Polynomial r = Polynomial::one(u);
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            if (indices[a] == indices[b]) throw std::invalid_argument("vandermonde: repeated index");
            r = mul(r, Polynomial::variable(u, Variable::x(indices[a])) -
                           Polynomial::variable(u, Variable::x(indices[b])));
        }
    return r;
}

// ---------------------------------------------------------------------------
// Substitution and relabeling

Polynomial substitute(const Polynomial& p, std::span<const Binding> bindings, Universe target) {
    const Universe& src = p.universe();
    // slot in src -> binding index
    std::vector<int> bound(src.size(), -1);
    for (std::size_t b = 0; b < bindings.size(); ++b) {
        if (!src.contains(bindings[b].var))
            throw UniverseMismatch("substitute: bound variable " + bindings[b].var.name() +
                                   " not in source universe");
        if (!(bindings[b].image.universe() == target))
            throw UniverseMismatch("substitute: image not over target universe");
        bound[src.slot(bindings[b].var)] = static_cast<int>(b);
    }
    // Cached powers of each image.
    std::vector<std::vector<Polynomial>> powers(bindings.size());
    auto power_of = [&](std::size_t b, unsigned e) -> const Polynomial& {
        auto& cache = powers[b];
        if (cache.empty()) cache.push_back(Polynomial::one(target));
        while (cache.size() <= e) cache.push_back(mul(cache.back(), bindings[b].image));
        return cache[e];
    };

    PolynomialBuilder out(target);
    for (const auto& t : p.terms()) {
        Monomial rest(target.size());
        std::vector<std::pair<std::size_t, unsigned>> factors;
        for (std::size_t s = 0; s < src.size(); ++s) {
            unsigned e = t.monomial[s];
            if (e == 0) continue;
            if (bound[s] >= 0) {
                factors.emplace_back(static_cast<std::size_t>(bound[s]), e);
            } else {
                Variable v = src.variable_at(s);
                if (!target.contains(v))
                    throw UniverseMismatch("substitute: unbound variable " + v.name() +
                                           " missing from target universe");
                rest.set(target.slot(v), e);
            }
        }
        Polynomial acc = Polynomial::from_terms(target, {Term{rest, t.coeff}});
        for (auto [b, e] : factors) {
            if (acc.is_zero()) break;
            acc = mul(acc, power_of(b, e));
        }
        out.add(acc);
    }
    return std::move(out).finish();
}

Polynomial substitute(const Polynomial& p, std::span<const Binding> bindings) {
    return substitute(p, bindings, p.universe());
}

Polynomial substitute_zero(const Polynomial& p, std::span<const Variable> vars) {
    std::vector<std::size_t> slots;
    for (auto v : vars)
        if (p.universe().contains(v)) slots.push_back(p.universe().slot(v));
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
        bool dead = false;
        for (auto s : slots)
            if (t.monomial[s] != 0) {
                dead = true;
                break;
            }
        if (!dead) kept.push_back(t);
    }
    // Dropping terms preserves the order.
    return Polynomial::from_canonical(p.universe(), std::move(kept));
}

namespace {

Polynomial move_exponents(const Polynomial& p, const std::vector<std::size_t>& slot_map, Universe target,
                          const char* op) {
    const Universe& src = p.universe();
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Monomial m(target.size());
        for (std::size_t s = 0; s < src.size(); ++s) {
            unsigned e = t.monomial[s];
            if (e == 0) continue;
            if (slot_map[s] == static_cast<std::size_t>(-1))
                throw UniverseMismatch(std::string(op) + ": variable " + src.variable_at(s).name() +
                                       " has no image in target universe");
            m.set(slot_map[s], e);
        }
        out.push_back(Term{std::move(m), t.coeff});
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    // Distinct source monomials map to distinct targets (injective slot map).
    return Polynomial::from_canonical(target, std::move(out));
}

}  // namespace

Polynomial relabel_x(const Polynomial& p, std::span<const int> targets, Universe target) {
    const Universe& src = p.universe();
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> slot_map(src.size(), none);
    slot_map[0] = 0;
    std::vector<int> seen;
    for (int r = 1; r <= src.n_x; ++r) {
        if (static_cast<std::size_t>(r) > targets.size()) break;
        int dest = targets[r - 1];
        if (std::find(seen.begin(), seen.end(), dest) != seen.end())
            throw std::invalid_argument("relabel_x: targets must be distinct");
        seen.push_back(dest);
        slot_map[static_cast<std::size_t>(r)] = target.slot(Variable::x(dest));
    }
    for (int j = 1; j <= src.n_y; ++j)
        if (target.contains(Variable::y(j))) slot_map[src.slot(Variable::y(j))] = target.slot(Variable::y(j));
    return move_exponents(p, slot_map, target, "relabel_x");
}

Polynomial embed(const Polynomial& p, Universe target) {
    if (p.universe() == target) return p;
    const Universe& src = p.universe();
    constexpr auto none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> slot_map(src.size(), none);
    for (std::size_t s = 0; s < src.size(); ++s) {
        Variable v = src.variable_at(s);
        if (target.contains(v)) slot_map[s] = target.slot(v);
    }
    return move_exponents(p, slot_map, target, "embed");
}

Polynomial swap_x(const Polynomial& p, int i) {
    const Universe& u = p.universe();
    if (i < 1 || i + 1 > u.n_x) throw IndexOutOfUniverse("swap_x: index out of range");
    std::vector<std::size_t> slot_map(u.size());
    for (std::size_t s = 0; s < u.size(); ++s) slot_map[s] = s;
    std::swap(slot_map[static_cast<std::size_t>(i)], slot_map[static_cast<std::size_t>(i + 1)]);
    return move_exponents(p, slot_map, u, "swap_x");
}

// ---------------------------------------------------------------------------
// Exact division

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
    require_same_universe(p, d, "exact_div");
    if (d.is_zero()) throw DivisionByZero("exact_div: division by the zero polynomial");
    const Universe u = p.universe();
    std::map<Monomial, Integer, std::greater<>> rem;
    for (const auto& t : p.terms()) rem.emplace(t.monomial, t.coeff);

    const Term& lead = d.leading_term();
    std::vector<Term> quotient;
    Integer qc, prod;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead.monomial.divides(it->first) ||
            mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t()) == 0) {
            throw NotDivisible("exact_div: nonzero remainder (leading remainder term not divisible)");
        }
        Monomial qm = it->first / lead.monomial;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
        for (const auto& dt : d.terms()) {
            mpz_mul(prod.get_mpz_t(), qc.get_mpz_t(), dt.coeff.get_mpz_t());
            auto [pos, inserted] = rem.try_emplace(qm * dt.monomial);
            pos->second -= prod;
            if (pos->second == 0) rem.erase(pos);
        }
        quotient.push_back(Term{std::move(qm), qc});
    }
    // Quotient terms are produced in descending order already.
    return Polynomial::from_canonical(u, std::move(quotient));
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

void check_square(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument("determinant: matrix is not square");
    if (m.size() > 24) throw std::invalid_argument("determinant: size exceeds subset-memoization limit");
    for (const auto& row : m)
        for (const auto& e : row) require_same_universe(e, m[0][0], "determinant");
}

// Value of the minor on rows 0..|mask|-1 and columns `mask`.
Polynomial minor_from_subsets(const PolyMatrix& m, const std::vector<Polynomial>& f, unsigned mask) {
    const int row = std::popcount(mask) - 1;
    const std::size_t n = m.size();
    PolynomialBuilder b(m[0][0].universe());
    for (std::size_t c = 0; c < n; ++c) {
        if (!(mask & (1u << c))) continue;
        const unsigned sub = mask & ~(1u << c);
        const Polynomial& prev = f[sub];
        const Polynomial& entry = m[static_cast<std::size_t>(row)][c];
        if (prev.is_zero() || entry.is_zero()) continue;
        const int above = std::popcount(sub >> (c + 1));
        if (above % 2 == 0) {
            b.add_product(prev, entry);
        } else {
            b.add_product(prev, -entry);
        }
    }
    return std::move(b).finish();
}

Polynomial determinant_impl(const PolyMatrix& m, int threads) {
    check_square(m);
    const std::size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix has no universe");
    const Universe u = m[0][0].universe();
    const unsigned full = (1u << n) - 1u;
    std::vector<Polynomial> f(std::size_t{1} << n, Polynomial(u));
    f[0] = Polynomial::one(u);

    std::vector<std::vector<unsigned>> levels(n + 1);
    for (unsigned mask = 1; mask <= full; ++mask) levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    for (std::size_t level = 1; level <= n; ++level) {
        const auto& masks = levels[level];
        const auto count = static_cast<std::int64_t>(masks.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic) if (threads > 1)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            f[masks[static_cast<std::size_t>(idx)]] = minor_from_subsets(m, f, masks[static_cast<std::size_t>(idx)]);
        }
        if (level >= 2)
            for (unsigned mask : levels[level - 2]) f[mask] = Polynomial(u);
    }
    return std::move(f[full]);
}

}  // namespace

Polynomial determinant_serial(const PolyMatrix& m) { return determinant_impl(m, 1); }

Polynomial determinant_parallel(const PolyMatrix& m, int threads) {
    return determinant_impl(m, std::max(threads, 1));
}

Polynomial determinant(const PolyMatrix& m) {
    const int t = num_threads();
    return t > 1 ? determinant_parallel(m, t) : determinant_serial(m);
}

// ---------------------------------------------------------------------------
// Evaluation

const Rational& RationalPoint::value(Variable v) const {
    switch (v.kind) {
        case VarKind::beta: return beta;
        case VarKind::x: return x.at(static_cast<std::size_t>(v.index - 1));
        case VarKind::y: return y.at(static_cast<std::size_t>(v.index - 1));
    }
    return beta;
}

Rational eval_rational(const Polynomial& p, const RationalPoint& pt) {
    const Universe& u = p.universe();
    if (pt.x.size() < static_cast<std::size_t>(u.n_x) || pt.y.size() < static_cast<std::size_t>(u.n_y))
        throw UniverseMismatch("eval_rational: point does not cover the universe");
    std::vector<std::vector<Rational>> powers(u.size());
    auto power = [&](std::size_t s, unsigned e) -> const Rational& {
        auto& cache = powers[s];
        if (cache.empty()) cache.emplace_back(1);
        const Rational& base = pt.value(u.variable_at(s));
        while (cache.size() <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Rational total = 0;
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t s = 0; s < u.size(); ++s)
            if (t.monomial[s] != 0) v *= power(s, t.monomial[s]);
        total += v;
    }
    return total;
}

}  // namespace groth
