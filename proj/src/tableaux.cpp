#include "groth/tableaux.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "groth/parallel.hpp"

namespace groth {

// ---------------------------------------------------------------------------
// Partitions

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InvalidShape("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidShape("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string item;
    std::stringstream ss(text);
    if (text.find_first_not_of(" \t") == std::string::npos) return Partition{};
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw InvalidShape("shape: '" + item + "' is not an integer");
        }
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw InvalidShape("shape: '" + item + "' is not an integer");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

std::vector<int> Partition::padded(int n) const {
    if (length() > n)
        throw InvalidShape("shape " + to_string() + " has more than n=" + std::to_string(n) + " nonzero parts");
    std::vector<int> out(parts_);
    out.resize(static_cast<std::size_t>(n), 0);
    return out;
}

std::vector<int> Partition::columns() const {
    std::vector<int> cols(static_cast<std::size_t>(max_part()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return cols;
}

bool Partition::contained_in(const Partition& box) const {
    if (length() > box.length()) return false;
    for (int i = 1; i <= length(); ++i)
        if (part(i) > box.part(i)) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto& self, int bound) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows) return;
        for (int v = 1; v <= bound; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                            b.parts().end());
    });
    return out;
}

// ---------------------------------------------------------------------------
// Entry sets

int set_min(EntrySet s) { return s == 0 ? 0 : std::countr_zero(s) + 1; }
int set_max(EntrySet s) { return s == 0 ? 0 : 32 - std::countl_zero(s); }

std::vector<int> set_entries(EntrySet s) {
    std::vector<int> out;
    for (int t = 1; s != 0; ++t, s >>= 1)
        if (s & 1u) out.push_back(t);
    return out;
}

namespace {

// Nonempty subsets of [n], sorted lexicographically by entry list.
std::vector<EntrySet> lex_subsets(int n) {
    std::vector<EntrySet> out;
    // Lex order on sorted lists is a preorder walk: {a}, then {a} + lex_subsets(a+1..n).
    auto rec = [&](auto& self, EntrySet prefix, int from) -> void {
        for (int t = from; t <= n; ++t) {
            EntrySet s = prefix | (EntrySet{1} << (t - 1));
            out.push_back(s);
            self(self, s, t + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    if (n > 31) throw std::invalid_argument("n must be at most 31 for tableau enumeration");
}

}  // namespace

// ---------------------------------------------------------------------------
// Tableaux

std::vector<Square> cells_row_major(const Partition& shape) {
    std::vector<Square> cells;
    for (int i = 1; i <= shape.length(); ++i)
        for (int j = 1; j <= shape.part(i); ++j) cells.push_back({i, j});
    return cells;
}

SetValuedTableau::SetValuedTableau(Partition shape, std::vector<EntrySet> fill)
    : shape_(std::move(shape)), fill_(std::move(fill)) {
    if (static_cast<int>(fill_.size()) != shape_.size())
        throw std::invalid_argument("tableau fill does not cover the shape");
    for (auto s : fill_)
        if (s == 0) throw std::invalid_argument("tableau cells must hold nonempty sets");
}

EntrySet SetValuedTableau::at(Square s) const {
    if (s.row < 1 || s.row > shape_.length() || s.col < 1 || s.col > shape_.part(s.row))
        throw std::out_of_range("square outside the shape");
    int idx = 0;
    for (int i = 1; i < s.row; ++i) idx += shape_.part(i);
    return fill_[static_cast<std::size_t>(idx + s.col - 1)];
}

std::vector<Square> SetValuedTableau::cells() const { return cells_row_major(shape_); }

int SetValuedTableau::total_entries() const {
    int t = 0;
    for (auto s : fill_) t += std::popcount(s);
    return t;
}

bool SetValuedTableau::all_singletons() const {
    return std::all_of(fill_.begin(), fill_.end(), [](EntrySet s) { return std::popcount(s) == 1; });
}

bool is_valid_tableau(const SetValuedTableau& t, int n) {
    const Partition& sh = t.shape();
    if (static_cast<int>(t.fill().size()) != sh.size()) return false;
    for (auto cell : t.cells()) {
        EntrySet s = t.at(cell);
        if (s == 0) return false;
        for (int e : set_entries(s))
            if (e < 1 || e > n) return false;
        if (cell.col > 1) {
            EntrySet left = t.at({cell.row, cell.col - 1});
            if (!(set_max(left) <= set_min(s))) return false;
        }
        if (cell.row > 1) {
            EntrySet up = t.at({cell.row - 1, cell.col});
            if (!(set_max(up) < set_min(s))) return false;
        }
    }
    return true;
}

int required_y(const Partition& shape, int n) {
    auto cols = shape.columns();
    int need = 0;
    for (std::size_t j = 0; j < cols.size(); ++j)
        need = std::max(need, n + static_cast<int>(j + 1) - cols[j]);
    return need;
}

// ---------------------------------------------------------------------------
// Stream

namespace {

struct Layout {
    std::vector<Square> cells;
    std::vector<int> cap, left, above;
    bool feasible = true;
};

Layout make_layout(const Partition& shape, int n) {
    Layout L;
    L.cells = cells_row_major(shape);
    auto cols = shape.columns();
    std::vector<int> row_start(static_cast<std::size_t>(shape.length()) + 1, 0);
    for (int i = 1; i < shape.length(); ++i) row_start[static_cast<std::size_t>(i)] = row_start[static_cast<std::size_t>(i - 1)] + shape.part(i);
    for (const auto& c : L.cells) {
        int below = cols[static_cast<std::size_t>(c.col - 1)] - c.row;
        int cap = n - below;
        L.cap.push_back(cap);
        if (cap < c.row) L.feasible = false;
        L.left.push_back(c.col > 1 ? row_start[static_cast<std::size_t>(c.row - 1)] + c.col - 2 : -1);
        L.above.push_back(c.row > 1 ? row_start[static_cast<std::size_t>(c.row - 2)] + c.col - 1 : -1);
    }
    return L;
}

int bound_for(const Layout& L, const std::vector<EntrySet>& fill, std::size_t idx) {
    int lb = 1;
    if (L.left[idx] >= 0) lb = std::max(lb, set_max(fill[static_cast<std::size_t>(L.left[idx])]));
    if (L.above[idx] >= 0) lb = std::max(lb, set_max(fill[static_cast<std::size_t>(L.above[idx])]) + 1);
    return lb;
}

}  // namespace

TableauStream::TableauStream(Partition shape, int n, bool singletons_only) : shape_(std::move(shape)), n_(n) {
    check_n(n);
    Layout L = make_layout(shape_, n);
    cells_ = std::move(L.cells);
    cap_ = std::move(L.cap);
    left_ = std::move(L.left);
    above_ = std::move(L.above);
    if (!L.feasible) done_ = !cells_.empty();
    for (EntrySet s : lex_subsets(n))
        if (!singletons_only || std::popcount(s) == 1) candidates_.push_back(s);
    choice_.assign(cells_.size(), -1);
    fill_.assign(cells_.size(), 0);
}

int TableauStream::lower_bound(std::size_t idx) const {
    int lb = 1;
    if (left_[idx] >= 0) lb = std::max(lb, set_max(fill_[static_cast<std::size_t>(left_[idx])]));
    if (above_[idx] >= 0) lb = std::max(lb, set_max(fill_[static_cast<std::size_t>(above_[idx])]) + 1);
    return lb;
}

bool TableauStream::advance_cell(std::size_t idx) {
    const int lb = lower_bound(idx);
    for (int c = choice_[idx] + 1; c < static_cast<int>(candidates_.size()); ++c) {
        EntrySet s = candidates_[static_cast<std::size_t>(c)];
        if (set_min(s) >= lb && set_max(s) <= cap_[idx]) {
            choice_[idx] = c;
            fill_[idx] = s;
            return true;
        }
    }
    return false;
}

std::optional<SetValuedTableau> TableauStream::next() {
    if (done_) return std::nullopt;
    const std::size_t N = cells_.size();
    if (N == 0) {
        done_ = true;
        return SetValuedTableau(shape_, {});
    }
    std::size_t idx;
    if (!started_) {
        started_ = true;
        idx = 0;
        choice_[0] = -1;
    } else {
        idx = N - 1;
    }
    while (true) {
        if (advance_cell(idx)) {
            if (idx == N - 1) return SetValuedTableau(shape_, fill_);
            ++idx;
            choice_[idx] = -1;
        } else {
            if (idx == 0) {
                done_ = true;
                return std::nullopt;
            }
            --idx;
        }
    }
}

std::vector<SetValuedTableau> enumerate(const Partition& shape, int n) {
    std::vector<SetValuedTableau> out;
    TableauStream s(shape, n);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<SetValuedTableau> enumerate_ssyt(const Partition& shape, int n) {
    std::vector<SetValuedTableau> out;
    TableauStream s(shape, n, true);
    while (auto t = s.next()) out.push_back(std::move(*t));
    return out;
}

std::uint64_t count(const Partition& shape, int n) {
    std::uint64_t c = 0;
    TableauStream s(shape, n);
    while (s.next()) ++c;
    return c;
}

std::uint64_t count_ssyt(const Partition& shape, int n) {
    std::uint64_t c = 0;
    TableauStream s(shape, n, true);
    while (s.next()) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// Weights

namespace {

Polynomial cell_factor(EntrySet s, int content, Universe u) {
    Polynomial f = Polynomial::one(u);
    for (int t : set_entries(s)) f = mul(f, circle_plus(u, t, t + content));
    const int excess = std::popcount(s) - 1;
    if (excess > 0) f = mul(f, pow(Polynomial::variable(u, Variable::beta()), static_cast<unsigned>(excess)));
    return f;
}

void check_universe(const Partition& shape, int n, Universe u) {
    if (u.n_x < n)
        throw IndexOutOfUniverse("tableau sum needs n_x >= " + std::to_string(n) + ", universe has " +
                                 std::to_string(u.n_x));
    if (!shape.empty() && u.n_y < required_y(shape, n))
        throw IndexOutOfUniverse("tableau sum needs n_y >= " + std::to_string(required_y(shape, n)) +
                                 ", universe has " + std::to_string(u.n_y));
}

// Shared state for the prefix-product traversal.
struct SumKernel {
    Layout layout;
    Universe u;
    std::vector<EntrySet> candidates;
    // factor[cell][candidate]; empty polynomial slot means "not admissible by cap".
    std::vector<std::vector<Polynomial>> factor;

    SumKernel(const Partition& shape, int n, Universe uni) : layout(make_layout(shape, n)), u(uni) {
        candidates = lex_subsets(n);
        std::map<std::pair<int, EntrySet>, Polynomial> cache;
        factor.resize(layout.cells.size());
        for (std::size_t c = 0; c < layout.cells.size(); ++c) {
            const int content = layout.cells[c].content();
            factor[c].resize(candidates.size(), Polynomial(u));
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                EntrySet s = candidates[k];
                if (set_max(s) > layout.cap[c] || set_min(s) < layout.cells[c].row) continue;
                auto key = std::make_pair(content, s);
                auto it = cache.find(key);
                if (it == cache.end()) it = cache.emplace(key, cell_factor(s, content, u)).first;
                factor[c][k] = it->second;
            }
        }
    }

    template <typename F>
    void for_each_choice(const std::vector<EntrySet>& fill, std::size_t idx, F&& f) const {
        const int lb = bound_for(layout, fill, idx);
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            EntrySet s = candidates[k];
            if (set_min(s) >= lb && set_max(s) <= layout.cap[idx]) f(k, s);
        }
    }

    void dfs(std::vector<EntrySet>& fill, std::size_t idx, const Polynomial& prefix, PolynomialBuilder& out) const {
        const bool last = idx + 1 == layout.cells.size();
        for_each_choice(fill, idx, [&](std::size_t k, EntrySet s) {
            fill[idx] = s;
            if (last) {
                out.add_product(prefix, factor[idx][k]);
            } else {
                dfs(fill, idx + 1, mul_serial(prefix, factor[idx][k]), out);
            }
        });
    }
};

}  // namespace

Polynomial weight(const SetValuedTableau& t, Universe u) {
    Polynomial w = Polynomial::one(u);
    auto cells = t.cells();
    for (std::size_t c = 0; c < cells.size(); ++c) {
        EntrySet s = t.fill()[c];
        for (int e : set_entries(s)) {
            if (e > u.n_x) throw IndexOutOfUniverse("weight: entry exceeds n_x");
            if (e + cells[c].content() > u.n_y)
                throw IndexOutOfUniverse("weight: needs y_" + std::to_string(e + cells[c].content()) +
                                         " but n_y=" + std::to_string(u.n_y));
            w = mul(w, circle_plus(u, e, e + cells[c].content()));
        }
    }
    const int excess = t.total_entries() - t.shape().size();
    if (excess > 0) w = mul(w, pow(Polynomial::variable(u, Variable::beta()), static_cast<unsigned>(excess)));
    return w;
}

Polynomial tableau_sum_reference(const Partition& shape, int n, Universe u) {
    check_n(n);
    PolynomialBuilder b(u);
    TableauStream s(shape, n);
    bool checked = false;
    while (auto t = s.next()) {
        if (!checked) {
            check_universe(shape, n, u);
            checked = true;
        }
        b.add(weight(*t, u));
    }
    return std::move(b).finish();
}

Polynomial tableau_sum_serial(const Partition& shape, int n, Universe u) {
    check_n(n);
    if (shape.empty()) return Polynomial::one(u);
    Layout probe = make_layout(shape, n);
    if (!probe.feasible) return Polynomial(u);
    check_universe(shape, n, u);
    SumKernel k(shape, n, u);
    std::vector<EntrySet> fill(k.layout.cells.size(), 0);
    PolynomialBuilder out(u);
    k.dfs(fill, 0, Polynomial::one(u), out);
    return std::move(out).finish();
}

Polynomial tableau_sum_parallel(const Partition& shape, int n, Universe u, int threads) {
    check_n(n);
    if (threads <= 1) return tableau_sum_serial(shape, n, u);
    if (shape.empty()) return Polynomial::one(u);
    Layout probe = make_layout(shape, n);
    if (!probe.feasible) return Polynomial(u);
    check_universe(shape, n, u);
    SumKernel k(shape, n, u);
    const std::size_t N = k.layout.cells.size();

    // Breadth-first expansion of the traversal prefix until there is enough
    // work to spread; task order equals depth-first order.
    struct Task {
        std::vector<EntrySet> fill;
        Polynomial prefix;
    };
    std::vector<Task> tasks{{std::vector<EntrySet>(N, 0), Polynomial::one(u)}};
    std::size_t depth = 0;
    const std::size_t want = static_cast<std::size_t>(threads) * 8;
    while (depth + 1 < N && tasks.size() < want) {
        std::vector<Task> next;
        for (auto& t : tasks) {
            k.for_each_choice(t.fill, depth, [&](std::size_t c, EntrySet s) {
                Task child{t.fill, mul_serial(t.prefix, k.factor[depth][c])};
                child.fill[depth] = s;
                next.push_back(std::move(child));
            });
        }
        tasks = std::move(next);
        ++depth;
    }

    std::vector<Polynomial> partial(tasks.size(), Polynomial(u));
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        auto& t = tasks[static_cast<std::size_t>(i)];
        PolynomialBuilder out(u);
        k.dfs(t.fill, depth, t.prefix, out);
        partial[static_cast<std::size_t>(i)] = std::move(out).finish();
    }
    Polynomial total(u);
    for (const auto& p : partial) total += p;
    return total;
}

Polynomial tableau_sum(const Partition& shape, int n, Universe u) {
    const int t = num_threads();
    return t > 1 ? tableau_sum_parallel(shape, n, u, t) : tableau_sum_serial(shape, n, u);
}

}  // namespace groth
