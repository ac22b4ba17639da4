#include "groth/json_io.hpp"

#include <string>

namespace groth {

namespace {

Variable parse_variable_key(const std::string& key) {
    if (key == "b") return Variable::beta();
    if (key.size() >= 2 && (key[0] == 'x' || key[0] == 'y')) {
        std::size_t pos = 0;
        int idx = std::stoi(key.substr(1), &pos);
        if (pos + 1 == key.size()) return key[0] == 'x' ? Variable::x(idx) : Variable::y(idx);
    }
    throw std::invalid_argument("polynomial JSON: unknown variable key '" + key + "'");
}

}  // namespace

json to_json(const Polynomial& p) {
    const Universe& u = p.universe();
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json exps = json::object();
        for (std::size_t s = 0; s < t.monomial.nvars(); ++s)
            if (t.monomial[s] != 0) exps[u.variable_at(s).name()] = t.monomial[s];
        terms.push_back(json{{"coeff", t.coeff.get_str()}, {"exps", std::move(exps)}});
    }
    return json{{"universe", {{"n_x", u.n_x}, {"n_y", u.n_y}}}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    Universe u(j.at("universe").at("n_x").get<int>(), j.at("universe").at("n_y").get<int>());
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        Monomial m(u.size());
        for (const auto& [key, e] : t.at("exps").items()) m.set(u.slot(parse_variable_key(key)), e.get<unsigned>());
        Integer c;
        if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
            throw std::invalid_argument("polynomial JSON: bad coefficient");
        terms.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(u, std::move(terms));
}

json to_json(const SetValuedTableau& t) {
    json shape = json::array();
    for (int p : t.shape().parts()) shape.push_back(p);
    json fill = json::array();
    auto cells = t.cells();
    for (std::size_t c = 0; c < cells.size(); ++c)
        fill.push_back(json::array({cells[c].row, cells[c].col, set_entries(t.fill()[c])}));
    return json{{"shape", std::move(shape)}, {"fill", std::move(fill)}};
}

SetValuedTableau tableau_from_json(const json& j) {
    Partition shape(j.at("shape").get<std::vector<int>>());
    auto cells = cells_row_major(shape);
    const auto& fill = j.at("fill");
    if (fill.size() != cells.size()) throw std::invalid_argument("tableau JSON: fill does not match shape");
    std::vector<EntrySet> sets;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto& cell = fill[c];
        if (cell.at(0).get<int>() != cells[c].row || cell.at(1).get<int>() != cells[c].col)
            throw std::invalid_argument("tableau JSON: cells must be listed in row-major order");
        EntrySet s = 0;
        for (int e : cell.at(2).get<std::vector<int>>()) {
            if (e < 1 || e > 31) throw std::invalid_argument("tableau JSON: entry out of range");
            s |= EntrySet{1} << (e - 1);
        }
        sets.push_back(s);
    }
    return SetValuedTableau(std::move(shape), std::move(sets));
}

json to_json(const RationalPoint& pt) {
    json x = json::array(), y = json::array();
    for (const auto& v : pt.x) x.push_back(v.get_str());
    for (const auto& v : pt.y) y.push_back(v.get_str());
    return json{{"b", pt.beta.get_str()}, {"x", std::move(x)}, {"y", std::move(y)}};
}

RationalPoint point_from_json(const json& j) {
    auto parse = [](const std::string& s) {
        Rational q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("point JSON: bad rational '" + s + "'");
        q.canonicalize();
        return q;
    };
    RationalPoint pt;
    pt.beta = parse(j.at("b").get<std::string>());
    for (const auto& v : j.at("x")) pt.x.push_back(parse(v.get<std::string>()));
    for (const auto& v : j.at("y")) pt.y.push_back(parse(v.get<std::string>()));
    return pt;
}

}  // namespace groth
