#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "groth/suite.hpp"

namespace groth::cli {

namespace {

struct Config {
    std::string command;
    std::string identity;
    std::optional<std::string> shape;
    std::optional<int> n, k, m;
    std::string method = "tableau";
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    unsigned fast_trials = 0;
    bool fast_only = false;
    std::string out;
    std::vector<int> criteria;
};

// Invalid-parameter errors detected by the front end itself.
struct Invalid : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parts_given(const std::string& shape) {
    if (shape.find_first_not_of(" \t") == std::string::npos) return 0;
    return static_cast<int>(std::count(shape.begin(), shape.end(), ',')) + 1;
}

Partition shape_of(const Config& c, const std::string& who) {
    if (!c.shape) throw Invalid(who + ": --shape is required");
    return Partition::parse(*c.shape);
}

int need(const std::optional<int>& v, const char* flag, const std::string& who) {
    if (!v) throw Invalid(who + ": " + flag + " is required");
    return *v;
}

int n_of(const Config& c, const std::string& who) {
    int n = need(c.n, "--n", who);
    if (n < 1) throw Invalid(who + ": --n must be a positive integer (number of x-variables)");
    return n;
}

// k defaults to the number of parts written on the command line, zeros included.
int k_of(const Config& c, const std::string& who) {
    if (c.k) return *c.k;
    if (c.shape) return parts_given(*c.shape);
    throw Invalid(who + ": --k is required");
}

Method method_of(const std::string& s) {
    auto m = parse_method(s);
    if (!m) throw Invalid("unknown method '" + s + "' (tableau, determinant, divided-difference)");
    return *m;
}

std::string render(const Polynomial& p, const std::string& format) {
    if (format == "json") return to_json(p).dump(2);
    if (format == "latex") return to_latex(p);
    return p.to_string();
}

std::string render_set(EntrySet s) {
    std::string out = "{";
    bool first = true;
    for (int e : set_entries(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

int cmd_compute(const Config& c, std::ostream& out) {
    const Partition shape = shape_of(c, "compute");
    const int n = n_of(c, "compute");
    const Universe u = default_universe(shape, n);
    if (c.method != "all") {
        const Method m = method_of(c.method);
        out << render(evaluate(m, shape, n, u), c.format) << "\n";
        return kPass;
    }
    const Method all[] = {Method::tableau, Method::determinant, Method::divided_difference};
    std::vector<Polynomial> results;
    for (Method m : all) results.push_back(evaluate(m, shape, n, u));
    const bool agree = results[0] == results[1] && results[1] == results[2];
    if (c.format == "json") {
        json j;
        for (std::size_t i = 0; i < results.size(); ++i) j[to_string(all[i])] = to_json(results[i]);
        j["methods_agree"] = agree;
        out << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < results.size(); ++i)
            out << to_string(all[i]) << ": " << render(results[i], c.format) << "\n";
        out << "methods agree: " << (agree ? "true" : "false") << "\n";
    }
    return agree ? kPass : kFail;
}

int cmd_tableaux(const Config& c, std::ostream& out) {
    const Partition shape = shape_of(c, "tableaux");
    const int n = n_of(c, "tableaux");
    TableauStream stream(shape, n, false);
    if (c.format == "json") {
        json list = json::array();
        while (auto t = stream.next()) list.push_back(to_json(*t));
        json j;
        j["shape"] = json(std::vector<int>(shape.parts().begin(), shape.parts().end()));
        j["n"] = n;
        j["count"] = list.size();
        j["tableaux"] = std::move(list);
        out << j.dump(2) << "\n";
        return kPass;
    }
    if (c.format == "latex") throw Invalid("tableaux: --format latex is not supported (text or json)");
    std::uint64_t count = 0;
    while (auto t = stream.next()) {
        ++count;
        std::vector<Square> cells = t->cells();
        int row = 0;
        for (const Square& s : cells) {
            if (s.row != row) {
                if (row != 0) out << "\n";
                out << "  ";
                row = s.row;
            } else {
                out << " ";
            }
            out << render_set(t->at(s));
        }
        out << "\n\n";
    }
    out << "count: " << count << "\n";
    return kPass;
}

IdentityReport dispatch_verify(const Config& c, const VerifyOptions& opt) {
    const std::string& id = c.identity;
    auto kind = parse_identity(id);
    if (!kind) throw Invalid("verify: unknown identity '" + id + "'");
    switch (*kind) {
        case IdentityKind::gm_type:
            return verify_gm_type(shape_of(c, id), k_of(c, id), n_of(c, id), opt);
        case IdentityKind::fnr_type:
            return verify_fnr_type(shape_of(c, id), k_of(c, id), need(c.m, "--m", id), n_of(c, id), opt);
        case IdentityKind::vandermonde_lemma: return verify_vandermonde_lemma(n_of(c, id), opt);
        case IdentityKind::e_beta_recurrence: return verify_e_beta_recurrence(k_of(c, id), n_of(c, id), opt);
        case IdentityKind::good_general: return verify_good_general(n_of(c, id), opt);
        case IdentityKind::louck_general: return verify_louck_general(need(c.m, "--m", id), n_of(c, id), opt);
        case IdentityKind::good_k_general: return verify_good_k_general(n_of(c, id), k_of(c, id), opt);
        case IdentityKind::classical_gm:
            return verify_classical_gm(shape_of(c, id), k_of(c, id), n_of(c, id), opt);
        case IdentityKind::classical_fnr:
            return verify_classical_fnr(shape_of(c, id), k_of(c, id), need(c.m, "--m", id), n_of(c, id), opt);
        case IdentityKind::classical_louck: return verify_classical_louck(need(c.m, "--m", id), n_of(c, id), opt);
        case IdentityKind::classical_good: return verify_classical_good(n_of(c, id), 100, opt);
    }
    throw Invalid("verify: unknown identity '" + id + "'");
}

VerifyOptions verify_options(const Config& c) {
    VerifyOptions opt;
    if (c.method == "all") throw Invalid("verify: --method all is only meaningful for compute");
    opt.method = method_of(c.method);
    opt.fast_trials = c.fast_trials;
    opt.fast_only = c.fast_only;
    opt.seed = c.seed.value_or(0);
    return opt;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const IdentityReport r = dispatch_verify(c, verify_options(c));
    if (c.format == "json") {
        out << r.to_json().dump(2) << "\n";
    } else if (c.format == "latex") {
        out << "lhs: " << to_latex(r.lhs) << "\n" << "rhs: " << to_latex(r.rhs) << "\n";
        out << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
    } else {
        out << to_string(r.identity) << " " << r.params.dump() << ": " << (r.pass ? "pass" : "fail") << " ("
            << (r.exact ? "exact" : "sampling only, not a proof") << "; lhs " << r.lhs.size() << " terms, rhs "
            << r.rhs.size() << " terms)\n";
        if (!r.note.empty()) out << "note: " << r.note << "\n";
        if (r.witness) out << "witness: " << to_json(*r.witness).dump() << "\n";
    }
    return r.pass ? kPass : kFail;
}

int cmd_suite(const Config& c, std::ostream& out) {
    SuiteOptions opt;
    opt.verify = verify_options(c);
    if (c.seed) opt.seed = *c.seed;
    opt.verify.seed = opt.seed;
    for (int id : c.criteria)
        if (id < 1 || id > kCriterionCount)
            throw Invalid("suite: --criteria entries must lie in 1.." + std::to_string(kCriterionCount));
    opt.only = c.criteria;
    const bool text = c.format != "json";
    if (c.format == "latex") throw Invalid("suite: --format latex is not supported (text or json)");
    if (text && c.fast_only) out << "mode: sampling pre-check only (random rational points), not a proof\n";
    if (text) opt.on_result = [&](const CriterionResult& r) {
            char line[256];
            std::snprintf(line, sizeof line, "criterion %d  %-4s  cases %4d  failures %3d  %8.2f s", r.id,
                          r.pass() ? "pass" : "FAIL", r.cases, r.failures, r.elapsed_s);
            out << line;
            if (r.budget_s > 0) out << " (budget " << r.budget_s << " s)";
            out << "  " << r.title << "\n";
            for (const auto& d : r.details) out << "    " << d << "\n";
            out.flush();
        };
    std::vector<CriterionResult> results = run_suite(opt);
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass(); });
    if (!text) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(r.to_json());
        out << arr.dump(2) << "\n";
    } else {
        out << "suite: " << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " of " +
                                                                    std::to_string(results.size()) +
                                                                    " criteria fail")
            << "\n";
    }
    return failed == 0 ? kPass : kFail;
}

void add_common(CLI::App* sub, Config& c) {
    sub->add_option("--shape", c.shape, "partition, comma separated (zeros allowed)");
    sub->add_option("--n", c.n, "number of x-variables");
    sub->add_option("--k", c.k, "subset size (default: number of parts given)");
    sub->add_option("--m", c.m, "bracket exponent m");
    sub->add_option("--method", c.method, "tableau | determinant | divided-difference | all");
    sub->add_option("--format", c.format, "text | json | latex")->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--seed", c.seed, "seed for the randomized checks");
    sub->add_option("--fast-trials", c.fast_trials, "random-point pre-checks before the exact comparison");
    sub->add_flag("--fast-only", c.fast_only, "random-point checks only (no proof)");
    sub->add_option("--out", c.out, "write output to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"factorial Grothendieck polynomials: construction and identity verification", "grothendieck"};
    app.require_subcommand(1);
    auto* compute = app.add_subcommand("compute", "compute G_lambda(x|y)");
    auto* tableaux = app.add_subcommand("tableaux", "enumerate set-valued tableaux");
    auto* verify = app.add_subcommand("verify", "verify one identity exactly");
    auto* suite = app.add_subcommand("suite", "run the full acceptance grid");
    for (auto* s : {compute, tableaux, verify, suite}) add_common(s, c);
    verify->add_option("identity", c.identity, "identity tag")->required();
    suite->add_option("--criteria", c.criteria, "run only these criteria")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) {
            err << "error: cannot open --out file '" << c.out << "'\n";
            return kInvalid;
        }
        sink = &file;
    }

    try {
        if (compute->parsed()) return cmd_compute(c, *sink);
        if (tableaux->parsed()) return cmd_tableaux(c, *sink);
        if (verify->parsed()) return cmd_verify(c, *sink);
        return cmd_suite(c, *sink);
    } catch (const Invalid& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        // PreconditionViolated, InvalidShape, UniverseMismatch
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: internal failure: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace groth::cli
