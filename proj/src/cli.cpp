#include "omvar/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "omvar/arrangement.hpp"
#include "omvar/homology.hpp"
#include "omvar/matroid.hpp"
#include "omvar/supertope.hpp"
#include "omvar/varchenko.hpp"

namespace omvar {

namespace {

using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_guard = 3;

struct RunConfig {
    std::string input;
    std::string kind; // "arrangement", "covectors" or "" for by-extension
    uint64_t prime = Fp::default_prime;
    int trials = 20;
    uint64_t seed = 12345;
    size_t max_symbolic = 12;
    size_t max_faces = 5000;
    std::string json_out;
    std::string element_order;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--input", cfg.input, "input file")->required();
    cmd->add_option("--kind", cfg.kind,
                    "input kind: arrangement or covectors (default: by file "
                    "extension, .json means arrangement)")
        ->check(CLI::IsMember({"arrangement", "covectors"}));
    cmd->add_option("--prime", cfg.prime, "modulus for modular checks");
    cmd->add_option("--trials", cfg.trials, "modular trial count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "seed for all randomized checks");
    cmd->add_option("--max-symbolic", cfg.max_symbolic,
                    "symbolic determinant size guard");
    cmd->add_option("--max-faces", cfg.max_faces,
                    "order complex face guard");
    cmd->add_option("--json-out", cfg.json_out,
                    "also write the JSON report to this path");
    cmd->add_option("--element-order", cfg.element_order,
                    "relabel ground elements, e.g. \"2,0,1\" lists old "
                    "indices in their new order");
}

std::vector<int> parse_element_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(item, &pos);
        if (pos != item.size())
            throw parse_error("invalid element list: " + text);
        out.push_back(v);
    }
    return out;
}

uint64_t parse_element_mask(const std::string& text, uint32_t n) {
    uint64_t mask = 0;
    for (int e : parse_element_list(text)) {
        if (e < 0 || static_cast<uint32_t>(e) >= n)
            throw parse_error("element out of range: " + std::to_string(e));
        mask |= bit(static_cast<size_t>(e));
    }
    return mask;
}

// "0:+,2:-" -> (plus mask, minus mask)
std::pair<uint64_t, uint64_t> parse_signs(const std::string& text,
                                          uint32_t n) {
    uint64_t plus = 0, minus = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos || colon + 2 != item.size())
            throw parse_error("invalid sign pattern: " + text);
        int e = std::stoi(item.substr(0, colon));
        if (e < 0 || static_cast<uint32_t>(e) >= n)
            throw parse_error("element out of range: " + std::to_string(e));
        char s = item[colon + 1];
        if (s == '+')
            plus |= bit(static_cast<size_t>(e));
        else if (s == '-')
            minus |= bit(static_cast<size_t>(e));
        else
            throw parse_error("invalid sign pattern: " + text);
    }
    return {plus, minus};
}

OrientedMatroid load_input(const RunConfig& cfg) {
    std::string kind = cfg.kind;
    if (kind.empty())
        kind = cfg.input.size() > 5 &&
                       cfg.input.substr(cfg.input.size() - 5) == ".json"
                   ? "arrangement"
                   : "covectors";
    OrientedMatroid m = kind == "arrangement"
                            ? load_arrangement_file(cfg.input)
                            : load_covector_file(cfg.input);
    if (cfg.element_order.empty()) return m;

    auto order = parse_element_list(cfg.element_order);
    if (order.size() != m.ground_size())
        throw parse_error("--element-order must list every element once");
    std::vector<char> seen(m.ground_size(), 0);
    for (int e : order) {
        if (e < 0 || static_cast<uint32_t>(e) >= m.ground_size() || seen[e])
            throw parse_error("--element-order must list every element once");
        seen[e] = 1;
    }
    std::vector<SignVector> permuted;
    for (const auto& x : m.covectors()) {
        SignVector v(m.ground_size());
        for (size_t i = 0; i < order.size(); ++i)
            v.set(i, x[static_cast<size_t>(order[i])]);
        permuted.push_back(v);
    }
    return OrientedMatroid::from_covectors(GroundSet(m.ground_size()),
                                           std::move(permuted));
}

void emit(const json& doc, const RunConfig& cfg, std::ostream& out) {
    std::string text = doc.dump(2) + "\n";
    out << text;
    if (!cfg.json_out.empty()) {
        std::ofstream f(cfg.json_out, std::ios::binary);
        if (!f) throw parse_error("cannot write " + cfg.json_out);
        f << text;
    }
}

json axiom_report_json(const AxiomReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(
            {{"axiom", c.axiom}, {"pass", c.pass}, {"witnesses", c.witnesses}});
    return checks;
}

int cmd_axioms(const RunConfig& cfg, std::ostream& out) {
    OrientedMatroid m = load_input(cfg);
    AxiomReport rep = check_axioms(m);
    json doc;
    doc["command"] = "axioms";
    doc["input"] = cfg.input;
    doc["pass"] = rep.pass();
    doc["checks"] = axiom_report_json(rep);
    doc["covectors"] = m.covectors().size();
    doc["topes"] = m.topes().size();
    doc["rank"] = m.rank();
    emit(doc, cfg, out);
    return rep.pass() ? exit_pass : exit_fail;
}

int cmd_det(const RunConfig& cfg, const std::vector<std::string>& modes,
            std::ostream& out) {
    OrientedMatroid m = load_input(cfg);
    if (!is_prime_u64(cfg.prime))
        throw parse_error("--prime must be prime");
    bool want_symbolic = false, want_modp = false, want_formula = false;
    for (const auto& mode : modes) {
        if (mode == "symbolic") want_symbolic = true;
        else if (mode == "modp") want_modp = true;
        else if (mode == "formula") want_formula = true;
        else throw parse_error("unknown determinant mode: " + mode);
    }

    json doc;
    doc["command"] = "det";
    doc["input"] = cfg.input;
    bool pass = true;

    VarchenkoMatrix v = build_varchenko(m);
    std::vector<FactorTerm> factors;
    MultiPoly expanded(m.ground_size());
    if (want_formula) {
        factors = determinant_factorization(m);
        json jf = json::array();
        for (const auto& t : factors)
            jf.push_back({{"face", t.face.to_string()},
                          {"zeros", mask_elements(t.face.zero_mask())},
                          {"exponent", t.exponent}});
        doc["formula"] = jf;
        expanded = expand_factors(m, factors);
    }
    MultiPoly symbolic(m.ground_size());
    if (want_symbolic) {
        symbolic = det_symbolic(v.matrix, cfg.max_symbolic);
        doc["symbolic"] = symbolic.to_string();
        if (want_formula && expanded != symbolic) pass = false;
    }
    if (want_modp) {
        std::mt19937_64 rng(cfg.seed);
        json trials = json::array();
        for (int t = 0; t < cfg.trials; ++t) {
            std::vector<Fp> point;
            for (uint32_t i = 0; i < m.ground_size(); ++i)
                point.emplace_back(rand_below(rng, cfg.prime), cfg.prime);
            Fp direct = det_modp(eval_matrix(v.matrix, point));
            json trial;
            trial["det"] = direct.v;
            if (want_formula) {
                Fp from_formula(1, cfg.prime);
                for (const auto& term : factors) {
                    Fp f = term.factor.eval_modp(point);
                    from_formula =
                        from_formula *
                        f.pow(static_cast<uint64_t>(term.exponent));
                }
                trial["formula"] = from_formula.v;
                if (!(from_formula == direct)) pass = false;
            }
            if (want_symbolic) {
                Fp s = symbolic.eval_modp(point);
                trial["symbolic"] = s.v;
                if (!(s == direct)) pass = false;
            }
            trials.push_back(trial);
        }
        doc["modp"] = {{"prime", cfg.prime},
                       {"trials", trials},
                       {"seed", cfg.seed}};
    }
    doc["pass"] = pass;
    emit(doc, cfg, out);
    return pass ? exit_pass : exit_fail;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
    OrientedMatroid m = load_input(cfg);
    Report rep = verify_factorization(m, cfg.prime, cfg.trials, cfg.seed,
                                      cfg.max_symbolic);
    json doc;
    doc["command"] = "factorize";
    doc["input"] = cfg.input;
    doc["report"] = rep.to_json();
    emit(doc, cfg, out);
    return rep.pass ? exit_pass : exit_fail;
}

int cmd_supertope(const RunConfig& cfg, const std::string& plus,
                  const std::string& minus, const std::string& base,
                  std::ostream& out) {
    OrientedMatroid m = load_input(cfg);
    uint64_t p = parse_element_mask(plus, m.ground_size());
    uint64_t q = parse_element_mask(minus, m.ground_size());
    Supertope st = supertope(m, p, q);

    json doc;
    doc["command"] = "supertope";
    doc["input"] = cfg.input;
    json jt = json::array();
    for (const auto& t : st.topes) jt.push_back(t.to_string());
    doc["topes"] = jt;
    if (st.topes.empty()) {
        doc["pass"] = false;
        doc["error"] = "empty supertope";
        emit(doc, cfg, out);
        return exit_fail;
    }
    doc["closed"] = is_closed_supertope(m, p, q);

    std::vector<SignVector> bases;
    if (base.empty())
        bases = m.topes();
    else
        bases.push_back(SignVector::from_string(base));
    bool pass = true;
    json surr = json::object();
    for (const auto& r : bases) {
        if (!m.is_tope(r)) throw parse_error("--base is not a tope");
        bool ok = supertope_contractible_surrogate(m, r, p, q, cfg.max_faces);
        surr[r.to_string()] = ok;
        if (!ok) pass = false;
    }
    doc["contractible_surrogate"] = surr;
    doc["pass"] = pass;
    emit(doc, cfg, out);
    return pass ? exit_pass : exit_fail;
}

int cmd_cone(const RunConfig& cfg, const std::string& signs,
             std::ostream& out) {
    OrientedMatroid m = load_input(cfg);
    auto [plus, minus] = parse_signs(signs, m.ground_size());
    if ((plus | minus) == 0) throw parse_error("--signs is empty");

    json doc;
    doc["command"] = "cone";
    doc["input"] = cfg.input;
    if (supertope(m, plus, minus).topes.empty()) {
        doc["pass"] = false;
        doc["error"] = "empty supertope";
        emit(doc, cfg, out);
        return exit_fail;
    }
    Report rep = verify_cone_det(m, plus, minus, cfg.max_symbolic);
    doc["report"] = rep.to_json();
    doc["pass"] = rep.pass;
    emit(doc, cfg, out);
    return rep.pass ? exit_pass : exit_fail;
}

int cmd_invariance(const RunConfig& cfg, const std::string& reorient_set,
                   std::ostream& out) {
    OrientedMatroid m = load_input(cfg);
    uint64_t mask = parse_element_mask(reorient_set, m.ground_size());
    Report rep = verify_matroid_invariance(m, mask);
    json doc;
    doc["command"] = "invariance";
    doc["input"] = cfg.input;
    doc["report"] = rep.to_json();
    emit(doc, cfg, out);
    return rep.pass ? exit_pass : exit_fail;
}

int cmd_matroid(const RunConfig& cfg, std::ostream& out) {
    OrientedMatroid m = load_input(cfg);
    UnderlyingMatroid um = underlying(m);
    json doc;
    doc["command"] = "matroid";
    doc["input"] = cfg.input;
    doc["rank"] = um.rank();
    json jf = json::array();
    for (uint64_t flat : um.flats)
        jf.push_back({{"elements", mask_elements(flat)},
                      {"rank", um.rank_of_flat.at(flat)}});
    doc["flats"] = jf;
    uint64_t full = m.full_mask();
    long long b = full ? beta(um, full) : 0;
    doc["beta"] = b;
    json counts = json::object();
    bool pass = true;
    for (uint32_t e = 0; e < m.ground_size(); ++e) {
        long long c = bounded_tope_count(m, static_cast<int>(e));
        counts[std::to_string(e)] = c;
        if (c != 2 * b) pass = false;
    }
    doc["bounded_topes"] = counts;
    doc["pass"] = pass;
    emit(doc, cfg, out);
    return pass ? exit_pass : exit_fail;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact Varchenko determinants for oriented matroids"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> det_modes{"formula", "modp"};
    std::string st_plus, st_minus, st_base, cone_signs, reorient_set;

    CLI::App* axioms = app.add_subcommand(
        "axioms", "check the covector axioms of the input");
    add_common(axioms, cfg);

    CLI::App* det = app.add_subcommand(
        "det", "determinant of the Varchenko matrix, by several routes");
    add_common(det, cfg);
    det->add_option("--mode", det_modes,
                    "symbolic, modp and/or formula (repeatable)")
        ->delimiter(',');

    CLI::App* fact = app.add_subcommand(
        "factorize", "verify the transfer factorization of the matrix");
    add_common(fact, cfg);

    CLI::App* st = app.add_subcommand(
        "supertope", "supertope membership, closedness and contractibility "
                     "surrogate");
    add_common(st, cfg);
    st->add_option("--plus", st_plus, "elements forced positive, e.g. 0,2");
    st->add_option("--minus", st_minus, "elements forced negative");
    st->add_option("--base", st_base,
                   "base tope sign string (default: all topes)");

    CLI::App* cone = app.add_subcommand(
        "cone", "determinant factorization of a closed supertope submatrix");
    add_common(cone, cfg);
    cone->add_option("--signs", cone_signs, "sign pattern, e.g. 0:+,2:-")
        ->required();

    CLI::App* inv = app.add_subcommand(
        "invariance", "determinant exponents under reorientation");
    add_common(inv, cfg);
    inv->add_option("--reorient", reorient_set,
                    "elements to reorient, e.g. 0,2")
        ->required();

    CLI::App* mat = app.add_subcommand(
        "matroid", "underlying matroid: flats, beta, bounded topes");
    add_common(mat, cfg);

    std::vector<const char*> argv;
    argv.push_back("omvar");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()),
                  const_cast<char**>(argv.data()));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11's own machinery.
            return app.exit(e, out, err);
        }
        app.exit(e, out, err);
        return exit_input;
    }

    try {
        if (axioms->parsed()) return cmd_axioms(cfg, out);
        if (det->parsed()) return cmd_det(cfg, det_modes, out);
        if (fact->parsed()) return cmd_factorize(cfg, out);
        if (st->parsed())
            return cmd_supertope(cfg, st_plus, st_minus, st_base, out);
        if (cone->parsed()) return cmd_cone(cfg, cone_signs, out);
        if (inv->parsed()) return cmd_invariance(cfg, reorient_set, out);
        if (mat->parsed()) return cmd_matroid(cfg, out);
        err << "no subcommand\n";
        return exit_input;
    } catch (const guard_error& e) {
        err << "guard: " << e.what() << "\n";
        return exit_guard;
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace omvar
