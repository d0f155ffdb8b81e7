// modelkit: command-line front end for model-domain analysis.
//
// Domain file grammar (one domain per file):
//   P = <polynomial>
//   flow { kind = type4, a = i, b = 2*i, beta3 = 0 }
//   map  { f1 = z2, f2 = z1, mu = 1, phi = 0 }

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "modelkit/decomposition.hpp"
#include "modelkit/flows.hpp"
#include "modelkit/grading.hpp"
#include "modelkit/parser.hpp"
#include "modelkit/symmetry.hpp"

using json = nlohmann::ordered_json;
using namespace modelkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitInternal = 4;

struct CliError {
    int code;
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitParse, "cannot open file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct Block {
    std::map<std::string, std::string> kv;

    const std::string* get(const std::string& key) const {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    }
};

struct DomainFile {
    std::optional<RPoly> P;
    std::vector<Block> flows;
    std::vector<Block> maps;
};

Block parse_block(const std::string& body) {
    Block b;
    std::string entry;
    auto flush = [&] {
        std::string e = trim(entry);
        entry.clear();
        if (e.empty()) return;
        std::size_t eq = e.find('=');
        if (eq == std::string::npos) throw CliError{kExitParse, "block entry without '=': " + e};
        b.kv[trim(e.substr(0, eq))] = trim(e.substr(eq + 1));
    };
    for (char c : body) {
        if (c == ',' || c == '\n')
            flush();
        else
            entry += c;
    }
    flush();
    return b;
}

DomainFile parse_domain_file(const std::string& text) {
    DomainFile out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '#') {  // comment line
            while (pos < text.size() && text[pos] != '\n') ++pos;
            continue;
        }
        std::size_t word_end = pos;
        while (word_end < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[word_end])) || text[word_end] == '_'))
            ++word_end;
        std::string word = text.substr(pos, word_end - pos);
        pos = word_end;
        skip_ws();
        if (word == "P") {
            if (pos >= text.size() || text[pos] != '=')
                throw CliError{kExitParse, "expected '=' after P"};
            ++pos;
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string::npos) eol = text.size();
            std::string expr = text.substr(pos, eol - pos);
            pos = eol;
            try {
                out.P = parse_poly(expr);
            } catch (const ParseError& e) {
                throw CliError{kExitParse, std::string("parse error in P: ") + e.what()};
            }
        } else if (word == "flow" || word == "map") {
            if (pos >= text.size() || text[pos] != '{')
                throw CliError{kExitParse, "expected '{' after " + word};
            std::size_t close = text.find('}', pos);
            if (close == std::string::npos)
                throw CliError{kExitParse, "unterminated " + word + " block"};
            Block b = parse_block(text.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            (word == "flow" ? out.flows : out.maps).push_back(std::move(b));
        } else {
            throw CliError{kExitParse, "unexpected token '" + word + "' in domain file"};
        }
    }
    return out;
}

RPoly require_poly(const DomainFile& f) {
    if (!f.P) throw CliError{kExitParse, "domain file declares no P"};
    if (!f.P->is_real()) throw CliError{kExitParse, "P is not real-valued"};
    return *f.P;
}

GQ parse_constant(const std::string& text, const std::string& what) {
    RPoly p;
    try {
        p = parse_poly(text);
    } catch (const ParseError& e) {
        throw CliError{kExitParse, "parse error in " + what + ": " + e.what()};
    }
    if (!p.is_zero() && !(p.term_count() == 1 && p.terms().begin()->first.is_constant()))
        throw CliError{kExitParse, what + " must be a constant"};
    return p.constant_term();
}

Rational parse_rational(const std::string& text, const std::string& what) {
    GQ c = parse_constant(text, what);
    if (c.im != 0) throw CliError{kExitParse, what + " must be real"};
    return c.re;
}

HoloPoly parse_holo(const std::string& text, const std::string& what) {
    RPoly p;
    try {
        p = parse_poly(text);
    } catch (const ParseError& e) {
        throw CliError{kExitParse, "parse error in " + what + ": " + e.what()};
    }
    if (!p.is_holomorphic()) throw CliError{kExitParse, what + " must be holomorphic"};
    return HoloPoly(p);
}

FlowSpec flow_from_block(const Block& b) {
    const std::string* kind = b.get("kind");
    if (!kind) throw CliError{kExitParse, "flow block needs a kind"};
    auto get_const = [&](const char* key) -> GQ {
        const std::string* v = b.get(key);
        if (!v) throw CliError{kExitParse, std::string("flow block needs ") + key};
        return parse_constant(*v, key);
    };
    Rational beta3 = 0;
    if (const std::string* v = b.get("beta3")) beta3 = parse_rational(*v, "beta3");
    try {
        if (*kind == "type1") return FlowSpec::type1(get_const("b"), beta3);
        if (*kind == "type2a") return FlowSpec::type2a(get_const("b"));
        if (*kind == "type2b") return FlowSpec::type2b();
        if (*kind == "type3") {
            const std::string* p = b.get("p");
            if (!p) throw CliError{kExitParse, "flow block needs p"};
            return FlowSpec::type3(parse_holo(*p, "p"));
        }
        if (*kind == "type4") return FlowSpec::type4(get_const("a"), get_const("b"), beta3);
        if (*kind == "type5") {
            const std::string* d = b.get("d");
            if (!d) throw CliError{kExitParse, "flow block needs d"};
            return FlowSpec::type5(get_const("a"), std::stoi(*d), beta3);
        }
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitParse, std::string("invalid flow parameters: ") + e.what()};
    }
    throw CliError{kExitParse, "unknown flow kind: " + *kind};
}

ModelMap map_from_block(const Block& b) {
    ModelMap m;
    const std::string* f1 = b.get("f1");
    const std::string* f2 = b.get("f2");
    if (!f1 || !f2) throw CliError{kExitParse, "map block needs f1 and f2"};
    m.plane.f1 = parse_holo(*f1, "f1");
    m.plane.f2 = parse_holo(*f2, "f2");
    if (const std::string* v = b.get("mu")) m.mu = parse_rational(*v, "mu");
    if (const std::string* v = b.get("phi")) m.phi = parse_holo(*v, "phi");
    return m;
}

// ----- JSON serialization -----

json rational_json(const Rational& r) { return rat_to_string(r); }

json gq_json(const GQ& c) { return gq_to_string(c); }

json kernel_json(const WeightKernel& k) {
    json basis = json::array();
    for (auto& v : k.basis) basis.push_back({v[0].str(), v[1].str()});
    return json{{"rank", k.rank()}, {"kernel_basis", basis}};
}

const char* translation_kind_name(TranslationVerdict::Kind k) {
    switch (k) {
        case TranslationVerdict::Kind::Invariant: return "invariant";
        case TranslationVerdict::Kind::InvariantModPluriharmonic:
            return "invariant_mod_pluriharmonic";
        default: return "not_invariant";
    }
}

json translation_json(const TranslationVerdict& t) {
    json j{{"verdict", translation_kind_name(t.kind)}, {"genuine", t.genuine}};
    if (t.kind == TranslationVerdict::Kind::InvariantModPluriharmonic)
        j["shear_certificate"] = to_string(t.shear);
    return j;
}

json balance_json(const BalanceClass& b) {
    return json{{"strictly_balanced", b.strictly_balanced},
                {"extremely_balanced", b.extremely_balanced},
                {"extremely_imbalanced", b.extremely_imbalanced},
                {"diversely_balanced", b.diversely_balanced}};
}

json report_json(const ClassificationReport& rep) {
    json j;
    j["finite_type_necessary"] =
        json{{"pass", rep.finite_type.pass}, {"reasons", rep.finite_type.reasons}};
    j["torus"] = kernel_json(rep.torus);
    j["translations"] = json{{"z1", translation_json(rep.translations[0])},
                             {"z2", translation_json(rep.translations[1])}};
    json zn = json::array();
    for (auto& r : rep.zn_rotations) zn.push_back({r[0], r[1], r[2]});
    j["zn_rotations"] = zn;
    auto case3 = [&] {
        switch (rep.thm3_case) {
            case ClassificationReport::Case3::I: return "i";
            case ClassificationReport::Case3::II: return "ii";
            case ClassificationReport::Case3::III: return "iii";
            default: return "none";
        }
    };
    auto case2 = [&] {
        switch (rep.thm2_case) {
            case ClassificationReport::Case2::I: return "i";
            case ClassificationReport::Case2::II: return "ii";
            case ClassificationReport::Case2::III: return "iii";
            case ClassificationReport::Case2::IV: return "iv";
            default: return "none";
        }
    };
    j["thm3_case"] = case3();
    j["thm2_case"] = case2();
    j["notes"] = rep.notes;
    return j;
}

json vfield_json(const VField& x) {
    return json{{"X1", to_string(x.X1)}, {"X2", to_string(x.X2)}, {"drift", gq_json(x.drift)}};
}

struct Output {
    bool as_json = false;
    bool quiet = false;
    json body;

    void human(const std::string& line) {
        if (!as_json && !quiet) std::cout << line << "\n";
    }
    void finish() {
        if (as_json && !quiet) std::cout << body.dump(2) << "\n";
    }
};

int cmd_analyze(const std::string& path, Output& out) {
    DomainFile file = parse_domain_file(slurp(path));
    RPoly P = require_poly(file);
    auto ft = finite_type_necessary(P);
    auto parts = split_parts(P);
    auto kernel = torus_weights(P);

    Weight theta = Weight::circle(1, 1);
    if (kernel.rank() == 1 && kernel.basis[0][0] > 0 && kernel.basis[0][1] > 0)
        theta = Weight::circle(Rational(kernel.basis[0][0]), Rational(kernel.basis[0][1]));
    BalanceClass bc = balance_class(P, theta);

    out.body["P"] = to_string(P);
    out.body["finite_type_necessary"] = json{{"pass", ft.pass}, {"reasons", ft.reasons}};
    out.body["split"] = json{{"P1", to_string(parts.p1)},
                             {"M", to_string(parts.mixed)},
                             {"P2", to_string(parts.p2)},
                             {"constant", gq_json(parts.constant)}};
    out.body["weight"] = json{{"theta1", rational_json(theta.theta1)},
                              {"theta2", rational_json(theta.theta2)}};
    out.body["balance"] = balance_json(bc);
    out.body["torus"] = kernel_json(kernel);

    out.human("P = " + to_string(P));
    out.human(std::string("finite type necessary conditions: ") + (ft.pass ? "pass" : "FAIL"));
    for (auto& r : ft.reasons) out.human("  reason: " + r);
    out.human("split: P1 = " + to_string(parts.p1) + " | M = " + to_string(parts.mixed) +
              " | P2 = " + to_string(parts.p2));
    out.human("balance at Theta = (" + rat_to_string(theta.theta1) + "," +
              rat_to_string(theta.theta2) + "): strictly=" +
              std::to_string(bc.strictly_balanced) +
              " extremely=" + std::to_string(bc.extremely_balanced) +
              " pure=" + std::to_string(bc.extremely_imbalanced) +
              " diversely=" + std::to_string(bc.diversely_balanced));
    out.human("torus rank: " + std::to_string(kernel.rank()));
    return ft.pass ? kExitOk : kExitDegenerate;
}

int cmd_decompose(const std::string& path, Output& out) {
    DomainFile file = parse_domain_file(slurp(path));
    RPoly P = require_poly(file);
    HoloDecomposition dec;
    try {
        dec = holomorphic_decompose(P);
    } catch (const std::logic_error& e) {
        throw CliError{kExitInternal, e.what()};
    }
    out.body["q"] = to_string(dec.q);
    json plus = json::array(), minus = json::array();
    for (auto& [lam, f] : dec.plus)
        plus.push_back({{"lambda", rational_json(lam)}, {"f", to_string(f)}});
    for (auto& [mu, g] : dec.minus)
        minus.push_back({{"mu", rational_json(mu)}, {"g", to_string(g)}});
    out.body["plus"] = plus;
    out.body["minus"] = minus;

    out.human("q = " + to_string(dec.q));
    for (auto& [lam, f] : dec.plus)
        out.human("+ " + rat_to_string(lam) + " * |" + to_string(f) + "|^2");
    for (auto& [mu, g] : dec.minus)
        out.human("- " + rat_to_string(mu) + " * |" + to_string(g) + "|^2");
    return kExitOk;
}

int cmd_symmetries(const std::string& path, int max_degree, Output& out) {
    DomainFile file = parse_domain_file(slurp(path));
    RPoly P = require_poly(file);
    int bound = max_degree >= 0 ? max_degree : P.degree();
    auto kernel = torus_weights(P);
    auto trans = translation_directions(P);
    auto fields = tangent_fields(P, bound);
    AdmissibleFlows flows;
    try {
        flows = admissible_flow_types(P);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitDegenerate, e.what()};
    }

    out.body["torus"] = kernel_json(kernel);
    out.body["translations"] = json{{"z1", translation_json(trans[0])},
                                    {"z2", translation_json(trans[1])}};
    json jf = json::array();
    for (auto& f : fields) jf.push_back(vfield_json(f));
    out.body["tangent_fields"] = json{{"degree_bound", bound}, {"basis", jf}};
    json adm = json::array();
    for (auto& e : flows.entries)
        adm.push_back(
            {{"kind", e.kind}, {"admissible", e.admissible}, {"certificate", e.certificate}});
    out.body["admissible_flow_types"] = adm;

    out.human("torus rank: " + std::to_string(kernel.rank()));
    out.human("translation z1: " + std::string(translation_kind_name(trans[0].kind)));
    out.human("translation z2: " + std::string(translation_kind_name(trans[1].kind)));
    out.human("tangent field basis (degree <= " + std::to_string(bound) +
              "): " + std::to_string(fields.size()) + " fields");
    for (auto& e : flows.entries)
        out.human(std::string(e.admissible ? "admissible  " : "inadmissible ") + e.kind +
                  "  [" + e.certificate + "]");
    return kExitOk;
}

int cmd_classify(const std::string& path, Output& out) {
    DomainFile file = parse_domain_file(slurp(path));
    RPoly P = require_poly(file);
    ModelDomain d = [&] {
        try {
            return ModelDomain(P);
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitParse, e.what()};
        }
    }();
    ClassificationReport rep = classify(d);
    out.body = report_json(rep);
    out.human("finite type necessary: " + std::string(rep.finite_type.pass ? "pass" : "FAIL"));
    out.human("torus rank: " + std::to_string(rep.torus.rank()));
    out.human("case (three-dimensional table): " + out.body["thm3_case"].get<std::string>());
    out.human("case (one-subgroup table): " + out.body["thm2_case"].get<std::string>());
    for (auto& n : rep.notes) out.human("note: " + n);
    return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& map_path,
               const std::string& flow_path, Output& out) {
    DomainFile file = parse_domain_file(slurp(path));
    RPoly P = require_poly(file);
    if (map_path.empty() == flow_path.empty())
        throw CliError{kExitParse, "verify needs exactly one of --map or --flow"};

    if (!map_path.empty()) {
        DomainFile mf = parse_domain_file(slurp(map_path));
        if (mf.maps.empty()) throw CliError{kExitParse, "no map block in " + map_path};
        ModelMap m = map_from_block(mf.maps.front());
        ModelDomain d = [&] {
            try {
                return ModelDomain(P);
            } catch (const std::invalid_argument& e) {
                throw CliError{kExitParse, e.what()};
            }
        }();
        VerifyResult res = verify_model_map(d, m);
        out.body["kind"] = "map";
        out.body["pass"] = res.pass;
        out.body["invertible"] = res.invertible;
        out.body["residual"] = to_string(res.residual);
        out.body["reasons"] = res.reasons;
        out.human(std::string("map verification: ") + (res.pass ? "pass" : "FAIL"));
        for (auto& r : res.reasons) out.human("  " + r);
        if (!res.residual.is_zero()) out.human("  residual = " + to_string(res.residual));
        return res.pass ? kExitOk : kExitVerifyFailed;
    }

    DomainFile ff = parse_domain_file(slurp(flow_path));
    if (ff.flows.empty()) throw CliError{kExitParse, "no flow block in " + flow_path};
    FlowSpec spec = flow_from_block(ff.flows.front());
    VField gen = generator(spec);
    InvarianceResult inv = invariance_constraint(P, gen);
    bool pass = inv.kind != InvarianceResult::Kind::Violated;
    out.body["kind"] = "flow";
    out.body["flow"] = json{{"kind", spec.kind_name()},
                            {"a", gq_json(spec.a)},
                            {"b", gq_json(spec.b)},
                            {"d", spec.d},
                            {"p", to_string(spec.p)},
                            {"beta3", rational_json(spec.beta3)}};
    out.body["generator"] = vfield_json(gen);
    VField br = lie_bracket(gen, VField::canonical_T());
    out.body["commutes_with_canonical"] = br.X1.is_zero() && br.X2.is_zero();
    auto verdict = [&] {
        switch (inv.kind) {
            case InvarianceResult::Kind::Invariant: return "invariant";
            case InvarianceResult::Kind::InvariantModPluriharmonic:
                return "invariant_mod_pluriharmonic";
            default: return "violated";
        }
    };
    out.body["invariance"] = verdict();
    if (inv.kind == InvarianceResult::Kind::InvariantModPluriharmonic)
        out.body["psi"] = to_string(inv.psi);
    if (inv.kind == InvarianceResult::Kind::Violated)
        out.body["residual"] = to_string(inv.residual);
    out.body["pass"] = pass;
    out.human("flow " + spec.kind_name() + ": " + verdict());
    return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic analysis of rigid polynomial model domains in C^3"};
    app.require_subcommand(1);
    bool as_json = false, quiet = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");
    app.add_flag("--quiet", quiet, "suppress output (exit code only)");

    std::string file, map_path, flow_path;
    int max_degree = -1;

    auto* analyze = app.add_subcommand("analyze", "grading / balance / degeneracy report");
    analyze->add_option("file", file)->required();
    auto* decompose = app.add_subcommand("decompose", "Hermitian decomposition of P");
    decompose->add_option("file", file)->required();
    auto* symmetries = app.add_subcommand("symmetries", "torus, translations, tangent fields");
    symmetries->add_option("file", file)->required();
    symmetries->add_option("--max-degree", max_degree, "tangent field degree bound");
    auto* classify_cmd = app.add_subcommand("classify", "normal-form classification");
    classify_cmd->add_option("file", file)->required();
    auto* verify = app.add_subcommand("verify", "verify a map or flow against the domain");
    verify->add_option("file", file)->required();
    verify->add_option("--map", map_path, "file with a map block");
    verify->add_option("--flow", flow_path, "file with a flow block");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.as_json = as_json;
    out.quiet = quiet;
    int code = kExitInternal;
    try {
        if (analyze->parsed())
            code = cmd_analyze(file, out);
        else if (decompose->parsed())
            code = cmd_decompose(file, out);
        else if (symmetries->parsed())
            code = cmd_symmetries(file, max_degree, out);
        else if (classify_cmd->parsed())
            code = cmd_classify(file, out);
        else if (verify->parsed())
            code = cmd_verify(file, map_path, flow_path, out);
    } catch (const CliError& e) {
        if (!quiet) std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        if (!quiet) std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        if (!quiet) std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        if (!quiet) std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    out.finish();
    return code;
}
