#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heisrep/generators.hpp"
#include "heisrep/io.hpp"
#include "heisrep/search.hpp"
#include "heisrep/structure.hpp"

namespace {

using heisrep::CoefficientFamily;
using heisrep::FieldSpec;
using heisrep::GroupKind;
using heisrep::LieLayerData;
using heisrep::VerificationReport;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSearchViolation = 3;

struct GlobalFlags {
    bool json = false;
    bool quiet = false;
};

void emit(const GlobalFlags& g, const json& machine, const std::string& human) {
    if (g.quiet) return;
    if (g.json)
        std::cout << machine.dump(2) << "\n";
    else if (!human.empty())
        std::cout << human << "\n";
}

json report_to_json(const VerificationReport& report) {
    json j;
    j["ok"] = report.ok;
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"site", v.site}, {"description", v.description}});
    j["violations"] = std::move(violations);
    return j;
}

std::string report_to_text(const VerificationReport& report, const std::string& subject) {
    if (report.ok) return subject + ": ok";
    std::string out = subject + ": " + std::to_string(report.violations.size()) + " violation(s)";
    for (const auto& v : report.violations) out += "\n  " + v.site + ": " + v.description;
    return out;
}

CoefficientFamily load_rep(const std::string& path) {
    return heisrep::read_rep(heisrep::read_file(path));
}

LieLayerData load_lie(const std::string& path) {
    return heisrep::read_lie(heisrep::read_file(path));
}

int cmd_verify(const GlobalFlags& g, const std::string& path, const std::string& mode) {
    CoefficientFamily rep = load_rep(path);
    VerificationReport combined;
    if (mode == "axioms" || mode == "both") {
        VerificationReport r = heisrep::verify_comodule_axioms(rep);
        for (auto& v : r.violations) combined.record("axioms " + v.site, v.description);
    }
    if (mode == "relation" || mode == "both") {
        VerificationReport r = heisrep::verify_fundamental_relation(rep);
        for (auto& v : r.violations) combined.record("relation " + v.site, v.description);
    }
    emit(g, report_to_json(combined), report_to_text(combined, path));
    return combined.ok ? kExitOk : kExitViolation;
}

int cmd_construct(const GlobalFlags& g, const std::string& lie_path, const std::string& out,
                  bool exponential) {
    LieLayerData data = load_lie(lie_path);
    CoefficientFamily rep =
        exponential ? heisrep::from_polynomial_matrix(heisrep::exponential_form_h1(data),
                                                      GroupKind::H1)
                    : heisrep::construct_h1_charp(data);
    heisrep::write_file(out, heisrep::write_rep(rep));
    emit(g,
         json{{"ok", true},
              {"out", out},
              {"dimension", rep.dim()},
              {"coefficients", rep.coeffs().size()}},
         "wrote " + out + " (" + std::to_string(rep.coeffs().size()) + " coefficients)");
    return kExitOk;
}

int cmd_factor(const GlobalFlags& g, const std::string& rep_path, const std::string& out,
               bool check) {
    CoefficientFamily rep = load_rep(rep_path);
    heisrep::FrobeniusLayers layers = heisrep::extract_layers(rep);
    LieLayerData data;
    data.p = layers.p;
    data.dim = layers.dim;
    data.triples = layers.layers;
    heisrep::write_file(out, heisrep::write_lie(data));
    VerificationReport report;
    if (check) report = heisrep::check_layer_relations(layers);
    json j = report_to_json(report);
    j["out"] = out;
    j["layers"] = data.triples.size();
    std::string text = "wrote " + out + " (" + std::to_string(data.triples.size()) + " layers)";
    if (check) text += "\n" + report_to_text(report, "layer relations");
    emit(g, j, text);
    return report.ok ? kExitOk : kExitViolation;
}

int cmd_coalg(const GlobalFlags& g, const std::string& group_name, std::int64_t p, bool rational,
              std::int64_t degree, const std::string& out) {
    GroupKind group = group_name == "Ga" ? GroupKind::Ga : GroupKind::H1;
    FieldSpec field = rational ? FieldSpec::rational() : FieldSpec::prime(p);
    CoefficientFamily rep = heisrep::monomial_coalgebra_rep(field, group, degree);
    heisrep::write_file(out, heisrep::write_rep(rep));
    emit(g, json{{"ok", true}, {"out", out}, {"dimension", rep.dim()}},
         "wrote " + out + " (dimension " + std::to_string(rep.dim()) + ")");
    return kExitOk;
}

int cmd_combine(const GlobalFlags& g, const std::vector<std::string>& rep_paths,
                const std::string& out, bool tensor) {
    CoefficientFamily a = load_rep(rep_paths[0]);
    CoefficientFamily b = load_rep(rep_paths[1]);
    CoefficientFamily c = tensor ? heisrep::tensor_product(a, b) : heisrep::direct_sum(a, b);
    heisrep::write_file(out, heisrep::write_rep(c));
    emit(g, json{{"ok", true}, {"out", out}, {"dimension", c.dim()}},
         "wrote " + out + " (dimension " + std::to_string(c.dim()) + ")");
    return kExitOk;
}

heisrep::SearchConfig parse_mix(heisrep::SearchConfig cfg, const std::string& mix) {
    if (mix.empty()) return cfg;
    std::map<std::string, heisrep::GeneratorKind> names = {
        {"coalg", heisrep::GeneratorKind::Coalgebra},
        {"tensor", heisrep::GeneratorKind::Tensor},
        {"sum", heisrep::GeneratorKind::DirectSum},
        {"lie", heisrep::GeneratorKind::LieConstruct}};
    cfg.mix.clear();
    std::size_t pos = 0;
    while (pos <= mix.size()) {
        std::size_t comma = mix.find(',', pos);
        std::string part = mix.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("mix: expected name=weight");
        auto it = names.find(part.substr(0, eq));
        if (it == names.end())
            throw std::invalid_argument("mix: unknown generator '" + part.substr(0, eq) + "'");
        cfg.mix[it->second] = std::stod(part.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return cfg;
}

int cmd_search(const GlobalFlags& g, const heisrep::SearchConfig& cfg, bool fail_on_violation) {
    heisrep::SearchReport report = heisrep::run_conjecture_search(cfg);
    json j;
    j["candidates_examined"] = report.candidates_examined;
    j["exhausted"] = report.exhausted;
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"candidate", v.candidate_index},
                              {"recipe", v.recipe.describe()},
                              {"condition", v.condition},
                              {"site", v.site}});
    j["violations"] = std::move(violations);
    json internal = json::array();
    for (const auto& v : report.internal_errors)
        internal.push_back({{"candidate", v.candidate_index},
                            {"recipe", v.recipe.describe()},
                            {"site", v.site}});
    j["internal_errors"] = std::move(internal);
    j["caveat"] = report.caveat;
    std::string text = "examined " + std::to_string(report.candidates_examined) + " candidate(s), " +
                       std::to_string(report.violations.size()) + " violation(s)";
    if (report.exhausted) text += " [no admissible generators]";
    for (const auto& v : report.violations)
        text += "\n  #" + std::to_string(v.candidate_index) + " " + v.recipe.describe() + " " +
                v.site;
    if (!report.violations.empty()) text += "\nnote: " + report.caveat;
    emit(g, j, text);
    if (fail_on_violation && !report.violations.empty()) return kExitSearchViolation;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic representation toolkit for Ga and H1"};
    app.require_subcommand(1);
    GlobalFlags g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--quiet", g.quiet, "suppress reports (exit codes only)");

    std::string rep_path, lie_path, out_path, mode = "both";
    std::vector<std::string> rep_paths;
    std::string group_name = "H1";
    std::int64_t p = 0, degree = 0;
    bool rational = false, check = false, fail_on_violation = false;
    heisrep::SearchConfig cfg;
    std::string mix;

    CLI::App* verify = app.add_subcommand("verify", "check a REP file against the comodule laws");
    verify->add_option("--rep", rep_path, "REP file")->required();
    verify->add_option("--mode", mode, "axioms, relation or both")
        ->check(CLI::IsMember({"axioms", "relation", "both"}));

    CLI::App* construct =
        app.add_subcommand("construct", "build a REP file from LIE layer data");
    construct->add_option("--lie", lie_path, "LIE file")->required();
    construct->add_option("--out", out_path, "output REP file")->required();

    CLI::App* expform =
        app.add_subcommand("expform", "build the same REP file via the exponential formula");
    expform->add_option("--lie", lie_path, "LIE file")->required();
    expform->add_option("--out", out_path, "output REP file")->required();

    CLI::App* factor = app.add_subcommand("factor", "extract Frobenius layers into a LIE file");
    factor->add_option("--rep", rep_path, "REP file (prime field)")->required();
    factor->add_option("--out", out_path, "output LIE file")->required();
    factor->add_flag("--check", check, "also check the layer relations");

    CLI::App* coalg = app.add_subcommand("coalg", "monomial coalgebra representation");
    coalg->add_option("--group", group_name, "Ga or H1")
        ->check(CLI::IsMember({"Ga", "H1"}));
    auto* popt = coalg->add_option("--char", p, "prime characteristic");
    coalg->add_flag("--rational", rational, "work over the rationals")->excludes(popt);
    coalg->add_option("--degree", degree, "maximal monomial degree")->required();
    coalg->add_option("--out", out_path, "output REP file")->required();

    CLI::App* tensor = app.add_subcommand("tensor", "Kronecker product of two REP files");
    tensor->add_option("--rep", rep_paths, "two REP files")->expected(2)->required();
    tensor->add_option("--out", out_path, "output REP file")->required();

    CLI::App* sum = app.add_subcommand("sum", "direct sum of two REP files");
    sum->add_option("--rep", rep_paths, "two REP files")->expected(2)->required();
    sum->add_option("--out", out_path, "output REP file")->required();

    CLI::App* search = app.add_subcommand("search", "seeded search for layer-condition violations");
    search->add_option("--char", cfg.p, "prime characteristic")->required();
    search->add_option("--dim", cfg.target_dim, "target dimension (default (p+1)/2)");
    search->add_option("--budget", cfg.budget, "number of candidates");
    search->add_option("--seed", cfg.seed, "random seed");
    search->add_option("--mix", mix, "generator weights, e.g. coalg=1,tensor=0.5,sum=0.5,lie=1");
    search->add_flag("--fail-on-violation", fail_on_violation, "exit 3 when a violation is found");

    // let the global --json / --quiet flags appear after the subcommand name
    for (CLI::App* sub : {verify, construct, expform, factor, coalg, tensor, sum, search})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (verify->parsed()) return cmd_verify(g, rep_path, mode);
        if (construct->parsed()) return cmd_construct(g, lie_path, out_path, false);
        if (expform->parsed()) return cmd_construct(g, lie_path, out_path, true);
        if (factor->parsed()) return cmd_factor(g, rep_path, out_path, check);
        if (coalg->parsed()) {
            if (!rational && p == 0)
                throw std::invalid_argument("coalg: provide --char or --rational");
            return cmd_coalg(g, group_name, p, rational, degree, out_path);
        }
        if (tensor->parsed()) return cmd_combine(g, rep_paths, out_path, true);
        if (sum->parsed()) return cmd_combine(g, rep_paths, out_path, false);
        if (search->parsed()) return cmd_search(g, parse_mix(cfg, mix), fail_on_violation);
    } catch (const heisrep::HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
