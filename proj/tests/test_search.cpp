#include <doctest.h>

#include "fixtures.hpp"
#include "heisrep/search.hpp"

using namespace heisrep;

namespace {

bool same_report(const SearchReport& a, const SearchReport& b) {
    if (a.candidates_examined != b.candidates_examined) return false;
    if (a.violations.size() != b.violations.size()) return false;
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        if (a.violations[i].candidate_index != b.violations[i].candidate_index) return false;
        if (a.violations[i].recipe.describe() != b.violations[i].recipe.describe()) return false;
        if (a.violations[i].site != b.violations[i].site) return false;
    }
    return a.exhausted == b.exhausted;
}

}  // namespace

TEST_CASE("search is deterministic in the seed") {
    SearchConfig cfg;
    cfg.p = 3;
    cfg.budget = 40;
    cfg.seed = 12345;
    SearchReport a = run_conjecture_search(cfg);
    SearchReport b = run_conjecture_search(cfg);
    CHECK(same_report(a, b));
    CHECK(a.candidates_examined == 40);
    cfg.seed = 54321;
    SearchReport c = run_conjecture_search(cfg);
    CHECK(c.candidates_examined == 40);
}

TEST_CASE("violations are replayable from their recipes") {
    SearchConfig cfg;
    cfg.p = 2;
    cfg.target_dim = 10;
    cfg.budget = 30;
    cfg.seed = 7;
    SearchReport report = run_conjecture_search(cfg);
    REQUIRE_FALSE(report.violations.empty());
    for (const auto& v : report.violations) {
        CoefficientFamily rep = realize_candidate(v.recipe, cfg.p, cfg.target_dim);
        VerificationReport check = check_layer_relations(extract_layers(rep));
        bool found = false;
        for (const auto& w : check.violations)
            if (w.site == v.site) found = true;
        CHECK(found);
    }
}

TEST_CASE("budget one at p=2 finds the ten-dimensional counterexample") {
    SearchConfig cfg;
    cfg.p = 2;
    cfg.target_dim = 10;
    cfg.budget = 1;
    cfg.seed = 1;
    cfg.mix = {{GeneratorKind::Coalgebra, 1.0}};
    SearchReport report = run_conjecture_search(cfg);
    CHECK(report.candidates_examined == 1);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations[0].recipe.describe() == "coalg(D=2)");
    bool found_e = false;
    for (const auto& v : report.violations)
        if (v.condition == "e" && v.site == "e:(X0,Y1)") found_e = true;
    CHECK(found_e);
}

TEST_CASE("lie candidates never produce violations") {
    SearchConfig cfg;
    cfg.p = 11;
    cfg.target_dim = 4;
    cfg.budget = 60;
    cfg.seed = 99;
    cfg.mix = {{GeneratorKind::LieConstruct, 1.0}};
    SearchReport report = run_conjecture_search(cfg);
    CHECK(report.candidates_examined == 60);
    CHECK(report.violations.empty());
    CHECK(report.internal_errors.empty());
}

TEST_CASE("small target dimensions admit no violations") {
    for (std::int64_t p : {2, 3}) {
        SearchConfig cfg;
        cfg.p = p;
        cfg.budget = 50;
        cfg.seed = 5;
        SearchReport report = run_conjecture_search(cfg);
        // default target is (p+1)/2, far below the 10-dim counterexamples
        CHECK(report.violations.empty());
        CHECK(report.internal_errors.empty());
        CHECK_FALSE(report.caveat.empty());
    }
}

TEST_CASE("condition c failures are never reported as conjecture violations") {
    SearchConfig cfg;
    cfg.p = 2;
    cfg.target_dim = 20;
    cfg.budget = 40;
    cfg.seed = 31;
    SearchReport report = run_conjecture_search(cfg);
    CHECK(report.internal_errors.empty());
    for (const auto& v : report.violations) CHECK(v.condition != "c");
}

TEST_CASE("fail fast stops at the first violating candidate") {
    SearchConfig cfg;
    cfg.p = 2;
    cfg.target_dim = 10;
    cfg.budget = 50;
    cfg.seed = 1;
    cfg.fail_fast = true;
    cfg.mix = {{GeneratorKind::Coalgebra, 1.0}};
    SearchReport report = run_conjecture_search(cfg);
    CHECK(report.candidates_examined == 1);
    CHECK_FALSE(report.violations.empty());
}

TEST_CASE("exhaustion when no generator kind is admissible") {
    SearchConfig cfg;
    cfg.p = 3;
    cfg.target_dim = 4;
    cfg.budget = 10;
    // lie construction needs p >= 2 * target_dim, nothing else is enabled
    cfg.mix = {{GeneratorKind::LieConstruct, 1.0}};
    SearchReport report = run_conjecture_search(cfg);
    CHECK(report.exhausted);
    CHECK(report.candidates_examined == 0);
}

TEST_CASE("config validation") {
    SearchConfig cfg;
    cfg.p = 4;
    CHECK_THROWS_AS(run_conjecture_search(cfg), std::invalid_argument);
    cfg.p = 3;
    cfg.budget = 0;
    CHECK_THROWS_AS(run_conjecture_search(cfg), std::invalid_argument);
    cfg.budget = 10;
    cfg.mix = {{GeneratorKind::Coalgebra, -1.0}};
    CHECK_THROWS_AS(run_conjecture_search(cfg), std::invalid_argument);
    cfg.mix = {{GeneratorKind::Coalgebra, 0.0}};
    CHECK_THROWS_AS(run_conjecture_search(cfg), std::invalid_argument);
}

TEST_CASE("recipe descriptions") {
    CandidateRecipe r;
    r.kind = GeneratorKind::Tensor;
    r.degree_a = 1;
    r.degree_b = 0;
    CHECK(r.describe() == "tensor(coalg(D=1),coalg(D=0))");
    r.kind = GeneratorKind::LieConstruct;
    r.lie_seed = 42;
    r.lie_layers = 2;
    CHECK(r.describe() == "lie(seed=42,layers=2)");
}
