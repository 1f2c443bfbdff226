#include "heisrep/search.hpp"

#include <algorithm>
#include <random>

namespace heisrep {

namespace {

// number of monomials of degree <= D in three variables
std::int64_t coalgebra_dim(std::int64_t d) { return (d + 1) * (d + 2) * (d + 3) / 6; }

// admissible degrees, largest first
std::vector<std::int64_t> admissible_degrees(int target_dim) {
    std::vector<std::int64_t> degrees;
    for (std::int64_t d = 0; coalgebra_dim(d) <= target_dim; ++d) degrees.push_back(d);
    std::reverse(degrees.begin(), degrees.end());
    return degrees;
}

Scalar random_scalar(std::mt19937_64& rng, FieldSpec f) {
    return Scalar(f, Int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(f.p()))));
}

// Heisenberg-pattern triples: guaranteed to satisfy the layer hypotheses
// by construction. Layer 0 lives in span{E_{1,2}, E_{2,d}, E_{1,d}}, every
// further layer in the central span{E_{1,d}}.
LieLayerData random_lie_data(std::int64_t p, int dim, std::uint64_t seed, int layers) {
    std::mt19937_64 rng(seed);
    FieldSpec f = FieldSpec::prime(p);
    LieLayerData data;
    data.p = p;
    data.dim = dim;
    for (int layer = 0; layer < layers; ++layer) {
        ExactMatrix x(dim, f), y(dim, f), z(dim, f);
        if (dim >= 3 && layer == 0) {
            Scalar a = random_scalar(rng, f), b = random_scalar(rng, f);
            Scalar c = random_scalar(rng, f), e = random_scalar(rng, f);
            x.set(1, 2, a);
            x.set(1, dim, b);
            y.set(2, dim, c);
            y.set(1, dim, e);
            z.set(1, dim, a * c);
        } else if (dim >= 2) {
            // central (or abelian, for dim 2) layer
            x.set(1, dim, random_scalar(rng, f));
            y.set(1, dim, random_scalar(rng, f));
        }
        data.triples.push_back({std::move(x), std::move(y), std::move(z)});
    }
    while (!data.triples.empty() && data.triples.back().X.is_zero() &&
           data.triples.back().Y.is_zero() && data.triples.back().Z.is_zero())
        data.triples.pop_back();
    if (data.triples.empty())
        data.triples.push_back({ExactMatrix(dim, f), ExactMatrix(dim, f), ExactMatrix(dim, f)});
    return data;
}

}  // namespace

std::string CandidateRecipe::describe() const {
    switch (kind) {
        case GeneratorKind::Coalgebra:
            return "coalg(D=" + std::to_string(degree_a) + ")";
        case GeneratorKind::Tensor:
            return "tensor(coalg(D=" + std::to_string(degree_a) + "),coalg(D=" +
                   std::to_string(degree_b) + "))";
        case GeneratorKind::DirectSum:
            return "sum(coalg(D=" + std::to_string(degree_a) + "),coalg(D=" +
                   std::to_string(degree_b) + "))";
        case GeneratorKind::LieConstruct:
            return "lie(seed=" + std::to_string(lie_seed) +
                   ",layers=" + std::to_string(lie_layers) + ")";
    }
    return "?";
}

CoefficientFamily realize_candidate(const CandidateRecipe& recipe, std::int64_t p,
                                    int target_dim) {
    FieldSpec f = FieldSpec::prime(p);
    switch (recipe.kind) {
        case GeneratorKind::Coalgebra:
            return monomial_coalgebra_rep(f, GroupKind::H1, recipe.degree_a);
        case GeneratorKind::Tensor:
            return tensor_product(monomial_coalgebra_rep(f, GroupKind::H1, recipe.degree_a),
                                  monomial_coalgebra_rep(f, GroupKind::H1, recipe.degree_b));
        case GeneratorKind::DirectSum:
            return direct_sum(monomial_coalgebra_rep(f, GroupKind::H1, recipe.degree_a),
                              monomial_coalgebra_rep(f, GroupKind::H1, recipe.degree_b));
        case GeneratorKind::LieConstruct:
            return construct_h1_charp(
                random_lie_data(p, target_dim, recipe.lie_seed, recipe.lie_layers));
    }
    throw std::logic_error("realize_candidate: unknown generator kind");
}

SearchReport run_conjecture_search(const SearchConfig& cfg) {
    if (!is_prime(cfg.p)) throw std::invalid_argument("search: p must be prime");
    if (cfg.budget < 1) throw std::invalid_argument("search: budget must be >= 1");
    int target_dim = cfg.target_dim > 0 ? cfg.target_dim
                                        : static_cast<int>((cfg.p + 1) / 2);
    if (target_dim < 1) throw std::invalid_argument("search: target dimension must be >= 1");
    double total_weight = 0;
    for (const auto& [kind, w] : cfg.mix) {
        if (w < 0) throw std::invalid_argument("search: negative generator weight");
        total_weight += w;
    }
    if (total_weight == 0) throw std::invalid_argument("search: all generator weights are zero");

    SearchReport report;
    report.caveat =
        "a negative result means no violation found within budget; the generated "
        "families are a strict subset of all modules";

    auto degrees = admissible_degrees(target_dim);
    std::vector<std::pair<std::int64_t, std::int64_t>> tensor_pairs, sum_pairs;
    for (std::int64_t a : degrees)
        for (std::int64_t b : degrees) {
            if (coalgebra_dim(a) * coalgebra_dim(b) <= target_dim) tensor_pairs.push_back({a, b});
            if (coalgebra_dim(a) + coalgebra_dim(b) <= target_dim) sum_pairs.push_back({a, b});
        }
    bool lie_ok = cfg.p >= 2 * static_cast<std::int64_t>(target_dim);

    std::vector<std::pair<GeneratorKind, std::uint64_t>> weights;  // scaled integer weights
    auto weight_of = [&](GeneratorKind k) {
        auto it = cfg.mix.find(k);
        return it == cfg.mix.end() ? 0.0 : it->second;
    };
    auto add_kind = [&](GeneratorKind k, bool admissible) {
        double w = weight_of(k);
        if (admissible && w > 0)
            weights.push_back({k, static_cast<std::uint64_t>(w * 1024.0 + 0.5)});
    };
    add_kind(GeneratorKind::Coalgebra, !degrees.empty());
    add_kind(GeneratorKind::Tensor, !tensor_pairs.empty());
    add_kind(GeneratorKind::DirectSum, !sum_pairs.empty());
    add_kind(GeneratorKind::LieConstruct, lie_ok);
    if (weights.empty()) {
        report.exhausted = true;
        return report;
    }
    std::uint64_t weight_total = 0;
    for (const auto& [k, w] : weights) weight_total += w;

    std::size_t coalg_cursor = 0;
    for (std::int64_t index = 0; index < cfg.budget; ++index) {
        std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) + 1);
        std::uint64_t pick = rng() % weight_total;
        GeneratorKind kind = weights.back().first;
        for (const auto& [k, w] : weights) {
            if (pick < w) {
                kind = k;
                break;
            }
            pick -= w;
        }
        CandidateRecipe recipe;
        recipe.kind = kind;
        switch (kind) {
            case GeneratorKind::Coalgebra:
                // cycle largest-first so a budget-1 run sees the richest rep
                recipe.degree_a = degrees[coalg_cursor++ % degrees.size()];
                break;
            case GeneratorKind::Tensor: {
                auto [a, b] = tensor_pairs[rng() % tensor_pairs.size()];
                recipe.degree_a = a;
                recipe.degree_b = b;
                break;
            }
            case GeneratorKind::DirectSum: {
                auto [a, b] = sum_pairs[rng() % sum_pairs.size()];
                recipe.degree_a = a;
                recipe.degree_b = b;
                break;
            }
            case GeneratorKind::LieConstruct:
                recipe.lie_seed = rng();
                recipe.lie_layers = 1 + static_cast<int>(rng() % 2);
                break;
        }
        CoefficientFamily family = realize_candidate(recipe, cfg.p, target_dim);
        FrobeniusLayers layers = extract_layers(family);
        VerificationReport check = check_layer_relations(layers, CheckMode::Report);
        report.candidates_examined += 1;
        bool found = false;
        for (const auto& v : check.violations) {
            std::string condition = v.site.substr(0, v.site.find(':'));
            SearchViolation sv{index, recipe, condition, v.site};
            if (condition == "c")
                report.internal_errors.push_back(std::move(sv));
            else {
                report.violations.push_back(std::move(sv));
                found = true;
            }
        }
        if (found && cfg.fail_fast) break;
    }
    return report;
}

}  // namespace heisrep
