#pragma once

#include <cstdint>
#include <map>

#include "heisrep/generators.hpp"
#include "heisrep/structure.hpp"

namespace heisrep {

enum class GeneratorKind { Coalgebra, Tensor, DirectSum, LieConstruct };

struct SearchConfig {
    std::int64_t p = 0;
    int target_dim = 0;  // 0 means the default (p+1)/2
    std::int64_t budget = 1000;
    std::uint64_t seed = 0;
    std::map<GeneratorKind, double> mix = {{GeneratorKind::Coalgebra, 1.0},
                                           {GeneratorKind::Tensor, 1.0},
                                           {GeneratorKind::DirectSum, 1.0},
                                           {GeneratorKind::LieConstruct, 1.0}};
    bool fail_fast = false;
};

/// A structural recipe for one candidate; rebuilding it reproduces the
/// same representation bit for bit.
struct CandidateRecipe {
    GeneratorKind kind = GeneratorKind::Coalgebra;
    std::int64_t degree_a = 0;    // coalgebra degree (first factor for tensor/sum)
    std::int64_t degree_b = 0;    // second factor for tensor/sum
    std::uint64_t lie_seed = 0;   // lie_construct only
    int lie_layers = 1;           // lie_construct only
    std::string describe() const;
};

struct SearchViolation {
    std::int64_t candidate_index = 0;
    CandidateRecipe recipe;
    std::string condition;  // layer-condition id: a, b, d, e or f
    std::string site;
};

struct SearchReport {
    std::int64_t candidates_examined = 0;
    std::vector<SearchViolation> violations;
    /// Condition-c failures; the unconditional relation can only break if
    /// the artifact itself is wrong, never the conjectures.
    std::vector<SearchViolation> internal_errors;
    bool exhausted = false;
    /// A negative result never argues against the conjectures: the
    /// generator families are a strict subset of all modules.
    std::string caveat;
};

/// Rebuilds the representation a recipe describes.
CoefficientFamily realize_candidate(const CandidateRecipe& recipe, std::int64_t p, int target_dim);

/// Deterministic bounded search over generated candidates for violations
/// of the layer conditions.
SearchReport run_conjecture_search(const SearchConfig& cfg);

}  // namespace heisrep
