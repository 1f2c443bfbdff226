#pragma once

#include <map>
#include <optional>
#include <string>

#include "heisrep/hopf.hpp"
#include "heisrep/matrix.hpp"
#include "heisrep/poly.hpp"

namespace heisrep {

/// The representation object: finitely supported exponent-vector ->
/// coefficient-matrix map. Zero matrices are never stored, so equality of
/// families is equality of the canonical maps. The entrywise polynomial
/// matrix (a_ij) and the coefficient matrices are two views of the same
/// data, converted by to_/from_polynomial_matrix.
class CoefficientFamily {
public:
    CoefficientFamily(GroupKind group, FieldSpec field, int dim);

    GroupKind group() const { return group_; }
    const FieldSpec& field() const { return field_; }
    int dim() const { return dim_; }
    int arity() const { return arity_of(group_); }
    const std::map<ExpVec, ExactMatrix>& coeffs() const { return coeffs_; }

    /// Coefficient matrix at the given exponent; zero matrix when absent.
    ExactMatrix coeff(const ExpVec& e) const;
    void set_coeff(const ExpVec& e, ExactMatrix m);

    /// Largest value of each exponent coordinate over the support
    /// (all zeros for the empty family).
    ExpVec support_box() const;

    bool operator==(const CoefficientFamily& o) const;
    bool operator!=(const CoefficientFamily& o) const { return !(*this == o); }

private:
    GroupKind group_;
    FieldSpec field_;
    int dim_;
    std::map<ExpVec, ExactMatrix> coeffs_;
};

/// One failed identity, with both evaluated sides rendered as text.
struct Violation {
    std::string site;
    std::string description;
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void record(std::string site, std::string description) {
        ok = false;
        violations.push_back({std::move(site), std::move(description)});
    }
};

/// The triple (X_m, Y_m, Z_m) = coefficient matrices at the m-th power of
/// the characteristic; trailing all-zero triples are trimmed.
struct FrobeniusLayers {
    std::int64_t p = 0;
    int dim = 0;
    struct Triple {
        ExactMatrix X, Y, Z;
    };
    std::vector<Triple> layers;
};

enum class CheckMode { Strict, Report };

CoefficientFamily from_polynomial_matrix(const PolyMatrix& m, GroupKind group);
PolyMatrix to_polynomial_matrix(const CoefficientFamily& f);

/// Checks the two comodule equations directly: the comultiplication of
/// every matrix entry a_ij must equal Sum_k a_ik (x) a_kj, and the counit
/// of a_ij must be delta_ij. Expansion goes through comultiply, keeping
/// this verifier independent of the closed-form relation below.
VerificationReport verify_comodule_axioms(const CoefficientFamily& f);

/// Checks c^0 = I and c^r c^s = C(r+s,r) c^{r+s} on the support closure.
VerificationReport verify_fundamental_relation_ga(const CoefficientFamily& f);

/// Checks c^0 = I and, for every pair of exponent triples inside the
/// support box, the l-summed product law with binomial and trinomial
/// coefficients taken in the family's field.
VerificationReport verify_fundamental_relation_h1(const CoefficientFamily& f);

/// Dispatches on the family's group.
VerificationReport verify_fundamental_relation(const CoefficientFamily& f);

/// Reads the layer triples off a prime-field family. The Ga variant uses
/// extract_layers_ga, which keeps only the X matrices.
FrobeniusLayers extract_layers(const CoefficientFamily& f);
std::vector<ExactMatrix> extract_layers_ga(const CoefficientFamily& f);

/// Layer-condition ids as reported by check_layer_relations:
///   a: every matrix p-nilpotent          b: same-letter commutation
///   c: [Z_n,X_m] = [Z_n,Y_m] = 0         d: [X_m,Y_m] = Z_m
///   e: [X_n,Y_m] = 0 for n != m          f: cross-layer commutation
VerificationReport check_layer_relations(const FrobeniusLayers& layers,
                                         CheckMode mode = CheckMode::Report);

std::string exp_to_string(const ExpVec& e);
std::string matrix_to_string(const ExactMatrix& m);

}  // namespace heisrep
