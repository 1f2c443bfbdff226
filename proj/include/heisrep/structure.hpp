#pragma once

#include "heisrep/repcore.hpp"

namespace heisrep {

/// A hypothesis of one of the constructive theorems failed; the message
/// names the first failed identity.
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Layerwise generating data for an H1 representation: nilpotent triples
/// with [X_i,Y_i] = Z_i, Z_i central in its layer, and full commutation
/// across layers.
struct LieLayerData {
    std::int64_t p = 0;
    int dim = 0;
    std::vector<FrobeniusLayers::Triple> triples;
};

/// Throws HypothesisError naming the first violated hypothesis.
void validate_lie_layer_data(const LieLayerData& data);

/// Builds the coefficient family c^{(n,m,k)} = Z_(k) Y_(m) X_(n), where
/// P_(n) = Gamma(n)^{-1} P_0^{n_0} ... P_M^{n_M} over the p-digits of n.
/// Requires p >= 2d.
CoefficientFamily construct_h1_charp(const LieLayerData& data);

/// Ga analogue: c^r = Gamma(r)^{-1} X_0^{r_0} ... X_m^{r_m} from commuting
/// p-nilpotent matrices.
CoefficientFamily construct_ga_charp(const std::vector<ExactMatrix>& xs, std::int64_t p);

/// The commuting product of layerwise truncated exponentials
/// exp(x^{p^i} X_i + y^{p^i} Y_i + (z^{p^i} - x^{p^i} y^{p^i}/2) Z_i).
/// Agrees with construct_h1_charp exactly. Requires odd p when dim >= 2;
/// a 1-dimensional input yields the identity matrix.
PolyMatrix exponential_form_h1(const LieLayerData& data);

/// exp(xX) = Sum x^r X^r / r! over the rationals.
PolyMatrix construct_ga_char0(const ExactMatrix& x);

/// exp(xX + yY + (z - xy/2)Z) over the rationals, for a Heisenberg triple.
PolyMatrix construct_h1_char0(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z);

/// Direct evaluation of the reordering identity
/// X^n Y^m = Sum_l l! C(n,l) C(m,l) Z^l Y^{m-l} X^{n-l}.
/// Over a prime field requires 0 <= n,m < p.
bool weyl_identity_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z,
                         std::int64_t n, std::int64_t m);

}  // namespace heisrep
