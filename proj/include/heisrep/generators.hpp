#pragma once

#include "heisrep/repcore.hpp"

namespace heisrep {

/// All monomials of total degree <= max_degree, in graded order, ties
/// broken by x before y before z. For H1 and max_degree 2 this is
/// 1, x, y, z, x^2, xy, xz, y^2, yz, z^2. The ordering is part of the
/// contract: fixtures built on it are bit-exact regression anchors.
std::vector<ExpVec> monomial_basis(GroupKind group, std::int64_t max_degree);

/// The comodule on the span of all monomials of degree <= max_degree,
/// with coaction the restriction of the comultiplication. Basis vector
/// e_j maps to Sum_i e_i (x) a_ij, i.e. a_ij collects the coefficient of
/// basis monomial i in the left tensor slot of Delta(monomial j).
CoefficientFamily monomial_coalgebra_rep(FieldSpec field, GroupKind group,
                                         std::int64_t max_degree);

/// Tensor product of comodules: the Kronecker product of the polynomial
/// matrices, entries multiplied in the polynomial ring.
CoefficientFamily tensor_product(const CoefficientFamily& f, const CoefficientFamily& g);

/// Block-diagonal direct sum: c^r = diag(c^r(f), c^r(g)).
CoefficientFamily direct_sum(const CoefficientFamily& f, const CoefficientFamily& g);

}  // namespace heisrep
