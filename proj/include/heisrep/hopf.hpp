#pragma once

#include "heisrep/poly.hpp"

namespace heisrep {

/// Comultiplication of a single generator: x and y are primitive, and
/// Delta(z) = z (x) 1 + x (x) y + 1 (x) z.
TensorPolynomial comultiply_generator(FieldSpec field, GroupKind group, int var);

/// Comultiplication extended to arbitrary polynomials as an algebra map:
/// a monomial maps to the product of the generator images, and Delta is
/// linear over sums. Computed term by term, never via a closed formula.
TensorPolynomial comultiply(const SparsePolynomial& f, GroupKind group);

/// Counit: the constant term of f.
Scalar counit(const SparsePolynomial& f);

}  // namespace heisrep
