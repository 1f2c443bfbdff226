#pragma once

// Shared fixture builders for the test suites.

#include "heisrep/generators.hpp"
#include "heisrep/repcore.hpp"
#include "heisrep/structure.hpp"

namespace heisrep::fixtures {

// 3-dimensional Ga representation [[1,x,x^2],[0,1,2x],[0,0,1]].
inline CoefficientFamily ga_quadratic(FieldSpec f) {
    PolyMatrix m = PolyMatrix::identity(3, f, 1);
    m.set(1, 2, SparsePolynomial::monomial(f, {1}, Scalar::one(f)));
    m.set(1, 3, SparsePolynomial::monomial(f, {2}, Scalar::one(f)));
    m.set(2, 3, SparsePolynomial::monomial(f, {1}, Scalar(f, 2)));
    return from_polynomial_matrix(m, GroupKind::Ga);
}

// The 6-dimensional H1 representation with entries such as 2x and 2xz.
inline CoefficientFamily h1_six_dim(FieldSpec f) {
    PolyMatrix m = PolyMatrix::identity(6, f, 3);
    auto mono = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t coeff) {
        return SparsePolynomial::monomial(f, {a, b, c}, Scalar(f, coeff));
    };
    m.set(1, 2, mono(1, 0, 0, 2));
    m.set(1, 3, mono(1, 0, 0, 1));
    m.set(1, 4, mono(2, 0, 0, 2));
    m.set(1, 5, mono(0, 0, 1, 1));
    m.set(1, 6, mono(1, 0, 1, 2));
    m.set(2, 4, mono(1, 0, 0, 1));
    m.set(2, 6, mono(0, 0, 1, 1));
    m.set(3, 4, mono(1, 0, 0, 2));
    m.set(3, 5, mono(0, 1, 0, 1));
    m.set(3, 6, mono(1, 1, 0, 2));
    m.set(4, 6, mono(0, 1, 0, 1));
    m.set(5, 6, mono(1, 0, 0, 2));
    return from_polynomial_matrix(m, GroupKind::H1);
}

// Defining 3-dimensional H1 representation [[1,x,z],[0,1,y],[0,0,1]].
inline CoefficientFamily h1_defining(FieldSpec f) {
    PolyMatrix m = PolyMatrix::identity(3, f, 3);
    m.set(1, 2, SparsePolynomial::monomial(f, {1, 0, 0}, Scalar::one(f)));
    m.set(2, 3, SparsePolynomial::monomial(f, {0, 1, 0}, Scalar::one(f)));
    m.set(1, 3, SparsePolynomial::monomial(f, {0, 0, 1}, Scalar::one(f)));
    return from_polynomial_matrix(m, GroupKind::H1);
}

// Degree-bounded monomial comodules over F2: the 10- and 20-dimensional
// counterexample representations.
inline CoefficientFamily f2_degree2() {
    return monomial_coalgebra_rep(FieldSpec::prime(2), GroupKind::H1, 2);
}
inline CoefficientFamily f2_degree3() {
    return monomial_coalgebra_rep(FieldSpec::prime(2), GroupKind::H1, 3);
}

inline LieLayerData defining_triple_layer(std::int64_t p) {
    FieldSpec f = FieldSpec::prime(p);
    LieLayerData data;
    data.p = p;
    data.dim = 3;
    data.triples.push_back({ExactMatrix::unit(3, f, 1, 2), ExactMatrix::unit(3, f, 2, 3),
                            ExactMatrix::unit(3, f, 1, 3)});
    return data;
}

}  // namespace heisrep::fixtures
