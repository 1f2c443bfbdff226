#include "heisrep/hopf.hpp"

namespace heisrep {

TensorPolynomial comultiply_generator(FieldSpec field, GroupKind group, int var) {
    int arity = arity_of(group);
    if (var < 0 || var >= arity)
        throw std::invalid_argument("comultiply_generator: bad variable index");
    TensorPolynomial t(field, arity);
    Scalar one = Scalar::one(field);
    ExpVec zero = exp_zero(arity);
    ExpVec v = zero;
    v[static_cast<std::size_t>(var)] = 1;
    // primitive part, shared by all generators
    t.add_term(v, zero, one);
    t.add_term(zero, v, one);
    if (group == GroupKind::H1 && var == 2) {
        ExpVec x = exp_zero(arity), y = exp_zero(arity);
        x[0] = 1;
        y[1] = 1;
        t.add_term(x, y, one);  // z picks up x (x) y
    }
    return t;
}

TensorPolynomial comultiply(const SparsePolynomial& f, GroupKind group) {
    int arity = arity_of(group);
    if (f.arity() != arity)
        throw std::invalid_argument("comultiply: polynomial arity does not match group");
    TensorPolynomial result(f.field(), arity);
    for (const auto& [e, c] : f.terms()) {
        TensorPolynomial term = TensorPolynomial::one(f.field(), arity);
        for (int var = 0; var < arity; ++var) {
            std::int64_t k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            term = term * comultiply_generator(f.field(), group, var).pow(k);
        }
        TensorPolynomial scaled(f.field(), arity);
        for (const auto& [te, tc] : term.terms())
            scaled.add_term(te.first, te.second, tc * c);
        result = result + scaled;
    }
    return result;
}

Scalar counit(const SparsePolynomial& f) { return f.constant_term(); }

}  // namespace heisrep
