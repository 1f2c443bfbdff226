#include "heisrep/generators.hpp"

#include <algorithm>
#include <map>

namespace heisrep {

std::vector<ExpVec> monomial_basis(GroupKind group, std::int64_t max_degree) {
    if (max_degree < 0) throw std::invalid_argument("monomial_basis: negative degree bound");
    int arity = arity_of(group);
    std::vector<ExpVec> basis;
    if (group == GroupKind::Ga) {
        for (std::int64_t r = 0; r <= max_degree; ++r) basis.push_back({r});
        return basis;
    }
    for (std::int64_t deg = 0; deg <= max_degree; ++deg) {
        std::vector<ExpVec> level;
        for (std::int64_t a = 0; a <= deg; ++a)
            for (std::int64_t b = 0; b <= deg - a; ++b) level.push_back({a, b, deg - a - b});
        // within a degree: x before y before z, i.e. descending lex
        std::sort(level.begin(), level.end(),
                  [](const ExpVec& l, const ExpVec& r) { return l > r; });
        basis.insert(basis.end(), level.begin(), level.end());
    }
    (void)arity;
    return basis;
}

CoefficientFamily monomial_coalgebra_rep(FieldSpec field, GroupKind group,
                                         std::int64_t max_degree) {
    std::vector<ExpVec> basis = monomial_basis(group, max_degree);
    std::map<ExpVec, int> index;  // 1-based
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i) + 1;
    int dim = static_cast<int>(basis.size());
    PolyMatrix a(dim, field, arity_of(group));
    for (int j = 1; j <= dim; ++j) {
        SparsePolynomial mono =
            SparsePolynomial::monomial(field, basis[static_cast<std::size_t>(j - 1)],
                                       Scalar::one(field));
        TensorPolynomial image = comultiply(mono, group);
        for (const auto& [st, c] : image.terms()) {
            auto it = index.find(st.first);
            // the left slot never leaves the degree bound, so this lookup
            // always succeeds: Delta restricts to a sub-coalgebra
            if (it == index.end())
                throw std::logic_error("monomial_coalgebra_rep: left slot escaped the basis");
            SparsePolynomial entry = a.at(it->second, j);
            entry.add_term(st.second, c);
            a.set(it->second, j, std::move(entry));
        }
    }
    return from_polynomial_matrix(a, group);
}

CoefficientFamily tensor_product(const CoefficientFamily& f, const CoefficientFamily& g) {
    if (f.group() != g.group() || !(f.field() == g.field()))
        throw std::invalid_argument("tensor_product: group or field mismatch");
    PolyMatrix a = to_polynomial_matrix(f);
    PolyMatrix b = to_polynomial_matrix(g);
    int da = a.dim(), db = b.dim();
    PolyMatrix r(da * db, f.field(), f.arity());
    for (int i = 1; i <= da; ++i)
        for (int j = 1; j <= da; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 1; k <= db; ++k)
                for (int l = 1; l <= db; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.set((i - 1) * db + k, (j - 1) * db + l, a.at(i, j) * b.at(k, l));
                }
        }
    return from_polynomial_matrix(r, f.group());
}

CoefficientFamily direct_sum(const CoefficientFamily& f, const CoefficientFamily& g) {
    if (f.group() != g.group() || !(f.field() == g.field()))
        throw std::invalid_argument("direct_sum: group or field mismatch");
    CoefficientFamily r(f.group(), f.field(), f.dim() + g.dim());
    std::map<ExpVec, ExactMatrix> blocks;
    auto block_at = [&](const ExpVec& e) -> ExactMatrix& {
        auto it = blocks.find(e);
        if (it == blocks.end())
            it = blocks.emplace(e, ExactMatrix(f.dim() + g.dim(), f.field())).first;
        return it->second;
    };
    for (const auto& [e, m] : f.coeffs()) {
        ExactMatrix& target = block_at(e);
        for (const auto& [i, j, v] : m.nonzero_entries()) target.set(i, j, v);
    }
    for (const auto& [e, m] : g.coeffs()) {
        ExactMatrix& target = block_at(e);
        for (const auto& [i, j, v] : m.nonzero_entries())
            target.set(f.dim() + i, f.dim() + j, v);
    }
    for (auto& [e, m] : blocks) r.set_coeff(e, std::move(m));
    return r;
}

}  // namespace heisrep
