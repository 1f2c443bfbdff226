#include "heisrep/repcore.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace heisrep {

CoefficientFamily::CoefficientFamily(GroupKind group, FieldSpec field, int dim)
    : group_(group), field_(field), dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("CoefficientFamily: dimension must be positive");
}

ExactMatrix CoefficientFamily::coeff(const ExpVec& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? ExactMatrix(dim_, field_) : it->second;
}

void CoefficientFamily::set_coeff(const ExpVec& e, ExactMatrix m) {
    if (static_cast<int>(e.size()) != arity())
        throw std::invalid_argument("CoefficientFamily: exponent arity mismatch");
    if (m.dim() != dim_ || !(m.field() == field_))
        throw std::invalid_argument("CoefficientFamily: matrix dimension or field mismatch");
    for (auto v : e)
        if (v < 0) throw std::invalid_argument("CoefficientFamily: negative exponent");
    if (m.is_zero())
        coeffs_.erase(e);
    else
        coeffs_.insert_or_assign(e, std::move(m));
}

ExpVec CoefficientFamily::support_box() const {
    ExpVec box = exp_zero(arity());
    for (const auto& [e, m] : coeffs_)
        for (std::size_t i = 0; i < e.size(); ++i) box[i] = std::max(box[i], e[i]);
    return box;
}

bool CoefficientFamily::operator==(const CoefficientFamily& o) const {
    return group_ == o.group_ && field_ == o.field_ && dim_ == o.dim_ && coeffs_ == o.coeffs_;
}

std::string exp_to_string(const ExpVec& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ",";
        os << e[i];
    }
    os << ")";
    return os.str();
}

std::string matrix_to_string(const ExactMatrix& m) {
    auto entries = m.nonzero_entries();
    if (entries.empty()) return "0";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, j, v] : entries) {
        if (!first) os << ",";
        first = false;
        os << "(" << i << "," << j << "):" << v.str();
    }
    os << "}";
    return os.str();
}

CoefficientFamily from_polynomial_matrix(const PolyMatrix& m, GroupKind group) {
    if (m.arity() != arity_of(group))
        throw std::invalid_argument("from_polynomial_matrix: arity does not match group");
    CoefficientFamily f(group, m.field(), m.dim());
    std::map<ExpVec, ExactMatrix> acc;
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j)
            for (const auto& [e, c] : m.at(i, j).terms()) {
                auto it = acc.find(e);
                if (it == acc.end())
                    it = acc.emplace(e, ExactMatrix(m.dim(), m.field())).first;
                it->second.set(i, j, c);
            }
    for (auto& [e, mat] : acc) f.set_coeff(e, std::move(mat));
    return f;
}

PolyMatrix to_polynomial_matrix(const CoefficientFamily& f) {
    PolyMatrix m(f.dim(), f.field(), f.arity());
    for (const auto& [e, mat] : f.coeffs())
        for (int i = 1; i <= f.dim(); ++i)
            for (int j = 1; j <= f.dim(); ++j) {
                const Scalar& c = mat.at(i, j);
                if (c.is_zero()) continue;
                SparsePolynomial p = m.at(i, j);
                p.add_term(e, c);
                m.set(i, j, std::move(p));
            }
    return m;
}

VerificationReport verify_comodule_axioms(const CoefficientFamily& f) {
    VerificationReport report;
    PolyMatrix a = to_polynomial_matrix(f);
    int d = f.dim();
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            Scalar eps = counit(a.at(i, j));
            Scalar expected = i == j ? Scalar::one(f.field()) : Scalar::zero(f.field());
            if (eps != expected)
                report.record("entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                              "counit is " + eps.str() + ", expected " + expected.str());
        }
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            TensorPolynomial lhs = comultiply(a.at(i, j), f.group());
            TensorPolynomial rhs(f.field(), f.arity());
            for (int k = 1; k <= d; ++k)
                rhs = rhs + tensor(a.at(i, k), a.at(k, j));
            if (lhs != rhs)
                report.record("entry (" + std::to_string(i) + "," + std::to_string(j) + ")",
                              "comultiplication of a_ij differs from sum_k a_ik (x) a_kj");
        }
    return report;
}

namespace {

void check_counit_coefficient(const CoefficientFamily& f, VerificationReport& report) {
    ExactMatrix c0 = f.coeff(exp_zero(f.arity()));
    if (!c0.is_identity())
        report.record("exponent " + exp_to_string(exp_zero(f.arity())),
                      "coefficient at the zero exponent is not the identity");
}

}  // namespace

VerificationReport verify_fundamental_relation_ga(const CoefficientFamily& f) {
    if (f.group() != GroupKind::Ga)
        throw std::invalid_argument("verify_fundamental_relation_ga: family is not a Ga family");
    VerificationReport report;
    check_counit_coefficient(f, report);
    std::int64_t max_deg = f.support_box()[0];
    for (std::int64_t r = 0; r <= max_deg; ++r)
        for (std::int64_t s = 0; s <= max_deg; ++s) {
            ExactMatrix lhs = f.coeff({r}) * f.coeff({s});
            ExactMatrix rhs = f.coeff({r + s}) * binomial_in_field(f.field(), r + s, r);
            if (lhs != rhs)
                report.record("(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + ")",
                              "c^r c^s = " + matrix_to_string(lhs) + " but C(r+s,r) c^{r+s} = " +
                                  matrix_to_string(rhs));
        }
    return report;
}

namespace {

// all exponent triples inside the (inclusive) box
std::vector<ExpVec> box_points(const ExpVec& box) {
    std::vector<ExpVec> points;
    for (std::int64_t a = 0; a <= box[0]; ++a)
        for (std::int64_t b = 0; b <= box[1]; ++b)
            for (std::int64_t c = 0; c <= box[2]; ++c) points.push_back({a, b, c});
    return points;
}

}  // namespace

VerificationReport verify_fundamental_relation_h1(const CoefficientFamily& f) {
    if (f.group() != GroupKind::H1)
        throw std::invalid_argument("verify_fundamental_relation_h1: family is not an H1 family");
    VerificationReport report;
    check_counit_coefficient(f, report);
    // Outside the support box both sides of the relation vanish identically:
    // the finite support kills the left side and every right-hand
    // coefficient matrix, so checking all pairs inside the box suffices.
    auto points = box_points(f.support_box());
    for (const ExpVec& s : points)
        for (const ExpVec& t : points) {
            bool lhs_zero = f.coeffs().find(s) == f.coeffs().end() ||
                            f.coeffs().find(t) == f.coeffs().end();
            std::int64_t lmax = std::min(s[0], t[1]);
            ExactMatrix rhs(f.dim(), f.field());
            for (std::int64_t l = 0; l <= lmax; ++l) {
                ExpVec target = {s[0] + t[0] - l, s[1] + t[1] - l, s[2] + t[2] + l};
                auto it = f.coeffs().find(target);
                if (it == f.coeffs().end()) continue;
                Scalar coeff = binomial_in_field(f.field(), s[0] + t[0] - l, t[0]) *
                               binomial_in_field(f.field(), s[1] + t[1] - l, s[1]) *
                               trinomial_in_field(f.field(), s[2], t[2], l);
                if (coeff.is_zero()) continue;
                rhs = rhs + it->second * coeff;
            }
            if (lhs_zero && rhs.is_zero()) continue;
            ExactMatrix lhs = f.coeff(s) * f.coeff(t);
            if (lhs != rhs)
                report.record("(s,t)=(" + exp_to_string(s) + "," + exp_to_string(t) + ")",
                              "c^s c^t = " + matrix_to_string(lhs) + " but the l-sum gives " +
                                  matrix_to_string(rhs));
        }
    return report;
}

VerificationReport verify_fundamental_relation(const CoefficientFamily& f) {
    return f.group() == GroupKind::Ga ? verify_fundamental_relation_ga(f)
                                      : verify_fundamental_relation_h1(f);
}

namespace {

std::int64_t max_coordinate(const ExpVec& box) {
    std::int64_t m = 0;
    for (auto v : box) m = std::max(m, v);
    return m;
}

}  // namespace

FrobeniusLayers extract_layers(const CoefficientFamily& f) {
    if (!f.field().is_prime())
        throw FieldError("extract_layers: Frobenius layers require a prime field");
    if (f.group() != GroupKind::H1)
        throw std::invalid_argument("extract_layers: family is not an H1 family");
    FrobeniusLayers result;
    result.p = f.field().p();
    result.dim = f.dim();
    std::int64_t max_deg = max_coordinate(f.support_box());
    for (Int pm = 1; pm <= max_deg; pm *= result.p) {
        std::int64_t e = static_cast<std::int64_t>(pm);
        result.layers.push_back({f.coeff({e, 0, 0}), f.coeff({0, e, 0}), f.coeff({0, 0, e})});
    }
    while (!result.layers.empty() && result.layers.back().X.is_zero() &&
           result.layers.back().Y.is_zero() && result.layers.back().Z.is_zero())
        result.layers.pop_back();
    return result;
}

std::vector<ExactMatrix> extract_layers_ga(const CoefficientFamily& f) {
    if (!f.field().is_prime())
        throw FieldError("extract_layers_ga: Frobenius layers require a prime field");
    if (f.group() != GroupKind::Ga)
        throw std::invalid_argument("extract_layers_ga: family is not a Ga family");
    std::vector<ExactMatrix> layers;
    std::int64_t max_deg = f.support_box()[0];
    for (Int pm = 1; pm <= max_deg; pm *= f.field().p())
        layers.push_back(f.coeff({static_cast<std::int64_t>(pm)}));
    while (!layers.empty() && layers.back().is_zero()) layers.pop_back();
    return layers;
}

VerificationReport check_layer_relations(const FrobeniusLayers& layers, CheckMode mode) {
    VerificationReport report;
    const auto& L = layers.layers;
    std::int64_t p = layers.p;
    auto letter = [&](std::size_t m, int which) -> const ExactMatrix& {
        switch (which) {
            case 0: return L[m].X;
            case 1: return L[m].Y;
            default: return L[m].Z;
        }
    };
    const char* names = "XYZ";
    auto site = [&](int which, std::size_t m) {
        return std::string(1, names[which]) + std::to_string(m);
    };
    auto done = [&] { return mode == CheckMode::Strict && !report.ok; };

    // (a) p-nilpotency
    for (std::size_t m = 0; m < L.size() && !done(); ++m)
        for (int w = 0; w < 3; ++w) {
            const ExactMatrix& a = letter(m, w);
            if (!a.pow(std::min<std::int64_t>(p, a.dim())).is_zero())
                report.record("a:" + site(w, m), site(w, m) + "^p != 0");
            if (done()) break;
        }
    // (b) same-letter cross-layer commutation
    for (std::size_t m = 0; m < L.size() && !done(); ++m)
        for (std::size_t n = m + 1; n < L.size() && !done(); ++n)
            for (int w = 0; w < 3; ++w) {
                if (!commutator(letter(m, w), letter(n, w)).is_zero())
                    report.record("b:(" + site(w, m) + "," + site(w, n) + ")",
                                  "[" + site(w, m) + "," + site(w, n) + "] != 0");
                if (done()) break;
            }
    // (c) Z commutes with everything; true unconditionally for verified
    // families, whatever the characteristic
    for (std::size_t n = 0; n < L.size() && !done(); ++n)
        for (std::size_t m = 0; m < L.size() && !done(); ++m)
            for (int w = 0; w < 2; ++w) {
                if (!commutator(L[n].Z, letter(m, w)).is_zero())
                    report.record("c:(" + site(2, n) + "," + site(w, m) + ")",
                                  "[" + site(2, n) + "," + site(w, m) + "] != 0");
                if (done()) break;
            }
    // (d) [X_m,Y_m] = Z_m
    for (std::size_t m = 0; m < L.size() && !done(); ++m) {
        ExactMatrix bracket = commutator(L[m].X, L[m].Y);
        if (bracket != L[m].Z)
            report.record("d:" + std::to_string(m),
                          "[X" + std::to_string(m) + ",Y" + std::to_string(m) + "] = " +
                              matrix_to_string(bracket) + " but Z" + std::to_string(m) + " = " +
                              matrix_to_string(L[m].Z));
    }
    // (e) [X_n,Y_m] = 0 for n != m
    std::set<std::pair<std::size_t, std::size_t>> xy_failures;
    for (std::size_t n = 0; n < L.size() && !done(); ++n)
        for (std::size_t m = 0; m < L.size() && !done(); ++m) {
            if (n == m) continue;
            if (!commutator(L[n].X, L[m].Y).is_zero()) {
                xy_failures.insert({n, m});
                report.record("e:(" + site(0, n) + "," + site(1, m) + ")",
                              "[" + site(0, n) + "," + site(1, m) + "] != 0");
            }
        }
    // (f) full cross-layer commutation of the triples; pairs already
    // reported under (b), (c) or (e) are not repeated
    for (std::size_t n = 0; n < L.size() && !done(); ++n)
        for (std::size_t m = 0; m < L.size() && !done(); ++m) {
            if (n == m) continue;
            for (int v = 0; v < 3 && !done(); ++v)
                for (int w = 0; w < 3; ++w) {
                    if (v == w || v == 2 || w == 2) continue;          // (b), (c)
                    if (v == 0 && w == 1 && xy_failures.count({n, m})) continue;  // (e)
                    if (v == 1 && w == 0 && xy_failures.count({m, n})) continue;
                    if (!commutator(letter(n, v), letter(m, w)).is_zero())
                        report.record("f:(" + site(v, n) + "," + site(w, m) + ")",
                                      "[" + site(v, n) + "," + site(w, m) + "] != 0");
                    if (done()) break;
                }
        }
    return report;
}

}  // namespace heisrep
