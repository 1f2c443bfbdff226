#include "heisrep/structure.hpp"

#include <algorithm>

namespace heisrep {

namespace {

std::string layer_name(const char* letter, std::size_t i) {
    return std::string(letter) + std::to_string(i);
}

void require_nilpotent(const ExactMatrix& a, const std::string& name) {
    if (!is_nilpotent(a)) throw HypothesisError(name + " is not nilpotent");
}

void require_commute(const ExactMatrix& a, const ExactMatrix& b, const std::string& an,
                     const std::string& bn) {
    if (!commutator(a, b).is_zero())
        throw HypothesisError("[" + an + "," + bn + "] != 0");
}

// largest e with A^e != 0 (so A^{e+1} = 0); 0 for the zero matrix
std::int64_t top_power(const ExactMatrix& a) { return nilpotency_index(a) - 1; }

struct LetterTable {
    // exponent n together with the matrix P_(n) = Gamma(n)^{-1} prod P_i^{n_i};
    // only nonzero products are kept
    std::vector<std::pair<std::int64_t, ExactMatrix>> entries;
};

// Enumerates the digit vectors with P_i^{n_i} != 0 layer by layer; any
// exponent outside this set has a vanishing factor, which bounds the
// support without scanning a cube.
LetterTable letter_table(const std::vector<ExactMatrix>& mats, std::int64_t p) {
    LetterTable table;
    FieldSpec f = mats.empty() ? FieldSpec::prime(p) : mats[0].field();
    int dim = mats.empty() ? 1 : mats[0].dim();
    table.entries.emplace_back(0, ExactMatrix::identity(dim, f));
    for (std::size_t i = 0; i < mats.size(); ++i) {
        std::int64_t pi = 1;
        for (std::size_t k = 0; k < i; ++k) pi *= p;
        std::int64_t e = top_power(mats[i]);
        std::vector<std::pair<std::int64_t, ExactMatrix>> next;
        for (const auto& [n, m] : table.entries) {
            ExactMatrix power = ExactMatrix::identity(dim, f);
            for (std::int64_t d = 0; d <= e; ++d) {
                if (d > 0) power = power * mats[i];
                ExactMatrix prod = m * power;
                if (d > 0 && prod.is_zero()) continue;
                next.emplace_back(n + d * pi, prod);
            }
        }
        table.entries = std::move(next);
    }
    for (auto& [n, m] : table.entries)
        m = m * gamma_digit_factorial(n, p).inverse();
    return table;
}

}  // namespace

void validate_lie_layer_data(const LieLayerData& data) {
    if (!is_prime(data.p)) throw HypothesisError("characteristic is not prime");
    for (std::size_t i = 0; i < data.triples.size(); ++i) {
        const auto& t = data.triples[i];
        if (t.X.dim() != data.dim || t.Y.dim() != data.dim || t.Z.dim() != data.dim)
            throw HypothesisError("layer " + std::to_string(i) + " has wrong dimension");
        require_nilpotent(t.X, layer_name("X", i));
        require_nilpotent(t.Y, layer_name("Y", i));
        require_nilpotent(t.Z, layer_name("Z", i));
        if (commutator(t.X, t.Y) != t.Z)
            throw HypothesisError("[" + layer_name("X", i) + "," + layer_name("Y", i) +
                                  "] != " + layer_name("Z", i));
        require_commute(t.Z, t.X, layer_name("Z", i), layer_name("X", i));
        require_commute(t.Z, t.Y, layer_name("Z", i), layer_name("Y", i));
    }
    for (std::size_t i = 0; i < data.triples.size(); ++i)
        for (std::size_t j = i + 1; j < data.triples.size(); ++j) {
            const ExactMatrix* a[3] = {&data.triples[i].X, &data.triples[i].Y, &data.triples[i].Z};
            const ExactMatrix* b[3] = {&data.triples[j].X, &data.triples[j].Y, &data.triples[j].Z};
            const char* names = "XYZ";
            for (int v = 0; v < 3; ++v)
                for (int w = 0; w < 3; ++w)
                    require_commute(*a[v], *b[w], layer_name(std::string(1, names[v]).c_str(), i),
                                    layer_name(std::string(1, names[w]).c_str(), j));
        }
}

CoefficientFamily construct_h1_charp(const LieLayerData& data) {
    validate_lie_layer_data(data);
    if (data.p < 2 * data.dim)
        throw HypothesisError("characteristic " + std::to_string(data.p) +
                              " is below twice the dimension");
    FieldSpec f = FieldSpec::prime(data.p);
    std::vector<ExactMatrix> xs, ys, zs;
    for (const auto& t : data.triples) {
        xs.push_back(t.X);
        ys.push_back(t.Y);
        zs.push_back(t.Z);
    }
    LetterTable xt = letter_table(xs, data.p);
    LetterTable yt = letter_table(ys, data.p);
    LetterTable zt = letter_table(zs, data.p);
    CoefficientFamily family(GroupKind::H1, f, data.dim);
    for (const auto& [k, zm] : zt.entries)
        for (const auto& [m, ym] : yt.entries) {
            ExactMatrix zy = zm * ym;
            if (zy.is_zero()) continue;
            for (const auto& [n, xm] : xt.entries) {
                ExactMatrix c = zy * xm;
                if (!c.is_zero()) family.set_coeff({n, m, k}, std::move(c));
            }
        }
    return family;
}

CoefficientFamily construct_ga_charp(const std::vector<ExactMatrix>& xs, std::int64_t p) {
    if (!is_prime(p)) throw HypothesisError("characteristic is not prime");
    if (xs.empty()) throw std::invalid_argument("construct_ga_charp: empty matrix list");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!xs[i].pow(std::min<std::int64_t>(p, xs[i].dim())).is_zero())
            throw HypothesisError(layer_name("X", i) + " is not p-nilpotent");
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            require_commute(xs[i], xs[j], layer_name("X", i), layer_name("X", j));
    }
    FieldSpec f = xs[0].field();
    if (!f.is_prime() || f.p() != p)
        throw std::invalid_argument("construct_ga_charp: matrices are not over F_p");
    CoefficientFamily family(GroupKind::Ga, f, xs[0].dim());
    for (const auto& [r, m] : letter_table(xs, p).entries)
        if (!m.is_zero()) family.set_coeff({r}, m);
    return family;
}

namespace {

PolyMatrix scaled_by_monomial(const ExactMatrix& m, const SparsePolynomial& poly, int arity) {
    PolyMatrix result(m.dim(), m.field(), arity);
    for (const auto& [i, j, v] : m.nonzero_entries()) result.set(i, j, poly * v);
    return result;
}

}  // namespace

PolyMatrix exponential_form_h1(const LieLayerData& data) {
    validate_lie_layer_data(data);
    FieldSpec f = FieldSpec::prime(data.p);
    if (data.dim == 1) return PolyMatrix::identity(1, f, 3);
    if (data.p < 2 * data.dim)
        throw HypothesisError("characteristic " + std::to_string(data.p) +
                              " is below twice the dimension");
    if (data.p == 2) throw HypothesisError("the exponential formula divides by 2");
    PolyMatrix result = PolyMatrix::identity(data.dim, f, 3);
    Scalar half = Scalar(f, 2).inverse();
    std::int64_t pi = 1;
    for (const auto& t : data.triples) {
        SparsePolynomial x = SparsePolynomial::monomial(f, {pi, 0, 0}, Scalar::one(f));
        SparsePolynomial y = SparsePolynomial::monomial(f, {0, pi, 0}, Scalar::one(f));
        SparsePolynomial z = SparsePolynomial::monomial(f, {0, 0, pi}, Scalar::one(f));
        SparsePolynomial zarg = z - (x * y) * half;
        PolyMatrix arg = scaled_by_monomial(t.X, x, 3) + scaled_by_monomial(t.Y, y, 3) +
                         scaled_by_monomial(t.Z, zarg, 3);
        result = result * truncated_exp(arg);
        pi *= data.p;
    }
    return result;
}

PolyMatrix construct_ga_char0(const ExactMatrix& x) {
    if (!(x.field() == FieldSpec::rational()))
        throw std::invalid_argument("construct_ga_char0: matrix must be over the rationals");
    require_nilpotent(x, "X");
    FieldSpec f = FieldSpec::rational();
    PolyMatrix result = PolyMatrix::identity(x.dim(), f, 1);
    ExactMatrix power = ExactMatrix::identity(x.dim(), f);
    Int rfact = 1;
    for (std::int64_t r = 1; r < x.dim(); ++r) {
        power = power * x;
        if (power.is_zero()) break;
        rfact *= r;
        Scalar inv(f, Int(1), rfact);
        SparsePolynomial xr = SparsePolynomial::monomial(f, {r}, inv);
        result = result + scaled_by_monomial(power, xr, 1);
    }
    return result;
}

PolyMatrix construct_h1_char0(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z) {
    FieldSpec f = FieldSpec::rational();
    if (!(x.field() == f) || !(y.field() == f) || !(z.field() == f))
        throw std::invalid_argument("construct_h1_char0: matrices must be over the rationals");
    require_nilpotent(x, "X");
    require_nilpotent(y, "Y");
    require_nilpotent(z, "Z");
    if (commutator(x, y) != z) throw HypothesisError("[X,Y] != Z");
    require_commute(z, x, "Z", "X");
    require_commute(z, y, "Z", "Y");
    SparsePolynomial px = SparsePolynomial::variable(f, 3, 0);
    SparsePolynomial py = SparsePolynomial::variable(f, 3, 1);
    SparsePolynomial pz = SparsePolynomial::variable(f, 3, 2);
    Scalar half(f, Int(1), Int(2));
    SparsePolynomial zarg = pz - (px * py) * half;
    PolyMatrix arg = scaled_by_monomial(x, px, 3) + scaled_by_monomial(y, py, 3) +
                     scaled_by_monomial(z, zarg, 3);
    return truncated_exp(arg);
}

bool weyl_identity_check(const ExactMatrix& x, const ExactMatrix& y, const ExactMatrix& z,
                         std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0) throw std::invalid_argument("weyl_identity_check: negative exponent");
    FieldSpec f = x.field();
    if (f.is_prime()) {
        if (n >= f.p() || m >= f.p())
            throw std::invalid_argument("weyl_identity_check: exponents must be below p");
        if (!x.pow(std::min<std::int64_t>(f.p(), x.dim())).is_zero() ||
            !y.pow(std::min<std::int64_t>(f.p(), y.dim())).is_zero() ||
            !z.pow(std::min<std::int64_t>(f.p(), z.dim())).is_zero())
            throw HypothesisError("matrices are not p-nilpotent");
    } else {
        require_nilpotent(x, "X");
        require_nilpotent(y, "Y");
        require_nilpotent(z, "Z");
    }
    if (commutator(x, y) != z) throw HypothesisError("[X,Y] != Z");
    require_commute(z, x, "Z", "X");
    require_commute(z, y, "Z", "Y");
    ExactMatrix lhs = x.pow(n) * y.pow(m);
    ExactMatrix rhs(x.dim(), f);
    for (std::int64_t l = 0; l <= std::min(n, m); ++l) {
        Int coeff = factorial_exact(l) * binomial_exact(n, l) * binomial_exact(m, l);
        rhs = rhs + z.pow(l) * y.pow(m - l) * x.pow(n - l) * Scalar(f, coeff);
    }
    return lhs == rhs;
}

}  // namespace heisrep
