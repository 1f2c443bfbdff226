#include "heisrep/poly.hpp"

#include "heisrep/matrix.hpp"

namespace heisrep {

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exp_add: arity mismatch");
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExpVec exp_zero(int arity) { return ExpVec(static_cast<std::size_t>(arity), 0); }

bool exp_is_zero(const ExpVec& e) {
    for (auto v : e)
        if (v != 0) return false;
    return true;
}

std::int64_t exp_total_degree(const ExpVec& e) {
    std::int64_t d = 0;
    for (auto v : e) d += v;
    return d;
}

SparsePolynomial::SparsePolynomial(FieldSpec field, int arity)
    : field_(field), arity_(arity) {
    if (arity != 1 && arity != 3)
        throw std::invalid_argument("SparsePolynomial: arity must be 1 or 3");
}

SparsePolynomial SparsePolynomial::constant(FieldSpec field, int arity, Scalar c) {
    return monomial(field, exp_zero(arity), std::move(c));
}

SparsePolynomial SparsePolynomial::monomial(FieldSpec field, ExpVec e, Scalar c) {
    SparsePolynomial p(field, static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(FieldSpec field, int arity, int var) {
    if (var < 0 || var >= arity)
        throw std::invalid_argument("SparsePolynomial: bad variable index");
    ExpVec e = exp_zero(arity);
    e[static_cast<std::size_t>(var)] = 1;
    return monomial(field, e, Scalar::one(field));
}

Scalar SparsePolynomial::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void SparsePolynomial::add_term(const ExpVec& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("SparsePolynomial: exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SparsePolynomial::require_compatible(const SparsePolynomial& o) const {
    if (arity_ != o.arity_ || !(field_ == o.field_))
        throw std::invalid_argument("SparsePolynomial: field or arity mismatch");
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    require_compatible(o);
    SparsePolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    return *this + (-o);
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    require_compatible(o);
    SparsePolynomial r(field_, arity_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(exp_add(e1, e2), c1 * c2);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const Scalar& s) const {
    SparsePolynomial r(field_, arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(field_, arity_);
    for (const auto& [e, c] : terms_) r.add_term(e, -c);
    return r;
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
    return field_ == o.field_ && arity_ == o.arity_ && terms_ == o.terms_;
}

TensorPolynomial::TensorPolynomial(FieldSpec field, int arity)
    : field_(field), arity_(arity) {}

TensorPolynomial TensorPolynomial::one(FieldSpec field, int arity) {
    TensorPolynomial t(field, arity);
    t.add_term(exp_zero(arity), exp_zero(arity), Scalar::one(field));
    return t;
}

void TensorPolynomial::add_term(const ExpVec& left, const ExpVec& right, const Scalar& c) {
    if (static_cast<int>(left.size()) != arity_ || static_cast<int>(right.size()) != arity_)
        throw std::invalid_argument("TensorPolynomial: exponent arity mismatch");
    if (c.is_zero()) return;
    auto key = std::make_pair(left, right);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPolynomial TensorPolynomial::operator+(const TensorPolynomial& o) const {
    TensorPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
    return r;
}

TensorPolynomial TensorPolynomial::operator-(const TensorPolynomial& o) const {
    TensorPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

TensorPolynomial TensorPolynomial::operator*(const TensorPolynomial& o) const {
    TensorPolynomial r(field_, arity_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(exp_add(e1.first, e2.first), exp_add(e1.second, e2.second), c1 * c2);
    return r;
}

TensorPolynomial TensorPolynomial::pow(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("TensorPolynomial::pow: negative exponent");
    TensorPolynomial r = one(field_, arity_);
    for (std::int64_t i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool TensorPolynomial::operator==(const TensorPolynomial& o) const {
    return field_ == o.field_ && arity_ == o.arity_ && terms_ == o.terms_;
}

TensorPolynomial tensor(const SparsePolynomial& f, const SparsePolynomial& g) {
    if (f.arity() != g.arity() || !(f.field() == g.field()))
        throw std::invalid_argument("tensor: field or arity mismatch");
    TensorPolynomial t(f.field(), f.arity());
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms()) t.add_term(e1, e2, c1 * c2);
    return t;
}

PolyMatrix::PolyMatrix(int dim, FieldSpec field, int arity)
    : dim_(dim),
      field_(field),
      arity_(arity),
      e_(static_cast<std::size_t>(dim) * dim, SparsePolynomial(field, arity)) {
    if (dim <= 0) throw std::invalid_argument("PolyMatrix: dimension must be positive");
}

PolyMatrix PolyMatrix::identity(int dim, FieldSpec field, int arity) {
    PolyMatrix m(dim, field, arity);
    for (int i = 1; i <= dim; ++i)
        m.set(i, i, SparsePolynomial::constant(field, arity, Scalar::one(field)));
    return m;
}

int PolyMatrix::idx(int i, int j) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::out_of_range("PolyMatrix: index out of range");
    return (i - 1) * dim_ + (j - 1);
}

void PolyMatrix::require_compatible(const PolyMatrix& o) const {
    if (dim_ != o.dim_ || arity_ != o.arity_ || !(field_ == o.field_))
        throw std::invalid_argument("PolyMatrix: dimension, arity or field mismatch");
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    require_compatible(o);
    PolyMatrix r(dim_, field_, arity_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    require_compatible(o);
    PolyMatrix r(dim_, field_, arity_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    require_compatible(o);
    PolyMatrix r(dim_, field_, arity_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const SparsePolynomial& a = e_[i * dim_ + k];
            if (a.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const SparsePolynomial& b = o.e_[k * dim_ + j];
                if (b.is_zero()) continue;
                r.e_[i * dim_ + j] = r.e_[i * dim_ + j] + a * b;
            }
        }
    return r;
}

PolyMatrix PolyMatrix::operator*(const Scalar& s) const {
    PolyMatrix r(dim_, field_, arity_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return dim_ == o.dim_ && arity_ == o.arity_ && field_ == o.field_ && e_ == o.e_;
}

PolyMatrix PolyMatrix::pow(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("PolyMatrix::pow: negative exponent");
    PolyMatrix result = identity(dim_, field_, arity_);
    PolyMatrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

PolyMatrix truncated_exp(const PolyMatrix& m) {
    int d = m.dim();
    if (!m.pow(d).is_zero())
        throw NotNilpotentError("truncated_exp: matrix is not nilpotent");
    if (m.field().is_prime() && m.field().p() <= d - 1)
        throw FieldError("truncated_exp: factorial 1/k! not invertible (p <= dim-1)");
    PolyMatrix result = PolyMatrix::identity(d, m.field(), m.arity());
    PolyMatrix power = PolyMatrix::identity(d, m.field(), m.arity());
    Int kfact = 1;
    for (int k = 1; k <= d - 1; ++k) {
        power = power * m;
        if (power.is_zero()) break;
        kfact *= k;
        result = result + power * Scalar(m.field(), Int(1), kfact);
    }
    return result;
}

}  // namespace heisrep
