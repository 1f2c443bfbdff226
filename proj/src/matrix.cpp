#include "heisrep/matrix.hpp"

#include <tuple>

namespace heisrep {

ExactMatrix::ExactMatrix(int dim, FieldSpec field)
    : dim_(dim), field_(field), e_(static_cast<std::size_t>(dim) * dim, Scalar::zero(field)) {
    if (dim <= 0) throw std::invalid_argument("ExactMatrix: dimension must be positive");
}

ExactMatrix ExactMatrix::identity(int dim, FieldSpec field) {
    ExactMatrix m(dim, field);
    for (int i = 1; i <= dim; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

ExactMatrix ExactMatrix::unit(int dim, FieldSpec field, int i, int j) {
    ExactMatrix m(dim, field);
    m.set(i, j, Scalar::one(field));
    return m;
}

int ExactMatrix::idx(int i, int j) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw std::out_of_range("ExactMatrix: index out of range");
    return (i - 1) * dim_ + (j - 1);
}

void ExactMatrix::require_compatible(const ExactMatrix& o) const {
    if (dim_ != o.dim_ || !(field_ == o.field_))
        throw std::invalid_argument("ExactMatrix: dimension or field mismatch");
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const { return *this == identity(dim_, field_); }

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    require_compatible(o);
    ExactMatrix r(dim_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    require_compatible(o);
    ExactMatrix r(dim_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    require_compatible(o);
    ExactMatrix r(dim_, field_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const Scalar& a = e_[i * dim_ + k];
            if (a.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const Scalar& b = o.e_[k * dim_ + j];
                if (b.is_zero()) continue;
                r.e_[i * dim_ + j] = r.e_[i * dim_ + j] + a * b;
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator*(const Scalar& s) const {
    ExactMatrix r(dim_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r(dim_, field_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return dim_ == o.dim_ && field_ == o.field_ && e_ == o.e_;
}

ExactMatrix ExactMatrix::pow(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("ExactMatrix::pow: negative exponent");
    ExactMatrix result = identity(dim_, field_);
    ExactMatrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::vector<std::tuple<int, int, Scalar>> ExactMatrix::nonzero_entries() const {
    std::vector<std::tuple<int, int, Scalar>> out;
    for (int i = 1; i <= dim_; ++i)
        for (int j = 1; j <= dim_; ++j)
            if (!at(i, j).is_zero()) out.emplace_back(i, j, at(i, j));
    return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b - b * a;
}

std::int64_t nilpotency_index(const ExactMatrix& a) {
    if (a.is_zero()) return 1;
    // repeated squaring to witness A^d = 0, then bisect for the least index
    ExactMatrix power = a;
    std::int64_t exp = 1;
    while (exp < a.dim() && !power.is_zero()) {
        power = power * power;
        exp *= 2;
    }
    if (!power.is_zero())
        throw NotNilpotentError("nilpotency_index: matrix is not nilpotent");
    std::int64_t lo = 1, hi = exp;  // A^lo != 0 possible, A^hi = 0
    while (lo + 1 < hi) {
        std::int64_t mid = (lo + hi) / 2;
        if (a.pow(mid).is_zero())
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

bool is_nilpotent(const ExactMatrix& a) {
    return a.pow(a.dim()).is_zero();
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("kronecker: field mismatch");
    int da = a.dim(), db = b.dim();
    ExactMatrix r(da * db, a.field());
    for (int i = 1; i <= da; ++i)
        for (int j = 1; j <= da; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 1; k <= db; ++k)
                for (int l = 1; l <= db; ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    r.set((i - 1) * db + k, (j - 1) * db + l, a.at(i, j) * b.at(k, l));
                }
        }
    return r;
}

}  // namespace heisrep
