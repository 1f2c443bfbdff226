#pragma once

#include <vector>

#include "heisrep/scalars.hpp"

namespace heisrep {

struct NotNilpotentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense d x d matrix of exact field elements. Immutable value semantics;
/// all arithmetic requires matching dimension and field.
class ExactMatrix {
public:
    ExactMatrix(int dim, FieldSpec field);

    static ExactMatrix identity(int dim, FieldSpec field);
    /// Single unit at 1-based position (i,j).
    static ExactMatrix unit(int dim, FieldSpec field, int i, int j);

    int dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(int i, int j) const { return e_[idx(i, j)]; }  // 1-based
    void set(int i, int j, Scalar v) { e_[idx(i, j)] = std::move(v); }

    bool is_zero() const;
    bool is_identity() const;

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const Scalar& s) const;
    ExactMatrix operator-() const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix pow(std::int64_t n) const;

    /// Sparse 1-based (row, col, value) triples of the nonzero entries,
    /// row-major order.
    std::vector<std::tuple<int, int, Scalar>> nonzero_entries() const;

private:
    int idx(int i, int j) const;
    void require_compatible(const ExactMatrix& o) const;

    int dim_;
    FieldSpec field_;
    std::vector<Scalar> e_;
};

/// [A,B] = AB - BA.
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Least N >= 1 with A^N = 0. Throws NotNilpotentError when A^dim != 0,
/// which by Cayley-Hamilton means A is not nilpotent at all.
std::int64_t nilpotency_index(const ExactMatrix& a);

bool is_nilpotent(const ExactMatrix& a);

/// Kronecker product, index (i-1)*dim(b)+k.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace heisrep
