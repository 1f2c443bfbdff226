#pragma once

#include <map>
#include <utility>
#include <vector>

#include "heisrep/scalars.hpp"

namespace heisrep {

/// Which group scheme a polynomial or representation belongs to. Ga works
/// in k[x] (arity-1 exponents), H1 in k[x,y,z] (arity-3 exponents, the
/// order being x, y, z).
enum class GroupKind { Ga, H1 };

inline int arity_of(GroupKind g) { return g == GroupKind::Ga ? 1 : 3; }

/// Exponent vector of a monomial; length 1 or 3.
using ExpVec = std::vector<std::int64_t>;

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_zero(int arity);
bool exp_is_zero(const ExpVec& e);
std::int64_t exp_total_degree(const ExpVec& e);

/// Finitely supported exponent-vector -> nonzero Scalar map; canonical in
/// that zero coefficients are never stored.
class SparsePolynomial {
public:
    SparsePolynomial(FieldSpec field, int arity);

    static SparsePolynomial zero(FieldSpec field, int arity) {
        return SparsePolynomial(field, arity);
    }
    static SparsePolynomial constant(FieldSpec field, int arity, Scalar c);
    static SparsePolynomial monomial(FieldSpec field, ExpVec e, Scalar c);
    /// Generator x_i (0-based variable index) of the given arity.
    static SparsePolynomial variable(FieldSpec field, int arity, int var);

    const FieldSpec& field() const { return field_; }
    int arity() const { return arity_; }
    const std::map<ExpVec, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const ExpVec& e) const;
    Scalar constant_term() const { return coefficient(exp_zero(arity_)); }
    void add_term(const ExpVec& e, const Scalar& c);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const Scalar& s) const;
    SparsePolynomial operator-() const;
    bool operator==(const SparsePolynomial& o) const;
    bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

private:
    void require_compatible(const SparsePolynomial& o) const;

    FieldSpec field_;
    int arity_;
    std::map<ExpVec, Scalar> terms_;
};

/// Element of the tensor square of a polynomial ring: finitely supported
/// map over pairs of exponent vectors.
class TensorPolynomial {
public:
    TensorPolynomial(FieldSpec field, int arity);

    static TensorPolynomial one(FieldSpec field, int arity);

    const FieldSpec& field() const { return field_; }
    int arity() const { return arity_; }
    const std::map<std::pair<ExpVec, ExpVec>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExpVec& left, const ExpVec& right, const Scalar& c);

    TensorPolynomial operator+(const TensorPolynomial& o) const;
    TensorPolynomial operator-(const TensorPolynomial& o) const;
    TensorPolynomial operator*(const TensorPolynomial& o) const;
    TensorPolynomial pow(std::int64_t n) const;
    bool operator==(const TensorPolynomial& o) const;
    bool operator!=(const TensorPolynomial& o) const { return !(*this == o); }

private:
    FieldSpec field_;
    int arity_;
    std::map<std::pair<ExpVec, ExpVec>, Scalar> terms_;
};

/// f (x) g as an element of the tensor square.
TensorPolynomial tensor(const SparsePolynomial& f, const SparsePolynomial& g);

/// Square matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix(int dim, FieldSpec field, int arity);

    static PolyMatrix identity(int dim, FieldSpec field, int arity);

    int dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }
    int arity() const { return arity_; }

    const SparsePolynomial& at(int i, int j) const { return e_[idx(i, j)]; }  // 1-based
    void set(int i, int j, SparsePolynomial v) { e_[idx(i, j)] = std::move(v); }

    bool is_zero() const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const Scalar& s) const;
    bool operator==(const PolyMatrix& o) const;
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix pow(std::int64_t n) const;

private:
    int idx(int i, int j) const;
    void require_compatible(const PolyMatrix& o) const;

    int dim_;
    FieldSpec field_;
    int arity_;
    std::vector<SparsePolynomial> e_;
};

/// Sum_{k=0}^{d-1} M^k / k! for a nilpotent polynomial matrix. The witness
/// M^d = 0 is checked; over F_p the factorials require p > d-1.
PolyMatrix truncated_exp(const PolyMatrix& m);

}  // namespace heisrep
