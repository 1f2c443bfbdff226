#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heisrep {

using Int = boost::multiprecision::cpp_int;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A ground field: either F_p for a machine-word prime p, or the rationals.
class FieldSpec {
public:
    enum class Kind { Prime, Rational };

    static FieldSpec prime(std::int64_t p);
    static FieldSpec rational();

    Kind kind() const { return kind_; }
    bool is_prime() const { return kind_ == Kind::Prime; }
    std::int64_t p() const;

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }

private:
    FieldSpec(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_ = Kind::Rational;
    std::int64_t p_ = 0;
};

/// Deterministic trial-division primality test; intended for p < 2^31.
bool is_prime(std::int64_t n);

/// An exact field element in canonical form.
///
/// Prime fields store the residue in [0,p) with denominator 1; the
/// rationals store a reduced fraction with positive denominator.
/// Equality is structural.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rational()), num_(0), den_(1) {}
    Scalar(FieldSpec field, Int value);
    Scalar(FieldSpec field, Int num, Int den);

    static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }

    const FieldSpec& field() const { return field_; }
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const {
        return field_ == o.field_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // ordering is for use as a map key only, not a field order
    bool operator<(const Scalar& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    /// Canonical text form: decimal residue for F_p, "a/b" or "a" for Q.
    std::string str() const;
    /// Parse the canonical text form back into a Scalar of the given field.
    static Scalar parse(FieldSpec field, const std::string& s);

private:
    void canonicalize();
    void require_same_field(const Scalar& o) const;

    FieldSpec field_;
    Int num_;
    Int den_;
};

/// p-ary digits of n, least significant first, no trailing zeros; n=0 -> {}.
std::vector<std::int64_t> p_digits(Int n, std::int64_t p);

/// Reconstructs Sum digits[i] * p^i.
Int digits_to_int(const std::vector<std::int64_t>& digits, std::int64_t p);

/// Gamma(n) = product of factorials of the p-digits of n, as an element of
/// F_p. Always a unit.
Scalar gamma_digit_factorial(Int n, std::int64_t p);

/// C(n,r) mod p computed digit-wise via Lucas' theorem. Returns 0 when
/// r > n.
Scalar lucas_binomial(Int n, Int r, std::int64_t p);

/// Multinomial coefficient (n; parts...) mod p, digit-wise. The parts must
/// sum to n. Zero exactly when some digit column of the parts carries.
Scalar lucas_multinomial(Int n, const std::vector<Int>& parts, std::int64_t p);

/// Exact integer binomial coefficient; 0 when r < 0 or r > n.
Int binomial_exact(const Int& n, const Int& r);

/// Exact integer factorial.
Int factorial_exact(std::int64_t n);

/// C(n,r) as an element of the given field (Lucas path for prime fields,
/// exact integers for the rationals).
Scalar binomial_in_field(FieldSpec field, const Int& n, const Int& r);

/// Trinomial coefficient (a+b+c; a,b,c) in the given field.
Scalar trinomial_in_field(FieldSpec field, const Int& a, const Int& b, const Int& c);

}  // namespace heisrep
