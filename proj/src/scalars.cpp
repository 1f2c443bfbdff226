#include "heisrep/scalars.hpp"

#include <boost/multiprecision/integer.hpp>

namespace heisrep {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31) || !heisrep::is_prime(p))
        throw FieldError("FieldSpec: " + std::to_string(p) + " is not a supported prime");
    return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::rational() { return FieldSpec(Kind::Rational, 0); }

std::int64_t FieldSpec::p() const {
    if (kind_ != Kind::Prime) throw FieldError("FieldSpec: not a prime field");
    return p_;
}

Scalar::Scalar(FieldSpec field, Int value)
    : field_(field), num_(std::move(value)), den_(1) {
    canonicalize();
}

Scalar::Scalar(FieldSpec field, Int num, Int den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw FieldError("Scalar: zero denominator");
    canonicalize();
}

void Scalar::canonicalize() {
    if (field_.is_prime()) {
        Int p = field_.p();
        num_ %= p;
        if (num_ < 0) num_ += p;
        if (den_ != 1) {
            Scalar d(field_, den_, Int(1));
            den_ = 1;
            *this = *this * d.inverse();
        }
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldError("Scalar: field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    r.canonicalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (num_ == 0) throw FieldError("Scalar: division by zero");
    if (!field_.is_prime()) return Scalar(field_, den_, num_);
    // extended Euclid on the residue
    Int a = num_, b = field_.p();
    Int x0 = 1, x1 = 0;
    while (b != 0) {
        Int q = a / b;
        Int t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return Scalar(field_, x0);
}

std::string Scalar::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Scalar Scalar::parse(FieldSpec field, const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Scalar(field, Int(s));
        return Scalar(field, Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw FieldError("Scalar: cannot parse value '" + s + "'");
    }
}

std::vector<std::int64_t> p_digits(Int n, std::int64_t p) {
    if (n < 0) throw FieldError("p_digits: negative argument");
    if (!is_prime(p)) throw FieldError("p_digits: modulus is not prime");
    std::vector<std::int64_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<std::int64_t>(n % p));
        n /= p;
    }
    return digits;
}

Int digits_to_int(const std::vector<std::int64_t>& digits, std::int64_t p) {
    Int n = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) n = n * p + *it;
    return n;
}

Int factorial_exact(std::int64_t n) {
    Int r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

Scalar gamma_digit_factorial(Int n, std::int64_t p) {
    FieldSpec f = FieldSpec::prime(p);
    Scalar r = Scalar::one(f);
    for (std::int64_t d : p_digits(std::move(n), p))
        r = r * Scalar(f, factorial_exact(d));
    return r;
}

namespace {

// small-case binomial of digits, both < p
Int digit_binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    return binomial_exact(Int(n), Int(r));
}

}  // namespace

Scalar lucas_binomial(Int n, Int r, std::int64_t p) {
    FieldSpec f = FieldSpec::prime(p);
    if (r > n) return Scalar::zero(f);
    auto nd = p_digits(std::move(n), p);
    auto rd = p_digits(std::move(r), p);
    Scalar result = Scalar::one(f);
    for (std::size_t i = 0; i < rd.size(); ++i) {
        std::int64_t ni = i < nd.size() ? nd[i] : 0;
        if (rd[i] > ni) return Scalar::zero(f);
        result = result * Scalar(f, digit_binomial(ni, rd[i]));
    }
    return result;
}

Scalar lucas_multinomial(Int n, const std::vector<Int>& parts, std::int64_t p) {
    FieldSpec f = FieldSpec::prime(p);
    Int sum = 0;
    for (const Int& a : parts) {
        if (a < 0) throw FieldError("lucas_multinomial: negative part");
        sum += a;
    }
    if (sum != n) throw FieldError("lucas_multinomial: parts do not sum to n");
    auto nd = p_digits(n, p);
    std::vector<std::vector<std::int64_t>> pd;
    pd.reserve(parts.size());
    for (const Int& a : parts) pd.push_back(p_digits(a, p));
    Scalar result = Scalar::one(f);
    for (std::size_t i = 0; i < nd.size(); ++i) {
        // multinomial of the i-th digit column, or carry => zero
        std::int64_t col = 0;
        Int numer = factorial_exact(nd[i]);
        Int denom = 1;
        for (const auto& d : pd) {
            std::int64_t di = i < d.size() ? d[i] : 0;
            col += di;
            denom *= factorial_exact(di);
        }
        if (col >= p) return Scalar::zero(f);
        result = result * Scalar(f, numer / denom);
    }
    return result;
}

Int binomial_exact(const Int& n, const Int& r) {
    if (r < 0 || r > n) return 0;
    Int result = 1;
    Int k = r * 2 > n ? n - r : r;
    for (Int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Scalar binomial_in_field(FieldSpec field, const Int& n, const Int& r) {
    if (field.is_prime()) return lucas_binomial(n, r, field.p());
    return Scalar(field, binomial_exact(n, r));
}

Scalar trinomial_in_field(FieldSpec field, const Int& a, const Int& b, const Int& c) {
    if (field.is_prime())
        return lucas_multinomial(a + b + c, {a, b, c}, field.p());
    Int numer = binomial_exact(a + b + c, a) * binomial_exact(b + c, b);
    return Scalar(field, numer);
}

}  // namespace heisrep
