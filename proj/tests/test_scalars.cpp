#include <doctest.h>

#include <random>

#include "heisrep/scalars.hpp"

using namespace heisrep;

namespace {

// Pascal-recurrence table mod p: an oracle independent of the Lucas path.
std::vector<std::vector<std::int64_t>> pascal_mod(std::int64_t nmax, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> c(nmax + 1);
    for (std::int64_t n = 0; n <= nmax; ++n) {
        c[n].assign(n + 1, 1);
        for (std::int64_t r = 1; r < n; ++r) c[n][r] = (c[n - 1][r - 1] + c[n - 1][r]) % p;
    }
    return c;
}

}  // namespace

TEST_CASE("field spec construction") {
    CHECK(FieldSpec::prime(2).p() == 2);
    CHECK(FieldSpec::prime(7).is_prime());
    CHECK_FALSE(FieldSpec::rational().is_prime());
    CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
    CHECK_THROWS_AS(FieldSpec::prime(6), FieldError);
    CHECK_THROWS_AS(FieldSpec::prime(91), FieldError);  // 7 * 13
}

TEST_CASE("scalar canonical form") {
    FieldSpec q = FieldSpec::rational();
    CHECK(Scalar(q, 6, 4) == Scalar(q, 3, 2));
    CHECK(Scalar(q, -6, -4) == Scalar(q, 3, 2));
    CHECK(Scalar(q, 2, -4).str() == "-1/2");
    CHECK(Scalar(q, 0, 5) == Scalar::zero(q));

    FieldSpec f7 = FieldSpec::prime(7);
    CHECK(Scalar(f7, 10) == Scalar(f7, 3));
    CHECK(Scalar(f7, -1) == Scalar(f7, 6));
    CHECK(Scalar(f7, 1, 2) == Scalar(f7, 4));  // 1/2 = 4 mod 7
}

TEST_CASE("scalar field arithmetic") {
    FieldSpec f5 = FieldSpec::prime(5);
    Scalar a(f5, 3), b(f5, 4);
    CHECK(a + b == Scalar(f5, 2));
    CHECK(a * b == Scalar(f5, 2));
    CHECK(a - b == Scalar(f5, 4));
    CHECK((a / b) * b == a);
    CHECK(a.inverse() * a == Scalar::one(f5));
    CHECK_THROWS_AS(Scalar::zero(f5).inverse(), FieldError);

    FieldSpec q = FieldSpec::rational();
    Scalar x(q, 2, 3), y(q, -1, 6);
    CHECK(x + y == Scalar(q, 1, 2));
    CHECK(x * y == Scalar(q, -1, 9));
    CHECK_THROWS_AS(x + a, FieldError);
    CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), FieldError);
}

TEST_CASE("scalar string round trip") {
    FieldSpec q = FieldSpec::rational();
    for (const char* s : {"0", "1", "-7", "3/2", "-11/13"}) {
        Scalar v = Scalar::parse(q, s);
        CHECK(v.str() == s);
    }
    CHECK_THROWS_AS(Scalar::parse(q, "abc"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/0"), FieldError);
}

TEST_CASE("p_digits") {
    CHECK(p_digits(10, 3) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(p_digits(0, 5).empty());
    CHECK(p_digits(7, 2) == std::vector<std::int64_t>{1, 1, 1});
    CHECK_THROWS_AS(p_digits(3, 4), FieldError);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7, 13}[rng() % 5];
        Int n = rng() % 100000;
        auto digits = p_digits(n, p);
        CHECK(digits_to_int(digits, p) == n);
        if (!digits.empty()) CHECK(digits.back() != 0);
        for (auto d : digits) {
            CHECK(d >= 0);
            CHECK(d < p);
        }
    }
}

TEST_CASE("gamma digit factorial") {
    CHECK(gamma_digit_factorial(5, 3) == Scalar(FieldSpec::prime(3), 2));
    CHECK(gamma_digit_factorial(0, 7) == Scalar::one(FieldSpec::prime(7)));
    CHECK(gamma_digit_factorial(7, 2) == Scalar::one(FieldSpec::prime(2)));
    // always invertible
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[rng() % 4];
        Scalar g = gamma_digit_factorial(rng() % 10000, p);
        CHECK_FALSE(g.is_zero());
        CHECK(g * g.inverse() == Scalar::one(FieldSpec::prime(p)));
    }
}

TEST_CASE("lucas binomial examples") {
    CHECK(lucas_binomial(5, 2, 3) == Scalar(FieldSpec::prime(3), 1));
    CHECK(lucas_binomial(6, 3, 2) == Scalar::zero(FieldSpec::prime(2)));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[rng() % 4];
        Int n = rng() % 5000;
        CHECK(lucas_binomial(n, 0, p) == Scalar::one(FieldSpec::prime(p)));
        CHECK(lucas_binomial(n, n + 1, p).is_zero());
    }
}

TEST_CASE("lucas binomial agrees with the Pascal oracle") {
    for (std::int64_t p : {2, 3, 5, 7}) {
        auto table = pascal_mod(300, p);
        for (std::int64_t n = 0; n <= 300; ++n)
            for (std::int64_t r = 0; r <= n; ++r)
                REQUIRE(lucas_binomial(n, r, p).num() == table[n][r]);
    }
}

TEST_CASE("lucas multinomial") {
    CHECK(lucas_multinomial(4, {2, 1, 1}, 5) == Scalar(FieldSpec::prime(5), 2));
    CHECK(lucas_multinomial(2, {1, 1}, 2).is_zero());
    CHECK_THROWS_AS(lucas_multinomial(4, {2, 1}, 5), FieldError);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7}[rng() % 4];
        Int n = rng() % 2000;
        CHECK(lucas_multinomial(n, {n}, p) == Scalar::one(FieldSpec::prime(p)));
        Int r = n == 0 ? Int(0) : Int(rng() % 2000) % (n + 1);
        // binomial consistency
        CHECK(lucas_multinomial(n, {r, n - r}, p) == lucas_binomial(n, r, p));
    }
}

TEST_CASE("exact binomial") {
    CHECK(binomial_exact(10, 5) == 252);
    CHECK(binomial_exact(52, 26) == Int("495918532948104"));
    CHECK(binomial_exact(5, 7) == 0);
    CHECK(binomial_exact(5, -1) == 0);
}
