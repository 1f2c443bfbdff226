#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "heisrep/repcore.hpp"

using namespace heisrep;

TEST_CASE("coefficient extraction from the quadratic Ga matrix") {
    FieldSpec q = FieldSpec::rational();
    CoefficientFamily f = fixtures::ga_quadratic(q);
    CHECK(f.coeff({0}) == ExactMatrix::identity(3, q));
    ExactMatrix c1(3, q);
    c1.set(1, 2, Scalar::one(q));
    c1.set(2, 3, Scalar(q, 2));
    CHECK(f.coeff({1}) == c1);
    CHECK(f.coeff({2}) == ExactMatrix::unit(3, q, 1, 3));
    CHECK(f.coeffs().size() == 3);
}

TEST_CASE("polynomial matrix round trip") {
    FieldSpec q = FieldSpec::rational();
    SUBCASE("quadratic Ga example") {
        CoefficientFamily f = fixtures::ga_quadratic(q);
        CHECK(from_polynomial_matrix(to_polynomial_matrix(f), GroupKind::Ga) == f);
    }
    SUBCASE("identity matrix") {
        PolyMatrix id = PolyMatrix::identity(4, q, 3);
        CoefficientFamily f = from_polynomial_matrix(id, GroupKind::H1);
        CHECK(f.coeffs().size() == 1);
        CHECK(f.coeff(exp_zero(3)) == ExactMatrix::identity(4, q));
    }
    SUBCASE("empty family gives the zero matrix") {
        CoefficientFamily f(GroupKind::Ga, q, 2);
        CHECK(to_polynomial_matrix(f).is_zero());
    }
    SUBCASE("ten-dimensional degree-2 comodule") {
        CoefficientFamily f = fixtures::f2_degree2();
        CHECK(from_polynomial_matrix(to_polynomial_matrix(f), GroupKind::H1) == f);
    }
}

TEST_CASE("six-dimensional fixture coefficients") {
    for (FieldSpec f : {FieldSpec::prime(3), FieldSpec::rational()}) {
        CoefficientFamily rep = fixtures::h1_six_dim(f);
        ExactMatrix c101(6, f);
        c101.set(1, 6, Scalar(f, 2));
        CHECK(rep.coeff({1, 0, 1}) == c101);
        CHECK(rep.coeff({1, 1, 1}).is_zero());
        CHECK(rep.coeffs().count({1, 1, 1}) == 0);
    }
}

TEST_CASE("comodule axiom verifier") {
    SUBCASE("six-dimensional fixture") {
        for (FieldSpec f : {FieldSpec::prime(3), FieldSpec::rational()})
            CHECK(verify_comodule_axioms(fixtures::h1_six_dim(f)).ok);
    }
    SUBCASE("identity-only family") {
        FieldSpec q = FieldSpec::rational();
        CoefficientFamily f(GroupKind::H1, q, 4);
        f.set_coeff(exp_zero(3), ExactMatrix::identity(4, q));
        CHECK(verify_comodule_axioms(f).ok);
    }
    SUBCASE("perturbing the (1,6) coefficient of xz breaks the axioms") {
        FieldSpec f3 = FieldSpec::prime(3);
        CoefficientFamily rep = fixtures::h1_six_dim(f3);
        ExactMatrix bad(6, f3);
        bad.set(1, 6, Scalar::one(f3));
        rep.set_coeff({1, 0, 1}, bad);
        VerificationReport report = verify_comodule_axioms(rep);
        CHECK_FALSE(report.ok);
        bool found = false;
        for (const auto& v : report.violations)
            if (v.site == "entry (1,6)") found = true;
        CHECK(found);
    }
}

TEST_CASE("Ga fundamental relation") {
    FieldSpec q = FieldSpec::rational();
    SUBCASE("quadratic example, including c1 c1 = 2 c2") {
        CoefficientFamily f = fixtures::ga_quadratic(q);
        CHECK(verify_fundamental_relation_ga(f).ok);
        CHECK(f.coeff({1}) * f.coeff({1}) == f.coeff({2}) * Scalar(q, 2));
    }
    SUBCASE("missing identity at exponent zero") {
        CoefficientFamily f(GroupKind::Ga, q, 2);
        f.set_coeff({1}, ExactMatrix::unit(2, q, 1, 2));
        CHECK_FALSE(verify_fundamental_relation_ga(f).ok);
    }
    SUBCASE("nilpotent single coefficient") {
        CoefficientFamily f(GroupKind::Ga, q, 2);
        f.set_coeff({0}, ExactMatrix::identity(2, q));
        f.set_coeff({1}, ExactMatrix::unit(2, q, 1, 2));
        CHECK(verify_fundamental_relation_ga(f).ok);
    }
    SUBCASE("wrong group throws") {
        CHECK_THROWS(verify_fundamental_relation_ga(fixtures::h1_defining(q)));
    }
}

TEST_CASE("H1 fundamental relation") {
    SUBCASE("six-dimensional fixture relation spot checks") {
        FieldSpec f3 = FieldSpec::prime(3);
        CoefficientFamily rep = fixtures::h1_six_dim(f3);
        ExactMatrix x0 = rep.coeff({1, 0, 0});
        ExactMatrix y0 = rep.coeff({0, 1, 0});
        ExactMatrix z0 = rep.coeff({0, 0, 1});
        // X0 Z0 = c^{(1,0,1)}, a single l=0 term
        CHECK(x0 * z0 == rep.coeff({1, 0, 1}));
        // X0 Y0 = c^{(1,1,0)} + Z0 (l = 0 and l = 1)
        CHECK(x0 * y0 == rep.coeff({1, 1, 0}) + z0);
        ExactMatrix expected_z(6, f3);
        expected_z.set(1, 5, Scalar::one(f3));
        expected_z.set(2, 6, Scalar::one(f3));
        CHECK(commutator(x0, y0) == expected_z);
        CHECK(z0 == expected_z);
    }
    SUBCASE("full verification of the fixtures") {
        for (FieldSpec f : {FieldSpec::prime(3), FieldSpec::rational()})
            CHECK(verify_fundamental_relation_h1(fixtures::h1_six_dim(f)).ok);
        CHECK(verify_fundamental_relation_h1(fixtures::h1_defining(FieldSpec::prime(7))).ok);
    }
    SUBCASE("identity-only family") {
        FieldSpec q = FieldSpec::rational();
        CoefficientFamily f(GroupKind::H1, q, 3);
        f.set_coeff(exp_zero(3), ExactMatrix::identity(3, q));
        CHECK(verify_fundamental_relation_h1(f).ok);
    }
}

TEST_CASE("dual verifier agreement on fixtures and perturbations") {
    std::mt19937_64 rng(2024);
    std::vector<CoefficientFamily> corpus = {
        fixtures::ga_quadratic(FieldSpec::rational()),
        fixtures::ga_quadratic(FieldSpec::prime(5)),
        fixtures::h1_six_dim(FieldSpec::prime(3)),
        fixtures::h1_six_dim(FieldSpec::rational()),
        fixtures::h1_defining(FieldSpec::prime(7)),
        fixtures::f2_degree2(),
    };
    for (const CoefficientFamily& base : corpus) {
        CHECK(verify_comodule_axioms(base).ok == verify_fundamental_relation(base).ok);
        for (int trial = 0; trial < 4; ++trial) {
            CoefficientFamily mutant = base;
            // corrupt one random entry of one random stored coefficient
            auto it = mutant.coeffs().begin();
            std::advance(it, rng() % mutant.coeffs().size());
            ExpVec e = it->first;
            ExactMatrix m = it->second;
            int i = static_cast<int>(rng() % m.dim()) + 1;
            int j = static_cast<int>(rng() % m.dim()) + 1;
            m.set(i, j, m.at(i, j) + Scalar::one(m.field()));
            mutant.set_coeff(e, m);
            CHECK(verify_comodule_axioms(mutant).ok == verify_fundamental_relation(mutant).ok);
        }
    }
}

TEST_CASE("layer extraction") {
    SUBCASE("ten-dimensional fixture layers") {
        CoefficientFamily rep = fixtures::f2_degree2();
        FrobeniusLayers layers = extract_layers(rep);
        CHECK(layers.p == 2);
        CHECK(layers.dim == 10);
        REQUIRE(layers.layers.size() == 2);
        FieldSpec f2 = FieldSpec::prime(2);
        ExactMatrix x0(10, f2);
        x0.set(1, 2, Scalar::one(f2));
        x0.set(3, 6, Scalar::one(f2));
        x0.set(4, 7, Scalar::one(f2));
        CHECK(layers.layers[0].X == x0);
        ExactMatrix y1(10, f2);
        y1.set(1, 8, Scalar::one(f2));
        y1.set(2, 9, Scalar::one(f2));
        y1.set(5, 10, Scalar::one(f2));
        CHECK(layers.layers[1].Y == y1);
        // the X0, Y1 commutator witness: a single 1 at (1,9)
        CHECK(commutator(layers.layers[0].X, layers.layers[1].Y) ==
              ExactMatrix::unit(10, f2, 1, 9));
    }
    SUBCASE("identity-only family has no layers") {
        FieldSpec f5 = FieldSpec::prime(5);
        CoefficientFamily f(GroupKind::H1, f5, 2);
        f.set_coeff(exp_zero(3), ExactMatrix::identity(2, f5));
        CHECK(extract_layers(f).layers.empty());
    }
    SUBCASE("rational field is rejected") {
        CHECK_THROWS_AS(extract_layers(fixtures::h1_six_dim(FieldSpec::rational())), FieldError);
    }
}

TEST_CASE("layer relation checks") {
    SUBCASE("defining representation layers pass") {
        FrobeniusLayers layers = extract_layers(fixtures::h1_defining(FieldSpec::prime(7)));
        REQUIRE(layers.layers.size() == 1);
        CHECK(check_layer_relations(layers).ok);
    }
    SUBCASE("ten-dimensional fixture fails condition e at (X0,Y1)") {
        VerificationReport report =
            check_layer_relations(extract_layers(fixtures::f2_degree2()));
        CHECK_FALSE(report.ok);
        bool found = false;
        for (const auto& v : report.violations)
            if (v.site == "e:(X0,Y1)") found = true;
        CHECK(found);
    }
    SUBCASE("twenty-dimensional fixture fails condition d at layer 1") {
        FrobeniusLayers layers = extract_layers(fixtures::f2_degree3());
        VerificationReport report = check_layer_relations(layers);
        CHECK_FALSE(report.ok);
        bool found = false;
        for (const auto& v : report.violations)
            if (v.site == "d:1") found = true;
        CHECK(found);
        CHECK(commutator(layers.layers[1].X, layers.layers[1].Y) != layers.layers[1].Z);
    }
    SUBCASE("strict mode stops at the first violation") {
        VerificationReport report =
            check_layer_relations(extract_layers(fixtures::f2_degree2()), CheckMode::Strict);
        CHECK_FALSE(report.ok);
        CHECK(report.violations.size() == 1);
    }
}

TEST_CASE("condition c holds for every verified family, including p=2") {
    for (CoefficientFamily rep :
         {fixtures::f2_degree2(), fixtures::f2_degree3(),
          fixtures::h1_defining(FieldSpec::prime(7)), fixtures::h1_six_dim(FieldSpec::prime(3))}) {
        REQUIRE(verify_comodule_axioms(rep).ok);
        VerificationReport report = check_layer_relations(extract_layers(rep));
        for (const auto& v : report.violations) CHECK(v.site.substr(0, 2) != "c:");
    }
}
