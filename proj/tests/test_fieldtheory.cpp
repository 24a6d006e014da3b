#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superpoint/fieldtheory.hpp"

using namespace superpoint;

namespace {

SpacePtr space(const std::string& name) {
    return std::make_shared<SimplicialSet>(standard_space(name));
}

SullivanForm interval_height_form() {
    // x1 with matching vertex values on Delta^1 (compatible, not closed)
    auto d1 = space("delta1");
    SullivanForm a = SullivanForm::zero(d1);
    a.set_value({1, 0}, QPoly::variable(form_table(1), "x1"));
    a.set_value(*d1->find(0, "1"), QPoly::one(form_table(0)));
    a.set_value(*d1->find(0, "0"), QPoly::zero(form_table(0)));
    return a;
}

SullivanForm interval_dx() {
    auto d1 = space("delta1");
    SullivanForm a = SullivanForm::zero(d1);
    a.set_value({1, 0}, QPoly::variable(form_table(1), "dx1"));
    return a;
}

QPoly rho_power(int n) {
    EndBialgebra B = end_bialgebra();
    return QPoly::variable(B.ring, "x").pow(uint32_t(n));
}

}  // namespace

TEST_CASE("untwisted membership per geometry") {
    auto bd2 = space("boundary-delta2");
    SullivanForm one = SullivanForm::constant(bd2, Rational(1));
    CHECK(untwisted_membership(Geometry::topological, one));
    CHECK(untwisted_membership(Geometry::pretopological, one));

    SullivanForm dx = interval_dx();
    CHECK_FALSE(untwisted_membership(Geometry::euclidean, dx));     // odd degree
    CHECK(untwisted_membership(Geometry::oriented_euclidean, dx));  // closed
    CHECK(untwisted_membership(Geometry::fully_rigid, dx));
    CHECK(untwisted_membership(Geometry::fully_rigid, interval_height_form()));

    // not closed: fails everywhere except fully rigid
    SullivanForm x = interval_height_form();
    CHECK_FALSE(untwisted_membership(Geometry::topological, x));
    CHECK_FALSE(untwisted_membership(Geometry::oriented_euclidean, x));
}

TEST_CASE("degree twist membership") {
    SullivanForm dx = interval_dx();
    CHECK(degree_twist_membership(Geometry::topological, 1, dx));
    CHECK_FALSE(degree_twist_membership(Geometry::topological, 0, dx));
    CHECK_FALSE(degree_twist_membership(Geometry::topological, 0, interval_height_form()));

    // even case on the triangle: 1 + dx1^dx2 is closed with components 0, 2
    auto d2 = space("delta2");
    auto T2 = form_table(2);
    SullivanForm vol = SullivanForm::zero(d2);
    vol.set_value({2, 0}, QPoly::variable(T2, "dx1") * QPoly::variable(T2, "dx2"));
    SullivanForm mixed = SullivanForm::constant(d2, Rational(1)) + vol;
    REQUIRE(check_compatibility(mixed).ok);
    CHECK(degree_twist_membership(Geometry::euclidean, 0, mixed));
    CHECK_FALSE(degree_twist_membership(Geometry::euclidean, 1, mixed));
    CHECK_FALSE(degree_twist_membership(Geometry::topological, 0, mixed));  // not homogeneous

    // untwisted = the degree-zero twist
    std::mt19937_64 rng(7);
    for (const char* name : {"delta2", "s1"}) {
        auto X = space(name);
        for (int k = 0; k <= std::min(1, X->top_dim()); ++k) {
            FormBasis basis = compatible_form_basis(X, k, 2);
            for (int trial = 0; trial < 6; ++trial) {
                SullivanForm a = random_form_from_basis(basis, rng);
                CHECK(untwisted_membership(Geometry::topological, a) ==
                      degree_twist_membership(Geometry::topological, 0, a));
            }
        }
    }
}

TEST_CASE("geometry bialgebra chain and residual structure") {
    CHECK(geometry_bialgebra(Geometry::euclidean).specializations.size() == 2);
    CHECK(geometry_coaction(Geometry::euclidean) == ResidualStructure::mod2_grading_and_d);
    CHECK(geometry_coaction(Geometry::oriented_euclidean) ==
          ResidualStructure::differential_only);
    CHECK(geometry_coaction(Geometry::fully_rigid) == ResidualStructure::none);
    CHECK(geometry_coaction(Geometry::topological) == ResidualStructure::integer_grading_and_d);
}

TEST_CASE("basic twist coinvariance") {
    SullivanForm dx = interval_dx();
    CHECK(basic_twist_coinvariance(Geometry::topological, rho_power(1), dx));
    CHECK_FALSE(basic_twist_coinvariance(Geometry::topological, rho_power(0), dx));

    // rho = 1 on a nonconstant 0-form: the coaction produces a d(a) e term
    CHECK_FALSE(basic_twist_coinvariance(Geometry::pretopological, rho_power(0),
                                         interval_height_form()));

    // rho = x^0 on a constant: true
    auto bd2 = space("boundary-delta2");
    CHECK(basic_twist_coinvariance(Geometry::topological, rho_power(0),
                                   SullivanForm::constant(bd2, Rational(3))));

    // non-multiplicative rho is rejected
    EndBialgebra B = end_bialgebra();
    QPoly bad = QPoly::variable(B.ring, "x") + QPoly::one(B.ring);
    CHECK_THROWS_AS(basic_twist_coinvariance(Geometry::topological, bad, dx),
                    std::invalid_argument);
}

TEST_CASE("coinvariance with rho = x^n agrees with degree twist membership") {
    std::mt19937_64 rng(23);
    for (const char* name : {"delta1", "delta2", "s1", "torus"}) {
        auto X = space(name);
        INFO(name);
        for (int k = 0; k <= std::min(2, X->top_dim()); ++k) {
            FormBasis basis = compatible_form_basis(X, k, 2);
            for (int trial = 0; trial < 5; ++trial) {
                SullivanForm a = random_form_from_basis(basis, rng);
                for (int n = 0; n <= 2; ++n) {
                    for (Geometry g : {Geometry::pretopological, Geometry::topological,
                                       Geometry::euclidean, Geometry::oriented_euclidean,
                                       Geometry::fully_rigid}) {
                        CHECK(basic_twist_coinvariance(g, rho_power(n), a) ==
                              degree_twist_membership(g, n, a));
                    }
                }
            }
        }
    }
}

TEST_CASE("twist spec validation") {
    TwistSpec ok;
    ok.geometry = Geometry::topological;
    ok.family = Table1Family{2, 1, 1, 1, Rational(1), {}};
    CHECK_NOTHROW(validate_twist(ok));  // k+1 = 2 = n + mk

    TwistSpec bad = ok;
    bad.family = Table1Family{2, 2, 1, 3, Rational(1), {}};
    CHECK_THROWS_AS(validate_twist(bad), std::invalid_argument);  // 3 != 1 + 6

    TwistSpec euclid;
    euclid.geometry = Geometry::euclidean;
    euclid.family = Table1Family{2, 0, 0, 0, Rational(1), {Rational(1)}};
    CHECK_THROWS_AS(validate_twist(euclid), std::invalid_argument);  // af != 0

    euclid.family = Table1Family{3, 0, 0, 0, Rational(0), {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(validate_twist(euclid), std::invalid_argument);  // f not in R[y^2]
}

TEST_CASE("table-1 membership: twisted and differential twists") {
    auto d1 = space("delta1");
    SullivanForm zero = SullivanForm::zero(d1);
    SullivanForm dx = interval_dx();

    // twisted twist a=1, m=n=k=1: omega = 0, alpha any closed 1-form works
    TwistSpec tw;
    tw.geometry = Geometry::topological;
    tw.family = Table1Family{2, 1, 1, 1, Rational(1), {}};
    CHECK(table1_membership(tw, zero, dx));

    // differential twist: the pair (omega, d omega)
    SullivanForm x = interval_height_form();
    TwistSpec diff;
    diff.geometry = Geometry::topological;
    diff.family = DifferentialFamily{1};
    CHECK(table1_membership(diff, x, differential(x)));
    CHECK_FALSE(table1_membership(diff, x, zero));

    // the same via row 2 with m = 0, a = 1: d omega = alpha, k+1 = n
    TwistSpec diff_row;
    diff_row.geometry = Geometry::topological;
    diff_row.family = Table1Family{2, 0, 1, 0, Rational(1), {}};
    CHECK(table1_membership(diff_row, x, differential(x)));

    // all scalars zero degenerates to the degree-twist conditions
    TwistSpec degen;
    degen.geometry = Geometry::topological;
    degen.family = Table1Family{2, 1, 1, 1, Rational(0), {}};
    CHECK(table1_membership(degen, dx, zero));
    CHECK_FALSE(table1_membership(degen, x, zero));
}

TEST_CASE("table-1 membership: euclidean rows") {
    auto d2 = space("delta2");
    auto T2 = form_table(2);
    SullivanForm one = SullivanForm::constant(d2, Rational(1));
    SullivanForm vol = SullivanForm::zero(d2);
    vol.set_value({2, 0}, QPoly::variable(T2, "dx1") * QPoly::variable(T2, "dx2"));

    FormBasis b1 = compatible_form_basis(d2, 1, 1);
    std::mt19937_64 rng(3);
    SullivanForm alpha = random_form_from_basis(b1, rng);
    while (!is_closed(alpha)) alpha = random_form_from_basis(b1, rng);

    // row 4: omega even closed, d alpha = f(omega); f = 0 needs alpha closed
    TwistSpec r4;
    r4.geometry = Geometry::euclidean;
    r4.family = Table1Family{4, 0, 0, 0, Rational(0), {}};
    CHECK(table1_membership(r4, one + vol, alpha));

    // row 1: parity-homogeneous closed pairs
    TwistSpec r1;
    r1.geometry = Geometry::euclidean;
    r1.family = Table1Family{1, 0, 0, 0, Rational(0), {}};
    CHECK(table1_membership(r1, one + vol, alpha));
    CHECK_FALSE(table1_membership(r1, one + alpha, one));  // omega of mixed parity
}

TEST_CASE("euclidean membership is stable under the unit and scalars") {
    auto torus_space = space("torus");
    FormBasis b2 = compatible_form_basis(torus_space, 2, 2);
    std::mt19937_64 rng(77);
    SullivanForm a = random_form_from_basis(b2, rng);
    while (!is_closed(a)) a = random_form_from_basis(b2, rng);
    REQUIRE(degree_twist_membership(Geometry::euclidean, 0, a));
    SullivanForm one = SullivanForm::constant(torus_space, Rational(1));
    CHECK(degree_twist_membership(Geometry::euclidean, 0, wedge(a, one)));
    CHECK(degree_twist_membership(Geometry::euclidean, 0, Rational(7) * a));
    CHECK(degree_twist_membership(Geometry::euclidean, 0, a + one));
}

TEST_CASE("on connected spaces the topological untwisted theories are the constants") {
    std::mt19937_64 rng(3141);
    for (const char* name : {"delta2", "boundary-delta2", "s1", "torus"}) {
        auto X = space(name);
        INFO(name);
        REQUIRE(X->pi0() == 1);
        FormBasis b0 = compatible_form_basis(X, 0, 3);
        int members = 0;
        for (int trial = 0; trial < 40; ++trial) {
            SullivanForm a = random_form_from_basis(b0, rng);
            if (!untwisted_membership(Geometry::topological, a)) continue;
            ++members;
            // every passing form is globally one constant
            Rational c = a.value({0, 0}).constant_value();
            CHECK(a == SullivanForm::constant(X, c));
        }
        CHECK(members >= 1);  // the constants themselves occur
        CHECK(untwisted_membership(Geometry::topological,
                                   SullivanForm::constant(X, Rational(5, 3))));
    }
}

TEST_CASE("bordism bookkeeping") {
    auto X = space("s1");
    CHECK(bordism_generators(X, 0).description == "unit component");
    CHECK(bordism_generators(X, 1).symmetric_group_order == 1);
    CHECK(bordism_generators(X, 2).symmetric_group_order == 2);
    CHECK(bordism_generators(X, 4).symmetric_group_order == 24);
}
