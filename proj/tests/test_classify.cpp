#include <catch2/catch_amalgamated.hpp>

#include "superpoint/classify.hpp"

using namespace superpoint;

namespace {

using QP = SuperPolynomial<Rational>;

QP xv() { return QP::variable(candidate_table(), "x"); }
QP yv() { return QP::variable(candidate_table(), "y"); }
QP zero() { return QP::zero(candidate_table()); }
QP one() { return QP::one(candidate_table()); }

}  // namespace

TEST_CASE("verify_action: identity and the monomial family") {
    // identity action: f0 = y, g0 = 1
    auto id = make_candidate<Rational>(yv(), zero(), one(), zero());
    CHECK(verify_action(id, MonoidKind::full).ok);
    CHECK(verify_action(id, MonoidKind::z2).ok);
    CHECK(verify_action(id, MonoidKind::odd).ok);

    // family f0 = x^k y, g0 = x^n, f1 = a x^k y^m with k+1 = n+mk:
    // (k,m,n) = (1,1,1), a = 1
    auto fam = make_candidate<Rational>(xv() * yv(), xv() * yv(), xv(), zero());
    CHECK(verify_action(fam, MonoidKind::full).ok);

    // violated constraint: k = 1, m = 2, n = 1 has k+1 = 2 != 3 = n+mk
    auto bad = make_candidate<Rational>(xv() * yv(), xv() * yv() * yv(), xv(), zero());
    CHECK_FALSE(verify_action(bad, MonoidKind::full).ok);

    // f0 = y^2 is not an action
    auto sq = make_candidate<Rational>(yv() * yv(), zero(), one(), zero());
    auto rep = verify_action(sq, MonoidKind::full);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("verify_action: g1 family and the degree pairs") {
    // g1 family: f0 = x^k y, g0 = x^n, g1 = b x^n y^m with n+1 = km:
    // (k,m,n) = (2,1,1), b = 3
    auto g1fam = make_candidate<Rational>(xv() * xv() * yv(), zero(), xv(),
                                          Rational(3) * xv() * yv());
    CHECK(verify_action(g1fam, MonoidKind::full).ok);

    // pure degree pairs work for every (k,n)
    for (int k = 0; k <= 2; ++k)
        for (int n = 0; n <= 2; ++n) {
            auto c = make_candidate<Rational>(xv().pow(uint32_t(k)) * yv(), zero(),
                                              xv().pow(uint32_t(n)), zero());
            INFO("k=" << k << " n=" << n);
            CHECK(verify_action(c, MonoidKind::full).ok);
        }

    // the shifted solution f0 = x y + c x - c is also an action
    auto shifted = make_candidate<Rational>(
        xv() * yv() + Rational(5) * xv() - QP::constant(candidate_table(), Rational(5)), zero(),
        xv(), zero());
    CHECK(verify_action(shifted, MonoidKind::full).ok);
}

TEST_CASE("verify_action: the Z/2 rows, including parity side conditions") {
    // row: y |-> y + p(y) e d, e |-> x e  (free p)
    auto r1 = make_candidate<Rational>(yv(), yv() * yv() + one(), xv(), zero());
    CHECK(verify_action(r1, MonoidKind::z2).ok);

    // row: y |-> y, e |-> x e + p(y) x d  (free p)
    auto r2 = make_candidate<Rational>(yv(), zero(), xv(), (yv() + one()) * xv());
    CHECK(verify_action(r2, MonoidKind::z2).ok);

    // row: y |-> y x + p(y) x e d, e |-> e: needs p even
    auto r3_even =
        make_candidate<Rational>(xv() * yv(), (yv() * yv() + one()) * xv(), one(), zero());
    CHECK(verify_action(r3_even, MonoidKind::z2).ok);
    auto r3_odd = make_candidate<Rational>(xv() * yv(), yv() * xv(), one(), zero());
    CHECK_FALSE(verify_action(r3_odd, MonoidKind::z2).ok);

    // row: y |-> y x, e |-> e + p(y) d: needs p odd
    auto r4_odd = make_candidate<Rational>(xv() * yv(), zero(), one(), yv());
    CHECK(verify_action(r4_odd, MonoidKind::z2).ok);
    auto r4_even = make_candidate<Rational>(xv() * yv(), zero(), one(), one());
    CHECK_FALSE(verify_action(r4_even, MonoidKind::z2).ok);

    // the (1,1) rows: f1 = p(y) x with p odd; g1 = q(y) x with q even
    auto r5 = make_candidate<Rational>(xv() * yv(), yv() * xv(), xv(), zero());
    CHECK(verify_action(r5, MonoidKind::z2).ok);
    auto r6 = make_candidate<Rational>(xv() * yv(), zero(), xv(), (yv() * yv()) * xv());
    CHECK(verify_action(r6, MonoidKind::z2).ok);
}

TEST_CASE("verify_action: the odd monoid") {
    // exactly one of f1 = p(y), g1 = q(y) may be nonzero
    auto f_side = make_candidate<Rational>(yv(), yv() * yv(), one(), zero());
    CHECK(verify_action(f_side, MonoidKind::odd).ok);
    auto g_side = make_candidate<Rational>(yv(), zero(), one(), yv() + one());
    CHECK(verify_action(g_side, MonoidKind::odd).ok);
    auto both = make_candidate<Rational>(yv(), yv(), one(), yv());
    CHECK_FALSE(verify_action(both, MonoidKind::odd).ok);
}

TEST_CASE("every enumerated family instance passes verify_action") {
    std::vector<Rational> scalars = {Rational(-2), Rational(1), Rational(3)};
    for (MonoidKind m : {MonoidKind::full, MonoidKind::z2, MonoidKind::odd}) {
        auto fams = enumerate_families<Rational>(m, 3, 3, scalars);
        INFO(monoid_name(m));
        CHECK_FALSE(fams.empty());
        for (const auto& fam : fams) {
            auto cand = fam.to_candidate();
            INFO("side=" << fam.side << " k=" << fam.k << " n=" << fam.n << " m=" << fam.m);
            CHECK(verify_action(cand, m).ok);
            CHECK(matches_family(cand, m));
        }
    }
    // the twisted instance (k=1,n=1,m=1) appears since 2 = 1+1
    auto fams = enumerate_families<Rational>(MonoidKind::full, 3, 3, {Rational(1)});
    bool found = false;
    for (const auto& f : fams)
        found = found || (f.side == 1 && f.k == 1 && f.n == 1 && f.m == 1);
    CHECK(found);
}

TEST_CASE("conjugation by y -> y + c preserves actions and normalizes the shift") {
    auto shifted = make_candidate<Rational>(
        xv() * yv() + Rational(5) * xv() - QP::constant(candidate_table(), Rational(5)), zero(),
        xv(), zero());
    REQUIRE(verify_action(shifted, MonoidKind::full).ok);
    auto c = normalization_shift(shifted);
    REQUIRE(c.has_value());
    CHECK(*c == Rational(5));
    auto normalized = conjugate_by_shift(shifted, *c);
    CHECK(verify_action(normalized, MonoidKind::full).ok);
    CHECK(normalized.f0 == xv() * yv());
    CHECK(matches_family(normalized, MonoidKind::full));
    CHECK(matches_family_up_to_shift(shifted, MonoidKind::full));

    // conjugating a family instance by any c preserves verify_action
    auto fam = make_candidate<Rational>(xv() * yv(), xv() * yv(), xv(), zero());
    auto moved = conjugate_by_shift(fam, Rational(7, 2));
    CHECK(verify_action(moved, MonoidKind::full).ok);
}

TEST_CASE("monomial lemma") {
    TablePtr t = make_table({"x"}, {});
    auto x = SuperPolynomial<Rational>::variable(t, "x");
    CHECK(monomial_lemma_check(x.pow(3)));
    CHECK(monomial_lemma_check(SuperPolynomial<Rational>::one(t)));  // n = 0
    CHECK_FALSE(monomial_lemma_check(x + SuperPolynomial<Rational>::one(t)));
    CHECK_FALSE(monomial_lemma_check(Rational(2) * x));

    // over a prime field
    auto xf = SuperPolynomial<GFp>::variable(t, "x");
    CHECK(monomial_lemma_check(GFp(1, 101) * (xf * xf)));
    CHECK_FALSE(monomial_lemma_check(xf + SuperPolynomial<GFp>::constant(t, GFp(1, 101))));
}

TEST_CASE("exhaustive search over F5 at degree 1 finds exactly the families") {
    SearchOptions<GFp> opt;
    opt.degree = 1;
    opt.values = field_values(5);
    opt.values_form_a_field = true;
    SearchResult<GFp> res = exhaustive_search(MonoidKind::full, opt);
    CHECK(res.outside_families == 0);
    CHECK(res.total_count > 0);
    CHECK_FALSE(res.candidates.empty());
    for (const auto& cand : res.candidates) {
        CHECK(verify_action(cand, MonoidKind::full).ok);
        CHECK(matches_family_up_to_shift(cand, MonoidKind::full));
    }
    // spot check: the identity action is among the solutions
    auto id = make_candidate<GFp>(SuperPolynomial<GFp>::variable(candidate_table(), "y"),
                                  SuperPolynomial<GFp>::zero(candidate_table()),
                                  SuperPolynomial<GFp>::one(candidate_table()),
                                  SuperPolynomial<GFp>::zero(candidate_table()));
    bool found_id = false;
    for (const auto& cand : res.candidates) found_id = found_id || (cand == id);
    CHECK(found_id);
}

TEST_CASE("degree-0 search finds the identity-type solutions only") {
    // the forced y-linear term of f0 is kept at every bound; with all other
    // degrees capped at zero the identity is the unique solution
    SearchOptions<GFp> opt;
    opt.degree = 0;
    opt.values = field_values(5);
    opt.values_form_a_field = true;
    SearchResult<GFp> res = exhaustive_search(MonoidKind::full, opt);
    CHECK(res.total_count == 1);
    REQUIRE(res.candidates.size() == 1);
    CHECK(res.candidates[0].f0 == SuperPolynomial<GFp>::variable(candidate_table(), "y"));
    CHECK(res.candidates[0].f1.is_zero());
    CHECK(res.candidates[0].g1.is_zero());
}

TEST_CASE("exhaustive search over the integer grid at degree 2") {
    SearchOptions<Rational> opt;
    opt.degree = 2;
    opt.values = {Rational(-1), Rational(0), Rational(1)};
    opt.values_form_a_field = false;
    for (MonoidKind m : {MonoidKind::full, MonoidKind::z2, MonoidKind::odd}) {
        INFO(monoid_name(m));
        SearchResult<Rational> res = exhaustive_search(m, opt);
        CHECK(res.outside_families == 0);
        CHECK(res.total_count > 0);
        for (const auto& cand : res.candidates) {
            CHECK(verify_action(cand, m).ok);
            CHECK(matches_family_up_to_shift(cand, m));
        }
    }
}

TEST_CASE("search resource guards") {
    SearchOptions<GFp> opt;
    opt.degree = 3;
    opt.values = field_values(101);
    opt.values_form_a_field = true;
    opt.work_cap = 1000;  // deliberately tiny
    CHECK_THROWS_AS(exhaustive_search(MonoidKind::full, opt), std::invalid_argument);

    SearchOptions<GFp> opt2;
    opt2.degree = 4;
    opt2.values = field_values(5);
    CHECK_THROWS_AS(exhaustive_search(MonoidKind::full, opt2), std::invalid_argument);
}
