#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superpoint/superalg.hpp"

using namespace superpoint;
using QPoly = SuperPolynomial<Rational>;

namespace {

TablePtr xy_table() { return make_table({"x1", "x2"}, {"e1", "e2"}); }

QPoly v(const TablePtr& t, const std::string& name) { return QPoly::variable(t, name); }

// seeded random polynomial with small integer coefficients
QPoly random_poly(const TablePtr& t, std::mt19937_64& rng, int max_terms = 5,
                  uint32_t max_exp = 3) {
    QPoly p = QPoly::zero(t);
    int terms = 1 + int(rng() % uint64_t(max_terms));
    for (int k = 0; k < terms; ++k) {
        std::vector<uint32_t> ev(t->num_evens());
        for (auto& e : ev) e = uint32_t(rng() % (max_exp + 1));
        uint64_t odd = rng() % (uint64_t(1) << t->num_odds());
        long long c = (long long)(rng() % 9) - 4;
        Monomial m;
        m.even = ev;
        m.odd = odd;
        QPoly term(t);
        term.add_term(m, Rational(c));
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("add: identity, doubling, cancellation") {
    auto t = xy_table();
    auto x1 = v(t, "x1"), e1 = v(t, "e1"), e2 = v(t, "e2");

    CHECK(x1 + QPoly::zero(t) == x1);
    CHECK(e1 + e1 == Rational(2) * e1);
    CHECK((x1 + e1 * e2) + (-x1) == e1 * e2);
}

TEST_CASE("mul: square-zero, anticommutativity, cross cancellation") {
    auto t = xy_table();
    auto x1 = v(t, "x1"), e1 = v(t, "e1"), e2 = v(t, "e2");

    CHECK((e1 * e1).is_zero());
    CHECK(e2 * e1 == -(e1 * e2));
    // (x1 + e1)(x1 - e1) = x1^2: cross terms cancel, e1^2 = 0
    CHECK((x1 + e1) * (x1 - e1) == x1 * x1);
}

TEST_CASE("mul: supercommutativity on homogeneous elements") {
    auto t = make_table({"x1", "x2"}, {"e1", "e2", "e3"});
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = random_poly(t, rng);
        auto q = random_poly(t, rng);
        for (Parity pp : {Parity::even, Parity::odd}) {
            for (Parity qp : {Parity::even, Parity::odd}) {
                auto ph = parity_component(p, pp);
                auto qh = parity_component(q, qp);
                auto lhs = ph * qh;
                auto rhs = qh * ph;
                if (pp == Parity::odd && qp == Parity::odd) rhs = -rhs;
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("substitute: the superpoint-endomorphism composition formula") {
    // f: x |-> x1*x2, e |-> e1 + x1*e2, the comultiplication of R[x,e]
    auto src = make_table({"x"}, {"e"});
    auto dst = xy_table();
    AlgebraMap<Rational> f;
    f.source = src;
    f.target = dst;
    f.even_images = {v(dst, "x1") * v(dst, "x2")};
    f.odd_images = {v(dst, "e1") + v(dst, "x1") * v(dst, "e2")};
    f.validate();

    CHECK(substitute(f, v(src, "e")) == v(dst, "e1") + v(dst, "x1") * v(dst, "e2"));

    auto id = AlgebraMap<Rational>::identity(src);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poly(src, rng);
        CHECK(substitute(id, p) == p);
    }

    // x |-> x^2 applied to x^3 gives x^6
    AlgebraMap<Rational> sq;
    sq.source = src;
    sq.target = src;
    sq.even_images = {v(src, "x") * v(src, "x")};
    sq.odd_images = {v(src, "e")};
    CHECK(substitute(sq, v(src, "x").pow(3)) == v(src, "x").pow(6));
}

TEST_CASE("substitute is a ring homomorphism") {
    auto src = make_table({"x1", "x2"}, {"e1", "e2"});
    auto dst = make_table({"y1", "y2"}, {"f1", "f2"});
    AlgebraMap<Rational> f;
    f.source = src;
    f.target = dst;
    f.even_images = {v(dst, "y1") + v(dst, "y2") * v(dst, "y2"),
                     v(dst, "y2") + v(dst, "f1") * v(dst, "f2")};
    f.odd_images = {v(dst, "f1"), v(dst, "f2") + v(dst, "y1") * v(dst, "f1")};
    f.validate();

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = random_poly(src, rng);
        auto q = random_poly(src, rng);
        CHECK(substitute(f, p * q) == substitute(f, p) * substitute(f, q));
        CHECK(substitute(f, p + q) == substitute(f, p) + substitute(f, q));
    }
}

TEST_CASE("substitute composes") {
    auto t = xy_table();
    AlgebraMap<Rational> g;
    g.source = t;
    g.target = t;
    g.even_images = {v(t, "x2"), v(t, "x1") * v(t, "x1")};
    g.odd_images = {v(t, "e2"), v(t, "e1")};
    AlgebraMap<Rational> f;
    f.source = t;
    f.target = t;
    f.even_images = {v(t, "x1") + v(t, "x2"), v(t, "x2")};
    f.odd_images = {v(t, "x1") * v(t, "e1"), v(t, "e2") - v(t, "e1")};
    auto fg = compose(f, g);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto p = random_poly(t, rng);
        CHECK(substitute(fg, p) == substitute(f, substitute(g, p)));
    }
}

TEST_CASE("odd derivation: Leibniz examples") {
    // d with x1 |-> eb1 on Q[x1, x2 | eb1, eb2]
    auto t = make_table({"x1", "x2"}, {"eb1", "eb2"});
    OddDerivation<Rational> d;
    d.table = t;
    d.even_images = {v(t, "eb1"), v(t, "eb2")};
    d.odd_images = {QPoly::zero(t), QPoly::zero(t)};
    d.validate();

    auto x1 = v(t, "x1"), x2 = v(t, "x2"), eb1 = v(t, "eb1"), eb2 = v(t, "eb2");
    CHECK(odd_derivation(d, x1 * x1) == Rational(2) * x1 * eb1);
    CHECK(odd_derivation(d, QPoly::constant(t, Rational(5))).is_zero());
    CHECK(odd_derivation(d, x1 * x2) == eb1 * x2 + x1 * eb2);
}

TEST_CASE("odd derivation: signed Leibniz on random inputs and d^2 = 0") {
    auto t = make_table({"x1", "x2"}, {"eb1", "eb2"});
    OddDerivation<Rational> d;
    d.table = t;
    d.even_images = {v(t, "eb1"), v(t, "eb2")};
    d.odd_images = {QPoly::zero(t), QPoly::zero(t)};

    std::mt19937_64 rng(512);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_poly(t, rng);
        auto b = random_poly(t, rng);
        for (Parity pa : {Parity::even, Parity::odd}) {
            auto ah = parity_component(a, pa);
            auto lhs = odd_derivation(d, ah * b);
            auto rhs = odd_derivation(d, ah) * b;
            auto tail = ah * odd_derivation(d, b);
            rhs = (pa == Parity::odd) ? rhs - tail : rhs + tail;
            CHECK(lhs == rhs);
        }
        CHECK(odd_derivation(d, odd_derivation(d, a)).is_zero());
    }
}

TEST_CASE("odd derivation rejects parity-violating images") {
    auto t = make_table({"x1"}, {"e1"});
    OddDerivation<Rational> d;
    d.table = t;
    d.even_images = {v(t, "x1")};  // even image of an even generator: invalid
    d.odd_images = {QPoly::zero(t)};
    CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("parity components") {
    auto t = xy_table();
    auto x1 = v(t, "x1"), e1 = v(t, "e1"), e2 = v(t, "e2");
    CHECK(parity_component(x1 + e1, Parity::even) == x1);
    CHECK(parity_component(x1 + e1, Parity::odd) == e1);
    CHECK(parity_component(e1 * e2, Parity::odd).is_zero());

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = random_poly(t, rng);
        auto ev = parity_component(p, Parity::even);
        auto od = parity_component(p, Parity::odd);
        CHECK(ev + od == p);
        CHECK(parity_component(ev, Parity::even) == ev);  // idempotent
        CHECK(parity_component(od, Parity::odd) == od);
    }
}

TEST_CASE("canonical rendering") {
    auto t = xy_table();
    auto x1 = v(t, "x1"), e1 = v(t, "e1"), e2 = v(t, "e2");
    auto p = Rational(3, 2) * x1 * x1 * e1 * e2;
    CHECK(p.render() == "3/2*x1^2*e1*e2");
    CHECK(QPoly::zero(t).render() == "0");
    CHECK((x1 - e1 * e2).render() == "-e1*e2 + x1");
    CHECK((QPoly::one(t) + x1).render() == "1 + x1");
    CHECK((-(x1 * x1) + e1).render() == "e1 - x1^2");
}

TEST_CASE("canonical form: no zero coefficients survive any operation") {
    auto t = make_table({"x1", "x2"}, {"e1", "e2", "e3"});
    std::mt19937_64 rng(606);
    AlgebraMap<Rational> f;
    f.source = t;
    f.target = t;
    f.even_images = {v(t, "x1") + v(t, "x2"), v(t, "x1") * v(t, "x2")};
    f.odd_images = {v(t, "e2"), v(t, "e1") - v(t, "e3"), v(t, "e3")};
    auto assert_canonical = [](const QPoly& p) {
        for (const auto& [m, c] : p.terms()) CHECK_FALSE(c == 0);
    };
    for (int trial = 0; trial < 30; ++trial) {
        auto p = random_poly(t, rng);
        auto q = random_poly(t, rng);
        assert_canonical(p + q);
        assert_canonical(p - p);
        assert_canonical(p * q);
        assert_canonical(substitute(f, p));
    }
}

TEST_CASE("table mismatch errors") {
    auto t1 = xy_table();
    auto t2 = make_table({"y"}, {});
    CHECK_THROWS_AS(v(t1, "x1") + QPoly::one(t2), std::invalid_argument);
    CHECK_THROWS_AS(v(t1, "x1") * QPoly::one(t2), std::invalid_argument);
}

TEST_CASE("GFp arithmetic") {
    GFp a(7, 11), b(8, 11);
    CHECK((a * b).value() == (7 * 8) % 11);
    CHECK((a + b).value() == 4);
    CHECK((a / b) * b == a);
    CHECK(GFp(0, 11).is_zero());
    // literals attach to a modulus on contact
    GFp lit(-1);
    CHECK((lit * a).value() == 4);
    CHECK_THROWS_AS(GFp(1, 5) + GFp(1, 7), std::invalid_argument);
}

TEST_CASE("polynomials over a prime field") {
    using FPoly = SuperPolynomial<GFp>;
    auto t = make_table({"x"}, {"e"});
    auto x = FPoly::variable(t, "x");
    auto e = FPoly::variable(t, "e");
    auto p = GFp(3, 5) * x * x + e;
    CHECK((e * e).is_zero());
    CHECK(GFp(5, 5) * x == FPoly::zero(t));  // coefficient reduces to zero
    CHECK(p.render() == "e + 3*x^2");
}
