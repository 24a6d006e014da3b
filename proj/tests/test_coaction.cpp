#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superpoint/coaction.hpp"

using namespace superpoint;

TEST_CASE("endomorphism bialgebra formulas and axioms") {
    EndBialgebra B = end_bialgebra();
    auto x1 = QPoly::variable(B.doubled, "x1");
    auto x2 = QPoly::variable(B.doubled, "x2");
    auto e1 = QPoly::variable(B.doubled, "e1");
    auto e2 = QPoly::variable(B.doubled, "e2");
    CHECK(B.comultiplication.even_images[0] == x1 * x2);
    CHECK(B.comultiplication.odd_images[0] == e1 + x1 * e2);
    CHECK(verify_end_bialgebra(B).ok);
}

TEST_CASE("canonical coaction formulas (n=1, q=1)") {
    auto ring = mapping_space_ring(1, 1);
    Coaction c = canonical_coaction(ring);
    auto v = [&](const char* nm) { return QPoly::variable(c.extended, nm); };
    CHECK(c.map.even_images[0] == v("x1") + v("dx1") * v("e"));   // x1
    CHECK(c.map.even_images[1] == v("de1") * v("x"));             // de1
    CHECK(c.map.odd_images[0] == v("dx1") * v("x"));              // dx1
    CHECK(c.map.odd_images[1] == v("e1") + v("de1") * v("e"));    // e1
    CHECK(substitute(c.map, QPoly::one(ring.table)) == QPoly::one(c.extended));
}

TEST_CASE("verify_coaction on canonical and trivial coactions") {
    for (int n = 0; n <= 3; ++n)
        for (int q = 0; q <= 3; ++q) {
            INFO("n=" << n << " q=" << q);
            CHECK(verify_coaction(canonical_coaction(mapping_space_ring(n, q))).ok);
        }
    CHECK(verify_coaction(trivial_coaction(make_table({"a", "b"}, {"c"}))).ok);
}

TEST_CASE("verify_coaction flags corrupted coactions") {
    auto ring = mapping_space_ring(1, 0);
    Coaction c = canonical_coaction(ring);

    // parity violation: x1 |-> x1 + dx1 e + e
    Coaction bad1 = c;
    bad1.map.even_images[0] = c.map.even_images[0] + QPoly::variable(c.extended, "e");
    auto rep1 = verify_coaction(bad1);
    CHECK_FALSE(rep1.ok);
    CHECK(rep1.failures[0].find("x1") != std::string::npos);

    // counit violation: x1 |-> x1 + x1 x
    Coaction bad2 = c;
    bad2.map.even_images[0] = QPoly::variable(c.extended, "x1") +
                              QPoly::variable(c.extended, "x1") * QPoly::variable(c.extended, "x");
    CHECK_FALSE(verify_coaction(bad2).ok);
}

TEST_CASE("coaction_to_cdga extracts the forms grading and differential") {
    // (1,0): deg x1 = 0, deg dx1 = 1, d x1 = dx1, d dx1 = 0
    auto r10 = mapping_space_ring(1, 0);
    CdgaStructure s10 = coaction_to_cdga(canonical_coaction(r10));
    CHECK(s10.even_degrees == std::vector<uint32_t>{0});
    CHECK(s10.odd_degrees == std::vector<uint32_t>{1});
    CHECK(s10.d.even_images[0] == QPoly::variable(r10.table, "dx1"));
    CHECK(s10.d.odd_images[0].is_zero());

    // (0,1): deg e1 = 0, deg de1 = 1, d e1 = de1
    auto r01 = mapping_space_ring(0, 1);
    CdgaStructure s01 = coaction_to_cdga(canonical_coaction(r01));
    CHECK(s01.even_degrees == std::vector<uint32_t>{1});
    CHECK(s01.odd_degrees == std::vector<uint32_t>{0});
    CHECK(s01.d.odd_images[0] == QPoly::variable(r01.table, "de1"));
    CHECK(s01.d.even_images[0].is_zero());

    // trivial coaction: all degrees zero, d = 0
    auto t = make_table({"a"}, {"b"});
    CdgaStructure striv = coaction_to_cdga(trivial_coaction(t));
    CHECK(striv.even_degrees == std::vector<uint32_t>{0});
    CHECK(striv.odd_degrees == std::vector<uint32_t>{0});
    CHECK(striv.d.even_images[0].is_zero());
    CHECK(striv.d.odd_images[0].is_zero());
}

TEST_CASE("coaction/cdga dictionary matches the de Rham structure for all n,q <= 3") {
    for (int n = 0; n <= 3; ++n) {
        for (int q = 0; q <= 3; ++q) {
            INFO("n=" << n << " q=" << q);
            auto ring = mapping_space_ring(n, q);
            CdgaStructure s = coaction_to_cdga(canonical_coaction(ring));
            auto d = de_rham(ring);
            CHECK(s.d.even_images == d.even_images);
            CHECK(s.d.odd_images == d.odd_images);
            for (int i = 0; i < n; ++i) {
                CHECK(s.even_degrees[size_t(i)] == 0);      // x_i
                CHECK(s.odd_degrees[size_t(i)] == 1);       // dx_i
            }
            for (int i = 0; i < q; ++i) {
                CHECK(s.even_degrees[size_t(n + i)] == 1);  // de_i
                CHECK(s.odd_degrees[size_t(n + i)] == 0);   // e_i
            }
        }
    }
}

TEST_CASE("cdga_to_coaction round trips") {
    for (int n = 0; n <= 2; ++n) {
        for (int q = 0; q <= 2; ++q) {
            Coaction c = canonical_coaction(mapping_space_ring(n, q));
            Coaction back = cdga_to_coaction(coaction_to_cdga(c));
            CHECK(back.map.even_images == c.map.even_images);
            CHECK(back.map.odd_images == c.map.odd_images);
        }
    }
    // zero differential, flat grading: the trivial coaction
    auto t = make_table({"a"}, {"b"});
    CdgaStructure s;
    s.algebra = t;
    s.even_degrees = {0};
    s.odd_degrees = {0};
    s.d.table = t;
    s.d.even_images = {QPoly::zero(t)};
    s.d.odd_images = {QPoly::zero(t)};
    Coaction c = cdga_to_coaction(s);
    CHECK(c.map.even_images == trivial_coaction(t).map.even_images);
    CHECK(verify_coaction(c).ok);
}

TEST_CASE("a coaction that is not of cdga type is rejected with a diagnosis") {
    // u |-> u x + x - 1 is a genuine coaction (the grading appears only after
    // the change of variables u |-> u + 1), so no generator shape matches
    auto t = make_table({"u"}, {});
    TablePtr ext = extend_table(t, {"x"}, {"e"});
    auto u = QPoly::variable(ext, "u");
    auto x = QPoly::variable(ext, "x");
    Coaction c;
    c.algebra = t;
    c.extended = ext;
    c.map.source = t;
    c.map.target = ext;
    c.map.even_images = {u * x + x - QPoly::one(ext)};
    REQUIRE(verify_coaction(c).ok);
    CHECK_THROWS_AS(coaction_to_cdga(c), std::domain_error);
}

TEST_CASE("coaction on Sullivan forms") {
    auto d1 = std::make_shared<SimplicialSet>(standard_space("delta1"));
    auto T1 = form_table(1);
    SullivanForm a = SullivanForm::zero(d1);
    a.set_value({1, 0}, QPoly::variable(T1, "x1"));
    a.set_value(*d1->find(0, "1"), QPoly::one(form_table(0)));
    a.set_value(*d1->find(0, "0"), QPoly::zero(form_table(0)));
    REQUIRE(check_compatibility(a).ok);

    CoactionForms ca = coaction_on_forms(a);
    TablePtr ext1 = extend_table(T1, {"x"}, {"e"});
    CHECK(ca.value({1, 0}) ==
          QPoly::variable(ext1, "x1") + QPoly::variable(ext1, "dx1") * QPoly::variable(ext1, "e"));
    CHECK(check_coaction_forms_compatible(ca).ok);

    // the constant 1 is fixed
    CoactionForms cone = coaction_on_forms(SullivanForm::constant(d1, Rational(1)));
    CHECK(cone.value({1, 0}) == QPoly::one(ext1));

    // a closed homogeneous n-form maps to a x^n: the fundamental form on S^1
    auto s1 = std::make_shared<SimplicialSet>(standard_space("s1"));
    SullivanForm w = SullivanForm::zero(s1);
    w.set_value({1, 0}, QPoly::variable(form_table(1), "dx1"));
    REQUIRE(check_compatibility(w).ok);
    REQUIRE(is_closed(w));
    CoactionForms cw = coaction_on_forms(w);
    CHECK(cw.value({1, 0}) == QPoly::variable(ext1, "dx1") * QPoly::variable(ext1, "x"));
}

TEST_CASE("coaction images of compatible forms stay compatible") {
    std::mt19937_64 rng(31);
    for (const char* name : {"delta2", "s1", "torus"}) {
        auto X = std::make_shared<SimplicialSet>(standard_space(name));
        INFO(name);
        for (int k = 0; k <= std::min(2, X->top_dim()); ++k) {
            FormBasis basis = compatible_form_basis(X, k, 2);
            for (int trial = 0; trial < 4; ++trial) {
                SullivanForm f = random_form_from_basis(basis, rng);
                CHECK(check_coaction_forms_compatible(coaction_on_forms(f)).ok);
            }
        }
    }
}

TEST_CASE("maximal grading degree of the mapping-space ring grows with n") {
    // finite truncations of the disjoint union of the A^{n|0}: the top
    // grading degree on O(Map(A^{0|1}, A^{n|0})) is exactly n
    for (int n = 1; n <= 4; ++n) {
        auto ring = mapping_space_ring(n, 0);
        CdgaStructure s = coaction_to_cdga(canonical_coaction(ring));
        Monomial top;
        top.even.assign(size_t(n), 0);
        top.odd = (uint64_t(1) << n) - 1;  // dx1 ... dxn
        CHECK(s.monomial_weight(top) == uint32_t(n));
        uint32_t max_gen = 0;
        for (uint32_t w : s.even_degrees) max_gen = std::max(max_gen, w);
        for (uint32_t w : s.odd_degrees) max_gen = std::max(max_gen, w);
        CHECK(max_gen == 1);  // generators cap at one; products reach n
    }
}
