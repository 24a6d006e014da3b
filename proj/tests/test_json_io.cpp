#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superpoint/json_io.hpp"

using namespace superpoint;

namespace {

SpacePtr space(const std::string& name) {
    return std::make_shared<SimplicialSet>(standard_space(name));
}

}  // namespace

TEST_CASE("space JSON round trips for all standard spaces") {
    for (const char* name :
         {"point", "delta1", "delta2", "delta3", "boundary-delta2", "boundary-delta3", "s1",
          "s2", "s3", "torus"}) {
        INFO(name);
        auto X = standard_space(name);
        Json j = space_to_json(X);
        SimplicialSet back = space_from_json(j);
        CHECK(back == X);
        CHECK(back.validate().ok);
        // byte-identical re-emission
        CHECK(space_to_json(back).dump() == j.dump());
    }
    // prisms round trip too (degeneracy words in the face data)
    auto pr = prism(space("torus"));
    Json j = space_to_json(*pr.space);
    CHECK(space_from_json(j) == *pr.space);
}

TEST_CASE("space JSON rejects malformed input") {
    auto X = standard_space("delta2");
    Json j = space_to_json(X);
    Json broken = j;
    broken["faces"]["2/012"][0]["ref"] = "1/nonexistent";
    CHECK_THROWS_AS(space_from_json(broken), std::invalid_argument);
    Json nodim;
    nodim["faces"] = Json::object();
    CHECK_THROWS_AS(space_from_json(nodim), std::invalid_argument);
    CHECK_THROWS_AS(space_from_json(j, /*max_cells=*/3), std::invalid_argument);
}

TEST_CASE("form JSON round trips and preserves exact rationals") {
    std::mt19937_64 rng(91);
    for (const char* name : {"delta2", "s1", "torus"}) {
        auto X = space(name);
        INFO(name);
        for (int k = 0; k <= std::min(2, X->top_dim()); ++k) {
            FormBasis basis = compatible_form_basis(X, k, 2);
            for (int trial = 0; trial < 3; ++trial) {
                SullivanForm a = Rational(1, 7) * random_form_from_basis(basis, rng);
                Json j = form_to_json(a);
                SullivanForm back = form_from_json(j);
                CHECK(back == a);
                CHECK(form_to_json(back).dump() == j.dump());
            }
        }
    }
}

TEST_CASE("form JSON with a space hash requires and checks the space") {
    auto X = space("s1");
    SullivanForm w = SullivanForm::zero(X);
    w.set_value({1, 0}, QPoly::variable(form_table(1), "dx1"));
    Json j = form_to_json(w, /*inline_space=*/false);
    CHECK(j["space"].is_string());
    CHECK_THROWS_AS(form_from_json(j), std::invalid_argument);
    CHECK(form_from_json(j, X) == w);
    auto Y = space("delta1");
    CHECK_THROWS_AS(form_from_json(j, Y), std::invalid_argument);
}

TEST_CASE("twist JSON round trips") {
    TwistSpec deg;
    deg.geometry = Geometry::topological;
    deg.family = DegreeFamily{2};
    TwistSpec back = twist_from_json(twist_to_json(deg));
    CHECK(back.geometry == Geometry::topological);
    CHECK(std::get<DegreeFamily>(back.family).n == 2);

    TwistSpec t1;
    t1.geometry = Geometry::euclidean;
    t1.family = Table1Family{4, 0, 0, 0, Rational(0), {Rational(1, 2), Rational(0), Rational(3)}};
    TwistSpec b1 = twist_from_json(twist_to_json(t1));
    const auto& fam = std::get<Table1Family>(b1.family);
    CHECK(fam.row == 4);
    CHECK(fam.f == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(3)});

    // constraint violations surface on load
    TwistSpec bad;
    bad.geometry = Geometry::topological;
    bad.family = Table1Family{2, 2, 1, 3, Rational(1), {}};
    Json jb = twist_to_json(bad);
    CHECK_THROWS_AS(twist_from_json(jb), std::invalid_argument);
}

TEST_CASE("candidate JSON round trips") {
    TablePtr xy = candidate_table();
    auto x = SuperPolynomial<Rational>::variable(xy, "x");
    auto y = SuperPolynomial<Rational>::variable(xy, "y");
    auto cand = make_candidate<Rational>(x * y, Rational(1, 3) * x * y,
                                         x, SuperPolynomial<Rational>::zero(xy));
    Json j = candidate_to_json(cand);
    auto back = candidate_from_json(j);
    CHECK(back == cand);
}

TEST_CASE("rational literal parsing is strict") {
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}
