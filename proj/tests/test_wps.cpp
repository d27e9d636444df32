#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "duval/parser.hpp"
#include "test_util.hpp"

using namespace duval;
using duval::testutil::record;

namespace {

GradedMap map_of(const std::string& case_id, const std::string& mode, const std::string& name) {
    return prepare_case(record(case_id), mode).map(name);
}

Surface surface_of(const std::string& case_id, const std::string& mode) {
    auto prepared = prepare_case(record(case_id), mode);
    REQUIRE(prepared.surface.has_value());
    return *prepared.surface;
}

}  // namespace

TEST_CASE("compose: the degree-3 stabilizer involution squares to the identity") {
    const GradedMap sigma1 = map_of("d3-2A2", "generic", "sigma1");
    const GradedMap id = identity_map(sigma1.ambient());
    CHECK(projective_equal(compose(sigma1, sigma1), id));
    CHECK(projective_equal(compose(id, sigma1), sigma1));
    CHECK(projective_equal(compose(sigma1, id), sigma1));
}

TEST_CASE("compose: torus members multiply parameters") {
    // tau_{t1} . tau_{s} = tau_{t1*s} within the same one-parameter family.
    const GradedMap tau = map_of("d3-3A2", "generic", "tau1");
    REQUIRE(tau.param().has_value());
    const Symbol t1 = *tau.param();
    const Symbol s = intern_symbol("s");
    const GradedMap tau_s = tau.substituted(t1, Scalar::symbol(s));
    const GradedMap prod = compose(tau, tau_s);
    const GradedMap expected = tau.substituted(t1, Scalar::symbol(t1) * Scalar::symbol(s));
    CHECK(projective_equal(prod, expected));
}

TEST_CASE("compose rejects mismatched ambient spaces") {
    const GradedMap a = map_of("d3-2A2", "generic", "sigma1");
    const GradedMap b = map_of("d1-2D4", "generic", "sigma1");
    CHECK_THROWS_AS(compose(a, b), WeightMismatchError);
}

TEST_CASE("projective equality") {
    const Ambient p3({1, 1, 1, 1}, {"x0", "x1", "x2", "x3"});
    auto coord = [&](int i) { return Poly::coordinate(4, i); };
    SUBCASE("uniform rescaling by 2 in straight projective space") {
        const GradedMap f("f", p3, {coord(0), coord(1), coord(2), coord(3)});
        const GradedMap g("g", p3,
                          {coord(0) * Scalar(Rat(2)), coord(1) * Scalar(Rat(2)),
                           coord(2) * Scalar(Rat(2)), coord(3) * Scalar(Rat(2))});
        CHECK(projective_equal(f, g));
    }
    SUBCASE("signs follow the weights in P(1,1,2,3)") {
        const Ambient w({1, 1, 2, 3}, {"y1", "y1p", "y2", "y3"});
        const GradedMap f("f", w, {coord(0), coord(1), coord(2), coord(3)});
        const GradedMap g("g", w, {-coord(0), -coord(1), coord(2), -coord(3)});
        CHECK(projective_equal(f, g));  // s = -1: (-1)^2 = 1 on y2
        const GradedMap h("h", w, {-coord(0), -coord(1), -coord(2), -coord(3)});
        CHECK(!projective_equal(f, h));
    }
    SUBCASE("distinct coordinate patterns are not identified") {
        CHECK(!projective_equal(map_of("d4-2A1-8lines", "generic", "sigma1"),
                                map_of("d4-2A1-8lines", "generic", "sigma3")));
    }
    SUBCASE("weights with gcd > 1 fall back to root extraction") {
        const Ambient w({2, 2, 2}, {"x", "y", "z"});
        auto c3 = [&](int i) { return Poly::coordinate(3, i); };
        const GradedMap f("f", w, {c3(0), c3(1), c3(2)});
        const GradedMap g("g", w,
                          {c3(0) * Scalar(Rat(4)), c3(1) * Scalar(Rat(4)), c3(2) * Scalar(Rat(4))});
        CHECK(projective_equal(f, g));  // s = 1/2
        const GradedMap h("h", w, {-c3(0), -c3(1), -c3(2)});
        CHECK(projective_equal(f, h));  // s = i, a 4th root of unity
        const GradedMap k("k", w,
                          {c3(0) * Scalar(Rat(4)), c3(1) * Scalar(Rat(4)), c3(2) * Scalar(Rat(9))});
        CHECK(!projective_equal(f, k));
    }
    SUBCASE("equivalence relation on the cataloged generators") {
        const auto prepared = prepare_case(record("d4-2A1-8lines"), "-1");
        std::vector<GradedMap> maps;
        for (const auto& [name, m] : prepared.maps)
            if (!m.param()) maps.push_back(m);
        for (const auto& m : maps) CHECK(projective_equal(m, m));
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = 0; j < maps.size(); ++j)
                CHECK(projective_equal(maps[i], maps[j]) == projective_equal(maps[j], maps[i]));
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = 0; j < maps.size(); ++j)
                for (std::size_t k = 0; k < maps.size(); ++k)
                    if (projective_equal(maps[i], maps[j]) && projective_equal(maps[j], maps[k]))
                        CHECK(projective_equal(maps[i], maps[k]));
    }
    SUBCASE("rescaling a tuple by s^{w_i} yields an equal map") {
        const GradedMap m = map_of("d1-2D4", "generic", "sigma1");
        const Scalar s = Scalar(Rat(3)) * Scalar::symbol(intern_symbol("t"));
        std::vector<Poly> images;
        for (std::size_t i = 0; i < m.images().size(); ++i)
            images.push_back(m.images()[i] * s.pow(m.ambient().weights[i]));
        const GradedMap scaled("scaled", m.ambient(), images);
        CHECK(projective_equal(m, scaled));
    }
}

TEST_CASE("verify_automorphism") {
    SUBCASE("extra involution of the degree-3 surface at lambda = -1 gives c = 1") {
        const Surface s = surface_of("d3-2A2", "-1");
        const Scalar c = verify_automorphism(s, map_of("d3-2A2", "-1", "sigma"));
        CHECK(c.is_one());
    }
    SUBCASE("identity map gives c = 1 on every cataloged equation") {
        for (const auto& rec : duval::testutil::shipped_catalog().cases) {
            if (!rec.equation) continue;
            const auto prepared = prepare_case(rec, rec.lambda_modes.front());
            CHECK(verify_automorphism(*prepared.surface, identity_map(prepared.surface->ambient()))
                      .is_one());
        }
    }
    SUBCASE("the linear involution of the degree-4 family rescales by lambda^2(lambda-1)^2") {
        const Surface s = surface_of("d4-2A1-8lines", "generic");
        const Scalar c = verify_automorphism(s, map_of("d4-2A1-8lines", "generic", "sigma1"));
        CHECK(c == parse_scalar("lambda^2*(lambda - 1)^2"));
    }
    SUBCASE("a corrupted tuple is rejected with a residual") {
        const Surface s = surface_of("d3-2A2", "generic");
        const GradedMap bad("bad", s.ambient(),
                            {parse_poly("x0", s.ambient()), parse_poly("x1 + x0", s.ambient()),
                             parse_poly("x2", s.ambient()), parse_poly("x3", s.ambient())});
        CHECK_THROWS_AS(verify_automorphism(s, bad), NotAnAutomorphismError);
    }
}

TEST_CASE("element_order") {
    SUBCASE("identity has order 1") {
        const Ambient p3({1, 1, 1, 1}, {"x0", "x1", "x2", "x3"});
        CHECK(element_order(identity_map(p3)) == 1);
    }
    SUBCASE("the A7 rotation has order 4") {
        CHECK(element_order(map_of("d2-A7", "generic", "sigma2")) == 4);
    }
    SUBCASE("sixth-root extra maps: exact ambient orders") {
        // The printed tuples for degrees 1 and 3 cube to sigma1, not to the
        // identity, so their exact order is 6; the degree-4 tuple is an
        // honest 3-cycle.
        CHECK(element_order(map_of("d3-2A2", "sixth-root", "sigma")) == 6);
        CHECK(element_order(map_of("d1-2D4", "sixth-root", "sigma")) == 6);
        CHECK(element_order(map_of("d4-2A1-8lines", "sixth-root", "sigma")) == 3);
    }
    SUBCASE("the cube of the sixth-root map is exactly sigma1") {
        for (const char* id : {"d3-2A2", "d1-2D4"}) {
            const auto prepared = prepare_case(record(id), "sixth-root");
            const GradedMap& sigma = prepared.map("sigma");
            const GradedMap cube = compose(compose(sigma, sigma), sigma);
            CHECK(projective_equal(cube, prepared.map("sigma1")));
        }
    }
    SUBCASE("exceeding the cap is an error, not a loop") {
        CHECK_THROWS_AS(element_order(map_of("d2-A7", "generic", "sigma2"), 2), OrderCapError);
        CHECK_THROWS_AS(element_order(map_of("d2-A7", "generic", "alpha")), Error);
    }
}

TEST_CASE("declared inverses verify across the whole catalog") {
    for (const auto& rec : duval::testutil::shipped_catalog().cases) {
        for (const auto& mode : rec.lambda_modes) {
            const auto prepared = prepare_case(rec, mode);
            for (const auto& [name, m] : prepared.maps) {
                if (!m.has_declared_inverse()) continue;
                CAPTURE(rec.id);
                CAPTURE(name);
                CHECK(verify_declared_inverse(m));
                // m * m^-1 = id as a word relation against the empty word.
                CHECK(verify_word_relation({m, resolve_declared_inverse(m)}, {}, m.ambient(),
                                           !m.images().empty() &&
                                               m.images()[0].relation_active()));
            }
        }
    }
}

TEST_CASE("verify_family_relation") {
    SUBCASE("swap inverts the torus on the degree-3 family") {
        const auto prepared = prepare_case(record("d3-2A2"), "generic");
        const GradedMap& tau = prepared.map("tau");
        const Scalar t_inv = Scalar::symbol(intern_symbol("t")).invert();
        CHECK(verify_family_relation(prepared.map("sigma1"), tau, t_inv));
        CHECK(!verify_family_relation(prepared.map("sigma1"), tau,
                                      Scalar::symbol(intern_symbol("t"))));
    }
    SUBCASE("identity outer fixes any family") {
        const auto prepared = prepare_case(record("d2-A7"), "generic");
        const GradedMap& alpha = prepared.map("alpha");
        CHECK(verify_family_relation(identity_map(alpha.ambient()), alpha,
                                     Scalar::symbol(intern_symbol("a"))));
    }
    SUBCASE("the A7 rotation acts on the additive parameter by -i") {
        const auto prepared = prepare_case(record("d2-A7"), "generic");
        const Scalar sub = Scalar(-CycNum::i()) * Scalar::symbol(intern_symbol("a"));
        CHECK(verify_family_relation(prepared.map("sigma2"), prepared.map("alpha"), sub));
    }
}

TEST_CASE("verify_word_relation on the degree-4 lambda = -1 conjugation table") {
    const auto prepared = prepare_case(record("d4-2A1-8lines"), "-1");
    const Ambient& ambient = prepared.map("sigma").ambient();
    const GradedMap& sigma = prepared.map("sigma");
    const GradedMap tau_m1 = prepared.map("tau").substituted(intern_symbol("t"), Scalar(Rat(-1)));
    SUBCASE("sigma . sigma3 lands on tau(-1) * sigma3") {
        CHECK(verify_word_relation({sigma, prepared.map("sigma3"), sigma},
                                   {tau_m1, prepared.map("sigma3")}, ambient));
    }
    SUBCASE("sigma . sigma1 lands on tau(-1) * sigma2, not on sigma2 alone") {
        CHECK(verify_word_relation({sigma, prepared.map("sigma1"), sigma},
                                   {tau_m1, prepared.map("sigma2")}, ambient));
        CHECK(!verify_word_relation({sigma, prepared.map("sigma1"), sigma},
                                    {prepared.map("sigma2")}, ambient));
    }
    SUBCASE("sigma . sigma2 lands on tau(-1) * sigma1") {
        CHECK(verify_word_relation({sigma, prepared.map("sigma2"), sigma},
                                   {tau_m1, prepared.map("sigma1")}, ambient));
    }
}

TEST_CASE("maps passing the equation check are closed under composition") {
    for (const char* id : {"d3-2A2", "d2-2A3", "d4-2A1-8lines"}) {
        const auto prepared = prepare_case(record(id), "generic");
        std::vector<GradedMap> passing;
        for (const auto& [name, m] : prepared.maps) {
            if (m.param()) continue;
            verify_automorphism(*prepared.surface, m);  // throws on failure
            passing.push_back(m);
        }
        for (const auto& f : passing)
            for (const auto& g : passing)
                CHECK(!verify_automorphism(*prepared.surface, compose(f, g)).is_zero());
    }
}

TEST_CASE("generator orders divide the closure order") {
    for (const auto& rec : duval::testutil::shipped_catalog().cases) {
        if (!rec.closure_spec) continue;
        const auto prepared = prepare_case(rec, rec.lambda_modes.front());
        std::vector<GradedMap> gens;
        for (const auto& name : rec.closure_spec->generators) gens.push_back(prepared.map(name));
        const auto elements = closure(gens);
        for (const auto& g : gens) {
            CAPTURE(rec.id);
            CHECK(elements.size() % element_order(g) == 0);
        }
    }
}

TEST_CASE("matrix-declared generators expand to the same map as tuples") {
    // sigma1 of the degree-3 case is declared as a 4x4 matrix in the data.
    const GradedMap sigma1 = map_of("d3-2A2", "generic", "sigma1");
    const Ambient& ambient = sigma1.ambient();
    const GradedMap expected("expected", ambient,
                             {parse_poly("x0", ambient), parse_poly("x1", ambient),
                              parse_poly("x3", ambient), parse_poly("x2", ambient)});
    CHECK(projective_equal(sigma1, expected));
    CHECK(sigma1.images() == expected.images());
}
