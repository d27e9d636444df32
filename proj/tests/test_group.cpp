#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "test_util.hpp"

using namespace duval;
using duval::testutil::record;

namespace {

std::vector<GradedMap> closure_generators(const std::string& case_id, const std::string& mode) {
    const CaseRecord& rec = record(case_id);
    REQUIRE(rec.closure_spec.has_value());
    const auto prepared = prepare_case(rec, mode);
    std::vector<GradedMap> gens;
    for (const auto& name : rec.closure_spec->generators) gens.push_back(prepared.map(name));
    return gens;
}

}  // namespace

TEST_CASE("closure sizes of the cataloged finite parts") {
    CHECK(closure(closure_generators("d4-2A1-8lines", "generic")).size() == 8);
    CHECK(closure(closure_generators("d4-A3-4lines", "generic")).size() == 16);
    CHECK(closure(closure_generators("d2-A7", "generic")).size() == 8);
    CHECK(closure(closure_generators("d3-A5", "generic")).size() == 6);
    CHECK(closure(closure_generators("d3-3A2", "generic")).size() == 6);
    const Ambient p3({1, 1, 1, 1}, {"x0", "x1", "x2", "x3"});
    CHECK(closure({identity_map(p3)}).size() == 1);
}

TEST_CASE("closure caps runaway generator sets") {
    CHECK_THROWS_AS(closure(closure_generators("d4-A3-4lines", "generic"), 7), ClosureCapError);
    // A family member with a free symbol can never close up.
    const auto prepared = prepare_case(record("d3-2A2"), "generic");
    CHECK_THROWS_AS(closure({prepared.map("tau")}), ClosureCapError);
}

TEST_CASE("closure size does not depend on generator order") {
    auto gens = closure_generators("d4-A3-4lines", "generic");
    const auto base = closure(gens).size();
    std::mt19937 rng(7);
    for (int iter = 0; iter < 5; ++iter) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(closure(gens).size() == base);
    }
}

TEST_CASE("fingerprints of the abstract reference tables") {
    SUBCASE("dihedral of order 8") {
        const GroupFingerprint fp = fingerprint(dihedral_table(4));
        CHECK(fp.order == 8);
        CHECK(fp.order_multiset == std::map<long, long>{{1, 1}, {2, 5}, {4, 2}});
        CHECK(fp.derived_order == 2);
        CHECK(fp.abelian_invariants == std::vector<long>{2, 2});
    }
    SUBCASE("trivial group") {
        const GroupFingerprint fp = fingerprint(cyclic_table(1));
        CHECK(fp.order == 1);
        CHECK(fp.derived_order == 1);
        CHECK(fp.abelian_invariants.empty());
    }
    SUBCASE("Z/2 x Z/4") {
        const GroupFingerprint fp = fingerprint(direct_product_table(cyclic_table(2), cyclic_table(4)));
        CHECK(fp.order == 8);
        CHECK(fp.order_multiset == std::map<long, long>{{1, 1}, {2, 3}, {4, 4}});
        CHECK(fp.abelian_invariants == std::vector<long>{2, 4});
        CHECK(fp.derived_order == 1);
    }
    SUBCASE("the order-16 semidirect product") {
        const GroupFingerprint fp = fingerprint(v4_semidirect_z4_table());
        CHECK(fp.order == 16);
        CHECK(fp.derived_order == 2);
    }
}

TEST_CASE("fingerprint of the degree-4 finite part is elementary abelian of order 8") {
    const auto elements = closure(closure_generators("d4-2A1-8lines", "generic"));
    const GroupFingerprint fp = fingerprint(multiplication_table(elements));
    CHECK(fp.order == 8);
    CHECK(fp.order_multiset == std::map<long, long>{{1, 1}, {2, 7}});
    CHECK(fp.abelian_invariants == std::vector<long>{2, 2, 2});
    CHECK(fp.derived_order == 1);
    CHECK(match_named_group(fp) == std::string("(Z/2)^3"));
}

TEST_CASE("fingerprint is invariant under relabeling of the element list") {
    auto elements = closure(closure_generators("d2-A7", "generic"));
    const GroupFingerprint base = fingerprint(multiplication_table(elements));
    std::mt19937 rng(99);
    for (int iter = 0; iter < 4; ++iter) {
        std::shuffle(elements.begin(), elements.end(), rng);
        CHECK(fingerprint(multiplication_table(elements)) == base);
    }
}

TEST_CASE("match_named_group identifies the catalog groups") {
    CHECK(match_named_group(fingerprint(dihedral_table(3))) == std::string("D3"));
    CHECK(match_named_group(fingerprint(cyclic_table(1))) == std::string("trivial"));
    const auto a3_4l = closure(closure_generators("d4-A3-4lines", "generic"));
    CHECK(match_named_group(fingerprint(multiplication_table(a3_4l))) ==
          std::string("(Z/2)^2:Z/4"));
    const auto a7 = closure(closure_generators("d2-A7", "generic"));
    CHECK(match_named_group(fingerprint(multiplication_table(a7))) == std::string("Z/2xZ/4"));
    const auto a5 = closure(closure_generators("d3-A5", "generic"));
    CHECK(match_named_group(fingerprint(multiplication_table(a5))) == std::string("Z/6"));
    // A fingerprint outside the table matches nothing.
    CHECK(!match_named_group(fingerprint(cyclic_table(5))).has_value());
}

TEST_CASE("the named-group table is collision-free") {
    const auto& table = named_group_table();
    CHECK(table.size() == 12);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i + 1; j < table.size(); ++j)
            CHECK(!(table[i].fp == table[j].fp));
}

TEST_CASE("multiplication_table rejects non-closed input") {
    auto gens = closure_generators("d4-A3-4lines", "generic");
    CHECK_THROWS(multiplication_table(gens));  // generators alone are not closed
}

TEST_CASE("lattice actions") {
    SUBCASE("the 3A2 dihedral action on the 2-torus verifies") {
        LatticeAction action;
        action.name = "D3";
        action.torus_dim = 2;
        action.generators = {{"s2", {{-1, -1}, {0, 1}}, {}, 2}, {"s3", {{0, 1}, {-1, -1}}, {}, 3}};
        action.relations = {"s2^2", "s3^3", "s2*s3*s2*s3", "s3*s3^-1"};
        const auto result = verify_lattice_action(action);
        CHECK(result.ok);
    }
    SUBCASE("identity relation on the identity matrix") {
        LatticeAction action;
        action.name = "trivial";
        action.torus_dim = 1;
        action.generators = {{"e", {{1}}, {}, 1}};
        action.relations = {"e"};
        CHECK(verify_lattice_action(action).ok);
    }
    SUBCASE("the degree-5 involution squares to the identity") {
        LatticeAction action;
        action.name = "Z/2";
        action.torus_dim = 2;
        action.generators = {{"s2", {{1, 0}, {-1, -1}}, {}, 2}};
        action.relations = {"s2^2"};
        CHECK(verify_lattice_action(action).ok);
    }
    SUBCASE("a wrong stated order is reported") {
        LatticeAction action;
        action.name = "bad order";
        action.torus_dim = 2;
        action.generators = {{"s", {{0, 1}, {-1, -1}}, {}, 2}};  // actual order 3
        const auto result = verify_lattice_action(action);
        CHECK(!result.ok);
        REQUIRE(!result.failures.empty());
        CHECK(result.failures.front().find("order 3") != std::string::npos);
    }
    SUBCASE("a non-unimodular matrix is rejected") {
        LatticeAction action;
        action.name = "bad det";
        action.torus_dim = 2;
        action.generators = {{"s", {{2, 0}, {0, 1}}, {}, 1}};
        CHECK(!verify_lattice_action(action).ok);
    }
    SUBCASE("a false relation is reported") {
        LatticeAction action;
        action.name = "bad relation";
        action.torus_dim = 2;
        action.generators = {{"s4", {{0, 1}, {-1, 0}}, {}, 4}};
        action.relations = {"s4^2"};
        const auto result = verify_lattice_action(action);
        CHECK(!result.ok);
    }
    SUBCASE("affine unipotent actions verify with exact orders") {
        LatticeAction action;
        action.name = "D3 affine";
        action.torus_dim = 1;
        action.additive_dim = 2;
        action.generators = {
            {"s2", {{1}}, {{CycNum(0L), CycNum(1L)}, {CycNum(1L), CycNum(0L)}}, 2},
            {"s3", {{1}}, {{CycNum(0L), CycNum(1L)}, {CycNum(-1L), CycNum(-1L)}}, 3}};
        action.relations = {"s2^2", "s3^3", "s2*s3*s2*s3"};
        CHECK(verify_lattice_action(action).ok);
    }
}

TEST_CASE("all cataloged lattice actions verify") {
    for (const auto& rec : duval::testutil::shipped_catalog().cases)
        for (const auto& action : rec.lattice_actions) {
            CAPTURE(rec.id);
            CAPTURE(action.name);
            const auto result = verify_lattice_action(action);
            for (const auto& f : result.failures) MESSAGE(f);
            CHECK(result.ok);
        }
}
