#include <doctest.h>

#include "linset/json_io.hpp"

using namespace linset;

TEST_CASE("point and subspace serialization round-trips through canonical form") {
    Field F = Field::make(2, 1, 4);
    Geometry g(F, 3);

    SUBCASE("points") {
        Point p = g.point({F.generator(), F.one(), F.element(5)});
        Json j = point_to_json(F, p);
        CHECK(point_from_json(F, j) == p);
    }
    SUBCASE("subspaces re-canonicalize on load") {
        Subspace s = g.subspace({{F.one(), F.generator(), F.zero()},
                                 {F.zero(), F.one(), F.element(3)}});
        Json j = subspace_to_json(F, s);
        CHECK(subspace_from_json(F, j) == s);
        // a scrambled, non-echelon basis of the same row space loads equal
        std::vector<FieldElement> mixed(3);
        for (int c = 0; c < 3; ++c) mixed[c] = F.add(s.rows[0][c], F.mul(F.generator(), s.rows[1][c]));
        Subspace scrambled = g.subspace({mixed, s.rows[1]});
        CHECK(subspace_from_json(F, subspace_to_json(F, scrambled)) == s);
    }
}

TEST_CASE("tuple serialization uses coefficient arrays") {
    Field F = Field::make(3, 1, 2);
    PolyRing R(F);
    PolyTuple t{{R.make({F.one(), F.element(2)}), R.one()}, {2, 1}};
    Json j = tuple_to_json(F, t);
    CHECK(j.at("entries").size() == 2);
    CHECK(j.at("entries")[0] == Json::array({1, 2}));
    CHECK(j.at("bounds") == Json::array({2, 1}));
}

TEST_CASE("report JSON carries the spec echo and the spectrum") {
    auto F = std::make_shared<const Field>(Field::make(2, 1, 5));
    auto spec = make_construction(F, 5, {2, 3});
    auto rep = build_evaluation_set(spec);
    Json j = report_to_json(spec, rep, true);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("spec").at("field").at("modulus").size() == 6);
    CHECK(j.at("spec").at("s") == 5);
    CHECK(j.at("size") == 17);
    CHECK(j.at("spectrum") == Json::array({12, 4, 1, 0, 0}));
    CHECK(j.at("points").size() == 17);
    // identical construction gives byte-identical output
    auto rep2 = build_evaluation_set(spec);
    CHECK(report_to_json(spec, rep2, true).dump() == j.dump());
}

TEST_CASE("CSV export lists one point per row") {
    auto F = std::make_shared<const Field>(Field::make(2, 1, 5));
    auto spec = make_construction(F, 5, {1, 1});
    auto rep = build_evaluation_set(spec);
    std::string csv = report_to_csv(*F, rep);
    CHECK(csv == "point,weight\n1 0,1\n0 1,1\n1 1,1\n");
}
