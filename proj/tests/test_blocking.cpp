#include <doctest.h>

#include <memory>
#include <numeric>

#include "linset/blocking.hpp"

using namespace linset;

namespace {

std::shared_ptr<const Field> make_shared_field(unsigned p, unsigned e, unsigned h) {
    return std::make_shared<const Field>(Field::make(p, e, h));
}

// all q^h + 1 points of the line spanned by e_2, e_3 in PG(2, q^h)
std::vector<Point> line_points(const Field& F) {
    Geometry g(F, 3);
    std::vector<Point> out;
    out.push_back(g.point({F.zero(), F.one(), F.zero()}));
    for (std::uint64_t a = 0; a < F.order(); ++a)
        out.push_back(g.point({F.zero(), F.element(a), F.one()}));
    return out;
}

}  // namespace

TEST_CASE("rank h+1 set (2,2,3) at q=2, h=6 is a small minimal non-Redei blocking set") {
    auto F = make_shared_field(2, 1, 6);
    auto spec = make_construction(F, 6, {2, 2, 3});
    auto rep = build_evaluation_set(spec);
    REQUIRE(rep.size() == 97);  // 2^6 + 2^5 + 1

    BlockingCertificate cert = certify_blocking(*F, rep);
    CHECK(cert.blocking);
    CHECK(cert.scan.line_count == 4161);
    CHECK(cert.minimal);
    CHECK(cert.small);  // 2*97 < 3*65
    CHECK(cert.redei.empty());

    SUBCASE("double counting over all lines") {
        std::uint64_t sum = 0;
        for (const auto& [hits, lines] : cert.secants.histogram) sum += hits * lines;
        CHECK(sum == rep.size() * (F->order() + 1));
    }
    SUBCASE("the predicted (q+1)-secant exists") {
        CHECK(cert.secants.has_q_plus_one_secant);
        // line through (1, f2(a), 0) and (1, 0, f3(a)) with deg f2 = 1,
        // deg f3 = 2, gcd(f2, f3) = 1
        PolyRing R(*F);
        Poly f2 = R.x();                                        // X
        Poly f3 = R.make({F->one(), F->zero(), F->one()});      // X^2 + 1, coprime to X
        Geometry g(*F, 3);
        Point a = g.point({F->one(), R.eval(f2, spec.alpha), F->zero()});
        Point b = g.point({F->one(), F->zero(), R.eval(f3, spec.alpha)});
        CHECK(line_intersection_count(*F, rep.points, a, b) == 3);
    }
}

TEST_CASE("a single line blocks the plane") {
    auto F = make_shared_field(2, 1, 2);  // PG(2, 4)
    auto set = line_points(*F);
    REQUIRE(set.size() == 5);
    auto scan = verify_blocking(*F, set);
    CHECK(scan.blocking);
    CHECK(scan.line_count == 21);
}

TEST_CASE("a rank-h set embedded in a line of the plane misses lines") {
    // (2,2) at q=2, h=4 has rank 4 = h < h+1; embed PG(1, 16) into the plane
    auto F = make_shared_field(2, 1, 4);
    auto rep = build_evaluation_set(make_construction(F, 4, {2, 2}));
    Geometry g(*F, 3);
    std::vector<Point> embedded;
    for (const Point& p : rep.points) embedded.push_back(g.point({p.v[0], p.v[1], F->zero()}));
    auto scan = verify_blocking(*F, embedded);
    CHECK_FALSE(scan.blocking);
    REQUIRE(scan.missed_line.has_value());
    // the witness line really misses the set
    for (const Point& p : embedded) {
        FieldElement dot = F->zero();
        for (int c = 0; c < 3; ++c) dot = F->add(dot, F->mul(p.v[c], scan.missed_line->v[c]));
        CHECK(dot.idx != 0);
    }
}

TEST_CASE("minimality") {
    auto F = make_shared_field(2, 1, 2);  // PG(2, 4)
    Geometry g(*F, 3);
    SUBCASE("the full plane has no tangents") {
        auto scan = verify_minimal(*F, g.all_points());
        CHECK_FALSE(scan.minimal);
        for (std::uint64_t t : scan.tangents) CHECK(t == 0);
    }
    SUBCASE("a line plus an external point is not minimal") {
        auto set = line_points(*F);
        set.push_back(g.point({F->one(), F->zero(), F->zero()}));
        auto blocking = verify_blocking(*F, set);
        REQUIRE(blocking.blocking);
        auto scan = verify_minimal(*F, set);
        CHECK_FALSE(scan.minimal);
        CHECK(scan.tangents.back() == 0);  // the external point never sits alone on a line
    }
    SUBCASE("non-blocking input is rejected") {
        std::vector<Point> tiny{g.point({F->one(), F->zero(), F->zero()})};
        CHECK_THROWS_WITH_AS(verify_minimal(*F, tiny), doctest::Contains("NotBlocking"), Error);
    }
}

TEST_CASE("Redei lines") {
    SUBCASE("partition (1,1,4) at h=5 yields at least two Redei lines") {
        auto F = make_shared_field(2, 1, 5);
        auto rep = build_evaluation_set(make_construction(F, 5, {1, 1, 4}));
        auto lines = redei_lines(*F, rep);
        CHECK(lines.size() >= 2);
        for (const auto& l : lines) CHECK(l.rank == rep.k - 1);
    }
    SUBCASE("one part of size one yields a Redei line") {
        auto F = make_shared_field(2, 1, 5);
        auto rep = build_evaluation_set(make_construction(F, 5, {1, 2, 3}));
        CHECK_FALSE(redei_lines(*F, rep).empty());
    }
    SUBCASE("all parts at least two yields none") {
        auto F = make_shared_field(2, 1, 6);
        auto rep = build_evaluation_set(make_construction(F, 6, {2, 2, 3}));
        CHECK(redei_lines(*F, rep).empty());
    }
    SUBCASE("characterization across all partitions of h+1 at desk scale") {
        // every rank-(h+1) construction must also block minimally
        for (unsigned h : {5u, 6u}) {
            auto F = make_shared_field(2, 1, h);
            const unsigned k = h + 1;
            for (unsigned t1 = 1; 3 * t1 <= k; ++t1)
                for (unsigned t2 = t1; t1 + 2 * t2 <= k; ++t2) {
                    unsigned t3 = k - t1 - t2;
                    if (t2 + t3 > h + 1) continue;  // outside the construction's reach
                    auto rep = build_evaluation_set(make_construction(F, h, {t1, t2, t3}));
                    bool has_redei = !redei_lines(*F, rep).empty();
                    CHECK(has_redei == (t1 == 1));
                    CHECK(verify_blocking(*F, rep.points).blocking);
                    CHECK(verify_minimal(*F, rep.points).minimal);
                }
        }
    }
    SUBCASE("characterization also holds below rank h+1") {
        auto F = make_shared_field(2, 1, 6);
        auto subplane = build_evaluation_set(make_construction(F, 6, {1, 1, 1}));  // k = 3
        CHECK_FALSE(redei_lines(*F, subplane).empty());
        auto balanced = build_evaluation_set(make_construction(F, 6, {2, 2, 2}));  // k = 6
        CHECK(redei_lines(*F, balanced).empty());
    }
    SUBCASE("missing source basis is rejected") {
        auto F = make_shared_field(2, 1, 6);
        auto rep = build_evaluation_set(make_construction(F, 6, {2, 2, 3}));
        rep.basis.clear();
        CHECK_THROWS_WITH_AS(redei_lines(*F, rep), doctest::Contains("MissingSource"), Error);
    }
}

TEST_CASE("secant spectrum sanity") {
    auto F = make_shared_field(2, 1, 2);
    SUBCASE("any line meets the full plane in q^h + 1 points") {
        Geometry g(*F, 3);
        auto scan = secant_spectrum(*F, g.all_points());
        REQUIRE(scan.histogram.size() == 1);
        CHECK(scan.histogram.begin()->first == F->order() + 1);
        CHECK(scan.histogram.begin()->second == 21);
    }
    SUBCASE("line rank vector counts stay powers of q") {
        auto F6 = make_shared_field(2, 1, 6);
        auto rep = build_evaluation_set(make_construction(F6, 6, {1, 2, 4}));
        // redei_lines throws NonIntegralLineRank internally if the property fails
        auto lines = redei_lines(*F6, rep);
        CHECK(lines.size() >= 1);
    }
}

TEST_CASE("Baer subplane of PG(2,16) through the F_4 tower") {
    auto F = make_shared_field(2, 2, 2);  // q = 4, h = 2, rank h+1 = 3
    auto rep = build_evaluation_set(make_construction(F, 2, {1, 1, 1}));
    CHECK(rep.size() == 21);  // q^2 + q + 1
    auto cert = certify_blocking(*F, rep);
    CHECK(cert.blocking);
    CHECK(cert.minimal);
    CHECK(cert.small);
    CHECK_FALSE(cert.redei.empty());  // parts of size one give Redei lines
}

TEST_CASE("plane shape is enforced") {
    auto F = make_shared_field(2, 1, 4);
    auto rep = build_evaluation_set(make_construction(F, 4, {2, 2}));
    CHECK_THROWS_WITH_AS(verify_blocking(*F, rep.points), doctest::Contains("NotAPlane"), Error);
}
