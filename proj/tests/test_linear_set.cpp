#include <doctest.h>

#include <memory>
#include <numeric>
#include <set>

#include "linset/linear_set.hpp"

using namespace linset;

namespace {

std::shared_ptr<const Field> make_shared_field(unsigned p, unsigned e, unsigned h) {
    return std::make_shared<const Field>(Field::make(p, e, h));
}

// Both counting identities every report must satisfy.
void check_report_identities(const LinearSetReport& rep) {
    const BigInt q(rep.q);
    BigInt total = 0, classes = 0;
    for (unsigned i = 0; i < rep.k; ++i) {
        total += rep.spectrum[i];
        classes += BigInt(rep.spectrum[i]) * ((big_pow(q, i + 1) - 1) / (q - 1));
    }
    CHECK(total == rep.size());
    CHECK(classes == (big_pow(q, rep.k) - 1) / (q - 1));
    CHECK(rep.points.size() == rep.weights.size());
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("spec validation") {
    auto F = make_shared_field(2, 1, 6);
    SUBCASE("valid") {
        auto spec = make_construction(F, 6, {2, 3, 4});
        CHECK(spec.k() == 9);
        CHECK(spec.l() == 2);
    }
    SUBCASE("pairwise bound violated") {
        CHECK_THROWS_WITH_AS(make_construction(F, 2, {2, 3, 4}),
                             doctest::Contains("SpecInvariantViolated"), Error);
    }
    SUBCASE("s must divide h") {
        CHECK_THROWS_WITH_AS(make_construction(F, 4, {1, 2}),
                             doctest::Contains("SpecInvariantViolated"), Error);
    }
    SUBCASE("alpha degree is checked") {
        auto spec = make_construction_unchecked(F, 3, F->one(), {1, 2});
        CHECK_THROWS_WITH_AS(validate(spec), doctest::Contains("SpecInvariantViolated"), Error);
    }
}

TEST_CASE("evaluation set: subline (1,1)") {
    auto F = make_shared_field(2, 1, 5);
    auto rep = build_evaluation_set(make_construction(F, 5, {1, 1}));
    CHECK(rep.size() == 3);
    CHECK(rep.spectrum == std::vector<std::uint64_t>{3, 0});
    check_report_identities(rep);
    CHECK(is_degenerate_subline(rep));
    CHECK_FALSE(detect_club(rep));
}

TEST_CASE("evaluation set: partition (2,3) at q = 2, h = 5") {
    auto F = make_shared_field(2, 1, 5);
    auto rep = build_evaluation_set(make_construction(F, 5, {2, 3}));
    CHECK(rep.size() == 17);
    CHECK(rep.spectrum == std::vector<std::uint64_t>{12, 4, 1, 0, 0});
    check_report_identities(rep);
    CHECK(to_big(rep.spectrum) == predicted_spectrum_line(BigInt(2), 2, 3));
}

TEST_CASE("evaluation set: worked example (2,3,4) at q = 2, h = 6") {
    auto F = make_shared_field(2, 1, 6);
    auto rep = build_evaluation_set(make_construction(F, 6, {2, 3, 4}));
    CHECK(rep.size() == 385);
    CHECK(rep.spectrum == std::vector<std::uint64_t>{336, 44, 4, 1, 0, 0, 0, 0, 0});
    check_report_identities(rep);
    CHECK(rep.basis.size() == 9);
}

TEST_CASE("line spectrum closed form") {
    SUBCASE("(2,2): q+1 points of weight 2, q^3 - q of weight 1") {
        for (unsigned q : {2u, 3u, 5u}) {
            auto x = predicted_spectrum_line(BigInt(q), 2, 2);
            CHECK(x[0] == BigInt(q) * q * q - q);
            CHECK(x[1] == q + 1);
            for (std::size_t i = 2; i < x.size(); ++i) CHECK(x[i] == 0);
        }
    }
    SUBCASE("(1, k-1) is a club") {
        auto x = predicted_spectrum_line(BigInt(2), 1, 4);  // k = 5
        CHECK(x[0] == 16);
        CHECK(x[3] == 1);
        CHECK(x[1] == 0);
        CHECK(x[2] == 0);
    }
    SUBCASE("(2,3) at q=2 cross-checks enumeration") {
        auto x = predicted_spectrum_line(BigInt(2), 2, 3);
        CHECK(x == std::vector<BigInt>{12, 4, 1, 0, 0});
    }
    SUBCASE("unsorted input is sorted internally") {
        CHECK(predicted_spectrum_line(BigInt(2), 3, 2) == predicted_spectrum_line(BigInt(2), 2, 3));
    }
    SUBCASE("l must be 1") {
        auto F = make_shared_field(2, 1, 6);
        auto spec = make_construction(F, 6, {2, 2, 3});
        CHECK_THROWS_WITH_AS(predicted_spectrum_line(spec), doctest::Contains("BadShape"), Error);
    }
}

TEST_CASE("stratum counts of the worked example") {
    const BigInt q(2);
    std::vector<unsigned> part{2, 3, 4};
    SUBCASE("f_1 != 0 stratum") {
        CHECK(predicted_stratum_count(q, part, 1) == 288);  // q^8+q^7-q^6-q^5
        CHECK(predicted_stratum_count(q, part, 2) == 32);   // q^5
        CHECK_THROWS_WITH_AS(predicted_stratum_count(q, part, 3), doctest::Contains("OutOfRange"),
                             Error);
    }
    SUBCASE("second stratum (f_1 = 0, f_2 != 0)") {
        std::vector<unsigned> rest{3, 4};
        CHECK(predicted_stratum_count(q, rest, 1) == 48);  // q^6 - q^4
        CHECK(predicted_stratum_count(q, rest, 2) == 12);  // q^4 - q^2
        CHECK(predicted_stratum_count(q, rest, 3) == 4);   // q^2
    }
    SUBCASE("recursion base leaves one point of the top weight") {
        auto x = predicted_full_spectrum(q, {2, 3, 4});
        CHECK(x == std::vector<BigInt>{336, 44, 4, 1, 0, 0, 0, 0, 0});
    }
}

TEST_CASE("full spectrum recursion equals enumeration across a sweep") {
    for (unsigned p : {2u, 3u}) {
        for (unsigned h : {4u, 6u}) {
            auto F = make_shared_field(p, 1, h);
            for (auto part : {std::vector<unsigned>{1, 1}, {1, 2}, {2, 2}, {2, 3}, {1, 1, 1},
                              {1, 2, 2}, {2, 2, 2}, {1, 1, 3}}) {
                unsigned mx = 0;
                for (std::size_t i = 0; i < part.size(); ++i)
                    for (std::size_t j = i + 1; j < part.size(); ++j)
                        mx = std::max(mx, part[i] + part[j]);
                unsigned s = 0;
                for (unsigned cand = 2; cand <= h; ++cand)
                    if (h % cand == 0 && cand + 1 >= mx) { s = cand; break; }
                if (s == 0) continue;
                auto rep = build_evaluation_set(make_construction(F, s, part));
                CHECK(to_big(rep.spectrum) == predicted_full_spectrum(BigInt(p), part));
                check_report_identities(rep);
            }
        }
    }
}

TEST_CASE("partition order changes coordinates but not the spectrum") {
    auto F = make_shared_field(2, 1, 6);
    auto a = build_evaluation_set(make_construction(F, 6, {3, 2}));
    auto b = build_evaluation_set(make_construction(F, 6, {2, 3}));
    CHECK(a.spectrum == b.spectrum);
    CHECK(a.size() == b.size());
}

TEST_CASE("heaviest point can be prescribed anywhere in [k/2, k-1]") {
    for (unsigned k : {4u, 5u, 6u}) {
        unsigned s = k - 1;  // smallest admissible degree, h = s
        auto F = make_shared_field(2, 1, s);
        for (unsigned j = (k + 1) / 2; j <= k - 1; ++j) {
            auto rep = build_evaluation_set(make_construction(F, s, {k - j, j}));
            CHECK(rep.max_weight() == j);
            CHECK(rep.size() == (std::uint64_t{1} << (k - 1)) + 1);
            CHECK(rep.spectrum[0] >= 1);  // a point of weight one, per the size lower bound
        }
    }
}

TEST_CASE("projection frame") {
    SUBCASE("(2,2): the axis is the expected line") {
        auto F = make_shared_field(2, 1, 5);
        auto spec = make_construction(F, 5, {2, 2});
        auto frame = build_projection_frame(spec);
        CHECK(frame.pi.proj_dim() == 1);  // k - l - 2 = 1
        Geometry& g = *frame.geom;
        FieldElement a = spec.alpha;
        Subspace expected = g.subspace({{F->one(), F->neg(a), F->zero(), F->zero()},
                                        {F->zero(), F->zero(), F->one(), F->neg(a)}});
        CHECK(frame.pi == expected);
        CHECK(frame.omega.proj_dim() == 1);
    }
    SUBCASE("t_i = 1 contributes no axis generators") {
        auto F = make_shared_field(2, 1, 5);
        auto frame = build_projection_frame(make_construction(F, 5, {1, 4}));
        CHECK(frame.pi.proj_dim() == 2);  // only the second part contributes 3 generators
    }
    SUBCASE("deliberately undersized alpha degree fails disjointness") {
        auto F = make_shared_field(2, 1, 6);
        FieldElement alpha2 = F->select_alpha(2);
        auto spec = make_construction_unchecked(F, 2, alpha2, {2, 3});
        CHECK_THROWS_WITH_AS(build_projection_frame(spec),
                             doctest::Contains("DisjointnessFailure"), Error);
    }
}

TEST_CASE("projection model equals the evaluation model") {
    SUBCASE("(1,1): projecting from the empty axis returns the subline") {
        auto F = make_shared_field(2, 1, 5);
        auto spec = make_construction(F, 5, {1, 1});
        auto frame = build_projection_frame(spec);
        CHECK(frame.pi.rank() == 0);
        auto proj = project_subgeometry(frame);
        CHECK(proj.size() == 3);
        CHECK(reports_agree(proj, build_evaluation_set(spec)));
    }
    SUBCASE("(2,2) at q = 2: 15 subgeometry points collapse onto 9") {
        auto F = make_shared_field(2, 1, 5);
        auto spec = make_construction(F, 5, {2, 2});
        auto proj = project_subgeometry(build_projection_frame(spec));
        CHECK(proj.size() == 9);
        CHECK(proj.spectrum == std::vector<std::uint64_t>{6, 3, 0, 0});
        CHECK(reports_agree(proj, build_evaluation_set(spec)));
        check_report_identities(proj);
    }
    SUBCASE("(2,3) and the worked example agree pointwise") {
        for (auto [h, part] : {std::pair<unsigned, std::vector<unsigned>>{5, {2, 3}},
                               {6, {2, 3, 4}}}) {
            auto F = make_shared_field(2, 1, h);
            auto spec = make_construction(F, h, part);
            auto eval = build_evaluation_set(spec);
            auto proj = project_subgeometry(build_projection_frame(spec));
            CHECK(reports_agree(proj, eval));
        }
    }
}

TEST_CASE("field-reduction weight oracle") {
    // enumeration weight = rank of phi(P) ∩ pi_U = proj dim + 1
    for (auto [h, part] : {std::pair<unsigned, std::vector<unsigned>>{5, {2, 3}},
                           {4, {2, 2}},
                           {6, {2, 2, 3}}}) {
        auto F = make_shared_field(2, 1, h);
        auto spec = make_construction(F, h, part);
        auto rep = build_evaluation_set(spec);
        Subspace pi_u = field_reduce_span(*F, rep.basis);
        CHECK(pi_u.rank() == rep.k);
        Geometry sub(*F, static_cast<unsigned>(rep.points[0].v.size()) * F->h());
        for (std::size_t i = 0; i < rep.points.size(); ++i) {
            Subspace phi = field_reduce(*F, rep.points[i]);
            CHECK(phi.rank() == F->h());
            Subspace inter = sub.meet(phi, pi_u);
            CHECK(inter.rank() == rep.weights[i]);
        }
    }
}

TEST_CASE("feasible spectra") {
    SUBCASE("k=4, size q^3+1: exactly the club and the (b) type") {
        for (unsigned q : {2u, 3u}) {
            auto sols = feasible_spectra(4, big_pow(BigInt(q), 3) + 1, BigInt(q), 3);
            REQUIRE(sols.size() == 2);
            std::set<std::vector<BigInt>> got(sols.begin(), sols.end());
            BigInt Q(q);
            CHECK(got.count({Q * Q * Q, 0, 1, 0}));
            CHECK(got.count({Q * Q * Q - Q, Q + 1, 0, 0}));
        }
    }
    SUBCASE("k=5, size q^4+1: exactly types (a), (b), (c)") {
        for (unsigned q : {2u, 3u}) {
            BigInt Q(q);
            auto sols = feasible_spectra(5, big_pow(Q, 4) + 1, Q, 4);
            REQUIRE(sols.size() == 3);
            std::set<std::vector<BigInt>> got(sols.begin(), sols.end());
            CHECK(got.count({big_pow(Q, 4), 0, 0, 1, 0}));
            CHECK(got.count({big_pow(Q, 4) - Q * Q, Q * Q, 1, 0, 0}));
            CHECK(got.count({big_pow(Q, 4) - Q * Q - Q, Q * Q + Q + 1, 0, 0, 0}));
        }
    }
    SUBCASE("k=2 has the unique subline spectrum") {
        auto sols = feasible_spectra(2, BigInt(3), BigInt(2), 2);
        REQUIRE(sols.size() == 1);
        CHECK(sols[0] == std::vector<BigInt>{3, 0});
    }
}

TEST_CASE("club detection") {
    auto F = make_shared_field(2, 1, 5);
    SUBCASE("partition (1, k-1) gives a club") {
        auto rep = build_evaluation_set(make_construction(F, 5, {1, 4}));
        CHECK(detect_club(rep));
    }
    SUBCASE("partition (2,2) is not a club") {
        auto rep = build_evaluation_set(make_construction(F, 5, {2, 2}));
        CHECK_FALSE(detect_club(rep));
    }
    SUBCASE("the k = 2 subline is degenerate, not a club") {
        auto rep = build_evaluation_set(make_construction(F, 5, {1, 1}));
        CHECK_FALSE(detect_club(rep));
        CHECK(is_degenerate_subline(rep));
    }
}

TEST_CASE("construction over the non-prime base field F_4") {
    auto F = make_shared_field(2, 2, 2);  // F_4 ⊆ F_16
    auto spec = make_construction(F, 2, {1, 2});
    auto rep = build_evaluation_set(spec);
    CHECK(rep.q == 4);
    CHECK(rep.size() == 17);  // q^2 + 1
    CHECK(detect_club(rep));
    CHECK(to_big(rep.spectrum) == predicted_spectrum_line(BigInt(4), 1, 2));
    check_report_identities(rep);
    auto proj = project_subgeometry(build_projection_frame(spec));
    CHECK(reports_agree(proj, rep));
}

TEST_CASE("points come out in reduced-form enumeration order") {
    auto F = make_shared_field(2, 1, 5);
    auto spec = make_construction(F, 5, {1, 1});
    auto rep = build_evaluation_set(spec);
    // digit order over (f1 const, f2 const): (1,0), (0,1), (1,1)
    Geometry g(*F, 2);
    REQUIRE(rep.size() == 3);
    CHECK(rep.points[0] == g.point({F->one(), F->zero()}));
    CHECK(rep.points[1] == g.point({F->zero(), F->one()}));
    CHECK(rep.points[2] == g.point({F->one(), F->one()}));
}
