#include <doctest.h>

#include <algorithm>
#include <set>

#include "linset/field.hpp"
#include "linset/json_io.hpp"

using namespace linset;

namespace {

// Multiplicative order by brute force, the oracle for generator checks.
std::uint64_t mult_order(const Field& F, FieldElement x) {
    REQUIRE(x.idx != 0);
    std::uint64_t n = 1;
    FieldElement y = x;
    while (y != F.one()) {
        y = F.mul(y, x);
        ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("prime field F_2 via a degree-1 modulus") {
    Field F = Field::make(2, 1, 1);
    CHECK(F.order() == 2);
    CHECK(F.q() == 2);
    CHECK(F.add(F.one(), F.one()) == F.zero());
    CHECK(F.mul(F.one(), F.one()) == F.one());
}

TEST_CASE("non-prime p is rejected") {
    CHECK_THROWS_WITH_AS(Field::make(4, 1, 2), doctest::Contains("NonPrimeP"), Error);
    CHECK_THROWS_WITH_AS(Field::make(1, 1, 2), doctest::Contains("NonPrimeP"), Error);
}

TEST_CASE("element counts by enumeration") {
    // every coefficient vector is a distinct element and |F*| divides into
    // the full multiplicative group
    Field F64 = Field::make(2, 1, 6);
    CHECK(F64.order() == 64);
    CHECK(mult_order(F64, F64.generator()) == 63);

    Field F81 = Field::make(3, 1, 4);
    CHECK(F81.order() == 81);
    CHECK(mult_order(F81, F81.generator()) == 80);
}

TEST_CASE("field axioms exhaustively at small scale") {
    // unary and pairwise laws up to order 256, full triples up to order 27
    for (auto [p, e, h] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 3},
                           {3, 1, 2},
                           {2, 2, 2},
                           {5, 1, 2},
                           {3, 1, 3},
                           {2, 1, 8}}) {
        Field F = Field::make(p, e, h);
        const std::uint64_t n = F.order();
        REQUIRE(n <= 256);
        std::uint64_t bad = 0;
        for (std::uint64_t a = 0; a < n; ++a) {
            FieldElement x = F.element(a);
            CHECK(F.add(x, F.zero()) == x);
            CHECK(F.mul(x, F.one()) == x);
            CHECK(F.add(x, F.neg(x)) == F.zero());
            if (a != 0) CHECK(F.mul(x, F.inv(x)) == F.one());
            for (std::uint64_t b = 0; b < n; ++b) {
                FieldElement y = F.element(b);
                if (F.add(x, y) != F.add(y, x)) ++bad;
                if (F.mul(x, y) != F.mul(y, x)) ++bad;
                if (n > 27) continue;
                for (std::uint64_t c = 0; c < n; ++c) {
                    FieldElement z = F.element(c);
                    if (F.mul(x, F.add(y, z)) != F.add(F.mul(x, y), F.mul(x, z))) ++bad;
                    if (F.mul(F.mul(x, y), z) != F.mul(x, F.mul(y, z))) ++bad;
                    if (F.add(F.add(x, y), z) != F.add(x, F.add(y, z))) ++bad;
                }
            }
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("Frobenius x -> x^q fixes exactly q elements") {
    for (auto [p, e, h] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 6},
                           {2, 1, 12},
                           {3, 1, 6},
                           {2, 2, 3},
                           {2, 1, 1}}) {
        Field F = Field::make(p, e, h);
        REQUIRE(F.order() <= 4096);
        std::uint64_t fixed = 0;
        for (std::uint64_t a = 0; a < F.order(); ++a)
            if (F.frobenius_q(F.element(a)) == F.element(a)) ++fixed;
        CHECK(fixed == F.q());
        CHECK(F.subfield_elements().size() == F.q());
    }
}

TEST_CASE("degree_over_base divides h, exhaustively") {
    Field F = Field::make(2, 1, 6);
    for (std::uint64_t a = 0; a < F.order(); ++a) {
        unsigned d = F.degree_over_base(F.element(a));
        CHECK(6 % d == 0);
    }
}

TEST_CASE("degree_over_base examples") {
    Field F = Field::make(2, 1, 6);
    SUBCASE("base-field elements have degree 1") {
        CHECK(F.degree_over_base(F.zero()) == 1);
        CHECK(F.degree_over_base(F.one()) == 1);
    }
    SUBCASE("a multiplicative generator has degree h") {
        CHECK(F.degree_over_base(F.generator()) == 6);
    }
    SUBCASE("g^{(2^6-1)/(2^2-1)} has degree 2") {
        FieldElement x = F.pow(F.generator(), 63 / 3);
        CHECK(F.degree_over_base(x) == 2);
        CHECK(mult_order(F, x) == 3);  // lands in F_4 but not F_2
    }
}

TEST_CASE("select_alpha") {
    Field F = Field::make(2, 1, 6);
    SUBCASE("degree 6") {
        FieldElement a = F.select_alpha(6);
        CHECK(F.degree_over_base(a) == 6);
    }
    SUBCASE("degree 2") {
        FieldElement a = F.select_alpha(2);
        CHECK(F.degree_over_base(a) == 2);
        CHECK(F.frobenius_q(F.frobenius_q(a)) == a);
        CHECK(F.frobenius_q(a) != a);
    }
    SUBCASE("4 does not divide 6") {
        CHECK_THROWS_WITH_AS(F.select_alpha(4), doctest::Contains("InvalidDegree"), Error);
    }
    SUBCASE("deterministic") {
        Field G = Field::make(2, 1, 6);
        CHECK(F.select_alpha(3) == G.select_alpha(3));
        CHECK(F.modulus() == G.modulus());
    }
}

TEST_CASE("subfield membership") {
    Field F = Field::make(2, 1, 6);
    SUBCASE("zero is in every subfield") {
        for (unsigned d : {1u, 2u, 3u, 6u}) CHECK(F.in_subfield(F.zero(), d));
    }
    SUBCASE("degree-2 alpha sits in the order-q^2 subfield only") {
        FieldElement a = F.select_alpha(2);
        CHECK(F.in_subfield(a, 2));
        CHECK_FALSE(F.in_subfield(a, 1));
    }
    SUBCASE("a generator avoids every proper subfield") {
        for (unsigned d : {1u, 2u, 3u}) CHECK_FALSE(F.in_subfield(F.generator(), d));
        CHECK(F.in_subfield(F.generator(), 6));
    }
    SUBCASE("d must divide h") {
        CHECK_THROWS_WITH_AS(F.in_subfield(F.one(), 4), doctest::Contains("InvalidDegree"), Error);
    }
}

TEST_CASE("seed permutes the modulus scan without breaking determinism") {
    Field a0 = Field::make(2, 1, 4, 0);
    Field a1 = Field::make(2, 1, 4, 0);
    CHECK(a0.modulus() == a1.modulus());
    Field b = Field::make(2, 1, 4, 7);
    Field b2 = Field::make(2, 1, 4, 7);
    CHECK(b.modulus() == b2.modulus());
}

TEST_CASE("field JSON round-trip is bit-exact") {
    Field F = Field::make(3, 1, 4, 11);
    Json j = field_to_json(F);
    auto G = field_from_json(j);
    CHECK(field_to_json(*G) == j);
    CHECK(j.dump() == field_to_json(*G).dump());
    CHECK(G->modulus() == F.modulus());
}

TEST_CASE("rejects a reducible modulus") {
    // X^2 over F_2 is X·X
    CHECK_THROWS_WITH_AS(Field::with_modulus(2, 1, 2, {0, 0, 1}), doctest::Contains("BadModulus"),
                         Error);
}

TEST_CASE("expansion over the subfield reassembles the element") {
    for (auto [p, e, h] : {std::tuple<unsigned, unsigned, unsigned>{2, 1, 6},
                           {3, 1, 4},
                           {2, 2, 2},
                           {2, 2, 3}}) {
        Field F = Field::make(p, e, h);
        const FieldElement root = F.ext_degree() > 1 ? F.element(F.p()) : F.one();
        for (std::uint64_t a = 0; a < F.order(); ++a) {
            FieldElement x = F.element(a);
            auto c = F.expand_over_subfield(x);
            REQUIRE(c.size() == F.h());
            FieldElement acc = F.zero();
            FieldElement rp = F.one();
            for (unsigned j = 0; j < F.h(); ++j) {
                CHECK(F.in_subfield(c[j], 1));
                acc = F.add(acc, F.mul(c[j], rp));
                rp = F.mul(rp, root);
            }
            CHECK(acc == x);
        }
    }
}
