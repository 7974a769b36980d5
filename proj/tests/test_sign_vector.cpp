#include "doctest.h"

#include <algorithm>
#include <random>

#include "test_util.hpp"

#include "omvar/sign_vector.hpp"

using namespace omvar;
using omvar::test::sv;

TEST_CASE("composition follows the first nonzero sign") {
    CHECK(compose(sv("0+-"), sv("--+")) == sv("-+-"));
    CHECK(compose(sv("000"), sv("-+0")) == sv("-+0"));
    SUBCASE("idempotent") {
        for (auto s : {"0+-", "+++", "000", "-0+"}) {
            CHECK(compose(sv(s), sv(s)) == sv(s));
        }
    }
    SUBCASE("zero is a left identity") {
        CHECK(compose(sv("00"), sv("+-")) == sv("+-"));
    }
    SUBCASE("length mismatch throws") {
        CHECK_THROWS_AS(compose(sv("+"), sv("++")), std::invalid_argument);
    }
    SUBCASE("associative on random vectors") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            SignVector x(5), y(5), z(5);
            for (size_t e = 0; e < 5; ++e) {
                x.set(e, static_cast<Sign>(rng() % 3));
                y.set(e, static_cast<Sign>(rng() % 3));
                z.set(e, static_cast<Sign>(rng() % 3));
            }
            CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
        }
    }
}

TEST_CASE("separator") {
    CHECK(separator(sv("++"), sv("+-")) == std::vector<int>{1});
    CHECK(separator(sv("++"), sv("++")).empty());
    SUBCASE("antipodal tope separates everywhere") {
        CHECK(separator(sv("+-+"), sv("-+-")) == std::vector<int>({0, 1, 2}));
    }
    SUBCASE("symmetric") {
        CHECK(separator_mask(sv("+0-"), sv("-+-")) ==
              separator_mask(sv("-+-"), sv("+0-")));
    }
    SUBCASE("zero entries never separate") {
        CHECK(separator(sv("0+"), sv("--")) == std::vector<int>{1});
    }
}

TEST_CASE("product order and negation") {
    CHECK(sv("0+").leq(sv("++")));
    CHECK(sv("00").leq(sv("+-")));
    CHECK_FALSE(sv("-+").leq(sv("++")));
    CHECK(sv("+0-").negated() == sv("-0+"));
    CHECK(sv("+0-").negated().negated() == sv("+0-"));
    CHECK(sv("0+-").zero_mask() == 1u);
    CHECK(sv("0+-").support_mask() == 6u);
}

TEST_CASE("canonical order is lexicographic with 0 < + < -") {
    std::vector<SignVector> v =
        omvar::test::svs({"--", "0+", "++", "00", "+-", "-+"});
    std::sort(v.begin(), v.end(), CanonicalLess{});
    CHECK(v == omvar::test::svs({"00", "0+", "++", "+-", "-+", "--"}));
}

TEST_CASE("restrict and reorient") {
    CHECK(restrict_to(sv("+0-"), 0b101) == sv("+-"));
    CHECK(reorient_vector(sv("+0-"), 0b001) == sv("-0-"));
    CHECK(reorient_vector(reorient_vector(sv("+0-"), 0b011), 0b011) ==
          sv("+0-"));
}

TEST_CASE("string round trip and parse errors") {
    CHECK(sv("+0-").to_string() == "+0-");
    CHECK_THROWS_AS(SignVector::from_string("+x"), parse_error);
}

TEST_CASE("ground set label validation") {
    CHECK_THROWS_AS(GroundSet(2, {"a", "a"}), std::invalid_argument);
    CHECK_THROWS_AS(GroundSet(2, {"a"}), std::invalid_argument);
    GroundSet g(2, {"a", "b"});
    CHECK(g.label(1) == "b");
}
