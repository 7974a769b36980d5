#include "doctest.h"

#include <random>

#include "omvar/poly.hpp"

using namespace omvar;

namespace {

MultiPoly one(uint32_t n) { return MultiPoly::constant(n, 1); }

MultiPoly random_poly(std::mt19937_64& rng, uint32_t nvars, int max_terms) {
    MultiPoly p(nvars);
    int terms = 1 + static_cast<int>(rng() % max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        for (uint32_t i = 0; i < nvars; ++i)
            m[i] = static_cast<uint8_t>(rng() % 3);
        long long c = static_cast<long long>(rng() % 11) - 5;
        p += MultiPoly::from_monomial(nvars, m, c);
    }
    return p;
}

std::vector<Fp> random_point(std::mt19937_64& rng, uint32_t nvars,
                             uint64_t p) {
    std::vector<Fp> point;
    for (uint32_t i = 0; i < nvars; ++i)
        point.emplace_back(rand_below(rng, p), p);
    return point;
}

} // namespace

TEST_CASE("basic ring arithmetic") {
    uint32_t n = 2;
    MultiPoly u0 = MultiPoly::variable(n, 0);
    MultiPoly u1 = MultiPoly::variable(n, 1);
    CHECK((one(n) - u0 * u0) + u0 * u0 == one(n));
    CHECK((one(n) - u0) * (one(n) + u0) == one(n) - u0 * u0);
    SUBCASE("squared face monomial") {
        MultiPoly a = MultiPoly::monomial_of_mask(3, 0b110);
        CHECK(a * a == MultiPoly::monomial_of_mask(3, 0b110, 2));
    }
    SUBCASE("zero handling") {
        CHECK((u0 - u0).is_zero());
        CHECK((u0 - u0).to_string() == "0");
        CHECK(u0 * MultiPoly(n) == MultiPoly(n));
    }
    SUBCASE("degrees") {
        MultiPoly p = one(n) - u0 * u0 * u1;
        CHECK(p.total_degree() == 3);
        CHECK(p.degree(0) == 2);
        CHECK(p.degree(1) == 1);
        CHECK(MultiPoly(n).total_degree() == -1);
    }
    SUBCASE("arity mismatch throws") {
        CHECK_THROWS_AS(u0 + MultiPoly::variable(3, 0),
                        std::invalid_argument);
    }
}

TEST_CASE("substitute zero") {
    uint32_t n = 2;
    MultiPoly u0 = MultiPoly::variable(n, 0);
    MultiPoly u1 = MultiPoly::variable(n, 1);
    MultiPoly p = one(n) - u0 * u0 * u1 * u1;
    CHECK(p.substitute_zero(0) == one(n));
    CHECK(u0.substitute_zero(0).is_zero());
    CHECK(one(n).substitute_zero(1) == one(n));
}

TEST_CASE("modular evaluation") {
    uint32_t n = 1;
    MultiPoly p = one(n) - MultiPoly::variable(n, 0, 2);
    std::vector<Fp> at_one{Fp(1, 101)};
    std::vector<Fp> at_zero{Fp(0, 101)};
    CHECK(p.eval_modp(at_one).v == 0);
    CHECK(p.eval_modp(at_zero).v == 1);
    SUBCASE("u0*u1 at (2,3) mod 7") {
        MultiPoly q =
            MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
        std::vector<Fp> pt{Fp(2, 7), Fp(3, 7)};
        CHECK(q.eval_modp(pt).v == 6);
    }
    SUBCASE("negative coefficients reduce into range") {
        MultiPoly q = MultiPoly::constant(1, -1);
        std::vector<Fp> pt{Fp(5, 7)};
        CHECK(q.eval_modp(pt).v == 6);
    }
    SUBCASE("missing coordinates are rejected") {
        CHECK_THROWS_AS(p.eval_modp(std::vector<Fp>{}),
                        std::invalid_argument);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(99);
    const uint64_t p = 1000003;
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly a = random_poly(rng, 3, 6);
        MultiPoly b = random_poly(rng, 3, 6);
        auto pt = random_point(rng, 3, p);
        CHECK((a + b).eval_modp(pt) == a.eval_modp(pt) + b.eval_modp(pt));
        CHECK((a * b).eval_modp(pt) == a.eval_modp(pt) * b.eval_modp(pt));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly a = random_poly(rng, 2, 5);
        MultiPoly b = random_poly(rng, 2, 5);
        MultiPoly c = random_poly(rng, 2, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division") {
    uint32_t n = 2;
    MultiPoly u0 = MultiPoly::variable(n, 0);
    MultiPoly u1 = MultiPoly::variable(n, 1);
    MultiPoly f = one(n) - u0 * u0;
    MultiPoly g = one(n) - u1 * u1;
    SUBCASE("recovers the cofactor") {
        auto q = (f * g).divided_exact(f);
        REQUIRE(q.has_value());
        CHECK(*q == g);
    }
    SUBCASE("detects a remainder") {
        CHECK_FALSE((f * g + u0).divided_exact(f).has_value());
        CHECK_FALSE(u0.divided_exact(u1).has_value());
        CHECK_FALSE(MultiPoly::constant(n, 3)
                        .divided_exact(MultiPoly::constant(n, 2))
                        .has_value());
    }
    SUBCASE("random exact products divide back") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            MultiPoly a = random_poly(rng, 2, 4);
            MultiPoly b = random_poly(rng, 2, 4);
            if (b.is_zero()) continue;
            auto q = (a * b).divided_exact(b);
            REQUIRE(q.has_value());
            CHECK(*q == a);
        }
    }
}

TEST_CASE("canonical serialization") {
    uint32_t n = 2;
    MultiPoly u0 = MultiPoly::variable(n, 0);
    MultiPoly u1 = MultiPoly::variable(n, 1);
    CHECK((one(n) - u0 * u0 * u1 * u1).to_string() == "1 - U0^2*U1^2");
    CHECK((u0 * u1.pow(2).times(3) - u0).to_string() == "-U0 + 3*U0*U1^2");
    CHECK(one(n).to_string() == "1");
    CHECK((-one(n)).to_string() == "-1");
}

TEST_CASE("exponent overflow is a checked error") {
    MultiPoly u = MultiPoly::variable(1, 0, 200);
    CHECK_THROWS_AS(u * u, std::overflow_error);
}

TEST_CASE("prime utilities") {
    CHECK(is_prime_u64(Fp::default_prime));
    CHECK(is_prime_u64(101));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(2305843009213693953ull));
    SUBCASE("field inverse") {
        Fp a(17, 101);
        CHECK((a * a.inverse()).v == 1);
        CHECK_THROWS_AS(Fp(0, 101).inverse(), std::domain_error);
    }
    SUBCASE("rand_below stays in range and is deterministic") {
        std::mt19937_64 a(5), b(5);
        for (int i = 0; i < 100; ++i) {
            uint64_t x = rand_below(a, 97);
            CHECK(x < 97);
            CHECK(x == rand_below(b, 97));
        }
    }
}
