#include "doctest.h"

#include <algorithm>
#include <bit>
#include <map>

#include "test_util.hpp"

#include "omvar/supertope.hpp"
#include "omvar/varchenko.hpp"

using namespace omvar;
using namespace omvar::test;

namespace {

MultiPoly one(uint32_t n) { return MultiPoly::constant(n, 1); }

MultiPoly one_minus_sq(uint32_t n, uint64_t mask) {
    MultiPoly a = MultiPoly::monomial_of_mask(n, mask);
    return one(n) - a * a;
}

std::map<uint64_t, long long> aggregate(const std::vector<FactorTerm>& fs) {
    std::map<uint64_t, long long> out;
    for (const auto& t : fs) out[t.face.zero_mask()] += t.exponent;
    return out;
}

} // namespace

TEST_CASE("Varchenko matrix construction") {
    SUBCASE("one element") {
        VarchenkoMatrix v = build_varchenko(f1());
        REQUIRE(v.matrix.rows() == 2);
        CHECK(v.matrix(0, 0).is_one());
        CHECK(v.matrix(0, 1) == MultiPoly::variable(1, 0));
        CHECK(v.matrix(1, 0) == MultiPoly::variable(1, 0));
    }
    SUBCASE("two lines: the Kronecker pattern in canonical order") {
        VarchenkoMatrix v = build_varchenko(f2());
        REQUIRE(v.tope_order == svs({"++", "+-", "-+", "--"}));
        uint32_t n = 2;
        MultiPoly u0 = MultiPoly::variable(n, 0);
        MultiPoly u1 = MultiPoly::variable(n, 1);
        CHECK(v.matrix(0, 1) == u1);
        CHECK(v.matrix(0, 2) == u0);
        CHECK(v.matrix(0, 3) == u0 * u1);
        CHECK(v.matrix(1, 2) == u0 * u1);
        CHECK(v.matrix(1, 3) == u0);
        CHECK(v.matrix(2, 3) == u1);
    }
    SUBCASE("symmetric with unit diagonal and antipodally invariant") {
        OrientedMatroid m3 = f3();
        VarchenkoMatrix v = build_varchenko(m3);
        const auto& order = v.tope_order;
        for (size_t i = 0; i < order.size(); ++i) {
            CHECK(v.matrix(i, i).is_one());
            for (size_t j = 0; j < order.size(); ++j) {
                CHECK(v.matrix(i, j) == v.matrix(j, i));
                size_t ni = static_cast<size_t>(
                    std::find(order.begin(), order.end(),
                              order[i].negated()) -
                    order.begin());
                size_t nj = static_cast<size_t>(
                    std::find(order.begin(), order.end(),
                              order[j].negated()) -
                    order.begin());
                CHECK(v.matrix(i, j) == v.matrix(ni, nj));
            }
        }
    }
    SUBCASE("custom orders must enumerate the topes") {
        CHECK_THROWS_AS(build_varchenko(f2(), svs({"++", "+-", "-+", "-+"})),
                        std::invalid_argument);
    }
}

TEST_CASE("transfer matrix across one element") {
    SUBCASE("one element: a single monomial entry") {
        PolyMatrix me = transfer_matrix(f1(), 0);
        REQUIRE(me.rows() == 1);
        CHECK(me(0, 0) == MultiPoly::variable(1, 0));
    }
    SUBCASE("two lines, top element: frozen values") {
        // Rows (-side) +-, --; columns (+side) ++, -+ in canonical order.
        PolyMatrix me = transfer_matrix(f2(), 1);
        uint32_t n = 2;
        MultiPoly u1 = MultiPoly::variable(n, 1);
        REQUIRE(me.rows() == 2);
        REQUIRE(me.cols() == 2);
        CHECK(me(0, 0) == u1);          // Q=+-, R=++
        CHECK(me(0, 1).is_zero());      // Q=+-, R=-+: separator {0,1}
        CHECK(me(1, 0).is_zero());      // Q=--, R=++
        CHECK(me(1, 1) == u1);          // Q=--, R=-+
    }
    SUBCASE("two lines, bottom element: only pure crossings survive") {
        PolyMatrix me = transfer_matrix(f2(), 0);
        uint32_t n = 2;
        MultiPoly u0 = MultiPoly::variable(n, 0);
        // Rows -+, --; columns ++, +-.
        CHECK(me(0, 0) == u0);
        CHECK(me(0, 1).is_zero());
        CHECK(me(1, 0).is_zero());
        CHECK(me(1, 1) == u0);
    }
    SUBCASE("zero pattern: entries vanish unless e tops the separator") {
        OrientedMatroid m3 = f3();
        for (int e = 0; e < 3; ++e) {
            PolyMatrix me = transfer_matrix(m3, e);
            std::vector<SignVector> rows, cols;
            for (const auto& t : m3.topes()) {
                if (t[static_cast<size_t>(e)] == Sign::Minus)
                    rows.push_back(t);
                else
                    cols.push_back(t);
            }
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = 0; j < cols.size(); ++j) {
                    uint64_t sep = separator_mask(rows[i], cols[j]);
                    if (63 - std::countl_zero(sep) != e)
                        CHECK(me(i, j).is_zero());
                }
        }
    }
}

TEST_CASE("bordered transfer factor") {
    SUBCASE("paired order exposes the block shape") {
        for (const OrientedMatroid& m : {f2(), f3(), f4()}) {
            for (int e = 0; e < static_cast<int>(m.ground_size()); ++e) {
                auto order = paired_tope_order(m, e);
                PolyMatrix cal = bordered_transfer_matrix(m, e, order);
                PolyMatrix me = transfer_matrix(m, e);
                size_t l = me.rows();
                REQUIRE(cal.rows() == 2 * l);
                for (size_t i = 0; i < l; ++i)
                    for (size_t j = 0; j < l; ++j) {
                        CHECK(cal(i, j) ==
                              (i == j ? one(m.ground_size())
                                      : MultiPoly(m.ground_size())));
                        CHECK(cal(l + i, l + j) ==
                              (i == j ? one(m.ground_size())
                                      : MultiPoly(m.ground_size())));
                        CHECK(cal(l + i, j) == cal(i, l + j));
                    }
            }
        }
    }
    SUBCASE("two lines: the full product reproduces the matrix") {
        OrientedMatroid m = f2();
        auto order = canonical_tope_order(m);
        PolyMatrix m0 = bordered_transfer_matrix(m, 0, order);
        PolyMatrix m1 = bordered_transfer_matrix(m, 1, order);
        VarchenkoMatrix v = build_varchenko(m);
        CHECK(mat_mul(m0, m1) == v.matrix);
        SUBCASE("the first factor is the matrix with the top variable erased") {
            PolyMatrix expect = v.matrix;
            for (size_t i = 0; i < expect.rows(); ++i)
                for (size_t j = 0; j < expect.cols(); ++j)
                    expect(i, j) = expect(i, j).substitute_zero(1);
            CHECK(m0 == expect);
        }
    }
    SUBCASE("diagonal is all ones") {
        OrientedMatroid m3 = f3();
        auto order = canonical_tope_order(m3);
        for (int e = 0; e < 3; ++e) {
            PolyMatrix cal = bordered_transfer_matrix(m3, e, order);
            for (size_t i = 0; i < cal.rows(); ++i)
                CHECK(cal(i, i).is_one());
        }
    }
}

TEST_CASE("one-step factorization identities at the top element") {
    for (const OrientedMatroid& m : {f1(), f2(), f3(), f4(),
                                     antiparallel3()}) {
        int e = static_cast<int>(m.ground_size()) - 1;
        PolyMatrix lhs = varchenko_block(m, e, Sign::Minus, Sign::Plus);
        PolyMatrix rhs = mat_mul(varchenko_block(m, e, Sign::Minus,
                                                 Sign::Minus),
                                 transfer_matrix(m, e));
        CHECK(lhs == rhs);
        VarchenkoMatrix v = build_varchenko(m);
        PolyMatrix peeled = v.matrix;
        for (size_t i = 0; i < peeled.rows(); ++i)
            for (size_t j = 0; j < peeled.cols(); ++j)
                peeled(i, j) =
                    peeled(i, j).substitute_zero(static_cast<uint32_t>(e));
        CHECK(mat_mul(peeled,
                      bordered_transfer_matrix(m, e, v.tope_order)) ==
              v.matrix);
    }
}

TEST_CASE("verify_factorization") {
    for (const OrientedMatroid& m : {f1(), f2(), f3(), antiparallel3()}) {
        Report rep = verify_factorization(m);
        CHECK(rep.pass);
    }
    SUBCASE("modular path on the cube fixture") {
        Report rep = verify_factorization(f4(), Fp::default_prime, 20, 7, 4);
        CHECK(rep.pass);
    }
    SUBCASE("bad modulus") {
        CHECK_THROWS_AS(verify_factorization(f2(), 10), std::invalid_argument);
    }
}

TEST_CASE("block tope classes") {
    OrientedMatroid m3 = f3();
    SUBCASE("the zero covector collects both topes of the single element") {
        CHECK(block_topes(f1(), sv("0"), 0) == svs({"+", "-"}));
        CHECK(block_exponent(f1(), sv("0"), 0) == 1);
    }
    SUBCASE("a cocircuit class is its star") {
        CHECK(block_topes(m3, sv("0++"), 0) == svs({"+++", "-++"}));
        CHECK(block_exponent(m3, sv("0++"), 0) == 1);
        CHECK(block_topes(m3, sv("0--"), 0) == svs({"+--", "---"}));
    }
    SUBCASE("the zero covector and the top element pick the bounded topes") {
        CHECK(block_topes(m3, sv("000"), 2) == svs({"+++", "---"}));
        CHECK(block_exponent(m3, sv("000"), 2) == 1);
        CHECK(block_exponent(m3, sv("000"), 0) == 0);
        CHECK(block_exponent(m3, sv("000"), 1) == 0);
    }
    SUBCASE("classes partition the topes for each element") {
        for (const OrientedMatroid& m : {f2(), m3, f4(), antiparallel3()}) {
            for (int e = 0; e < static_cast<int>(m.ground_size()); ++e) {
                size_t total = 0;
                for (const auto& f : m.covectors()) {
                    if (f[static_cast<size_t>(e)] != Sign::Zero) continue;
                    total += block_topes(m, f, e).size();
                }
                CHECK(total == m.topes().size());
            }
        }
    }
    SUBCASE("the exponent equals beta of the restriction to z(F)") {
        for (const OrientedMatroid& m : {f2(), m3, f4(), antiparallel3()}) {
            UnderlyingMatroid um = underlying(m);
            for (const auto& f : m.covectors()) {
                uint64_t z = f.zero_mask();
                if (z == 0) continue;
                int e = 63 - std::countl_zero(z);
                if (block_topes(m, f, e).empty()) continue;
                CHECK(block_exponent(m, f, e) == beta(um, z));
            }
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(block_topes(m3, sv("0++"), 1), std::invalid_argument);
        CHECK_THROWS_AS(block_topes(m3, sv("00+"), 0), std::invalid_argument);
    }
}

TEST_CASE("determinant factorization") {
    SUBCASE("one element") {
        auto fs = determinant_factorization(f1());
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].face == sv("0"));
        CHECK(fs[0].exponent == 1);
        CHECK(fs[0].factor == one_minus_sq(1, 0b1));
        CHECK(expand_factors(f1(), fs) ==
              det_symbolic(build_varchenko(f1()).matrix));
    }
    SUBCASE("two lines: the Kronecker determinant") {
        auto fs = determinant_factorization(f2());
        auto agg = aggregate(fs);
        CHECK(agg == std::map<uint64_t, long long>({{0b01, 2}, {0b10, 2}}));
        CHECK(expand_factors(f2(), fs) ==
              det_symbolic(build_varchenko(f2()).matrix));
    }
    SUBCASE("three generic lines, frozen factors") {
        auto fs = determinant_factorization(f3());
        auto agg = aggregate(fs);
        CHECK(agg == std::map<uint64_t, long long>(
                         {{0b001, 2}, {0b010, 2}, {0b100, 2}, {0b111, 1}}));
        MultiPoly expect = one_minus_sq(3, 0b001).pow(2) *
                           one_minus_sq(3, 0b010).pow(2) *
                           one_minus_sq(3, 0b100).pow(2) *
                           one_minus_sq(3, 0b111);
        CHECK(expand_factors(f3(), fs) == expect);
        CHECK(det_symbolic(build_varchenko(f3()).matrix) == expect);
    }
    SUBCASE("per-face exponents of the generic triple") {
        auto fs = determinant_factorization(f3());
        // Six cocircuits with exponent 1 and the zero covector with 1.
        CHECK(fs.size() == 7);
        for (const auto& t : fs) CHECK(t.exponent == 1);
    }
    SUBCASE("degree bookkeeping") {
        for (const OrientedMatroid& m : {f1(), f2(), f3()}) {
            auto fs = determinant_factorization(m);
            MultiPoly det = det_symbolic(build_varchenko(m).matrix);
            long long total = 0;
            for (const auto& t : fs)
                total += 2 * t.exponent *
                         std::popcount(t.face.zero_mask());
            CHECK(det.total_degree() == total);
            auto closed = closed_set_factorization(m);
            for (uint32_t e = 0; e < m.ground_size(); ++e) {
                long long sum = 0;
                for (const auto& c : closed)
                    if (c.closed_set & bit(e)) sum += c.exponent;
                CHECK(det.degree(e) == 2 * sum);
                CHECK(2 * sum <=
                      static_cast<long long>(m.topes().size()));
            }
        }
    }
}

TEST_CASE("closed set factorization") {
    SUBCASE("two lines") {
        auto cs = closed_set_factorization(f2());
        std::map<uint64_t, long long> got;
        for (const auto& c : cs) got[c.closed_set] = c.exponent;
        CHECK(got == std::map<uint64_t, long long>(
                         {{0b01, 2}, {0b10, 2}, {0b11, 0}}));
    }
    SUBCASE("three generic lines") {
        auto cs = closed_set_factorization(f3());
        std::map<uint64_t, long long> got;
        for (const auto& c : cs) got[c.closed_set] = c.exponent;
        CHECK(got == std::map<uint64_t, long long>(
                         {{0b001, 2}, {0b010, 2}, {0b100, 2}, {0b111, 1}}));
    }
    SUBCASE("coordinate cube: singletons carry four, the rest nothing") {
        auto cs = closed_set_factorization(f4());
        std::map<uint64_t, long long> got;
        for (const auto& c : cs) got[c.closed_set] = c.exponent;
        CHECK(got == std::map<uint64_t, long long>({{0b001, 4},
                                                    {0b010, 4},
                                                    {0b100, 4},
                                                    {0b011, 0},
                                                    {0b101, 0},
                                                    {0b110, 0},
                                                    {0b111, 0}}));
    }
    SUBCASE("aggregating the per-face exponents gives the same numbers") {
        for (const OrientedMatroid& m :
             {f1(), f2(), f3(), f4(), antiparallel3()}) {
            auto agg = aggregate(determinant_factorization(m));
            for (const auto& c : closed_set_factorization(m)) {
                long long from_faces =
                    agg.count(c.closed_set) ? agg[c.closed_set] : 0;
                CHECK(c.exponent == from_faces);
            }
        }
    }
}

TEST_CASE("block structure of the transfer factor") {
    SUBCASE("single element: one block") {
        auto [layout, rep] = verify_block_structure(f1(), 0);
        CHECK(rep.pass);
        CHECK(layout.blocks.size() == 1);
    }
    SUBCASE("three generic lines, every element") {
        OrientedMatroid m3 = f3();
        for (int e = 0; e < 3; ++e) {
            auto [layout, rep] = verify_block_structure(m3, e);
            CHECK(rep.pass);
            CHECK(layout.blocks.size() == 3);
            // The zero covector's class comes first in the extension.
            CHECK(layout.blocks[0].face == sv("000"));
        }
    }
    SUBCASE("every fixture and element") {
        for (const OrientedMatroid& m : {f2(), f4(), antiparallel3()}) {
            for (int e = 0; e < static_cast<int>(m.ground_size()); ++e) {
                auto [layout, rep] = verify_block_structure(m, e);
                CHECK(rep.pass);
            }
        }
    }
    SUBCASE("block determinant product equals the factor determinant at "
            "modular points") {
        OrientedMatroid m3 = f3();
        std::mt19937_64 rng(17);
        for (int e = 0; e < 3; ++e) {
            auto [layout, rep] = verify_block_structure(m3, e);
            REQUIRE(rep.pass);
            PolyMatrix cal =
                bordered_transfer_matrix(m3, e, layout.tope_order);
            MultiPoly prod = one(3);
            for (const auto& blk : layout.blocks)
                prod = prod * block_determinant(m3, blk.face, e);
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<Fp> pt;
                for (int i = 0; i < 3; ++i)
                    pt.emplace_back(rand_below(rng, Fp::default_prime),
                                    Fp::default_prime);
                CHECK(prod.eval_modp(pt) ==
                      det_modp(eval_matrix(cal, pt)));
            }
        }
    }
}

TEST_CASE("block determinants") {
    OrientedMatroid m3 = f3();
    SUBCASE("single element block") {
        CHECK(block_determinant(f1(), sv("0"), 0) == one_minus_sq(1, 0b1));
    }
    SUBCASE("cocircuit block of the generic triple") {
        CHECK(block_determinant(m3, sv("0++"), 0) == one_minus_sq(3, 0b001));
        CHECK(block_determinant(m3, sv("+-0"), 2) == one_minus_sq(3, 0b100));
    }
    SUBCASE("away from the maximum the block is the identity") {
        CHECK(block_determinant(m3, sv("000"), 0).is_one());
        CHECK(block_determinant(m3, sv("000"), 1).is_one());
        CHECK(block_determinant(m3, sv("000"), 2) == one_minus_sq(3, 0b111));
    }
    SUBCASE("matches the exponent formula everywhere") {
        for (const OrientedMatroid& m : {f2(), m3, f4(), antiparallel3()}) {
            for (const auto& f : m.covectors()) {
                uint64_t z = f.zero_mask();
                if (z == 0) continue;
                for (int e : mask_elements(z)) {
                    if (block_topes(m, f, e).empty()) continue;
                    MultiPoly expect = one_minus_sq(m.ground_size(), z)
                                           .pow(static_cast<uint32_t>(
                                               block_exponent(m, f, e)));
                    CHECK(block_determinant(m, f, e) == expect);
                }
            }
        }
    }
    SUBCASE("empty block is rejected") {
        CHECK_THROWS_AS(block_determinant(m3, sv("0++"), 1),
                        std::invalid_argument);
    }
}

TEST_CASE("closed form for block mobius values") {
    SUBCASE("single element: the value is minus one") {
        Report rep = prop_contraction_check(f1(), sv("0"), 0);
        CHECK(rep.pass);
    }
    SUBCASE("sweep every admissible face of the fixtures") {
        for (const OrientedMatroid& m :
             {f2(), f3(), f4(), antiparallel3()}) {
            for (const auto& f : m.covectors()) {
                uint64_t z = f.zero_mask();
                if (z == 0) continue;
                int e = 63 - std::countl_zero(z);
                if (block_topes(m, f, e).empty()) continue;
                Report rep = prop_contraction_check(m, f, e);
                CHECK(rep.pass);
            }
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(prop_contraction_check(f3(), sv("0++"), 1),
                        std::invalid_argument);
    }
}

TEST_CASE("cone matrices and their determinants") {
    SUBCASE("halfspace of the two-line fixture") {
        PolyMatrix ve = cone_matrix(f2(), 0b01, 0);
        REQUIRE(ve.rows() == 2);
        CHECK(ve(0, 1) == MultiPoly::variable(2, 1));
        CHECK(det_symbolic(ve) == one_minus_sq(2, 0b10));
        Report rep = verify_cone_det(f2(), 0b01, 0);
        CHECK(rep.pass);
    }
    SUBCASE("full pattern: a single tope, unit determinant") {
        Report rep = verify_cone_det(f3(), 0b111, 0);
        CHECK(rep.pass);
    }
    SUBCASE("non-closed patterns are rejected") {
        CHECK_THROWS_AS(cone_matrix(antiparallel3(), 0b001, 0),
                        std::invalid_argument);
    }
    SUBCASE("every closed supertope of the fixtures verifies") {
        for (const OrientedMatroid& m : {f2(), f3(), f4()}) {
            for (uint64_t p = 0; p <= m.full_mask(); ++p)
                for (uint64_t q = 0; q <= m.full_mask(); ++q) {
                    if ((p & q) || (p | q) == 0) continue;
                    if (supertope(m, p, q).topes.empty()) continue;
                    if (!is_closed_supertope(m, p, q)) continue;
                    Report rep = verify_cone_det(m, p, q);
                    CHECK(rep.pass);
                }
        }
    }
}

TEST_CASE("matroid invariance of the exponents") {
    OrientedMatroid m3 = f3();
    for (uint64_t a = 0; a <= m3.full_mask(); ++a) {
        Report rep = verify_matroid_invariance(m3, a);
        CHECK(rep.pass);
    }
    SUBCASE("including the coordinate cube") {
        CHECK(verify_matroid_invariance(f4(), 0b101).pass);
        CHECK(verify_matroid_invariance(antiparallel3(), 0b010).pass);
    }
}
