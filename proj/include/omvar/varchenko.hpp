#pragma once

#include <optional>
#include <vector>

#include "omvar/matrix.hpp"
#include "omvar/matroid.hpp"
#include "omvar/report.hpp"
#include "omvar/tope_poset.hpp"

namespace omvar {

// Tope-indexed matrix with entry prod_{e in Sep(P,Q)} U_e.
struct VarchenkoMatrix {
    PolyMatrix matrix;
    std::vector<SignVector> tope_order;
};

std::vector<SignVector> canonical_tope_order(const OrientedMatroid& m);

// Topes with T_e = -, then their negatives in matching positions, so the
// antipodal pairing is i <-> i + #T/2.
std::vector<SignVector> paired_tope_order(const OrientedMatroid& m, int e);

VarchenkoMatrix build_varchenko(
    const OrientedMatroid& m,
    std::optional<std::vector<SignVector>> tope_order = std::nullopt);

// a(F) = prod_{e in z(F)} U_e.
MultiPoly face_monomial(const OrientedMatroid& m, const SignVector& f);

// The submatrix of the Varchenko matrix with rows on the `row_side` of e
// and columns on the `col_side` (sides are Plus or Minus).
PolyMatrix varchenko_block(const OrientedMatroid& m, int e, Sign row_side,
                           Sign col_side);

// Moebius-weighted transfer matrix across e: rows indexed by topes with
// T_e = -, columns by topes with T_e = +, entry
// -mu((0^,Q)_{R,e}) * V_{Q,R} when e is the maximum of Sep(Q,R), else 0.
PolyMatrix transfer_matrix(const OrientedMatroid& m, int e);

// The 2l x 2l factor in the Varchenko product, written in the given global
// tope order: identity on the diagonal, transfer entries across e.  In a
// paired order it has the block shape [[I, M^e], [M^e, I]].
PolyMatrix bordered_transfer_matrix(const OrientedMatroid& m, int e,
                                    const std::vector<SignVector>& tope_order);

// Topes P for which F is the maximal covector below P vanishing at e.
// These classes partition the topes for fixed e.
std::vector<SignVector> block_topes(const OrientedMatroid& m,
                                    const SignVector& f, int e);

// Half the size of block_topes when e is the maximum of z(F), else 0.
long long block_exponent(const OrientedMatroid& m, const SignVector& f, int e);

// One factor (1 - a(F)^2)^{b_F} of the determinant per covector with a
// positive exponent, in canonical covector order.
struct FactorTerm {
    SignVector face;
    MultiPoly factor; // 1 - a(F)^2
    long long exponent;
};

std::vector<FactorTerm> determinant_factorization(const OrientedMatroid& m);
MultiPoly expand_factors(const OrientedMatroid& m,
                         const std::vector<FactorTerm>& factors);

// Exponents aggregated over closed sets: m_A = #topes(L/A) * beta(L|_A)
// for every nonempty closed A.  Computed independently of
// determinant_factorization.
struct ClosedSetTerm {
    uint64_t closed_set;
    long long exponent;
};

std::vector<ClosedSetTerm> closed_set_factorization(const OrientedMatroid& m);

// Checks the transfer factorization V = prod_e bordered transfer matrices
// (exact when #T <= max_symbolic, modular at `trials` points always) along
// with the one-step identities for the maximal element.
Report verify_factorization(const OrientedMatroid& m,
                            uint64_t prime = Fp::default_prime,
                            int trials = 20, uint64_t seed = 12345,
                            size_t max_symbolic = 12);

// Per-e block decomposition: classes ordered compatibly with the covector
// order make the bordered transfer matrix block lower triangular.
struct BlockLayout {
    std::vector<SignVector> tope_order;
    struct Block {
        SignVector face;
        size_t begin;
        size_t end; // half-open interval into tope_order
    };
    std::vector<Block> blocks;
};

std::pair<BlockLayout, Report> verify_block_structure(const OrientedMatroid& m,
                                                      int e);

// det of the block of `f` at `e`: equals (1 - a(F)^2)^{b_{F,e}}; identity
// when e is not the maximum of z(F).
MultiPoly block_determinant(const OrientedMatroid& m, const SignVector& f,
                            int e, size_t max_symbolic = 12);

// Rows/columns of the Varchenko matrix restricted to a closed supertope
// given by signs on E' (masks eps_plus, eps_minus with union E').
PolyMatrix cone_matrix(const OrientedMatroid& m, uint64_t eps_plus,
                       uint64_t eps_minus);

// Exact-division recovery of the cone determinant factorization: divides
// det of the cone matrix by every candidate factor, requires unit residual,
// constant term +1, and for a single-element pattern exponents equal to
// half the aggregated full exponents.
Report verify_cone_det(const OrientedMatroid& m, uint64_t eps_plus,
                       uint64_t eps_minus, size_t max_symbolic = 12);

// Closed form for halfspace Moebius values between block topes via the
// restriction to z(F), against the direct recursion (both in the ambient
// oriented matroid and in the restriction).
Report prop_contraction_check(const OrientedMatroid& m, const SignVector& f,
                              int e);

// Reorienting by any subset leaves the closed-set exponents unchanged.
Report verify_matroid_invariance(const OrientedMatroid& m, uint64_t subset);

} // namespace omvar
