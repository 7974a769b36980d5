#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "omvar/sign_vector.hpp"

namespace omvar {

// An oriented matroid given by its full set of covectors.
//
// The covector list is deduplicated and kept in canonical order, the topes
// (maximal covectors in the product order) and the rank of every covector
// are cached at construction.  Values are immutable; every operation on
// them is a pure function.
class OrientedMatroid {
public:
    // Does not validate the covector axioms (see check_axioms); does check
    // that the zero vector is present and that no element is a loop.
    static OrientedMatroid from_covectors(GroundSet ground,
                                          std::vector<SignVector> covectors);

    const GroundSet& ground() const { return ground_; }
    uint32_t ground_size() const { return ground_.size; }
    uint64_t full_mask() const {
        return ground_.size == 64 ? ~uint64_t{0}
                                  : (uint64_t{1} << ground_.size) - 1;
    }

    const std::vector<SignVector>& covectors() const { return covectors_; }
    const std::vector<SignVector>& topes() const { return topes_; }
    int rank() const { return rank_; }

    bool contains(const SignVector& x) const;
    bool is_tope(const SignVector& x) const;
    // Index into covectors() / topes(); -1 if absent.
    int covector_index(const SignVector& x) const;
    int tope_index(const SignVector& x) const;

    // Length of a maximal chain from the zero covector to x.
    int covector_rank(const SignVector& x) const;

    SignVector zero_covector() const { return SignVector(ground_.size); }

    // Nonempty only for matroids built through internal paths (contraction
    // by a non-closed set); from_covectors rejects loops.
    uint64_t loops_mask() const { return loops_; }

    friend bool operator==(const OrientedMatroid& a, const OrientedMatroid& b) {
        return a.ground_.size == b.ground_.size && a.covectors_ == b.covectors_;
    }

private:
    OrientedMatroid() = default;
    static OrientedMatroid build(GroundSet ground,
                                 std::vector<SignVector> covectors,
                                 bool allow_loops);

    GroundSet ground_;
    std::vector<SignVector> covectors_; // canonical order
    std::vector<SignVector> topes_;     // canonical order
    std::vector<int> ranks_;            // aligned with covectors_
    int rank_ = 0;
    uint64_t loops_ = 0;

    friend OrientedMatroid contraction(const OrientedMatroid&, uint64_t);
};

struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::vector<std::string> witnesses; // first few violations
};

struct AxiomReport {
    std::vector<AxiomCheck> checks; // zero vector, symmetry, composition, elimination
    bool pass() const;
    const AxiomCheck* failing() const;
};

// Brute-force check of the covector axioms: zero vector, closure under
// negation, closure under composition, and covector elimination.
AxiomReport check_axioms(const OrientedMatroid& m);

// Minor operations.  Restriction requires a nonempty subset; deletion a
// ground set with at least two elements.  Contraction accepts every subset
// (contracting by all of E yields the rank-0 matroid on the empty ground
// set); contracting by a non-closed set produces loops, which are kept.
OrientedMatroid restriction(const OrientedMatroid& m, uint64_t subset);
OrientedMatroid contraction(const OrientedMatroid& m, uint64_t subset);
OrientedMatroid deletion(const OrientedMatroid& m, int element);
OrientedMatroid reorient(const OrientedMatroid& m, uint64_t subset);

// All topes above the covector x.  Throws if x is not a covector.
std::vector<SignVector> star(const OrientedMatroid& m, const SignVector& x);

// The maximal covector F with F <= tope and F_e = 0.  The set of such
// covectors is closed under composition, so the maximum exists (it is the
// zero vector when e supports no proper face of the tope).
SignVector max_face_at(const OrientedMatroid& m, const SignVector& tope,
                       int e);

// True iff some covector F != 0 with F <= tope and F_e = 0 exists.
bool defines_proper_face(const OrientedMatroid& m, int e,
                         const SignVector& tope);

// Covector file: one sign vector per line over "+-0", '#' starts a
// comment, blank lines ignored.
std::vector<SignVector> parse_covectors(std::istream& in);
OrientedMatroid load_covector_file(const std::string& path);

} // namespace omvar
