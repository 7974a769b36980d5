#pragma once

#include <vector>

#include "omvar/tope_poset.hpp"

namespace omvar {

// T(S+, S-): topes positive on S+ and negative on S-.
struct Supertope {
    uint64_t s_plus = 0;
    uint64_t s_minus = 0;
    std::vector<SignVector> topes; // canonical order; may be empty
};

Supertope supertope(const OrientedMatroid& m, uint64_t s_plus,
                    uint64_t s_minus);

// A supertope is closed when every proper extension of its sign pattern
// strictly shrinks the tope set; equivalently, every free element takes
// both signs on the member topes.  Rejects empty supertopes.
bool is_closed_supertope(const OrientedMatroid& m, uint64_t s_plus,
                         uint64_t s_minus);

// Literal check over all pattern extensions; test oracle for the above.
bool is_closed_supertope_bruteforce(const OrientedMatroid& m, uint64_t s_plus,
                                    uint64_t s_minus);

// The supertope as an induced subposet of the tope poset with base r.
SignedPoset supertope_subposet(const OrientedMatroid& m, const SignVector& r,
                               uint64_t s_plus, uint64_t s_minus);

// Necessary homological consequence of supertope contractibility: strips
// beat points from the subposet first, then checks that all reduced
// integral homology of the core's order complex vanishes.
bool supertope_contractible_surrogate(const OrientedMatroid& m,
                                      const SignVector& r, uint64_t s_plus,
                                      uint64_t s_minus,
                                      size_t max_faces = 200000);

enum class WitnessKind { MaxTope, MinTope, Covector };

struct TrichotomyWitness {
    WitnessKind kind;
    SignVector value;
};

// For a partition E = S+ | S- | S* (all parts nonempty) such that for every
// f in S* the tope that is positive exactly on S+ and {f} exists, one of
// three witnesses exists: a tope negative on all of S*, a tope positive on
// all of S*, or a covector vanishing on part of S*.  Found by exhaustive
// search; the precondition is checked.
TrichotomyWitness trichotomy_witness(const OrientedMatroid& m, uint64_t s_plus,
                                     uint64_t s_minus, uint64_t s_star);

// Checks, for every tope Q of the supertope in the single-element deletion,
// that the preimage of the down-set of Q under restriction is the supertope
// T(Q+, S-).  Works in the reorientation that makes the base tope r
// all-plus; s_plus and s_minus refer to the input orientation.
bool deletion_fiber_check(const OrientedMatroid& m, uint64_t s_plus,
                          uint64_t s_minus, int f, const SignVector& r);

} // namespace omvar
