#pragma once

#include <map>
#include <vector>

#include "omvar/oriented_matroid.hpp"
#include "omvar/poset.hpp"

namespace omvar {

// A poset whose elements are sign vectors (topes or covectors); the poset
// indices align with `members`.
struct SignedPoset {
    FinitePoset poset;
    std::vector<SignVector> members;
};

// All topes ordered by separator inclusion from the base tope:
// P <= Q iff Sep(R,P) is contained in Sep(R,Q).
struct TopePoset {
    SignVector base;
    std::vector<SignVector> topes; // canonical order
    FinitePoset poset;             // aligned with `topes`

    int index_of(const SignVector& t) const;
};

TopePoset tope_poset(const OrientedMatroid& m, const SignVector& base);

// Topes on the far side of e from R form the poset T_{R,e} once a bottom
// element is adjoined.  This returns the open interval (0^, P) in it,
// i.e. the topes strictly below P with T_e = -R_e.
SignedPoset halfspace_interval(const OrientedMatroid& m, const SignVector& r,
                               int e, const SignVector& p);

// Memo table for halfspace Moebius values, keyed per (base tope, element).
class HalfspaceMobiusCache {
public:
    explicit HalfspaceMobiusCache(const OrientedMatroid& m) : m_(&m) {}
    long long mu(const SignVector& r, int e, const SignVector& p);

private:
    const OrientedMatroid* m_;
    std::map<std::pair<int, int>, std::map<int, long long>> memo_;
};

// mu(0^, P) in T_{R,e}.  Requires P_e = -R_e.  By the closed forms this is
// 0 or (-1)^rank when e defines no proper face of P.
long long halfspace_mobius(const OrientedMatroid& m, const SignVector& r,
                           int e, const SignVector& p,
                           HalfspaceMobiusCache* cache = nullptr);

// The filter { X in (0, P) | z(X) subseteq Sep(P, R) } of the open covector
// interval below the tope P.
SignedPoset separator_face_filter(const OrientedMatroid& m,
                                  const SignVector& r, const SignVector& p);

// W_{R,e}(P): proper faces F < P with F_e = -R_e that agree with P outside
// Sep(P,R) and are bounded by the separator pattern on Sep(P,R) \ {e}.
SignedPoset crossing_face_poset(const OrientedMatroid& m, const SignVector& r,
                                int e, const SignVector& p);

// Topes C in the open interval (0^, P) of T_{R,e} for which [C,P] in the
// tope poset is the star of a covector.
std::vector<SignVector> star_interval_topes(const OrientedMatroid& m,
                                            const SignVector& r, int e,
                                            const SignVector& p);

// The covector X with star(X) = [C,P] in the tope poset; C must lie in
// star_interval_topes(m, r, e, p).  Satisfies z(X) = Sep(C,P) and
// X in crossing_face_poset.
SignVector interval_star_covector(const OrientedMatroid& m,
                                  const SignVector& r, int e,
                                  const SignVector& p, const SignVector& c);

// Sum of mu(0^, Q) over topes Q with Q_e = -R_e and
// Sep(P,Q) cap Sep(Q,R) = S.  Equals -1 when S is empty and 0 otherwise.
long long separator_class_mobius_sum(const OrientedMatroid& m,
                                     const SignVector& r, int e,
                                     const SignVector& p, uint64_t s,
                                     HalfspaceMobiusCache* cache = nullptr);

} // namespace omvar
