#pragma once

#include <map>
#include <vector>

#include "omvar/oriented_matroid.hpp"

namespace omvar {

// The matroid underlying an oriented matroid, extracted from covector zero
// sets: the flats are exactly the zero sets z(F), with rank
// rank(L) - rank_L(F).
struct UnderlyingMatroid {
    uint32_t ground_size = 0;
    std::vector<uint64_t> flats;          // sorted masks; includes E = z(0)
    std::map<uint64_t, int> rank_of_flat; // flat mask -> matroid rank

    int rank() const;
    bool is_flat(uint64_t subset) const;
    // Smallest flat containing the subset (flats are closed under
    // intersection and E is a flat, so this is total).
    uint64_t closure(uint64_t subset) const;
    int rank_fn(uint64_t subset) const;
};

UnderlyingMatroid underlying(const OrientedMatroid& m);

// Crapo's beta invariant of the restriction to a nonempty subset,
// by the alternating sum (-1)^r(A) * sum_{B subseteq A} (-1)^|B| r(B).
long long beta(const UnderlyingMatroid& um, uint64_t subset);

// Number of topes P such that e defines no proper face of P; equals twice
// the beta invariant of the underlying matroid for every e.
long long bounded_tope_count(const OrientedMatroid& m, int e);

} // namespace omvar
