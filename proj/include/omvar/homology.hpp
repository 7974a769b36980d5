#pragma once

#include <vector>

#include "omvar/poset.hpp"

namespace omvar {

struct HomologyGroup {
    long long betti = 0;
    std::vector<long long> torsion; // elementary divisors > 1

    bool trivial() const { return betti == 0 && torsion.empty(); }
};

struct ReducedHomology {
    // Reduced homology in degree -1: rank 1 exactly for the empty complex.
    long long empty_rank = 0;
    std::vector<HomologyGroup> groups; // degrees 0..dim

    bool all_trivial() const;
};

// Integral reduced homology via Smith normal form of the boundary matrices.
// Guarded by the total face count.
ReducedHomology reduced_homology(const SimplicialComplex& k,
                                 size_t max_faces = 5000);

// True iff every reduced homology group vanishes.  Cone complexes short-cut
// the Smith computation.
bool is_homology_contractible(const SimplicialComplex& k,
                              size_t max_faces = 5000);

// Diagonal of the Smith normal form (nonnegative, each dividing the next);
// exposed for direct testing.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

} // namespace omvar
