#pragma once

#include <string>
#include <vector>

#include "omvar/arrangement.hpp"
#include "omvar/oriented_matroid.hpp"

namespace omvar::test {

inline std::string fixture(const std::string& name) {
    return std::string(OMVAR_FIXTURE_DIR) + "/" + name;
}

inline SignVector sv(const std::string& s) {
    return SignVector::from_string(s);
}

inline std::vector<SignVector> svs(const std::vector<std::string>& in) {
    std::vector<SignVector> out;
    for (const auto& s : in) out.push_back(sv(s));
    return out;
}

// Rank-1 oriented matroid on one element.
inline OrientedMatroid f1() {
    return OrientedMatroid::from_covectors(GroundSet(1), svs({"0", "+", "-"}));
}

// Two independent lines; the full sign-vector cube on two elements.
inline OrientedMatroid f2() {
    return OrientedMatroid::from_covectors(
        GroundSet(2),
        svs({"00", "0+", "0-", "+0", "++", "+-", "-0", "-+", "--"}));
}

// Three generic lines in the plane.
inline OrientedMatroid f3() {
    return from_arrangement({{1, 0}, {0, 1}, {1, 1}});
}

// Coordinate hyperplanes in rank 3.
inline OrientedMatroid f4() {
    return from_arrangement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

inline OrientedMatroid antiparallel3() {
    return from_arrangement({{1, 0}, {-1, 0}, {0, 1}});
}

} // namespace omvar::test
