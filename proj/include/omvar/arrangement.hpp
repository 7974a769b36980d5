#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "omvar/oriented_matroid.hpp"

namespace omvar {

using Rational = boost::multiprecision::cpp_rational;

// "p" or "p/q"; q > 0 after normalization.
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

// Covectors of the central hyperplane arrangement with the given normal
// vectors: cocircuits are read off the one-dimensional intersections of
// corank-1 normal subsets (exact rational elimination), then closed under
// composition.  Zero normals are rejected as loops.
OrientedMatroid from_arrangement(const std::vector<std::vector<Rational>>& normals);

// JSON file {"dimension": d, "normals": [["p","p/q",...], ...]}.
OrientedMatroid load_arrangement_file(const std::string& path);
std::vector<std::vector<Rational>> parse_arrangement_json(const std::string& text);

} // namespace omvar
