#pragma once

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "omvar/errors.hpp"

namespace omvar {

// Finite poset over elements 0..n-1 with the full reflexive-transitive
// order relation stored as bitsets (up-sets).
class FinitePoset {
public:
    FinitePoset() = default;
    explicit FinitePoset(size_t n); // antichain
    // Builds from an arbitrary comparison and validates that it is
    // reflexive, antisymmetric and transitive.
    static FinitePoset from_leq(size_t n,
                                const std::function<bool(size_t, size_t)>& leq);

    size_t size() const { return n_; }
    bool leq(size_t a, size_t b) const { return up_[a].test(b); }
    bool less(size_t a, size_t b) const { return a != b && leq(a, b); }

    const std::optional<std::vector<std::string>>& labels() const {
        return labels_;
    }
    void set_labels(std::vector<std::string> l);

    std::vector<size_t> minimal_elements() const;
    std::vector<size_t> maximal_elements() const;
    std::vector<std::pair<size_t, size_t>> cover_relations() const;

    // Subposet on the given elements (order induced); indices renumbered in
    // the order given.
    FinitePoset induced(const std::vector<size_t>& elements) const;

    // Elements strictly between a and b, as a subposet.
    FinitePoset open_interval(size_t a, size_t b) const;
    std::vector<size_t> open_interval_elements(size_t a, size_t b) const;

    // Elements listed in a linear extension (below-counts ascending).
    std::vector<size_t> linear_extension() const;

private:
    size_t n_ = 0;
    std::vector<boost::dynamic_bitset<>> up_; // up_[a][b] <=> a <= b
    std::optional<std::vector<std::string>> labels_;

    void validate() const;
};

// Moebius function of the pair a <= b; throws on incomparable pairs.
long long mobius(const FinitePoset& p, size_t a, size_t b);

// Moebius number of the whole poset: mu(0^,1^) after adjoining bounds,
// which equals the reduced Euler characteristic of the order complex.
long long mobius_number(const FinitePoset& p);

// Facets are maximal faces; no facet contains another.
struct SimplicialComplex {
    size_t vertex_count = 0;
    std::vector<std::vector<int>> facets; // sorted vertex lists

    static SimplicialComplex from_facets(size_t vertices,
                                         std::vector<std::vector<int>> facets);
    // Some vertex lies in every facet (so the complex is contractible).
    bool is_cone() const;
};

// Chains of the poset; facets are the maximal chains.
SimplicialComplex order_complex(const FinitePoset& p,
                                size_t max_facets = 1000000);

// Repeatedly removes beat points (elements x whose strict up-set has a
// minimum or whose strict down-set has a maximum).  The result is a
// deformation retract, so all homology is preserved.
FinitePoset poset_core(const FinitePoset& p);

std::string poset_to_json(const FinitePoset& p);
std::string complex_to_json(const SimplicialComplex& k);

} // namespace omvar
