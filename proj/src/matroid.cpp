#include "omvar/matroid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace omvar {

int UnderlyingMatroid::rank() const {
    uint64_t full = ground_size == 64 ? ~uint64_t{0}
                                      : (uint64_t{1} << ground_size) - 1;
    return rank_of_flat.at(full);
}

bool UnderlyingMatroid::is_flat(uint64_t subset) const {
    return rank_of_flat.count(subset) != 0;
}

uint64_t UnderlyingMatroid::closure(uint64_t subset) const {
    uint64_t full = ground_size == 64 ? ~uint64_t{0}
                                      : (uint64_t{1} << ground_size) - 1;
    uint64_t acc = full;
    for (uint64_t f : flats)
        if ((subset & ~f) == 0) acc &= f;
    return acc;
}

int UnderlyingMatroid::rank_fn(uint64_t subset) const {
    return rank_of_flat.at(closure(subset));
}

UnderlyingMatroid underlying(const OrientedMatroid& m) {
    UnderlyingMatroid um;
    um.ground_size = m.ground_size();
    for (const auto& f : m.covectors()) {
        uint64_t z = f.zero_mask();
        int r = m.rank() - m.covector_rank(f);
        auto it = um.rank_of_flat.find(z);
        if (it == um.rank_of_flat.end())
            um.rank_of_flat.emplace(z, r);
        else if (it->second != r)
            throw std::logic_error(
                "covectors with equal zero set but different rank");
    }
    for (const auto& [flat, r] : um.rank_of_flat)
        um.flats.push_back(flat);
    std::sort(um.flats.begin(), um.flats.end());
    return um;
}

long long beta(const UnderlyingMatroid& um, uint64_t subset) {
    if (subset == 0)
        throw std::invalid_argument("beta of the empty ground set");
    long long sum = 0;
    // Iterate all submasks of `subset`, including 0.
    uint64_t b = subset;
    while (true) {
        int sign = (std::popcount(b) % 2 == 0) ? 1 : -1;
        sum += sign * static_cast<long long>(um.rank_fn(b));
        if (b == 0) break;
        b = (b - 1) & subset;
    }
    int rsign = (um.rank_fn(subset) % 2 == 0) ? 1 : -1;
    return rsign * sum;
}

long long bounded_tope_count(const OrientedMatroid& m, int e) {
    if (e < 0 || static_cast<uint32_t>(e) >= m.ground_size())
        throw std::invalid_argument("bounded_tope_count: element out of range");
    long long count = 0;
    for (const auto& t : m.topes())
        if (!defines_proper_face(m, e, t)) ++count;
    return count;
}

} // namespace omvar
