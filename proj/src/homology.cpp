#include "omvar/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace omvar {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("Smith normal form entry overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("Smith normal form entry overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("Smith normal form entry overflow");
    return r;
}

} // namespace

bool ReducedHomology::all_trivial() const {
    if (empty_rank != 0) return false;
    return std::all_of(groups.begin(), groups.end(),
                       [](const HomologyGroup& g) { return g.trivial(); });
}

std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<long long> diag;
    size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry as pivot keeps growth down.
        size_t pi = t, pj = t;
        long long best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                long long v = std::abs(m[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        std::swap(m[t], m[pi]);
        for (size_t i = 0; i < rows; ++i)
            std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                long long q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]); // smaller remainder becomes pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                long long q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
                if (m[t][j] != 0) {
                    for (size_t i = 0; i < rows; ++i)
                        std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
        }
        // Divisibility: fold in any entry the pivot does not divide.
        bool fixed = true;
        for (size_t i = t + 1; i < rows && fixed; ++i)
            for (size_t j = t + 1; j < cols && fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t jj = t; jj < cols; ++jj)
                        m[t][jj] = checked_add(m[t][jj], m[i][jj]);
                    fixed = false;
                }
        if (!fixed) continue; // redo this pivot position
        diag.push_back(std::abs(m[t][t]));
        ++t;
    }
    return diag;
}

ReducedHomology reduced_homology(const SimplicialComplex& k,
                                 size_t max_faces) {
    ReducedHomology h;
    if (k.vertex_count == 0 || k.facets.empty()) {
        h.empty_rank = 1;
        return h;
    }

    // All faces, grouped by dimension.
    std::vector<std::map<std::vector<int>, size_t>> faces;
    size_t total = 0;
    for (const auto& f : k.facets) {
        size_t subsets = (size_t{1} << f.size()) - 1;
        for (size_t s = 1; s <= subsets; ++s) {
            std::vector<int> face;
            for (size_t b = 0; b < f.size(); ++b)
                if (s & (size_t{1} << b)) face.push_back(f[b]);
            size_t d = face.size() - 1;
            if (faces.size() <= d) faces.resize(d + 1);
            if (faces[d].emplace(std::move(face), faces[d].size()).second) {
                if (++total > max_faces)
                    throw guard_error("homology face guard exceeded");
            }
        }
    }

    const size_t dim = faces.size() - 1;
    std::vector<size_t> ranks(dim + 2, 0);
    std::vector<std::vector<long long>> torsion_source(dim + 2);

    // Augmentation map C_0 -> Z has rank 1 on a nonempty complex.
    ranks[0] = 1;

    for (size_t d = 1; d <= dim; ++d) {
        std::vector<std::vector<long long>> bd(
            faces[d - 1].size(),
            std::vector<long long>(faces[d].size(), 0));
        for (const auto& [face, col] : faces[d]) {
            int sign = 1;
            for (size_t drop = 0; drop < face.size(); ++drop) {
                std::vector<int> sub;
                for (size_t i = 0; i < face.size(); ++i)
                    if (i != drop) sub.push_back(face[i]);
                bd[faces[d - 1].at(sub)][col] = sign;
                sign = -sign;
            }
        }
        auto diag = smith_diagonal(std::move(bd));
        ranks[d] = diag.size();
        for (long long v : diag)
            if (v > 1) torsion_source[d].push_back(v);
    }

    h.groups.resize(dim + 1);
    for (size_t d = 0; d <= dim; ++d) {
        long long fd = static_cast<long long>(faces[d].size());
        h.groups[d].betti = fd - static_cast<long long>(ranks[d]) -
                            static_cast<long long>(ranks[d + 1]);
        h.groups[d].torsion = torsion_source[d + 1];
    }
    return h;
}

bool is_homology_contractible(const SimplicialComplex& k, size_t max_faces) {
    if (k.is_cone()) return true;
    return reduced_homology(k, max_faces).all_trivial();
}

} // namespace omvar
