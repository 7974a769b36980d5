#include "omvar/tope_poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace omvar {

namespace {

void require_tope(const OrientedMatroid& m, const SignVector& t,
                  const char* what) {
    if (!m.is_tope(t))
        throw std::invalid_argument(std::string(what) + ": not a tope");
}

void require_element(const OrientedMatroid& m, int e) {
    if (e < 0 || static_cast<uint32_t>(e) >= m.ground_size())
        throw std::invalid_argument("element out of range");
}

void require_opposite(const SignVector& r, int e, const SignVector& p,
                      const char* what) {
    Sign re = r[static_cast<size_t>(e)];
    Sign pe = p[static_cast<size_t>(e)];
    if (re == Sign::Zero || pe != negate(re))
        throw std::invalid_argument(std::string(what) +
                                    ": requires P_e = -R_e");
}

} // namespace

int TopePoset::index_of(const SignVector& t) const {
    auto it = std::lower_bound(topes.begin(), topes.end(), t, CanonicalLess{});
    if (it != topes.end() && *it == t)
        return static_cast<int>(it - topes.begin());
    return -1;
}

TopePoset tope_poset(const OrientedMatroid& m, const SignVector& base) {
    require_tope(m, base, "tope_poset");
    TopePoset tp;
    tp.base = base;
    tp.topes = m.topes();
    std::vector<uint64_t> sep(tp.topes.size());
    for (size_t i = 0; i < tp.topes.size(); ++i)
        sep[i] = separator_mask(base, tp.topes[i]);
    tp.poset = FinitePoset::from_leq(tp.topes.size(), [&](size_t a, size_t b) {
        return (sep[a] & ~sep[b]) == 0;
    });
    std::vector<std::string> labels;
    for (const auto& t : tp.topes) labels.push_back(t.to_string());
    tp.poset.set_labels(std::move(labels));
    return tp;
}

SignedPoset halfspace_interval(const OrientedMatroid& m, const SignVector& r,
                               int e, const SignVector& p) {
    require_tope(m, r, "halfspace_interval");
    require_tope(m, p, "halfspace_interval");
    require_element(m, e);
    require_opposite(r, e, p, "halfspace_interval");
    uint64_t sep_p = separator_mask(r, p);
    SignedPoset out;
    for (const auto& t : m.topes()) {
        if (t[static_cast<size_t>(e)] != p[static_cast<size_t>(e)]) continue;
        if (t == p) continue;
        uint64_t sep_t = separator_mask(r, t);
        if ((sep_t & ~sep_p) == 0) out.members.push_back(t);
    }
    std::vector<uint64_t> sep(out.members.size());
    for (size_t i = 0; i < out.members.size(); ++i)
        sep[i] = separator_mask(r, out.members[i]);
    out.poset =
        FinitePoset::from_leq(out.members.size(), [&](size_t a, size_t b) {
            return (sep[a] & ~sep[b]) == 0;
        });
    std::vector<std::string> labels;
    for (const auto& t : out.members) labels.push_back(t.to_string());
    out.poset.set_labels(std::move(labels));
    return out;
}

long long HalfspaceMobiusCache::mu(const SignVector& r, int e,
                                   const SignVector& p) {
    require_tope(*m_, r, "halfspace_mobius");
    require_tope(*m_, p, "halfspace_mobius");
    require_element(*m_, e);
    require_opposite(r, e, p, "halfspace_mobius");

    int ridx = m_->tope_index(r);
    auto& table = memo_[{ridx, e}];
    if (table.empty()) {
        // All topes in the halfspace, by separator size; distinct topes
        // have distinct separators from r, so mask inclusion is the order.
        std::vector<std::pair<uint64_t, int>> half;
        const auto& topes = m_->topes();
        for (size_t i = 0; i < topes.size(); ++i) {
            if (topes[i][static_cast<size_t>(e)] ==
                negate(r[static_cast<size_t>(e)]))
                half.emplace_back(separator_mask(r, topes[i]),
                                  static_cast<int>(i));
        }
        std::sort(half.begin(), half.end(), [](const auto& a, const auto& b) {
            return std::popcount(a.first) < std::popcount(b.first);
        });
        for (size_t i = 0; i < half.size(); ++i) {
            long long s = 0;
            for (size_t j = 0; j < i; ++j)
                if ((half[j].first & ~half[i].first) == 0) s += table[half[j].second];
            table[half[i].second] = -1 - s;
        }
    }
    return table.at(m_->tope_index(p));
}

long long halfspace_mobius(const OrientedMatroid& m, const SignVector& r,
                           int e, const SignVector& p,
                           HalfspaceMobiusCache* cache) {
    if (cache) return cache->mu(r, e, p);
    HalfspaceMobiusCache local(m);
    return local.mu(r, e, p);
}

namespace {

SignedPoset covector_subposet(const OrientedMatroid& m,
                              std::vector<SignVector> members) {
    SignedPoset out;
    out.members = std::move(members);
    out.poset =
        FinitePoset::from_leq(out.members.size(), [&](size_t a, size_t b) {
            return out.members[a].leq(out.members[b]);
        });
    std::vector<std::string> labels;
    for (const auto& x : out.members) labels.push_back(x.to_string());
    out.poset.set_labels(std::move(labels));
    return out;
}

} // namespace

SignedPoset separator_face_filter(const OrientedMatroid& m,
                                  const SignVector& r, const SignVector& p) {
    require_tope(m, r, "separator_face_filter");
    require_tope(m, p, "separator_face_filter");
    uint64_t sep = separator_mask(p, r);
    std::vector<SignVector> members;
    for (const auto& x : m.covectors()) {
        if (x.is_zero() || x == p || !x.leq(p)) continue;
        if ((x.zero_mask() & ~sep) == 0) members.push_back(x);
    }
    SignedPoset out = covector_subposet(m, std::move(members));
    // Filter property: the set is upward closed in the open interval.
    for (const auto& x : m.covectors()) {
        if (x.is_zero() || x == p || !x.leq(p)) continue;
        for (const auto& y : out.members)
            if (y.leq(x) && (x.zero_mask() & ~sep) != 0)
                throw std::logic_error(
                    "separator_face_filter: filter property violated");
    }
    return out;
}

SignedPoset crossing_face_poset(const OrientedMatroid& m, const SignVector& r,
                                int e, const SignVector& p) {
    require_tope(m, r, "crossing_face_poset");
    require_tope(m, p, "crossing_face_poset");
    require_element(m, e);
    require_opposite(r, e, p, "crossing_face_poset");

    uint64_t sep = separator_mask(p, r);
    uint64_t s_free = m.full_mask() & ~sep;           // agrees with r
    uint64_t s_sep = sep & ~bit(static_cast<size_t>(e)); // disagrees, minus e

    // G: the restriction of p to s_free; B: restriction to s_sep.
    std::vector<SignVector> members;
    for (const auto& x : m.covectors()) {
        if (x.is_zero() || x == p || !x.leq(p)) continue;
        if (x[static_cast<size_t>(e)] != p[static_cast<size_t>(e)]) continue;
        // x|_S = G: full agreement with p on s_free.
        if ((x.plus_mask() & s_free) != (p.plus_mask() & s_free)) continue;
        if ((x.minus_mask() & s_free) != (p.minus_mask() & s_free)) continue;
        // x|_{S'} <= B, i.e. zero or the p-sign on the rest of the separator.
        if ((x.plus_mask() & s_sep & ~p.plus_mask()) != 0) continue;
        if ((x.minus_mask() & s_sep & ~p.minus_mask()) != 0) continue;
        members.push_back(x);
    }
    return covector_subposet(m, std::move(members));
}

std::vector<SignVector> star_interval_topes(const OrientedMatroid& m,
                                            const SignVector& r, int e,
                                            const SignVector& p) {
    SignedPoset interval = halfspace_interval(m, r, e, p);
    uint64_t sep_p = separator_mask(r, p);
    std::vector<SignVector> out;
    for (const auto& c : interval.members) {
        // [C,P] in the tope poset.
        std::vector<SignVector> closed;
        uint64_t sep_c = separator_mask(r, c);
        for (const auto& t : m.topes()) {
            uint64_t sep_t = separator_mask(r, t);
            if ((sep_c & ~sep_t) == 0 && (sep_t & ~sep_p) == 0)
                closed.push_back(t);
        }
        for (const auto& x : m.covectors()) {
            if (star(m, x) == closed) {
                out.push_back(c);
                break;
            }
        }
    }
    return out;
}

SignVector interval_star_covector(const OrientedMatroid& m,
                                  const SignVector& r, int e,
                                  const SignVector& p, const SignVector& c) {
    SignedPoset interval = halfspace_interval(m, r, e, p);
    if (std::find(interval.members.begin(), interval.members.end(), c) ==
        interval.members.end())
        throw std::invalid_argument(
            "interval_star_covector: C is not in the open interval");
    uint64_t sep_p = separator_mask(r, p);
    uint64_t sep_c = separator_mask(r, c);
    std::vector<SignVector> closed;
    for (const auto& t : m.topes()) {
        uint64_t sep_t = separator_mask(r, t);
        if ((sep_c & ~sep_t) == 0 && (sep_t & ~sep_p) == 0)
            closed.push_back(t);
    }
    const SignVector* found = nullptr;
    for (const auto& x : m.covectors()) {
        if (star(m, x) == closed) {
            if (found)
                throw std::logic_error(
                    "interval_star_covector: star covector not unique");
            found = &x;
        }
    }
    if (!found)
        throw std::invalid_argument(
            "interval_star_covector: [C,P] is not a star");

    // Lemma-level guarantees, kept as hard checks.
    if (found->zero_mask() != separator_mask(c, p))
        throw std::logic_error(
            "interval_star_covector: zero set differs from Sep(C,P)");
    auto w = crossing_face_poset(m, r, e, p);
    if (std::find(w.members.begin(), w.members.end(), *found) ==
        w.members.end())
        throw std::logic_error(
            "interval_star_covector: image misses the crossing face poset");
    return *found;
}

long long separator_class_mobius_sum(const OrientedMatroid& m,
                                     const SignVector& r, int e,
                                     const SignVector& p, uint64_t s,
                                     HalfspaceMobiusCache* cache) {
    require_tope(m, r, "separator_class_mobius_sum");
    require_tope(m, p, "separator_class_mobius_sum");
    require_element(m, e);
    require_opposite(r, e, p, "separator_class_mobius_sum");
    if (s & bit(static_cast<size_t>(e)))
        throw std::invalid_argument(
            "separator_class_mobius_sum: e must not lie in S");
    HalfspaceMobiusCache local(m);
    HalfspaceMobiusCache* use = cache ? cache : &local;
    long long sum = 0;
    for (const auto& q : m.topes()) {
        if (q[static_cast<size_t>(e)] != negate(r[static_cast<size_t>(e)]))
            continue;
        if ((separator_mask(p, q) & separator_mask(q, r)) != s) continue;
        sum += use->mu(r, e, q);
    }
    return sum;
}

} // namespace omvar
