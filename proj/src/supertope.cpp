#include "omvar/supertope.hpp"

#include <algorithm>
#include <stdexcept>

#include "omvar/homology.hpp"

namespace omvar {

namespace {

void require_pattern(const OrientedMatroid& m, uint64_t s_plus,
                     uint64_t s_minus) {
    if ((s_plus | s_minus) & ~m.full_mask())
        throw std::invalid_argument("supertope pattern out of range");
    if (s_plus & s_minus)
        throw std::invalid_argument("supertope pattern overlaps");
    if ((s_plus | s_minus) == 0)
        throw std::invalid_argument("supertope pattern is empty");
}

bool matches(const SignVector& t, uint64_t s_plus, uint64_t s_minus) {
    return (s_plus & ~t.plus_mask()) == 0 && (s_minus & ~t.minus_mask()) == 0;
}

} // namespace

Supertope supertope(const OrientedMatroid& m, uint64_t s_plus,
                    uint64_t s_minus) {
    require_pattern(m, s_plus, s_minus);
    Supertope st;
    st.s_plus = s_plus;
    st.s_minus = s_minus;
    for (const auto& t : m.topes())
        if (matches(t, s_plus, s_minus)) st.topes.push_back(t);
    return st;
}

bool is_closed_supertope(const OrientedMatroid& m, uint64_t s_plus,
                         uint64_t s_minus) {
    Supertope st = supertope(m, s_plus, s_minus);
    if (st.topes.empty())
        throw std::invalid_argument("empty supertope");
    // Closed iff every free element takes both signs among the members;
    // then every one-step extension, hence every extension, shrinks.
    uint64_t free = m.full_mask() & ~(s_plus | s_minus);
    for (int e : mask_elements(free)) {
        bool has_plus = false, has_minus = false;
        for (const auto& t : st.topes) {
            if (t[static_cast<size_t>(e)] == Sign::Plus) has_plus = true;
            if (t[static_cast<size_t>(e)] == Sign::Minus) has_minus = true;
        }
        if (!has_plus || !has_minus) return false;
    }
    return true;
}

bool is_closed_supertope_bruteforce(const OrientedMatroid& m, uint64_t s_plus,
                                    uint64_t s_minus) {
    Supertope st = supertope(m, s_plus, s_minus);
    if (st.topes.empty())
        throw std::invalid_argument("empty supertope");
    uint64_t free = m.full_mask() & ~(s_plus | s_minus);
    auto free_elems = mask_elements(free);
    size_t k = free_elems.size();
    // Every assignment of {+,-,unset} to the free elements, except all-unset.
    std::vector<int> choice(k, 0);
    while (true) {
        size_t i = 0;
        while (i < k && choice[i] == 2) {
            choice[i] = 0;
            ++i;
        }
        if (i == k) break;
        ++choice[i];
        uint64_t ext_plus = s_plus, ext_minus = s_minus;
        for (size_t j = 0; j < k; ++j) {
            if (choice[j] == 1) ext_plus |= bit(static_cast<size_t>(free_elems[j]));
            if (choice[j] == 2) ext_minus |= bit(static_cast<size_t>(free_elems[j]));
        }
        if (ext_plus == s_plus && ext_minus == s_minus) continue;
        size_t count = 0;
        for (const auto& t : m.topes())
            if (matches(t, ext_plus, ext_minus)) ++count;
        if (count >= st.topes.size()) return false;
    }
    return true;
}

SignedPoset supertope_subposet(const OrientedMatroid& m, const SignVector& r,
                               uint64_t s_plus, uint64_t s_minus) {
    if (!m.is_tope(r))
        throw std::invalid_argument("supertope_subposet: base is not a tope");
    Supertope st = supertope(m, s_plus, s_minus);
    SignedPoset out;
    out.members = st.topes;
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

bool supertope_contractible_surrogate(const OrientedMatroid& m,
                                      const SignVector& r, uint64_t s_plus,
                                      uint64_t s_minus, size_t max_faces) {
    SignedPoset sp = supertope_subposet(m, r, s_plus, s_minus);
    if (sp.members.empty())
        throw std::invalid_argument("empty supertope");
    FinitePoset core = poset_core(sp.poset);
    if (core.size() == 1) return true;
    return is_homology_contractible(order_complex(core, max_faces), max_faces);
}

TrichotomyWitness trichotomy_witness(const OrientedMatroid& m, uint64_t s_plus,
                                     uint64_t s_minus, uint64_t s_star) {
    uint64_t full = m.full_mask();
    if ((s_plus | s_minus | s_star) != full || (s_plus & s_minus) ||
        (s_plus & s_star) || (s_minus & s_star) || !s_plus || !s_minus ||
        !s_star)
        throw std::invalid_argument(
            "trichotomy_witness: need a partition into three nonempty parts");

    auto tope_with = [&](uint64_t plus, uint64_t minus) -> const SignVector* {
        SignVector cand = SignVector::from_masks(m.ground_size(), plus, minus);
        int idx = m.tope_index(cand);
        return idx >= 0 ? &m.topes()[static_cast<size_t>(idx)] : nullptr;
    };

    for (int f : mask_elements(s_star)) {
        uint64_t fb = bit(static_cast<size_t>(f));
        if (!tope_with(s_plus | fb, s_minus | (s_star & ~fb)))
            throw std::invalid_argument(
                "trichotomy_witness: tope T^f missing for f = " +
                std::to_string(f));
    }

    if (const SignVector* t = tope_with(s_plus, s_minus | s_star))
        return {WitnessKind::MaxTope, *t};
    if (const SignVector* t = tope_with(s_plus | s_star, s_minus))
        return {WitnessKind::MinTope, *t};
    for (const auto& y : m.covectors()) {
        if ((s_plus & ~y.plus_mask()) != 0) continue;
        if ((s_minus & ~y.minus_mask()) != 0) continue;
        uint64_t zero_on_star = y.zero_mask() & s_star;
        if (zero_on_star == 0) continue;
        // The rest of S* must be negative.
        if ((s_star & ~zero_on_star & ~y.minus_mask()) != 0) continue;
        return {WitnessKind::Covector, y};
    }
    throw std::logic_error("trichotomy_witness: no witness found");
}

bool deletion_fiber_check(const OrientedMatroid& m, uint64_t s_plus,
                          uint64_t s_minus, int f, const SignVector& r) {
    require_pattern(m, s_plus, s_minus);
    if (f < 0 || static_cast<uint32_t>(f) >= m.ground_size())
        throw std::invalid_argument("deletion_fiber_check: element out of range");
    uint64_t fb = bit(static_cast<size_t>(f));
    if ((s_plus | s_minus) & fb)
        throw std::invalid_argument(
            "deletion_fiber_check: f must avoid the pattern");
    if ((s_plus | s_minus) == m.full_mask())
        throw std::invalid_argument(
            "deletion_fiber_check: pattern covers the ground set");
    if (!m.is_tope(r))
        throw std::invalid_argument("deletion_fiber_check: base is not a tope");

    // Work in the orientation where the base tope is all-plus.
    uint64_t flip = r.minus_mask();
    OrientedMatroid mm = reorient(m, flip);
    uint64_t plus = (s_plus & ~flip) | (s_minus & flip);
    uint64_t minus = (s_minus & ~flip) | (s_plus & flip);

    uint64_t keep = mm.full_mask() & ~fb;
    // Topes of the deletion are the restrictions; identify them with
    // f-zeroed masks on the full ground set.
    std::vector<std::pair<uint64_t, uint64_t>> deleted; // (plus, minus) masks
    for (const auto& t : mm.topes()) {
        if (!matches(t, plus, minus)) continue;
        deleted.emplace_back(t.plus_mask() & keep, t.minus_mask() & keep);
    }
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());

    std::vector<SignVector> members;
    for (const auto& t : mm.topes())
        if (matches(t, plus, minus)) members.push_back(t);

    for (const auto& [qp, qm] : deleted) {
        // Preimage of the down-set of Q in the deletion tope poset with
        // all-plus base: members T with Sep(R\f, T\f) within Sep(R\f, Q).
        // With an all-plus base the separator is the minus mask.
        std::vector<SignVector> lhs;
        for (const auto& t : members)
            if (((t.minus_mask() & keep) & ~qm) == 0) lhs.push_back(t);
        std::vector<SignVector> rhs;
        for (const auto& t : mm.topes())
            if (matches(t, qp, minus)) rhs.push_back(t);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace omvar
