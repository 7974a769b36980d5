#include "omvar/varchenko.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "omvar/supertope.hpp"

namespace omvar {

namespace {

int max_element_of(uint64_t mask) {
    if (mask == 0) throw std::invalid_argument("maximum of an empty mask");
    return 63 - std::countl_zero(mask);
}

std::vector<std::string> tope_labels(const std::vector<SignVector>& topes) {
    std::vector<std::string> out;
    out.reserve(topes.size());
    for (const auto& t : topes) out.push_back(t.to_string());
    return out;
}

void require_element(const OrientedMatroid& m, int e) {
    if (e < 0 || static_cast<uint32_t>(e) >= m.ground_size())
        throw std::invalid_argument("element out of range");
}

} // namespace

std::vector<SignVector> canonical_tope_order(const OrientedMatroid& m) {
    return m.topes();
}

std::vector<SignVector> paired_tope_order(const OrientedMatroid& m, int e) {
    require_element(m, e);
    std::vector<SignVector> order;
    for (const auto& t : m.topes())
        if (t[static_cast<size_t>(e)] == Sign::Minus) order.push_back(t);
    size_t l = order.size();
    for (size_t i = 0; i < l; ++i) order.push_back(order[i].negated());
    if (order.size() != m.topes().size())
        throw std::logic_error("paired_tope_order: topes are not antipodal");
    return order;
}

VarchenkoMatrix build_varchenko(
    const OrientedMatroid& m,
    std::optional<std::vector<SignVector>> tope_order) {
    VarchenkoMatrix vm;
    vm.tope_order = tope_order ? std::move(*tope_order) : m.topes();
    {
        auto sorted = vm.tope_order;
        std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
        if (sorted != m.topes())
            throw std::invalid_argument(
                "tope order must enumerate every tope exactly once");
    }
    const size_t n = vm.tope_order.size();
    const uint32_t nvars = m.ground_size();
    vm.matrix = PolyMatrix(n, n, MultiPoly(nvars));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            vm.matrix(i, j) = MultiPoly::monomial_of_mask(
                nvars, separator_mask(vm.tope_order[i], vm.tope_order[j]));
    vm.matrix.set_row_labels(tope_labels(vm.tope_order));
    vm.matrix.set_col_labels(tope_labels(vm.tope_order));
    return vm;
}

MultiPoly face_monomial(const OrientedMatroid& m, const SignVector& f) {
    if (!m.contains(f))
        throw std::invalid_argument("face_monomial: not a covector");
    return MultiPoly::monomial_of_mask(m.ground_size(), f.zero_mask());
}

PolyMatrix varchenko_block(const OrientedMatroid& m, int e, Sign row_side,
                           Sign col_side) {
    require_element(m, e);
    if (row_side == Sign::Zero || col_side == Sign::Zero)
        throw std::invalid_argument("varchenko_block: sides must be nonzero");
    std::vector<SignVector> rows, cols;
    for (const auto& t : m.topes()) {
        if (t[static_cast<size_t>(e)] == row_side) rows.push_back(t);
        if (t[static_cast<size_t>(e)] == col_side) cols.push_back(t);
    }
    PolyMatrix out(rows.size(), cols.size(), MultiPoly(m.ground_size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            out(i, j) = MultiPoly::monomial_of_mask(
                m.ground_size(), separator_mask(rows[i], cols[j]));
    out.set_row_labels(tope_labels(rows));
    out.set_col_labels(tope_labels(cols));
    return out;
}

PolyMatrix transfer_matrix(const OrientedMatroid& m, int e) {
    require_element(m, e);
    std::vector<SignVector> rows, cols;
    for (const auto& t : m.topes()) {
        if (t[static_cast<size_t>(e)] == Sign::Minus) rows.push_back(t);
        if (t[static_cast<size_t>(e)] == Sign::Plus) cols.push_back(t);
    }
    const uint32_t nvars = m.ground_size();
    PolyMatrix out(rows.size(), cols.size(), MultiPoly(nvars));
    HalfspaceMobiusCache cache(m);
    for (size_t j = 0; j < cols.size(); ++j) {
        for (size_t i = 0; i < rows.size(); ++i) {
            uint64_t sep = separator_mask(rows[i], cols[j]);
            if (max_element_of(sep) != e) continue; // e in sep is automatic
            long long mu = cache.mu(cols[j], e, rows[i]);
            if (mu == 0) continue;
            out(i, j) = MultiPoly::monomial_of_mask(nvars, sep)
                            .times(BigInt(-mu));
        }
    }
    out.set_row_labels(tope_labels(rows));
    out.set_col_labels(tope_labels(cols));
    return out;
}

PolyMatrix bordered_transfer_matrix(
    const OrientedMatroid& m, int e,
    const std::vector<SignVector>& tope_order) {
    require_element(m, e);
    {
        auto sorted = tope_order;
        std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
        if (sorted != m.topes())
            throw std::invalid_argument(
                "tope order must enumerate every tope exactly once");
    }
    const uint32_t nvars = m.ground_size();
    const size_t n = tope_order.size();
    PolyMatrix out(n, n, MultiPoly(nvars));
    HalfspaceMobiusCache cache(m);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            const SignVector& q = tope_order[i];
            const SignVector& r = tope_order[j];
            if (q == r) {
                out(i, j) = MultiPoly::constant(nvars, 1);
                continue;
            }
            if (q[static_cast<size_t>(e)] !=
                negate(r[static_cast<size_t>(e)]))
                continue;
            uint64_t sep = separator_mask(q, r);
            if (max_element_of(sep) != e) continue;
            // mu((0^,Q)_{R,e}) and mu((0^,-Q)_{-R,e}) agree under negation,
            // so one formula covers both orientation cases.
            long long mu = cache.mu(r, e, q);
            if (mu == 0) continue;
            out(i, j) =
                MultiPoly::monomial_of_mask(nvars, sep).times(BigInt(-mu));
        }
    }
    out.set_row_labels(tope_labels(tope_order));
    out.set_col_labels(tope_labels(tope_order));
    return out;
}

std::vector<SignVector> block_topes(const OrientedMatroid& m,
                                    const SignVector& f, int e) {
    require_element(m, e);
    if (!m.contains(f))
        throw std::invalid_argument("block_topes: not a covector");
    if (f[static_cast<size_t>(e)] != Sign::Zero)
        throw std::invalid_argument("block_topes: F must vanish at e");
    std::vector<SignVector> out;
    for (const auto& t : m.topes())
        if (max_face_at(m, t, e) == f) out.push_back(t);
    return out;
}

long long block_exponent(const OrientedMatroid& m, const SignVector& f,
                         int e) {
    require_element(m, e);
    if (!m.contains(f))
        throw std::invalid_argument("block_exponent: not a covector");
    uint64_t z = f.zero_mask();
    if ((z & bit(static_cast<size_t>(e))) == 0)
        throw std::invalid_argument("block_exponent: e must lie in z(F)");
    if (max_element_of(z) != e) return 0;
    size_t count = block_topes(m, f, e).size();
    if (count % 2 != 0)
        throw std::logic_error("block_exponent: odd block class");
    return static_cast<long long>(count / 2);
}

std::vector<FactorTerm> determinant_factorization(const OrientedMatroid& m) {
    // For fixed e the classes block_topes(F, e) partition the topes; a
    // single sweep per element counts them all.
    std::map<int, std::map<SignVector, size_t, CanonicalLess>> counts;
    for (int e = 0; e < static_cast<int>(m.ground_size()); ++e)
        for (const auto& t : m.topes())
            ++counts[e][max_face_at(m, t, e)];

    std::vector<FactorTerm> out;
    const uint32_t nvars = m.ground_size();
    for (const auto& f : m.covectors()) {
        uint64_t z = f.zero_mask();
        if (z == 0) continue; // topes carry exponent 0
        int e = max_element_of(z);
        auto it = counts[e].find(f);
        size_t cls = it == counts[e].end() ? 0 : it->second;
        if (cls % 2 != 0)
            throw std::logic_error("determinant_factorization: odd class");
        if (cls == 0) continue;
        MultiPoly a = MultiPoly::monomial_of_mask(nvars, z);
        out.push_back(FactorTerm{f, MultiPoly::constant(nvars, 1) - a * a,
                                 static_cast<long long>(cls / 2)});
    }
    return out;
}

MultiPoly expand_factors(const OrientedMatroid& m,
                         const std::vector<FactorTerm>& factors) {
    MultiPoly acc = MultiPoly::constant(m.ground_size(), 1);
    for (const auto& t : factors)
        acc = acc * t.factor.pow(static_cast<uint32_t>(t.exponent));
    return acc;
}

std::vector<ClosedSetTerm> closed_set_factorization(const OrientedMatroid& m) {
    UnderlyingMatroid um = underlying(m);
    std::vector<ClosedSetTerm> out;
    for (uint64_t flat : um.flats) {
        if (flat == 0) continue;
        long long tope_count =
            static_cast<long long>(contraction(m, flat).topes().size());
        out.push_back(ClosedSetTerm{flat, tope_count * beta(um, flat)});
    }
    return out;
}

Report verify_factorization(const OrientedMatroid& m, uint64_t prime,
                            int trials, uint64_t seed, size_t max_symbolic) {
    Report rep{"transfer factorization of the Varchenko matrix", true, {}};
    if (!is_prime_u64(prime))
        throw std::invalid_argument("modulus is not prime");
    const uint32_t n = m.ground_size();
    VarchenkoMatrix v = build_varchenko(m);
    const auto& order = v.tope_order;
    if (n == 0) {
        bool ok = is_identity(v.matrix);
        rep.note({{"check", "empty ground set"}, {"ok", ok}});
        rep.pass = ok;
        return rep;
    }

    std::vector<PolyMatrix> factors;
    for (int e = 0; e < static_cast<int>(n); ++e)
        factors.push_back(bordered_transfer_matrix(m, e, order));

    // One-step identities at the maximal element.
    const int emax = static_cast<int>(n) - 1;
    {
        PolyMatrix lhs = varchenko_block(m, emax, Sign::Minus, Sign::Plus);
        PolyMatrix rhs = mat_mul(
            varchenko_block(m, emax, Sign::Minus, Sign::Minus),
            transfer_matrix(m, emax));
        bool ok = lhs == rhs;
        rep.note({{"check", "half factorization at the top element"},
                  {"ok", ok}});
        if (!ok) rep.pass = false;
    }
    {
        PolyMatrix ve = v.matrix;
        for (size_t i = 0; i < ve.rows(); ++i)
            for (size_t j = 0; j < ve.cols(); ++j)
                ve(i, j) = ve(i, j).substitute_zero(
                    static_cast<uint32_t>(emax));
        PolyMatrix prod = mat_mul(ve, factors.back());
        bool ok = prod == v.matrix;
        rep.note({{"check", "one-step peel at the top element"}, {"ok", ok}});
        if (!ok) rep.pass = false;
    }

    if (order.size() <= max_symbolic) {
        PolyMatrix prod = factors.front();
        for (size_t k = 1; k < factors.size(); ++k)
            prod = mat_mul(prod, factors[k]);
        bool ok = prod == v.matrix;
        rep.note({{"check", "symbolic product"}, {"ok", ok}});
        if (!ok) rep.pass = false;
    }

    std::mt19937_64 rng(seed);
    int matched = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<Fp> point;
        for (uint32_t i = 0; i < n; ++i)
            point.emplace_back(rand_below(rng, prime), prime);
        ModMatrix prod = eval_matrix(factors.front(), point);
        for (size_t k = 1; k < factors.size(); ++k)
            prod = mat_mul(prod, eval_matrix(factors[k], point));
        if (prod == eval_matrix(v.matrix, point))
            ++matched;
    }
    bool ok = matched == trials;
    rep.note({{"check", "modular product"},
              {"trials", trials},
              {"matched", matched},
              {"prime", prime},
              {"per_trial_error_bound",
               static_cast<double>(n) * static_cast<double>(n) /
                   static_cast<double>(prime)}});
    if (!ok) rep.pass = false;
    return rep;
}

std::pair<BlockLayout, Report> verify_block_structure(const OrientedMatroid& m,
                                                      int e) {
    require_element(m, e);
    Report rep{"block lower triangular transfer factor", true, {}};

    std::map<SignVector, std::vector<SignVector>, CanonicalLess> classes;
    for (const auto& t : m.topes())
        classes[max_face_at(m, t, e)].push_back(t);

    // Any linear extension of the covector order works; covector rank is
    // monotone along it.
    std::vector<SignVector> faces;
    for (const auto& [f, ts] : classes) faces.push_back(f);
    std::stable_sort(faces.begin(), faces.end(),
                     [&](const SignVector& a, const SignVector& b) {
                         return m.covector_rank(a) < m.covector_rank(b);
                     });

    BlockLayout layout;
    for (const auto& f : faces) {
        size_t begin = layout.tope_order.size();
        for (const auto& t : classes[f]) layout.tope_order.push_back(t);
        layout.blocks.push_back(
            BlockLayout::Block{f, begin, layout.tope_order.size()});
    }

    PolyMatrix cal = bordered_transfer_matrix(m, e, layout.tope_order);
    // Entries with the row in an earlier block than the column must vanish.
    for (size_t bi = 0; bi < layout.blocks.size(); ++bi)
        for (size_t bj = bi + 1; bj < layout.blocks.size(); ++bj)
            for (size_t i = layout.blocks[bi].begin;
                 i < layout.blocks[bi].end; ++i)
                for (size_t j = layout.blocks[bj].begin;
                     j < layout.blocks[bj].end; ++j)
                    if (!cal(i, j).is_zero())
                        rep.fail({{"check", "above-diagonal entry"},
                                  {"row", layout.tope_order[i].to_string()},
                                  {"col", layout.tope_order[j].to_string()},
                                  {"entry", cal(i, j).to_string()}});

    // Diagonal blocks match the stated closed form.
    for (const auto& blk : layout.blocks) {
        uint64_t z = blk.face.zero_mask();
        bool top = max_element_of(z) == e;
        MultiPoly expected =
            top ? block_determinant(m, blk.face, e)
                : MultiPoly::constant(m.ground_size(), 1);
        MultiPoly a = MultiPoly::monomial_of_mask(m.ground_size(), z);
        MultiPoly formula =
            (MultiPoly::constant(m.ground_size(), 1) - a * a)
                .pow(static_cast<uint32_t>(block_exponent(m, blk.face, e)));
        if (expected != formula)
            rep.fail({{"check", "block determinant"},
                      {"face", blk.face.to_string()},
                      {"det", expected.to_string()},
                      {"formula", formula.to_string()}});
    }
    return {std::move(layout), std::move(rep)};
}

MultiPoly block_determinant(const OrientedMatroid& m, const SignVector& f,
                            int e, size_t max_symbolic) {
    std::vector<SignVector> cls = block_topes(m, f, e);
    if (cls.empty())
        throw std::invalid_argument("block_determinant: empty block");
    const uint32_t nvars = m.ground_size();
    uint64_t z = f.zero_mask();

    // Pair each tope with its partner F o (-P); consecutive pairs keep the
    // block visibly 2x2 diagonal when e is the maximum of z(F).
    std::vector<SignVector> order;
    std::vector<char> used(cls.size(), 0);
    for (size_t i = 0; i < cls.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        order.push_back(cls[i]);
        SignVector partner = compose(f, cls[i].negated());
        for (size_t j = i + 1; j < cls.size(); ++j)
            if (!used[j] && cls[j] == partner) {
                used[j] = 1;
                order.push_back(cls[j]);
                break;
            }
    }

    HalfspaceMobiusCache cache(m);
    PolyMatrix blk(order.size(), order.size(), MultiPoly(nvars));
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = 0; j < order.size(); ++j) {
            const SignVector& q = order[i];
            const SignVector& r = order[j];
            if (q == r) {
                blk(i, j) = MultiPoly::constant(nvars, 1);
                continue;
            }
            if (q[static_cast<size_t>(e)] !=
                negate(r[static_cast<size_t>(e)]))
                continue;
            uint64_t sep = separator_mask(q, r);
            if (max_element_of(sep) != e) continue;
            long long mu = cache.mu(r, e, q);
            if (mu == 0) continue;
            blk(i, j) =
                MultiPoly::monomial_of_mask(nvars, sep).times(BigInt(-mu));
        }
    if (max_element_of(z) != e) {
        if (!is_identity(blk))
            throw std::logic_error(
                "block_determinant: off-maximum block is not the identity");
        return MultiPoly::constant(nvars, 1);
    }
    return det_symbolic(blk, std::max(max_symbolic, order.size()), true);
}

PolyMatrix cone_matrix(const OrientedMatroid& m, uint64_t eps_plus,
                       uint64_t eps_minus) {
    if (!is_closed_supertope(m, eps_plus, eps_minus))
        throw std::invalid_argument("cone_matrix: supertope is not closed");
    Supertope st = supertope(m, eps_plus, eps_minus);
    const uint32_t nvars = m.ground_size();
    PolyMatrix out(st.topes.size(), st.topes.size(), MultiPoly(nvars));
    for (size_t i = 0; i < st.topes.size(); ++i)
        for (size_t j = 0; j < st.topes.size(); ++j)
            out(i, j) = MultiPoly::monomial_of_mask(
                nvars, separator_mask(st.topes[i], st.topes[j]));
    out.set_row_labels(tope_labels(st.topes));
    out.set_col_labels(tope_labels(st.topes));
    return out;
}

Report verify_cone_det(const OrientedMatroid& m, uint64_t eps_plus,
                       uint64_t eps_minus, size_t max_symbolic) {
    Report rep{"cone determinant factorization", true, {}};
    PolyMatrix ve = cone_matrix(m, eps_plus, eps_minus);
    MultiPoly det = det_symbolic(ve, max_symbolic);
    const uint32_t nvars = m.ground_size();
    uint64_t pattern = eps_plus | eps_minus;

    rep.note({{"check", "constant term"},
              {"value", det.constant_term().str()}});
    if (det.constant_term() != 1) rep.pass = false;

    // Candidate factors: one per nonempty zero set avoiding E'.
    std::vector<uint64_t> zero_sets;
    for (const auto& f : m.covectors()) {
        uint64_t z = f.zero_mask();
        if (z != 0 && (z & pattern) == 0) zero_sets.push_back(z);
    }
    std::sort(zero_sets.begin(), zero_sets.end());
    zero_sets.erase(std::unique(zero_sets.begin(), zero_sets.end()),
                    zero_sets.end());

    MultiPoly residual = det;
    nlohmann::json factors = nlohmann::json::array();
    std::map<uint64_t, long long> exponents;
    for (uint64_t z : zero_sets) {
        MultiPoly a = MultiPoly::monomial_of_mask(nvars, z);
        MultiPoly factor = MultiPoly::constant(nvars, 1) - a * a;
        long long k = 0;
        while (true) {
            auto q = residual.divided_exact(factor);
            if (!q) break;
            residual = std::move(*q);
            ++k;
        }
        exponents[z] = k;
        if (k > 0)
            factors.push_back({{"zeros", mask_elements(z)}, {"exponent", k}});
    }
    rep.note({{"check", "factors"}, {"factors", factors}});
    bool unit = residual.is_one();
    rep.note({{"check", "unit residual"},
              {"residual", residual.to_string()},
              {"ok", unit}});
    if (!unit) rep.pass = false;

    if (std::popcount(pattern) == 1) {
        // Substituting U_e = 0 in the full determinant leaves the factors
        // avoiding e with their full exponents, and the cone determinant is
        // its square root: exponents must be exactly half.
        std::map<uint64_t, long long> aggregated;
        for (const auto& t : determinant_factorization(m))
            aggregated[t.face.zero_mask()] += t.exponent;
        for (uint64_t z : zero_sets) {
            long long full = aggregated.count(z) ? aggregated[z] : 0;
            if (full % 2 != 0 || exponents[z] != full / 2)
                rep.fail({{"check", "half exponent"},
                          {"zeros", mask_elements(z)},
                          {"cone_exponent", exponents[z]},
                          {"full_exponent", full}});
        }
    }
    return rep;
}

Report prop_contraction_check(const OrientedMatroid& m, const SignVector& f,
                              int e) {
    require_element(m, e);
    if (!m.contains(f))
        throw std::invalid_argument("prop_contraction_check: not a covector");
    uint64_t z = f.zero_mask();
    if (z == 0 || max_element_of(z) != e)
        throw std::invalid_argument(
            "prop_contraction_check: e must be the maximum of z(F)");
    std::vector<SignVector> cls = block_topes(m, f, e);
    if (cls.empty())
        throw std::invalid_argument("prop_contraction_check: empty class");

    Report rep{"closed form for block Moebius values", true, {}};
    UnderlyingMatroid um = underlying(m);
    int restriction_rank = um.rank_of_flat.at(um.closure(z));
    long long sphere_value = restriction_rank % 2 == 0 ? 1 : -1;

    OrientedMatroid restr = restriction(m, z);
    // Position of e inside z(F).
    auto elems = mask_elements(z);
    int e_restr = static_cast<int>(
        std::find(elems.begin(), elems.end(), e) - elems.begin());

    HalfspaceMobiusCache cache(m);
    HalfspaceMobiusCache cache_restr(restr);
    for (const auto& q : cls) {
        for (const auto& r : cls) {
            if (q[static_cast<size_t>(e)] !=
                negate(r[static_cast<size_t>(e)]))
                continue;
            long long direct = cache.mu(r, e, q);
            long long via_restriction =
                cache_restr.mu(restrict_to(r, z), e_restr, restrict_to(q, z));
            bool antipodal_on_flat = q == compose(f, r.negated());
            long long closed_form = antipodal_on_flat ? sphere_value : 0;
            if (direct != closed_form || via_restriction != closed_form)
                rep.fail({{"q", q.to_string()},
                          {"r", r.to_string()},
                          {"direct", direct},
                          {"via_restriction", via_restriction},
                          {"closed_form", closed_form}});
        }
    }
    return rep;
}

Report verify_matroid_invariance(const OrientedMatroid& m, uint64_t subset) {
    Report rep{"determinant exponents are matroid invariants", true, {}};
    auto base = closed_set_factorization(m);
    auto flipped = closed_set_factorization(reorient(m, subset));
    auto to_map = [](const std::vector<ClosedSetTerm>& v) {
        std::map<uint64_t, long long> out;
        for (const auto& t : v) out[t.closed_set] = t.exponent;
        return out;
    };
    auto a = to_map(base), b = to_map(flipped);
    if (a != b) {
        for (const auto& [flat, exp] : a)
            if (!b.count(flat) || b[flat] != exp)
                rep.fail({{"closed_set", mask_elements(flat)},
                          {"base", exp},
                          {"reoriented", b.count(flat) ? b[flat] : -1}});
        for (const auto& [flat, exp] : b)
            if (!a.count(flat))
                rep.fail({{"closed_set", mask_elements(flat)},
                          {"base", -1},
                          {"reoriented", exp}});
    }
    rep.note({{"check", "reorientation set"}, {"set", mask_elements(subset)}});
    return rep;
}

} // namespace omvar
