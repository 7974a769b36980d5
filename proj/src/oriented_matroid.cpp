#include "omvar/oriented_matroid.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace omvar {

OrientedMatroid OrientedMatroid::from_covectors(
    GroundSet ground, std::vector<SignVector> covectors) {
    return build(std::move(ground), std::move(covectors), false);
}

OrientedMatroid OrientedMatroid::build(GroundSet ground,
                                       std::vector<SignVector> covectors,
                                       bool allow_loops) {
    ground.validate();
    OrientedMatroid m;
    m.ground_ = std::move(ground);

    for (const auto& x : covectors)
        if (x.size() != m.ground_.size)
            throw std::invalid_argument(
                "covector length does not match ground set");

    std::sort(covectors.begin(), covectors.end(), CanonicalLess{});
    covectors.erase(std::unique(covectors.begin(), covectors.end()),
                    covectors.end());

    if (covectors.empty() ||
        !std::any_of(covectors.begin(), covectors.end(),
                     [](const SignVector& x) { return x.is_zero(); }))
        throw std::invalid_argument("covector set must contain the zero vector");

    uint64_t covered = 0;
    for (const auto& x : covectors)
        covered |= x.support_mask();
    m.loops_ = m.full_mask() & ~covered;
    if (m.loops_ != 0 && !allow_loops) {
        auto loops = mask_elements(m.loops_);
        throw std::invalid_argument("loop detected at element " +
                                    std::to_string(loops.front()));
    }

    m.covectors_ = std::move(covectors);

    // Topes: maximal elements of the product order.
    const size_t k = m.covectors_.size();
    std::vector<char> maximal(k, 1);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
            if (i != j && m.covectors_[i].leq(m.covectors_[j])) {
                maximal[i] = 0;
                break;
            }
    for (size_t i = 0; i < k; ++i)
        if (maximal[i]) m.topes_.push_back(m.covectors_[i]);

    // Longest chain from the zero vector.  X < Y implies
    // supp(X) strictly contained in supp(Y), so sorting by support size
    // gives a valid processing order.
    std::vector<size_t> order(k);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::popcount(m.covectors_[a].support_mask()) <
               std::popcount(m.covectors_[b].support_mask());
    });
    m.ranks_.assign(k, 0);
    for (size_t a : order) {
        const auto& x = m.covectors_[a];
        if (x.is_zero()) continue;
        int best = 0;
        for (size_t b = 0; b < k; ++b) {
            if (b == a) continue;
            if (m.covectors_[b].leq(x))
                best = std::max(best, m.ranks_[b] + 1);
        }
        m.ranks_[a] = best;
        m.rank_ = std::max(m.rank_, best);
    }
    return m;
}

bool OrientedMatroid::contains(const SignVector& x) const {
    return covector_index(x) >= 0;
}

bool OrientedMatroid::is_tope(const SignVector& x) const {
    return tope_index(x) >= 0;
}

int OrientedMatroid::covector_index(const SignVector& x) const {
    auto it = std::lower_bound(covectors_.begin(), covectors_.end(), x,
                               CanonicalLess{});
    if (it != covectors_.end() && *it == x)
        return static_cast<int>(it - covectors_.begin());
    return -1;
}

int OrientedMatroid::tope_index(const SignVector& x) const {
    auto it = std::lower_bound(topes_.begin(), topes_.end(), x,
                               CanonicalLess{});
    if (it != topes_.end() && *it == x)
        return static_cast<int>(it - topes_.begin());
    return -1;
}

int OrientedMatroid::covector_rank(const SignVector& x) const {
    int i = covector_index(x);
    if (i < 0)
        throw std::invalid_argument("covector_rank: not a covector");
    return ranks_[static_cast<size_t>(i)];
}

bool AxiomReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck* AxiomReport::failing() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

void record(AxiomCheck& c, std::string witness) {
    c.pass = false;
    if (c.witnesses.size() < 5)
        c.witnesses.push_back(std::move(witness));
}

} // namespace

AxiomReport check_axioms(const OrientedMatroid& m) {
    AxiomReport rep;
    const auto& L = m.covectors();

    AxiomCheck zero{"zero vector", true, {}};
    if (!m.contains(m.zero_covector()))
        record(zero, "zero vector missing");
    rep.checks.push_back(std::move(zero));

    AxiomCheck sym{"symmetry", true, {}};
    for (const auto& x : L)
        if (!m.contains(x.negated()))
            record(sym, "-" + x.to_string() + " missing");
    rep.checks.push_back(std::move(sym));

    AxiomCheck comp{"composition", true, {}};
    for (const auto& x : L)
        for (const auto& y : L) {
            SignVector xy = compose(x, y);
            if (!m.contains(xy))
                record(comp, x.to_string() + " o " + y.to_string() + " = " +
                                 xy.to_string() + " missing");
        }
    rep.checks.push_back(std::move(comp));

    // For X, Y and e in Sep(X,Y) there must be Z with Z_e = 0 and
    // Z_f = (X o Y)_f for all f outside Sep(X,Y).
    AxiomCheck elim{"elimination", true, {}};
    for (const auto& x : L)
        for (const auto& y : L) {
            uint64_t sep = separator_mask(x, y);
            if (sep == 0) continue;
            SignVector xy = compose(x, y);
            for (int e : mask_elements(sep)) {
                bool found = false;
                for (const auto& z : L) {
                    if (z[static_cast<size_t>(e)] != Sign::Zero) continue;
                    uint64_t keep = ~sep & m.full_mask();
                    if ((z.plus_mask() & keep) == (xy.plus_mask() & keep) &&
                        (z.minus_mask() & keep) == (xy.minus_mask() & keep)) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    record(elim, "no eliminator for " + x.to_string() + ", " +
                                     y.to_string() + " at " +
                                     std::to_string(e));
            }
        }
    rep.checks.push_back(std::move(elim));
    return rep;
}

OrientedMatroid restriction(const OrientedMatroid& m, uint64_t subset) {
    subset &= m.full_mask();
    if (subset == 0)
        throw std::invalid_argument("restriction to the empty set");
    std::vector<SignVector> vs;
    vs.reserve(m.covectors().size());
    for (const auto& x : m.covectors())
        vs.push_back(restrict_to(x, subset));
    GroundSet g(static_cast<uint32_t>(std::popcount(subset)));
    if (m.ground().labels) {
        std::vector<std::string> names;
        for (int e : mask_elements(subset))
            names.push_back((*m.ground().labels)[static_cast<size_t>(e)]);
        g.labels = std::move(names);
        g.validate();
    }
    return OrientedMatroid::from_covectors(std::move(g), std::move(vs));
}

OrientedMatroid contraction(const OrientedMatroid& m, uint64_t subset) {
    subset &= m.full_mask();
    uint64_t rest = m.full_mask() & ~subset;
    if (subset == 0) return m;
    std::vector<SignVector> vs;
    for (const auto& x : m.covectors())
        if ((x.support_mask() & subset) == 0)
            vs.push_back(restrict_to(x, rest));
    GroundSet g(static_cast<uint32_t>(std::popcount(rest)));
    if (m.ground().labels && rest != 0) {
        std::vector<std::string> names;
        for (int e : mask_elements(rest))
            names.push_back((*m.ground().labels)[static_cast<size_t>(e)]);
        g.labels = std::move(names);
    }
    return OrientedMatroid::build(std::move(g), std::move(vs), true);
}

OrientedMatroid deletion(const OrientedMatroid& m, int element) {
    if (m.ground_size() < 2)
        throw std::invalid_argument("deletion from a singleton ground set");
    if (element < 0 || static_cast<uint32_t>(element) >= m.ground_size())
        throw std::invalid_argument("deletion: element out of range");
    return restriction(m, m.full_mask() & ~bit(static_cast<size_t>(element)));
}

OrientedMatroid reorient(const OrientedMatroid& m, uint64_t subset) {
    subset &= m.full_mask();
    std::vector<SignVector> vs;
    vs.reserve(m.covectors().size());
    for (const auto& x : m.covectors())
        vs.push_back(reorient_vector(x, subset));
    return OrientedMatroid::from_covectors(m.ground(), std::move(vs));
}

std::vector<SignVector> star(const OrientedMatroid& m, const SignVector& x) {
    if (!m.contains(x))
        throw std::invalid_argument("star: not a covector");
    std::vector<SignVector> out;
    for (const auto& t : m.topes())
        if (x.leq(t)) out.push_back(t);
    return out;
}

SignVector max_face_at(const OrientedMatroid& m, const SignVector& tope,
                       int e) {
    if (!m.is_tope(tope))
        throw std::invalid_argument("max_face_at: not a tope");
    if (e < 0 || static_cast<uint32_t>(e) >= m.ground_size())
        throw std::invalid_argument("max_face_at: element out of range");
    SignVector acc = m.zero_covector();
    for (const auto& f : m.covectors())
        if (f[static_cast<size_t>(e)] == Sign::Zero && f.leq(tope))
            acc = compose(acc, f);
    return acc;
}

bool defines_proper_face(const OrientedMatroid& m, int e,
                         const SignVector& tope) {
    return !max_face_at(m, tope, e).is_zero();
}

std::vector<SignVector> parse_covectors(std::istream& in) {
    std::vector<SignVector> out;
    std::string line;
    size_t lineno = 0;
    std::optional<size_t> width;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                                 line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);
        if (width && line.size() != *width)
            throw parse_error("line " + std::to_string(lineno) +
                              ": inconsistent vector length");
        width = line.size();
        try {
            out.push_back(SignVector::from_string(line));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " +
                              e.what());
        }
    }
    return out;
}

OrientedMatroid load_covector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open covector file: " + path);
    auto vs = parse_covectors(in);
    if (vs.empty())
        throw parse_error("covector file is empty: " + path);
    GroundSet g(vs.front().size());
    return OrientedMatroid::from_covectors(std::move(g), std::move(vs));
}

} // namespace omvar
