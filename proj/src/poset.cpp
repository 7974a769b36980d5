#include "omvar/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace omvar {

FinitePoset::FinitePoset(size_t n) : n_(n), up_(n) {
    for (size_t i = 0; i < n; ++i) {
        up_[i].resize(n);
        up_[i].set(i);
    }
}

FinitePoset FinitePoset::from_leq(
    size_t n, const std::function<bool(size_t, size_t)>& leq) {
    FinitePoset p(n);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            if (a != b && leq(a, b)) p.up_[a].set(b);
    p.validate();
    return p;
}

void FinitePoset::validate() const {
    for (size_t a = 0; a < n_; ++a) {
        if (!up_[a].test(a))
            throw std::invalid_argument("order relation is not reflexive");
        for (size_t b = 0; b < n_; ++b) {
            if (a != b && up_[a].test(b) && up_[b].test(a))
                throw std::invalid_argument("order relation is not antisymmetric");
            // a <= b forces up(b) subseteq up(a)
            if (up_[a].test(b) && !up_[b].is_subset_of(up_[a]))
                throw std::invalid_argument("order relation is not transitive");
        }
    }
}

void FinitePoset::set_labels(std::vector<std::string> l) {
    if (l.size() != n_)
        throw std::invalid_argument("poset label count mismatch");
    labels_ = std::move(l);
}

std::vector<size_t> FinitePoset::minimal_elements() const {
    std::vector<size_t> out;
    for (size_t a = 0; a < n_; ++a) {
        bool minimal = true;
        for (size_t b = 0; b < n_ && minimal; ++b)
            if (less(b, a)) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

std::vector<size_t> FinitePoset::maximal_elements() const {
    std::vector<size_t> out;
    for (size_t a = 0; a < n_; ++a)
        if (up_[a].count() == 1) out.push_back(a);
    return out;
}

std::vector<std::pair<size_t, size_t>> FinitePoset::cover_relations() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (size_t c = 0; c < n_ && cover; ++c)
                if (less(a, c) && less(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

FinitePoset FinitePoset::induced(const std::vector<size_t>& elements) const {
    FinitePoset p(elements.size());
    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = 0; j < elements.size(); ++j)
            if (i != j && leq(elements[i], elements[j])) p.up_[i].set(j);
    if (labels_) {
        std::vector<std::string> l;
        for (size_t e : elements) l.push_back((*labels_)[e]);
        p.labels_ = std::move(l);
    }
    return p;
}

std::vector<size_t> FinitePoset::open_interval_elements(size_t a,
                                                        size_t b) const {
    std::vector<size_t> out;
    for (size_t c = 0; c < n_; ++c)
        if (less(a, c) && less(c, b)) out.push_back(c);
    return out;
}

FinitePoset FinitePoset::open_interval(size_t a, size_t b) const {
    return induced(open_interval_elements(a, b));
}

std::vector<size_t> FinitePoset::linear_extension() const {
    std::vector<size_t> below(n_, 0);
    for (size_t a = 0; a < n_; ++a)
        for (size_t b = 0; b < n_; ++b)
            if (less(b, a)) ++below[a];
    std::vector<size_t> order(n_);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return below[a] < below[b]; });
    return order;
}

long long mobius(const FinitePoset& p, size_t a, size_t b) {
    if (!p.leq(a, b))
        throw std::invalid_argument("mobius of an incomparable pair");
    std::map<size_t, long long> memo;
    // mu(a, c) for all c in [a, b], in a linear extension order.
    memo[a] = 1;
    auto order = p.linear_extension();
    for (size_t c : order) {
        if (c == a || !p.leq(a, c) || !p.leq(c, b)) continue;
        long long s = 0;
        for (const auto& [d, v] : memo)
            if (p.less(d, c)) s += v;
        memo[c] = -s;
    }
    return memo.at(b);
}

long long mobius_number(const FinitePoset& p) {
    // f(x) = mu(0^, x) in the extension with adjoined bottom:
    // f(x) = -1 - sum_{c < x} f(c);  mu(P) = -1 - sum_x f(x).
    std::vector<long long> f(p.size(), 0);
    auto order = p.linear_extension();
    for (size_t x : order) {
        long long s = 0;
        for (size_t c = 0; c < p.size(); ++c)
            if (p.less(c, x)) s += f[c];
        f[x] = -1 - s;
    }
    long long total = 0;
    for (long long v : f) total += v;
    return -1 - total;
}

SimplicialComplex SimplicialComplex::from_facets(
    size_t vertices, std::vector<std::vector<int>> facets) {
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || static_cast<size_t>(v) >= vertices)
                throw std::invalid_argument("facet vertex out of range");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // Drop faces properly contained in another facet (the list is already
    // duplicate-free).
    std::vector<std::vector<int>> maximal;
    for (size_t i = 0; i < facets.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < facets.size() && !contained; ++j) {
            if (i == j || facets[i].size() >= facets[j].size()) continue;
            contained = std::includes(facets[j].begin(), facets[j].end(),
                                      facets[i].begin(), facets[i].end());
        }
        if (!contained) maximal.push_back(facets[i]);
    }
    SimplicialComplex k;
    k.vertex_count = vertices;
    k.facets = std::move(maximal);
    return k;
}

bool SimplicialComplex::is_cone() const {
    if (facets.empty()) return false;
    for (int v : facets.front()) {
        bool in_all = true;
        for (const auto& f : facets)
            if (!std::binary_search(f.begin(), f.end(), v)) {
                in_all = false;
                break;
            }
        if (in_all) return true;
    }
    return false;
}

SimplicialComplex order_complex(const FinitePoset& p, size_t max_facets) {
    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    // Maximal chains: start at a minimal element, step through covers.
    std::vector<std::vector<size_t>> covers(p.size());
    auto rels = p.cover_relations();
    for (auto [a, b] : rels) covers[a].push_back(b);

    std::function<void(size_t)> extend = [&](size_t x) {
        chain.push_back(static_cast<int>(x));
        if (covers[x].empty()) {
            facets.push_back(chain);
            if (facets.size() > max_facets)
                throw guard_error("order complex facet guard exceeded");
        } else {
            for (size_t y : covers[x]) extend(y);
        }
        chain.pop_back();
    };
    for (size_t m : p.minimal_elements()) extend(m);
    return SimplicialComplex::from_facets(p.size(), std::move(facets));
}

FinitePoset poset_core(const FinitePoset& p) {
    std::vector<size_t> alive(p.size());
    std::iota(alive.begin(), alive.end(), size_t{0});
    FinitePoset cur = p;
    bool changed = true;
    while (changed && cur.size() > 1) {
        changed = false;
        for (size_t x = 0; x < cur.size() && !changed; ++x) {
            // Strict up-set with a minimum, or strict down-set with a maximum.
            std::vector<size_t> up, down;
            for (size_t y = 0; y < cur.size(); ++y) {
                if (cur.less(x, y)) up.push_back(y);
                if (cur.less(y, x)) down.push_back(y);
            }
            bool beat = false;
            for (size_t m : up) {
                if (std::all_of(up.begin(), up.end(),
                                [&](size_t y) { return cur.leq(m, y); })) {
                    beat = true;
                    break;
                }
            }
            if (!beat) {
                for (size_t m : down) {
                    if (std::all_of(down.begin(), down.end(), [&](size_t y) {
                            return cur.leq(y, m);
                        })) {
                        beat = true;
                        break;
                    }
                }
            }
            if (beat) {
                std::vector<size_t> keep;
                for (size_t i = 0; i < cur.size(); ++i)
                    if (i != x) keep.push_back(i);
                cur = cur.induced(keep);
                changed = true;
            }
        }
    }
    return cur;
}

std::string poset_to_json(const FinitePoset& p) {
    nlohmann::json j;
    nlohmann::json elems = nlohmann::json::array();
    for (size_t i = 0; i < p.size(); ++i) {
        if (p.labels())
            elems.push_back((*p.labels())[i]);
        else
            elems.push_back(i);
    }
    nlohmann::json covers = nlohmann::json::array();
    for (auto [a, b] : p.cover_relations())
        covers.push_back(nlohmann::json::array({a, b}));
    j["elements"] = std::move(elems);
    j["covers"] = std::move(covers);
    return j.dump();
}

std::string complex_to_json(const SimplicialComplex& k) {
    nlohmann::json j;
    j["vertices"] = k.vertex_count;
    j["facets"] = k.facets;
    return j.dump();
}

} // namespace omvar
