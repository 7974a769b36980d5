#include "omvar/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "omvar/sign_vector.hpp"

namespace omvar {

namespace {

int degree_of(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0,
                           [](int acc, uint8_t e) { return acc + e; });
}

} // namespace

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
}

MultiPoly MultiPoly::constant(uint32_t nvars, BigInt c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial(nvars, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(uint32_t nvars, uint32_t var, uint32_t power) {
    if (var >= nvars)
        throw std::invalid_argument("variable index out of range");
    Monomial m(nvars, 0);
    if (power > 255) throw std::overflow_error("exponent exceeds 255");
    m[var] = static_cast<uint8_t>(power);
    return from_monomial(nvars, std::move(m), 1);
}

MultiPoly MultiPoly::from_monomial(uint32_t nvars, Monomial m, BigInt c) {
    if (m.size() != nvars)
        throw std::invalid_argument("monomial of wrong arity");
    MultiPoly p(nvars);
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

MultiPoly MultiPoly::monomial_of_mask(uint32_t nvars, uint64_t mask,
                                      uint32_t power) {
    Monomial m(nvars, 0);
    if (power > 255) throw std::overflow_error("exponent exceeds 255");
    for (int e : mask_elements(mask)) {
        if (static_cast<uint32_t>(e) >= nvars)
            throw std::invalid_argument("mask element out of range");
        m[static_cast<size_t>(e)] = static_cast<uint8_t>(power);
    }
    return from_monomial(nvars, std::move(m), 1);
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0 &&
           terms_.begin()->second == 1;
}

BigInt MultiPoly::constant_term() const {
    if (terms_.empty()) return 0;
    const auto& [m, c] = *terms_.begin();
    return degree_of(m) == 0 ? c : BigInt(0);
}

int MultiPoly::degree(uint32_t var) const {
    if (var >= nvars_)
        throw std::invalid_argument("variable index out of range");
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, static_cast<int>(m[var]));
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return degree_of(terms_.rbegin()->first);
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    MultiPoly out(a.nvars_);
    Monomial m(a.nvars_, 0);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < m.size(); ++i) {
                int e = ma[i] + mb[i];
                if (e > 255) throw std::overflow_error("exponent exceeds 255");
                m[i] = static_cast<uint8_t>(e);
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::times(const BigInt& c) const {
    MultiPoly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_)
        out.terms_.emplace(m, coeff * c);
    return out;
}

MultiPoly MultiPoly::pow(uint32_t k) const {
    MultiPoly acc = MultiPoly::constant(nvars_, 1);
    for (uint32_t i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::substitute_zero(uint32_t var) const {
    if (var >= nvars_)
        throw std::invalid_argument("variable index out of range");
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_)
        if (m[var] == 0) out.terms_.emplace(m, c);
    return out;
}

Fp MultiPoly::eval_modp(std::span<const Fp> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("evaluation point has wrong arity");
    uint64_t p = point.empty() ? Fp::default_prime : point[0].p;
    Fp acc(0, p);
    BigInt bp(p);
    for (const auto& [m, c] : terms_) {
        BigInt r = c % bp;
        if (r < 0) r += bp;
        Fp term(r.convert_to<uint64_t>(), p);
        for (size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) term = term * point[i].pow(m[i]);
        acc = acc + term;
    }
    return acc;
}

std::optional<MultiPoly> MultiPoly::divided_exact(
    const MultiPoly& divisor) const {
    if (nvars_ != divisor.nvars_)
        throw std::invalid_argument("polynomial arity mismatch");
    if (divisor.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    MultiPoly q(nvars_);
    MultiPoly r = *this;
    const auto& [dm, dc] = *divisor.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms_.rbegin();
        // In an exact division the leading term of the remainder is always
        // divisible by the leading term of the divisor; anything else
        // certifies a nonzero remainder.
        Monomial t(nvars_);
        for (size_t i = 0; i < t.size(); ++i) {
            if (rm[i] < dm[i]) return std::nullopt;
            t[i] = static_cast<uint8_t>(rm[i] - dm[i]);
        }
        if (rc % dc != 0) return std::nullopt;
        MultiPoly step = from_monomial(nvars_, std::move(t), rc / dc);
        q += step;
        r -= step * divisor;
    }
    return q;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = degree_of(m) > 0;
        bool coeff_shown = !has_vars || a != 1;
        if (coeff_shown) os << a;
        if (has_vars) {
            bool first_var = true;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!first_var || coeff_shown) os << "*";
                os << "U" << i;
                if (m[i] > 1) os << "^" << static_cast<int>(m[i]);
                first_var = false;
            }
        }
    }
    return os.str();
}

} // namespace omvar
