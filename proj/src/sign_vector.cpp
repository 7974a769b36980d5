#include "omvar/sign_vector.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace omvar {

char to_char(Sign s) {
    switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    default: return '0';
    }
}

Sign sign_from_char(char c) {
    switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default:
        throw parse_error(std::string("invalid sign character '") + c + "'");
    }
}

std::vector<int> mask_elements(uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        int e = std::countr_zero(mask);
        out.push_back(e);
        mask &= mask - 1;
    }
    return out;
}

uint64_t mask_from_elements(const std::vector<int>& elems) {
    uint64_t m = 0;
    for (int e : elems) {
        if (e < 0 || e >= 64)
            throw std::invalid_argument("element index out of range");
        m |= bit(static_cast<size_t>(e));
    }
    return m;
}

SignVector::SignVector(uint32_t n) : n_(n) {
    if (n > max_size)
        throw std::invalid_argument("ground set larger than 64 elements");
}

SignVector SignVector::from_string(std::string_view s) {
    SignVector v(static_cast<uint32_t>(s.size()));
    for (size_t e = 0; e < s.size(); ++e)
        v.set(e, sign_from_char(s[e]));
    return v;
}

SignVector SignVector::from_masks(uint32_t n, uint64_t plus, uint64_t minus) {
    SignVector v(n);
    if ((plus & minus) != 0)
        throw std::invalid_argument("sign vector with overlapping +/- masks");
    if ((plus | minus) & ~v.full_mask())
        throw std::invalid_argument("sign vector mask out of range");
    v.plus_ = plus;
    v.minus_ = minus;
    return v;
}

Sign SignVector::operator[](size_t e) const {
    if (plus_ & bit(e)) return Sign::Plus;
    if (minus_ & bit(e)) return Sign::Minus;
    return Sign::Zero;
}

void SignVector::set(size_t e, Sign s) {
    if (e >= n_)
        throw std::invalid_argument("sign vector index out of range");
    plus_ &= ~bit(e);
    minus_ &= ~bit(e);
    if (s == Sign::Plus) plus_ |= bit(e);
    if (s == Sign::Minus) minus_ |= bit(e);
}

bool SignVector::leq(const SignVector& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("sign vector length mismatch");
    return (plus_ & ~other.plus_) == 0 && (minus_ & ~other.minus_) == 0;
}

std::string SignVector::to_string() const {
    std::string s(n_, '0');
    for (size_t e = 0; e < n_; ++e)
        s[e] = to_char((*this)[e]);
    return s;
}

bool SignVector::canonical_less(const SignVector& a, const SignVector& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t e = 0; e < a.n_; ++e) {
        auto va = static_cast<uint8_t>(a[e]);
        auto vb = static_cast<uint8_t>(b[e]);
        if (va != vb) return va < vb;
    }
    return false;
}

SignVector compose(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("compose: length mismatch");
    uint64_t taken = x.support_mask();
    return SignVector::from_masks(x.size(),
                                  x.plus_mask() | (y.plus_mask() & ~taken),
                                  x.minus_mask() | (y.minus_mask() & ~taken));
}

uint64_t separator_mask(const SignVector& p, const SignVector& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("separator: length mismatch");
    return (p.plus_mask() & q.minus_mask()) | (p.minus_mask() & q.plus_mask());
}

std::vector<int> separator(const SignVector& p, const SignVector& q) {
    return mask_elements(separator_mask(p, q));
}

SignVector restrict_to(const SignVector& x, uint64_t mask) {
    SignVector v(static_cast<uint32_t>(std::popcount(mask)));
    size_t pos = 0;
    for (int e : mask_elements(mask))
        v.set(pos++, x[static_cast<size_t>(e)]);
    return v;
}

SignVector reorient_vector(const SignVector& x, uint64_t mask) {
    mask &= x.full_mask();
    uint64_t p = (x.plus_mask() & ~mask) | (x.minus_mask() & mask);
    uint64_t m = (x.minus_mask() & ~mask) | (x.plus_mask() & mask);
    return SignVector::from_masks(x.size(), p, m);
}

std::string GroundSet::label(size_t e) const {
    if (labels) return (*labels)[e];
    return std::to_string(e);
}

void GroundSet::validate() const {
    if (size > SignVector::max_size)
        throw std::invalid_argument("ground set larger than 64 elements");
    if (labels) {
        if (labels->size() != size)
            throw std::invalid_argument("ground set labels do not match size");
        std::set<std::string> seen(labels->begin(), labels->end());
        if (seen.size() != labels->size())
            throw std::invalid_argument("ground set labels are not unique");
    }
}

} // namespace omvar
