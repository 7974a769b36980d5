#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omvar/errors.hpp"

namespace omvar {

enum class Sign : uint8_t { Zero = 0, Plus = 1, Minus = 2 };

constexpr Sign negate(Sign s) {
    switch (s) {
    case Sign::Plus: return Sign::Minus;
    case Sign::Minus: return Sign::Plus;
    default: return Sign::Zero;
    }
}

char to_char(Sign s);
Sign sign_from_char(char c); // throws parse_error on anything but '+', '-', '0'

inline uint64_t bit(size_t e) { return uint64_t{1} << e; }

// Elements of a mask, ascending.
std::vector<int> mask_elements(uint64_t mask);
uint64_t mask_from_elements(const std::vector<int>& elems);

// A sign vector in {+,-,0}^E, stored as one bit plane per nonzero sign.
// Ground sets are limited to 64 elements.
class SignVector {
public:
    static constexpr uint32_t max_size = 64;

    SignVector() = default;
    explicit SignVector(uint32_t n);
    static SignVector from_string(std::string_view s);
    static SignVector from_masks(uint32_t n, uint64_t plus, uint64_t minus);

    uint32_t size() const { return n_; }
    uint64_t full_mask() const {
        return n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1;
    }

    Sign operator[](size_t e) const;
    void set(size_t e, Sign s);

    uint64_t plus_mask() const { return plus_; }
    uint64_t minus_mask() const { return minus_; }
    uint64_t support_mask() const { return plus_ | minus_; }
    uint64_t zero_mask() const { return full_mask() & ~support_mask(); }

    bool is_zero() const { return support_mask() == 0; }
    SignVector negated() const { return from_masks(n_, minus_, plus_); }

    // Product order with 0 below both nonzero signs.
    bool leq(const SignVector& other) const;

    std::string to_string() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;

    // Entrywise lexicographic with 0 < + < -.  All covector and tope
    // lists in this library are sorted by this order.
    static bool canonical_less(const SignVector& a, const SignVector& b);

private:
    uint64_t plus_ = 0;
    uint64_t minus_ = 0;
    uint32_t n_ = 0;
};

struct CanonicalLess {
    bool operator()(const SignVector& a, const SignVector& b) const {
        return SignVector::canonical_less(a, b);
    }
};

// (X o Y)_e = X_e if X_e != 0 else Y_e.  Throws on length mismatch.
SignVector compose(const SignVector& x, const SignVector& y);

// { e | P_e = -Q_e != 0 } as a bit mask / sorted element list.
uint64_t separator_mask(const SignVector& p, const SignVector& q);
std::vector<int> separator(const SignVector& p, const SignVector& q);

// The subvector on the positions in `mask`, reindexed in increasing order.
SignVector restrict_to(const SignVector& x, uint64_t mask);

// Negate the entries on `mask`.
SignVector reorient_vector(const SignVector& x, uint64_t mask);

struct GroundSet {
    uint32_t size = 0;
    std::optional<std::vector<std::string>> labels;

    GroundSet() = default;
    explicit GroundSet(uint32_t n) : size(n) { validate(); }
    GroundSet(uint32_t n, std::vector<std::string> names)
        : size(n), labels(std::move(names)) {
        validate();
    }

    std::string label(size_t e) const;
    void validate() const; // labels unique and matching size
};

} // namespace omvar
