#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "omvar/prime_field.hpp"

namespace omvar {

using BigInt = boost::multiprecision::cpp_int;

// Exponent vector, one 8-bit entry per variable.
using Monomial = std::vector<uint8_t>;

// Graded lexicographic: total degree first, then entrywise with U0 most
// significant.  Map iteration therefore runs from the constant term up.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over arbitrary-precision integers in the
// variables U0..U(n-1).  No zero coefficients are stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(uint32_t nvars) : nvars_(nvars) {}
    static MultiPoly constant(uint32_t nvars, BigInt c);
    static MultiPoly variable(uint32_t nvars, uint32_t var, uint32_t power = 1);
    static MultiPoly from_monomial(uint32_t nvars, Monomial m, BigInt c);
    // prod_{e in mask} U_e^power
    static MultiPoly monomial_of_mask(uint32_t nvars, uint64_t mask,
                                      uint32_t power = 1);

    uint32_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, BigInt, GradedLexLess>& terms() const {
        return terms_;
    }

    BigInt constant_term() const;
    int degree(uint32_t var) const;  // -1 for the zero polynomial
    int total_degree() const;        // -1 for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) {
        a += b;
        return a;
    }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) {
        a -= b;
        return a;
    }
    MultiPoly operator-() const;
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }
    MultiPoly times(const BigInt& c) const;
    MultiPoly pow(uint32_t k) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Drop every term with a positive exponent at `var`.
    MultiPoly substitute_zero(uint32_t var) const;

    // Evaluate at a total point, one field element per variable.
    Fp eval_modp(std::span<const Fp> point) const;

    // Exact quotient, or nullopt if the division leaves a remainder.
    std::optional<MultiPoly> divided_exact(const MultiPoly& divisor) const;

    // Canonical text, graded-lex ascending: "1 - U0^2*U1^2".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const BigInt& c);

    uint32_t nvars_ = 0;
    std::map<Monomial, BigInt, GradedLexLess> terms_;
};

} // namespace omvar
