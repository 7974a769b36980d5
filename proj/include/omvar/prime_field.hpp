#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace omvar {

// Residue in [0, p) carrying its modulus.  Default prime is 2^61 - 1 so
// products fit in 128-bit intermediates.
struct Fp {
    static constexpr uint64_t default_prime = 2305843009213693951ull;

    uint64_t v = 0;
    uint64_t p = default_prime;

    Fp() = default;
    Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

    static Fp from_int(long long value, uint64_t prime) {
        long long r = value % static_cast<long long>(prime);
        if (r < 0) r += static_cast<long long>(prime);
        return Fp(static_cast<uint64_t>(r), prime);
    }

    friend Fp operator+(Fp a, Fp b) {
        a.check(b);
        uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Fp(s, a.p);
    }
    friend Fp operator-(Fp a, Fp b) {
        a.check(b);
        uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
        return Fp(s, a.p);
    }
    friend Fp operator*(Fp a, Fp b) {
        a.check(b);
        unsigned __int128 prod =
            static_cast<unsigned __int128>(a.v) * b.v;
        return Fp(static_cast<uint64_t>(prod % a.p), a.p);
    }
    Fp operator-() const { return Fp(v == 0 ? 0 : p - v, p); }

    Fp pow(uint64_t e) const {
        Fp base = *this, acc(1 % p, p);
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    Fp inverse() const {
        if (v == 0) throw std::domain_error("inverse of zero");
        return pow(p - 2);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1 % p; }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.p == b.p && a.v == b.v;
    }

private:
    void check(const Fp& other) const {
        if (p != other.p)
            throw std::invalid_argument("mixed prime moduli");
    }
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Uniform draw from [0, bound) by rejection; stable across platforms
// (mt19937_64 output is pinned by the standard).
uint64_t rand_below(std::mt19937_64& rng, uint64_t bound);

} // namespace omvar
