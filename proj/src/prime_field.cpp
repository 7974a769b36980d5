#include "omvar/prime_field.hpp"

namespace omvar {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t acc = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return acc;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses decide primality for every n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("rand_below: zero bound");
    // Reject the low (2^64 mod bound) values to keep the draw uniform.
    uint64_t min = (0 - bound) % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x < min);
    return x % bound;
}

} // namespace omvar
