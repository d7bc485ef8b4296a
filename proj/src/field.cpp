#include "altramsey/field.hpp"

#include <utility>

namespace altramsey {

namespace {

uint64_t mulmod64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                       19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // Miller-Rabin with a witness set that is deterministic below 3.3e24.
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                       19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldCtx::FieldCtx(uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(p)) {
        throw NotPrime("FieldCtx: modulus " + std::to_string(p) +
                       " is not prime");
    }
}

Felt FieldCtx::inv(Felt a) const {
    if (a.v == 0) throw ZeroInverse("inv(0) in GF(" + std::to_string(p_) + ")");
    // Extended Euclid on (a, p).
    int64_t t = 0, new_t = 1;
    int64_t r = p_, new_r = a.v;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p_;
    return Felt{static_cast<uint32_t>(t)};
}

}  // namespace altramsey
