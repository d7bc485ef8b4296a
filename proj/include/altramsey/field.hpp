#pragma once

#include <cstdint>
#include <compare>

#include "altramsey/errors.hpp"

namespace altramsey {

/// A reduced element of GF(p).  The modulus lives in FieldCtx; a Felt is
/// just the canonical representative in [0, p).
struct Felt {
    uint32_t v = 0;

    constexpr Felt() = default;
    constexpr explicit Felt(uint32_t raw) : v(raw) {}

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(Felt, Felt) = default;
};

/// Deterministic primality test for the supported range (n < 2^63).
bool is_prime(uint64_t n);

/// Arithmetic context for GF(p), p prime, 2 <= p < 2^31.
///
/// All operations assume reduced inputs and produce reduced outputs.
/// Immutable and freely copyable.
class FieldCtx {
public:
    explicit FieldCtx(uint32_t p);

    uint32_t modulus() const { return p_; }

    Felt zero() const { return Felt{0}; }
    Felt one() const { return Felt{1 % p_}; }

    /// Reduce an arbitrary signed integer into [0, p).
    Felt from_int(int64_t x) const {
        int64_t r = x % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return Felt{static_cast<uint32_t>(r)};
    }

    Felt add(Felt a, Felt b) const {
        uint32_t s = a.v + b.v;  // p < 2^31, no overflow
        if (s >= p_) s -= p_;
        return Felt{s};
    }

    Felt sub(Felt a, Felt b) const {
        return Felt{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
    }

    Felt neg(Felt a) const { return Felt{a.v == 0 ? 0u : p_ - a.v}; }

    Felt mul(Felt a, Felt b) const {
        return Felt{static_cast<uint32_t>(
            (static_cast<uint64_t>(a.v) * b.v) % p_)};
    }

    /// Multiplicative inverse; throws ZeroInverse on a = 0.
    Felt inv(Felt a) const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.p_ == b.p_;
    }

private:
    uint32_t p_;
};

}  // namespace altramsey
