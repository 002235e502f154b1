#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace charp {

// Moduli are capped well below 2^31 so that a*b fits in uint64_t and signed
// intermediate arithmetic never overflows.
inline constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

inline void require_prime(std::uint32_t p) {
    if (p > kMaxModulus)
        throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds 2^31 guard");
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    if (s >= p) s -= p;
    return s;
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint32_t neg_mod(std::uint32_t a, std::uint32_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
}

inline std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t r = 1 % p, x = a % p;
    while (e) {
        if (e & 1) r = r * x % p;
        x = x * x % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

// Reduces a (possibly negative) machine integer into [0, p).
inline std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

/// An element of the prime field F_p.  Primality is checked at construction;
/// bulk arithmetic elsewhere works on raw residues with the modulus carried by
/// the containing object.
struct FpScalar {
    std::uint32_t value = 0;
    std::uint32_t p = 2;

    FpScalar() = default;
    FpScalar(std::int64_t v, std::uint32_t modulus) : p(modulus) {
        require_prime(modulus);
        value = reduce_mod(v, modulus);
    }

    bool is_zero() const { return value == 0; }

    friend bool operator==(const FpScalar& a, const FpScalar& b) {
        return a.p == b.p && a.value == b.value;
    }

    FpScalar operator+(const FpScalar& o) const { check(o); return make(add_mod(value, o.value, p)); }
    FpScalar operator-(const FpScalar& o) const { check(o); return make(sub_mod(value, o.value, p)); }
    FpScalar operator*(const FpScalar& o) const { check(o); return make(mul_mod(value, o.value, p)); }
    FpScalar inverse() const { return make(inv_mod(value, p)); }

private:
    FpScalar make(std::uint32_t v) const {
        FpScalar r;
        r.value = v;
        r.p = p;
        return r;
    }
    void check(const FpScalar& o) const {
        if (p != o.p) throw std::invalid_argument("FpScalar modulus mismatch");
    }
};

}  // namespace charp
